"""Exception hierarchy.

Everything a caller can provoke with bad input derives from ``InputError``
(CLI exit code 1).  ``InvariantViolation`` marks a broken internal
consistency check (exit code 2).
"""


class DiagpropError(Exception):
    pass


class InputError(DiagpropError):
    pass


class InvariantViolation(DiagpropError):
    pass


# graded rings

class PresentationError(InputError):
    pass


class NonHomogeneousRelation(PresentationError):
    pass


class OddDegreeGenerator(PresentationError):
    pass


class FundamentalMonomialReducible(PresentationError):
    pass


class RewriteBudgetExceeded(PresentationError):
    pass


class RingMismatch(InputError):
    pass


class NotTopDegree(InputError):
    pass


class NoCompanionRing(InputError):
    pass


class NotKunnethRing(InputError):
    pass


class ElementSyntaxError(InputError):
    pass


# characteristic classes

class DimensionTooLarge(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class ParityViolation(InputError):
    pass


# Steenrod squares

class MissingGeneratorImage(InputError):
    pass


class DegreeMismatch(InputError):
    pass


class BadM(InputError):
    pass


# rule engine

class MissingFlag(InputError):
    def __init__(self, flag, message=None):
        self.flag = flag
        super().__init__(message or f"flag {flag!r} is required but unknown")


class UnsupportedSpec(InputError):
    pass


class ContradictoryFlags(InputError):
    pass


class WrongDimension(InputError):
    pass


# spec files

class SpecSyntaxError(InputError):
    def __init__(self, message, path="", line=None):
        self.path = path
        self.line = line
        where = path or "<root>"
        if line is not None:
            where = f"line {line}: {where}"
        super().__init__(f"{where}: {message}")


class UnknownKind(SpecSyntaxError):
    pass
