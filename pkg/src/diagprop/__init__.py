"""Exact tools for deciding when a diagonal is the zero locus of a bundle section.

Subpackages and modules:

* ``graded_ring``: Chow and cohomology rings by generators and rewrite rules.
* ``charclass``: Chern classes, Chern character, Todd class, Riemann-Roch.
* ``steenrod``: Sq^2 on mod-2 cohomology of odd quadrics.
* ``obstruction``: the rule engine producing verdicts with traces.
* ``cli``: spec files, report documents, command line.
"""
from ._version import __version__
from .errors import DiagpropError, InputError, InvariantViolation

__all__ = ["DiagpropError", "InputError", "InvariantViolation", "__version__"]
