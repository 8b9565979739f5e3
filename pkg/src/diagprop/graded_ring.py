"""Finitely presented graded-commutative rings with even-degree generators.

A ring is given by generators with (cohomological) degrees, rewrite rules
``head -> tail`` and a top degree above which everything vanishes.  Elements
are kept in normal form: every monomial is irreducible under the rules.
Degrees are real degrees, so a Chow class of codimension k sits in degree 2k.

    >>> R = quadric_ring(2)                  # CH*(Q_3)
    >>> x, y = R.gens
    >>> x * x
    2*y
    >>> R.degree_evaluate(x ** 3)
    2
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from .errors import (
    ElementSyntaxError,
    FundamentalMonomialReducible,
    NoCompanionRing,
    NonHomogeneousRelation,
    NotKunnethRing,
    NotTopDegree,
    OddDegreeGenerator,
    PresentationError,
    RewriteBudgetExceeded,
    RingMismatch,
)

REWRITE_BUDGET = 10_000

Monomial = tuple  # exponent vector, one entry per generator
Scalar = Union[int, Fraction]


class CoefficientDomain(enum.Enum):
    INTEGERS = "Z"
    INTEGERS_MOD_2 = "Z/2"


@dataclass(frozen=True)
class RingPresentation:
    """Input data for :func:`make_ring`.

    ``relations`` are strings ``"lhs -> rhs"`` whose left side is a bare
    monomial, e.g. ``"x^2 -> 2*y"``.  ``mod2_names``, when given, declares a
    mod-2 companion ring with the generators renamed.
    """

    name: str
    generators: tuple
    relations: tuple
    top_degree: int
    fundamental_monomial: str
    coefficient_domain: CoefficientDomain = CoefficientDomain.INTEGERS
    mod2_names: tuple | None = None


def _clean(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


# ---------------------------------------------------------------------------
# free polynomial parsing (no ring structure, just exponent dicts)

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ElementSyntaxError(f"cannot parse {text!r} at offset {pos}")
        num, ident, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif ident is not None:
            out.append(("id", ident))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(i + j for i, j in zip(ma, mb))
            out[m] = out.get(m, 0) + ca * cb
    return {m: _clean(c) for m, c in out.items() if c != 0}


def _poly_add(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for m, c in b.items():
        out[m] = out.get(m, 0) + sign * c
    return {m: _clean(c) for m, c in out.items() if c != 0}


def parse_polynomial(text: str, names: tuple) -> dict:
    """Parse ``text`` into ``{exponent tuple: coefficient}`` over ``names``.

    Supports ``+ - * / ^`` (``**`` too), parentheses and integer or rational
    literals.  Division is only allowed by a literal.
    """
    toks = _tokenize(text)
    if not toks:
        raise ElementSyntaxError("empty expression")
    index = {n: i for i, n in enumerate(names)}
    zero = (0,) * len(names)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def expr():
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        elif peek() == ("op", "+"):
            take()
        acc = _poly_mul({zero: sign}, term())
        while peek() in (("op", "+"), ("op", "-")):
            s = 1 if take()[1] == "+" else -1
            acc = _poly_add(acc, term(), s)
        return acc

    def term():
        acc = power()
        while peek() in (("op", "*"), ("op", "/")):
            op = take()[1]
            rhs = power()
            if op == "*":
                acc = _poly_mul(acc, rhs)
            else:
                if set(rhs) != {zero}:
                    raise ElementSyntaxError("division by a non-constant")
                acc = {m: _clean(Fraction(c) / rhs[zero]) for m, c in acc.items()}
        return acc

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, val = take()
            if kind != "num":
                raise ElementSyntaxError("exponent must be a nonnegative integer")
            result = {zero: 1}
            for _ in range(val):
                result = _poly_mul(result, base)
            return result
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return {zero: val} if val else {}
        if kind == "id":
            if val not in index:
                raise ElementSyntaxError(f"unknown generator {val!r} (have {', '.join(names)})")
            e = [0] * len(names)
            e[index[val]] = 1
            return {tuple(e): 1}
        if (kind, val) == ("op", "("):
            inner = expr()
            if take() != ("op", ")"):
                raise ElementSyntaxError("unbalanced parenthesis")
            return inner
        if (kind, val) == ("op", "-"):
            return _poly_mul({zero: -1}, power())
        raise ElementSyntaxError(f"unexpected token {val!r} in {text!r}")

    result = expr()
    if pos != len(toks):
        raise ElementSyntaxError(f"trailing input in {text!r}")
    return result


# ---------------------------------------------------------------------------


class GradedRing:
    """Immutable ring built by :func:`make_ring`; safe to share."""

    def __init__(self, p: RingPresentation, *, _kunneth_base: GradedRing | None = None,
                 _extra_relations: tuple = ()):
        self.name = p.name
        self.presentation = p
        self.domain = p.coefficient_domain
        self.kunneth_base = _kunneth_base

        names, degrees = [], []
        for g in p.generators:
            name, deg = g
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                raise PresentationError(f"bad generator name {name!r}")
            if not isinstance(deg, int) or deg <= 0:
                raise PresentationError(f"generator {name!r}: degree must be a positive integer")
            if deg % 2:
                raise OddDegreeGenerator(f"generator {name!r} has odd degree {deg}")
            names.append(name)
            degrees.append(deg)
        if len(set(names)) != len(names):
            raise PresentationError("duplicate generator names")
        if not isinstance(p.top_degree, int) or p.top_degree < 0:
            raise PresentationError("top_degree must be a nonnegative integer")
        self.names = tuple(names)
        self.degrees = tuple(degrees)
        self.top_degree = p.top_degree
        self._index = {n: i for i, n in enumerate(names)}
        self._nf_cache: dict = {}

        rels = []
        for rel in tuple(p.relations) + tuple(_extra_relations):
            head, tail = self._parse_relation(rel)
            rels.append((head, tail))
        self._relations = tuple(rels)

        fund = parse_polynomial(p.fundamental_monomial, self.names)
        if len(fund) != 1 or next(iter(fund.values())) != 1:
            raise PresentationError("fundamental_monomial must be a single monomial")
        fm = next(iter(fund))
        if self.monomial_degree(fm) != self.top_degree:
            raise PresentationError(
                f"fundamental monomial has degree {self.monomial_degree(fm)}, "
                f"top degree is {self.top_degree}")
        if self._reducer(fm) is not None:
            raise FundamentalMonomialReducible(
                f"{p.fundamental_monomial} is reducible in {self.name}")
        self.fundamental = fm

        # Every reducible monomial must normalize within budget.
        for mono in self._all_monomials():
            if self._reducer(mono) is not None:
                self._normal_form({mono: 1})

    # -- construction helpers -------------------------------------------------

    def _parse_relation(self, rel):
        if isinstance(rel, str):
            if "->" not in rel:
                raise PresentationError(f"relation {rel!r} lacks '->'")
            lhs, rhs = rel.split("->", 1)
        else:
            lhs, rhs = rel
        head_poly = parse_polynomial(lhs, self.names)
        if len(head_poly) != 1 or next(iter(head_poly.values())) != 1:
            raise PresentationError(f"relation head {lhs.strip()!r} must be a bare monomial")
        head = next(iter(head_poly))
        if sum(head) == 0:
            raise PresentationError("relation head cannot be the unit")
        tail = parse_polynomial(rhs, self.names) if rhs.strip() not in ("", "0") else {}
        hd = self.monomial_degree(head)
        for m in tail:
            if self.monomial_degree(m) != hd:
                raise NonHomogeneousRelation(
                    f"relation {lhs.strip()} -> {rhs.strip()}: degree {hd} head, "
                    f"degree {self.monomial_degree(m)} tail term")
        for c in tail.values():
            if isinstance(c, Fraction):
                raise PresentationError("relation coefficients must be integers")
        return head, tail

    def _all_monomials(self, top: int | None = None):
        top = self.top_degree if top is None else top
        out = []

        def rec(i, prefix, deg):
            if i == len(self.degrees):
                out.append(tuple(prefix))
                return
            e = 0
            while deg + e * self.degrees[i] <= top:
                rec(i + 1, prefix + [e], deg + e * self.degrees[i])
                e += 1

        rec(0, [], 0)
        return out

    # -- normal forms ----------------------------------------------------------

    def monomial_degree(self, mono) -> int:
        return sum(e * d for e, d in zip(mono, self.degrees))

    def _reducer(self, mono):
        for head, tail in self._relations:
            if all(a >= b for a, b in zip(mono, head)):
                return head, tail
        return None

    def _reduce_coeff(self, c):
        if self.domain is CoefficientDomain.INTEGERS_MOD_2:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise TypeError("rational scalars are not defined mod 2")
                c = c.numerator
            return c % 2
        return _clean(c)

    def _normal_form(self, terms: Mapping) -> dict:
        pending = dict(terms)
        done: dict = {}
        steps = 0
        while pending:
            mono, c = pending.popitem()
            if c == 0 or self.monomial_degree(mono) > self.top_degree:
                continue
            red = self._reducer(mono)
            if red is None:
                done[mono] = done.get(mono, 0) + c
                continue
            steps += 1
            if steps > REWRITE_BUDGET:
                raise RewriteBudgetExceeded(
                    f"{self.name}: normalization exceeded {REWRITE_BUDGET} rewrite steps")
            head, tail = red
            q = tuple(a - b for a, b in zip(mono, head))
            for tm, tc in tail.items():
                m = tuple(a + b for a, b in zip(q, tm))
                pending[m] = pending.get(m, 0) + c * tc
        out = {}
        for m, c in done.items():
            c = self._reduce_coeff(c)
            if c != 0:
                out[m] = c
        return out

    def _monomial_normal_form(self, mono) -> dict:
        nf = self._nf_cache.get(mono)
        if nf is None:
            nf = self._nf_cache[mono] = self._normal_form({mono: 1})
        return nf

    def _clean_terms(self, terms: Mapping) -> dict:
        out = {}
        for m, c in terms.items():
            c = self._reduce_coeff(c)
            if c != 0:
                out[m] = c
        return out

    # -- public API ------------------------------------------------------------

    @property
    def complex_dimension(self) -> int:
        return self.top_degree // 2

    @cached_property
    def bases(self) -> dict:
        """Degree -> normal-form monomials of that degree, largest first."""
        out: dict = {}
        for mono in self._all_monomials():
            if self._reducer(mono) is None:
                out.setdefault(self.monomial_degree(mono), []).append(mono)
        return {d: sorted(ms, reverse=True) for d, ms in sorted(out.items())}

    def basis(self, degree: int) -> list:
        return [self.monomial(m) for m in self.bases.get(degree, [])]

    def element(self, terms: Mapping) -> RingElement:
        return RingElement(self, self._normal_form(terms))

    def monomial(self, mono, coeff: Scalar = 1) -> RingElement:
        return self.element({tuple(mono): coeff})

    def scalar(self, c: Scalar) -> RingElement:
        return self.element({(0,) * len(self.names): c})

    @cached_property
    def one(self) -> RingElement:
        return self.scalar(1)

    @cached_property
    def zero(self) -> RingElement:
        return RingElement(self, {})

    @cached_property
    def gens(self) -> tuple:
        return tuple(self.gen(n) for n in self.names)

    def gen(self, name: str) -> RingElement:
        if name not in self._index:
            raise KeyError(f"{self.name} has no generator {name!r}")
        e = [0] * len(self.names)
        e[self._index[name]] = 1
        return self.monomial(tuple(e))

    def parse(self, text: str) -> RingElement:
        return self.element(parse_polynomial(text, self.names))

    def __call__(self, value) -> RingElement:
        if isinstance(value, RingElement):
            if value.ring is not self:
                raise RingMismatch(f"element of {value.ring.name} is not in {self.name}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return self.scalar(value)

    def degree_evaluate(self, a: RingElement) -> Scalar:
        """Pair a top-degree class with the fundamental class."""
        a = self(a)
        if a.is_zero:
            return 0
        if a.degree != self.top_degree:
            raise NotTopDegree(f"{a} is not homogeneous of degree {self.top_degree}")
        return a.terms.get(self.fundamental, 0)

    @cached_property
    def mod2(self) -> GradedRing:
        p = self.presentation
        if self.domain is CoefficientDomain.INTEGERS_MOD_2:
            return self
        if p.mod2_names is None:
            raise NoCompanionRing(f"{self.name} declares no mod-2 companion")
        if self.kunneth_base is not None:
            return self.kunneth_base.mod2.kunneth_square()
        return make_ring(_rename(p, p.name + "_mod2", p.mod2_names,
                                 CoefficientDomain.INTEGERS_MOD_2))

    def reduce_mod2(self, a: RingElement) -> RingElement:
        a = self(a)
        target = self.mod2
        if target is self:
            return a
        terms = {}
        for m, c in a.terms.items():
            if isinstance(c, Fraction):
                raise TypeError("cannot reduce a class with rational coefficients mod 2")
            terms[m] = c % 2
        return target.element(terms)

    def kunneth_square(self) -> GradedRing:
        return _kunneth_square(self)

    def pullback(self, a: RingElement, factor: int) -> RingElement:
        """``a x 1`` (factor 1) or ``1 x a`` (factor 2) in the Künneth square."""
        a = self(a)
        sq = self.kunneth_square()
        k = len(self.names)
        terms = {}
        for m, c in a.terms.items():
            terms[m + (0,) * k if factor == 1 else (0,) * k + m] = c
        return sq.element(terms)

    def cross(self, a: RingElement, b: RingElement) -> RingElement:
        return self.pullback(a, 1) * self.pullback(b, 2)

    def restrict_to_diagonal(self, a: RingElement) -> RingElement:
        """Diagonal pullback from the Künneth square: g_1, g_2 -> g."""
        if not isinstance(a, RingElement):
            raise TypeError("expected a RingElement")
        base = a.ring.kunneth_base
        if base is None:
            raise NotKunnethRing(f"{a.ring.name} is not a Künneth square")
        k = len(base.names)
        terms = {}
        for m, c in a.terms.items():
            merged = tuple(i + j for i, j in zip(m[:k], m[k:]))
            terms[merged] = terms.get(merged, 0) + c
        return base.element(terms)

    def __repr__(self):
        return f"GradedRing({self.name!r})"


def _rename(p: RingPresentation, name, new_names, domain) -> RingPresentation:
    old = [g for g, _ in p.generators]
    mapping = dict(zip(old, new_names))

    def sub(text):
        return re.sub(r"[A-Za-z_][A-Za-z0-9_]*", lambda m: mapping.get(m.group(0), m.group(0)), text)

    rels = tuple(sub(r) if isinstance(r, str) else (sub(r[0]), sub(r[1])) for r in p.relations)
    return RingPresentation(
        name=name,
        generators=tuple((mapping[g], d) for g, d in p.generators),
        relations=rels,
        top_degree=p.top_degree,
        fundamental_monomial=sub(p.fundamental_monomial),
        coefficient_domain=domain,
        mod2_names=None,
    )


@lru_cache(maxsize=None)
def _kunneth_square(r: GradedRing) -> GradedRing:
    p = r.presentation
    k = len(r.names)

    def side(i, text):
        return re.sub(r"[A-Za-z_][A-Za-z0-9_]*", lambda m: f"{m.group(0)}_{i}", text)

    rels = []
    for rel in p.relations:
        lhs, rhs = rel.split("->", 1) if isinstance(rel, str) else rel
        for i in (1, 2):
            rels.append(f"{side(i, lhs)} -> {side(i, rhs)}")
    # Kill monomials above the factor's top degree that the factor's own
    # rules do not reach; otherwise they would survive in the product.
    extra = []
    for mono in r._all_monomials(r.top_degree + max(r.degrees, default=0)):
        if r.monomial_degree(mono) <= r.top_degree or r._reducer(mono) is not None:
            continue
        minimal = all(
            r.monomial_degree(mono) - r.degrees[j] <= r.top_degree
            for j in range(k) if mono[j] > 0)
        if minimal:
            text = "*".join(f"{n}^{e}" for n, e in zip(r.names, mono) if e) or "1"
            for i in (1, 2):
                extra.append(f"{side(i, text)} -> 0")
    gens = tuple((f"{n}_1", d) for n, d in p.generators) + \
        tuple((f"{n}_2", d) for n, d in p.generators)
    fund = f"({side(1, p.fundamental_monomial)})*({side(2, p.fundamental_monomial)})"
    mod2_names = None
    if p.mod2_names is not None:
        mod2_names = tuple(f"{n}_1" for n in p.mod2_names) + tuple(f"{n}_2" for n in p.mod2_names)
    sq = RingPresentation(
        name=f"{p.name}^2",
        generators=gens,
        relations=tuple(rels),
        top_degree=2 * p.top_degree,
        fundamental_monomial=fund,
        coefficient_domain=p.coefficient_domain,
        mod2_names=mod2_names,
    )
    return GradedRing(sq, _kunneth_base=r, _extra_relations=tuple(extra))


def make_ring(p: RingPresentation) -> GradedRing:
    return GradedRing(p)


# ---------------------------------------------------------------------------


class RingElement:
    """Sparse normal-form element; a value type."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: GradedRing, terms: Mapping):
        self.ring = ring
        self._terms = dict(terms)

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    @property
    def degrees(self) -> set:
        return {self.ring.monomial_degree(m) for m in self._terms}

    @property
    def degree(self) -> int | None:
        """The common degree of all terms, or None (zero or inhomogeneous)."""
        ds = self.degrees
        return ds.pop() if len(ds) == 1 else None

    def is_homogeneous(self, degree: int | None = None) -> bool:
        ds = self.degrees
        if not ds:
            return True
        return len(ds) == 1 and (degree is None or degree in ds)

    def component(self, degree: int) -> RingElement:
        return RingElement(self.ring, {m: c for m, c in self._terms.items()
                                       if self.ring.monomial_degree(m) == degree})

    def coefficient(self, mono) -> Scalar:
        if isinstance(mono, str):
            poly = parse_polynomial(mono, self.ring.names)
            mono = next(iter(poly))
        return self._terms.get(tuple(mono), 0)

    def _coerce(self, other) -> RingElement:
        if isinstance(other, RingElement):
            if other.ring is not self.ring:
                raise RingMismatch(f"{other.ring.name} vs {self.ring.name}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, 0) + c
        return RingElement(self.ring, self.ring._clean_terms(terms))

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.ring, self.ring._clean_terms({m: -c for m, c in self._terms.items()}))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RingElement(self.ring, self.ring._clean_terms(
                {m: c * other for m, c in self._terms.items()}))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return multiply(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self * (Fraction(1) / other)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = self.ring.one
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.scalar(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring is other.ring and self._terms == other._terms

    def __hash__(self):
        return hash((self.ring.name, frozenset(self._terms.items())))

    def __repr__(self):
        return format_element(self)

    __str__ = __repr__


def multiply(a: RingElement, b: RingElement) -> RingElement:
    """Normal-form product, truncated above the top degree."""
    if a.ring is not b.ring:
        raise RingMismatch(f"cannot multiply elements of {a.ring.name} and {b.ring.name}")
    r = a.ring
    top, deg, nf = r.top_degree, r.monomial_degree, r._monomial_normal_form
    b_terms = [(mb, cb, deg(mb)) for mb, cb in b._terms.items()]
    prod: dict = {}
    for ma, ca in a._terms.items():
        da = deg(ma)
        for mb, cb, db in b_terms:
            if da + db > top:
                continue
            c = ca * cb
            for m, cm in nf(tuple(map(int.__add__, ma, mb))).items():
                prod[m] = prod.get(m, 0) + c * cm
    return RingElement(r, r._clean_terms(prod))


def degree_evaluate(a: RingElement) -> Scalar:
    return a.ring.degree_evaluate(a)


def reduce_mod2(a: RingElement) -> RingElement:
    return a.ring.reduce_mod2(a)


def kunneth_square(r: GradedRing) -> GradedRing:
    return r.kunneth_square()


def restrict_to_diagonal(a: RingElement) -> RingElement:
    base = a.ring.kunneth_base
    if base is None:
        raise NotKunnethRing(f"{a.ring.name} is not a Künneth square")
    return base.restrict_to_diagonal(a)


def format_monomial(names: Iterable[str], mono) -> str:
    parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, mono) if e]
    return "*".join(parts) or "1"


def _sort_key(ring: GradedRing, mono):
    return (ring.monomial_degree(mono), tuple(-e for e in mono))


def format_element(a: RingElement) -> str:
    if a.is_zero:
        return "0"
    pieces = []
    for mono in sorted(a._terms, key=lambda m: _sort_key(a.ring, m)):
        c = a._terms[mono]
        body = format_monomial(a.ring.names, mono)
        neg = c < 0
        mag = -c if neg else c
        if body == "1":
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        pieces.append((neg, text))
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for neg, text in pieces[1:]:
        out += (" - " if neg else " + ") + text
    return out


# ---------------------------------------------------------------------------
# catalog rings


@lru_cache(maxsize=None)
def projective_space_ring(n: int) -> GradedRing:
    """CH*(P^n) = Z[h]/(h^{n+1})."""
    if n < 1:
        raise PresentationError("projective space needs n >= 1")
    return make_ring(RingPresentation(
        name=f"P{n}",
        generators=(("h", 2),),
        relations=(f"h^{n + 1} -> 0",),
        top_degree=2 * n,
        fundamental_monomial=f"h^{n}",
        mod2_names=("u",),
    ))


@lru_cache(maxsize=None)
def quadric_ring(m: int) -> GradedRing:
    """CH*(Q_{2m-1}) = Z[x, y]/(x^m - 2y, y^2) with deg y = 2m, m >= 2.

    The mod-2 companion is Z/2[xi, eta]/(xi^m, eta^2).
    """
    if m < 2:
        raise PresentationError("odd quadric ring needs m >= 2")
    return make_ring(RingPresentation(
        name=f"Q{2 * m - 1}",
        generators=(("x", 2), ("y", 2 * m)),
        relations=(f"x^{m} -> 2*y", "y^2 -> 0"),
        top_degree=4 * m - 2,
        fundamental_monomial=f"x^{m - 1}*y",
        mod2_names=("xi", "eta"),
    ))


_RING_ID = re.compile(r"^(P|Q)(\d+)(\^2)?(_mod2)?$")


def ring_by_id(ring_id: str) -> GradedRing:
    """Look up a catalog ring: ``P<n>``, ``Q<odd n>``, optional ``^2`` and ``_mod2``."""
    m = _RING_ID.match(ring_id)
    if not m:
        raise PresentationError(
            f"unknown ring id {ring_id!r}; use P<n> or Q<odd n>, optionally with ^2 and/or _mod2")
    kind, num, square, mod2 = m.groups()
    num = int(num)
    if kind == "P":
        r = projective_space_ring(num)
    else:
        if num < 3 or num % 2 == 0:
            raise PresentationError("Q<n> needs odd n >= 3")
        r = quadric_ring((num + 1) // 2)
    if square:
        r = r.kunneth_square()
    if mod2:
        r = r.mod2
    return r


def catalog_rings() -> list:
    base = [projective_space_ring(n) for n in (1, 2, 3, 4)] + \
        [quadric_ring(m) for m in (2, 3, 4)]
    return base + [quadric_ring(m).mod2 for m in (2, 3, 4)] + \
        [projective_space_ring(1).kunneth_square(), projective_space_ring(2).kunneth_square(),
         quadric_ring(2).kunneth_square()]
