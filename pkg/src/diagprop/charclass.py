"""Chern classes, Chern character, Todd class and Riemann–Roch evaluators.

All arithmetic is exact.  Chern characters and Todd classes carry rational
coefficients; the Euler characteristic evaluators return ``Fraction`` (or
``int`` when integral) and leave the integrality question to the caller,
since a non-integral value is exactly what rules out a bundle.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    DimensionMismatch,
    DimensionTooLarge,
    InputError,
    ParityViolation,
    RingMismatch,
)
from .graded_ring import GradedRing, RingElement, projective_space_ring, quadric_ring


def _exact(q):
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else q


@dataclass(frozen=True)
class CharClassVector:
    """Total Chern class ``c_0 + c_1 + ...`` of a (possibly virtual) bundle.

    ``components[i]`` is homogeneous of degree 2i; the tuple has one entry per
    complex dimension of the ring plus one.
    """

    ring: GradedRing
    rank: int
    components: tuple
    virtual: bool = False

    def __post_init__(self):
        n = self.ring.complex_dimension
        if len(self.components) != n + 1:
            raise DimensionMismatch(f"expected {n + 1} components, got {len(self.components)}")
        if self.components[0] != self.ring.one:
            raise InputError("c_0 must be 1")
        for i, c in enumerate(self.components):
            if c.ring is not self.ring:
                raise RingMismatch(f"component c_{i} lives in {c.ring.name}")
            if not c.is_homogeneous(2 * i):
                raise DimensionMismatch(f"c_{i} = {c} is not homogeneous of degree {2 * i}")
        if not self.virtual:
            if self.rank < 0:
                raise InputError("rank of an honest bundle must be nonnegative")
            for i in range(self.rank + 1, n + 1):
                if self.components[i]:
                    raise InputError(f"c_{i} must vanish for a rank {self.rank} bundle")

    @classmethod
    def from_total(cls, ring: GradedRing, rank: int, total: RingElement, virtual=False):
        total = ring(total)
        comps = tuple(total.component(2 * i) for i in range(ring.complex_dimension + 1))
        return cls(ring, rank, comps, virtual)

    @classmethod
    def from_coordinates(cls, ring: GradedRing, rank: int, coords, virtual=False):
        """Build from integers ``d_i`` with ``c_i = d_i * (basis class of degree 2i)``.

        On CH*(Q_3) the basis classes are x, y, xy, i.e. the quadric surface,
        line and point classes.
        """
        n = ring.complex_dimension
        coords = list(coords) + [0] * (n - len(coords))
        if len(coords) > n:
            raise DimensionMismatch(f"{len(coords)} coordinates for a ring of dimension {n}")
        comps = [ring.one]
        for i, d in enumerate(coords, start=1):
            basis = ring.basis(2 * i)
            if len(basis) != 1:
                raise DimensionMismatch(f"degree {2 * i} of {ring.name} is not cyclic")
            comps.append(basis[0] * d)
        return cls(ring, rank, tuple(comps), virtual)

    @classmethod
    def trivial(cls, ring: GradedRing, rank: int):
        return cls.from_total(ring, rank, ring.one)

    @classmethod
    def line_bundle(cls, ring: GradedRing, c1: RingElement):
        return cls.from_total(ring, 1, ring.one + ring(c1))

    @property
    def total(self) -> RingElement:
        out = self.ring.zero
        for c in self.components:
            out = out + c
        return out

    def c(self, i: int) -> RingElement:
        return self.components[i] if i < len(self.components) else self.ring.zero

    def coordinates(self) -> tuple:
        """Inverse of :meth:`from_coordinates`."""
        out = []
        for i in range(1, len(self.components)):
            basis = self.ring.bases.get(2 * i, [])
            if len(basis) != 1:
                raise DimensionMismatch(f"degree {2 * i} of {self.ring.name} is not cyclic")
            out.append(self.components[i].coefficient(basis[0]))
        return tuple(out)


def _check_same_ring(*vs):
    rings = {id(v.ring) for v in vs}
    if len(rings) != 1:
        raise RingMismatch("characteristic classes live in different rings: "
                           + ", ".join(v.ring.name for v in vs))


def whitney_sum(a: CharClassVector, b: CharClassVector) -> CharClassVector:
    _check_same_ring(a, b)
    return CharClassVector.from_total(a.ring, a.rank + b.rank, a.total * b.total,
                                      a.virtual or b.virtual)


def power_series_inverse(u: RingElement) -> RingElement:
    """Inverse of a class with constant term 1 (the rest is nilpotent)."""
    r = u.ring
    if u.component(0) != r.one:
        raise InputError("only classes with constant term 1 are invertible here")
    nil = r.one - u
    out, term = r.one, r.one
    for _ in range(r.complex_dimension):
        term = term * nil
        out = out + term
    return out


def twist_by_line_bundle(v: CharClassVector, c1_line: RingElement) -> CharClassVector:
    """Chern classes of ``E (x) L`` from those of E and c_1(L)."""
    from math import comb
    r, rank = v.ring, v.rank
    L = r(c1_line)
    comps = [r.one]
    for k in range(1, r.complex_dimension + 1):
        ck = r.zero
        for i in range(0, k + 1):
            coef = comb(rank - i, k - i) if rank - i >= 0 else 0
            if coef:
                ck = ck + v.c(i) * (L ** (k - i)) * coef
        comps.append(ck)
    return CharClassVector(r, rank, tuple(comps), v.virtual)


def _require_dim3(*vs):
    for v in vs:
        if v.ring.complex_dimension > 3:
            raise DimensionTooLarge(
                f"{v.ring.name} has complex dimension {v.ring.complex_dimension} > 3")


def chern_character(v: CharClassVector) -> tuple:
    """ch_0 .. ch_n (n = complex dimension <= 3) with rational coefficients."""
    _require_dim3(v)
    r = v.ring
    c1, c2, c3 = v.c(1), v.c(2), v.c(3)
    ch = [r.one * v.rank,
          c1,
          (c1 * c1 - c2 * 2) * Fraction(1, 2),
          (c1 * c1 * c1 - c1 * c2 * 3 + c3 * 3) * Fraction(1, 6)]
    return tuple(ch[: r.complex_dimension + 1])


def todd_class(tangent: CharClassVector) -> tuple:
    """td_0 .. td_n of a tangent bundle (n <= 3)."""
    _require_dim3(tangent)
    r = tangent.ring
    c1, c2 = tangent.c(1), tangent.c(2)
    td = [r.one,
          c1 * Fraction(1, 2),
          (c1 * c1 + c2) * Fraction(1, 12),
          c1 * c2 * Fraction(1, 24)]
    return tuple(td[: r.complex_dimension + 1])


def euler_char_hrr(tangent: CharClassVector, bundle: CharClassVector):
    """Hirzebruch–Riemann–Roch: degree of ``ch(bundle) * td(tangent)``."""
    _check_same_ring(tangent, bundle)
    _require_dim3(tangent)
    r = tangent.ring
    n = r.complex_dimension
    ch, td = chern_character(bundle), todd_class(tangent)
    top = r.zero
    for k in range(n + 1):
        top = top + ch[k] * td[n - k]
    return _exact(r.degree_evaluate(top))


def hrr_q3_closed_form(rank: int, d1: int, d2: int, d3: int):
    """Closed-form χ(Q_3, E) in the (quadric surface, line, point) coordinates."""
    return _exact(Fraction(2 * d1 ** 3 - 3 * d1 * d2 + 3 * d3, 6)
                  + Fraction(3, 2) * (d1 ** 2 - d2)
                  + Fraction(13, 6) * d1
                  + rank)


# ---------------------------------------------------------------------------
# tangent bundles of catalog varieties


@lru_cache(maxsize=None)
def quadric_tangent(m: int) -> CharClassVector:
    """c(T Q_{2m-1}) = (1+x)^{2m+1} / (1+2x), computed in CH*(Q_{2m-1})."""
    R = quadric_ring(m)
    x = R.gen("x")
    total = (R.one + x) ** (2 * m + 1) * power_series_inverse(R.one + x * 2)
    v = CharClassVector.from_total(R, 2 * m - 1, total)
    if v.c(1) != x * (2 * m - 1):
        raise AssertionError("c_1 of the odd quadric must be (2m-1)x")
    return v


def q3_tangent() -> CharClassVector:
    return quadric_tangent(2)


@lru_cache(maxsize=None)
def projective_tangent(n: int) -> CharClassVector:
    """c(T P^n) = (1+h)^{n+1} from the Euler sequence."""
    R = projective_space_ring(n)
    return CharClassVector.from_total(R, n, (R.one + R.gen("h")) ** (n + 1))


# ---------------------------------------------------------------------------
# curves and surfaces


def euler_char_curve(genus: int, degree: int) -> int:
    """χ(C, L) = deg L + 1 - g."""
    return degree + 1 - genus


@dataclass(frozen=True)
class SurfaceRRData:
    chi_structure_sheaf: int
    name: str = ""


K3 = SurfaceRRData(2, "K3")
ENRIQUES = SurfaceRRData(1, "Enriques")
ABELIAN = SurfaceRRData(0, "abelian")
BIELLIPTIC = SurfaceRRData(0, "hyperelliptic")
P2 = SurfaceRRData(1, "P2")


def euler_char_surface(data: SurfaceRRData, D_sq: int, D_dot_K: int) -> int:
    """χ(O(D)) = χ(O) + (D^2 - D.K)/2 on a smooth projective surface."""
    diff = D_sq - D_dot_K
    if diff % 2:
        raise ParityViolation(
            f"D^2 - D.K = {diff} is odd; no divisor class on a smooth surface has these numbers")
    return data.chi_structure_sheaf + diff // 2


def cherneven_residue(c1_M: RingElement, bundle: CharClassVector) -> int:
    """deg(c_3 - c_2 (c_1(M) + c_1)) mod 2 on an almost complex 3-fold.

    Any honest bundle gives 0; a value of 1 shows the classes cannot come
    from a complex vector bundle.
    """
    r = bundle.ring
    if r.complex_dimension != 3:
        raise DimensionMismatch(f"{r.name} has complex dimension {r.complex_dimension}, need 3")
    if len(r.bases.get(6, [])) != 1:
        raise DimensionMismatch(f"top degree of {r.name} is not cyclic")
    c1_M = r(c1_M)
    if not c1_M.is_homogeneous(2):
        raise DimensionMismatch("c_1(M) must be homogeneous of degree 2")
    expr = bundle.c(3) - bundle.c(2) * (c1_M + bundle.c(1))
    return r.degree_evaluate(expr) % 2
