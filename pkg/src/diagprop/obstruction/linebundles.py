"""Euler characteristics of O(n) and the search for cohomologically trivial O(n)."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import factorial

from ..charclass import K3, euler_char_surface
from ..errors import MissingFlag, UnsupportedSpec
from .variety import Kind, VarietySpec, normalize_complete_intersection


def binomial_polynomial(a: int, k: int) -> int:
    """C(a, k) as the polynomial a(a-1)...(a-k+1)/k!, valid for negative a."""
    num = 1
    for i in range(k):
        num *= a - i
    return num // factorial(k)


def chi_projective_space(n: int, k: int) -> int:
    return binomial_polynomial(n + k, n)


def chi_complete_intersection(n: int, multidegree, k: int) -> int:
    """chi(X, O(k)) for X cut out by forms of the given degrees in P^n (Koszul)."""
    total = 0
    degs = list(multidegree)
    for size in range(len(degs) + 1):
        for subset in combinations(degs, size):
            total += (-1) ** size * chi_projective_space(n, k - sum(subset))
    return total


@dataclass(frozen=True)
class LineBundleData:
    """Pic = Z data: dimension, omega = O(canonical_twist), and chi(O(k)) if known."""

    dim: int
    canonical_twist: int
    chi: object  # callable k -> int, or None when no formula is available
    generator_has_section: bool | None
    label: str


def line_bundle_data(spec: VarietySpec) -> LineBundleData:
    k = spec.kind
    if k is Kind.PROJECTIVE_SPACE:
        n = spec.n
        return LineBundleData(n, -(n + 1), lambda t: chi_projective_space(n, t), True, f"P^{n}")
    if k in (Kind.QUADRIC, Kind.COMPLETE_INTERSECTION, Kind.CUBIC_THREEFOLD):
        if k is Kind.QUADRIC:
            amb, degs = spec.n + 1, (2,)
        elif k is Kind.CUBIC_THREEFOLD:
            amb, degs = 4, (3,)
        else:
            amb, degs = normalize_complete_intersection(spec.n, spec.multidegree)
        dim = amb - len(degs)
        if not degs:
            return line_bundle_data(VarietySpec(Kind.PROJECTIVE_SPACE, n=amb))
        if dim < 3:
            raise UnsupportedSpec(
                f"Pic of a complete intersection of dimension {dim} need not be Z "
                "(Lefschetz needs dimension >= 3); try k3_generic or pic_z_general")
        return LineBundleData(dim, sum(degs) - amb - 1,
                              lambda t: chi_complete_intersection(amb, degs, t), True,
                              f"X_{list(degs)} in P^{amb}")
    if k is Kind.K3_GENERIC:
        d = spec.d
        return LineBundleData(2, 0, lambda t: euler_char_surface(K3, t * t * d, 0), True,
                              f"K3 of degree {d}")
    if k is Kind.PIC_Z_GENERAL:
        return LineBundleData(spec.dim, spec.r, None, spec.ample_generator_has_section,
                              f"Pic = Z variety of dimension {spec.dim}")
    raise UnsupportedSpec(
        f"{k.value} has no Pic = Z data; supported: projective_space, quadric (n >= 3), "
        "complete_intersection (dim >= 3), cubic_threefold, k3_generic, pic_z_general")


@dataclass(frozen=True)
class LineBundleRow:
    """Verdict for one twist O(n): ``excluded_by`` is None for survivors."""

    n: int
    chi: int | None
    excluded_by: str | None

    @property
    def candidate(self) -> bool:
        return self.excluded_by is None


def default_window(data: LineBundleData) -> int:
    # Covers the open interval (r, 0) of twists the exclusions leave.
    return abs(data.canonical_twist) + data.dim + 10


def scan_line_bundles(spec: VarietySpec, window: int | None = None) -> list:
    """Every twist O(n), |n| <= window, with the reason it is excluded (if any)."""
    data = line_bundle_data(spec)
    if data.generator_has_section is None:
        raise MissingFlag("ample_generator_has_section")
    W = default_window(data) if window is None else window
    if W < 0:
        raise UnsupportedSpec("chi window must be nonnegative")
    r = data.canonical_twist
    rows = []
    for n in range(-W, W + 1):
        chi = data.chi(n) if data.chi else None
        if n == 0:
            why = "H^0(O) != 0"
        elif n == r:
            why = "H^top(omega) != 0"
        elif data.generator_has_section and n > 0:
            why = "H^0(O(n)) != 0 (power of a generator with a section)"
        elif data.generator_has_section and n < r:
            why = f"H^top(O(n)) = H^0(O({r - n}))^* != 0 (Serre duality)"
        elif chi is not None and chi != 0:
            why = f"chi(O(n)) = {chi} != 0"
        else:
            why = None
        rows.append(LineBundleRow(n, chi, why))
    return rows


def coh_trivial_candidates(spec: VarietySpec, window: int | None = None) -> list:
    """Twists n for which O(n) might be cohomologically trivial, in decreasing order."""
    rows = scan_line_bundles(spec, window)
    return sorted((row for row in rows if row.candidate), key=lambda row: -row.n)

