"""Catalog entries for varieties and manifolds."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace

from ..errors import ContradictoryFlags, InputError, UnsupportedSpec


class Kind(str, enum.Enum):
    PROJECTIVE_SPACE = "projective_space"
    GRASSMANNIAN = "grassmannian"
    QUADRIC = "quadric"
    COMPLETE_INTERSECTION = "complete_intersection"
    K3_GENERIC = "k3_generic"
    K3_TWO_DISJOINT_RATIONAL_CURVES = "k3_two_disjoint_rational_curves"
    ABELIAN_SURFACE = "abelian_surface"
    ENRIQUES = "enriques"
    HYPERELLIPTIC_SURFACE = "hyperelliptic_surface"
    RULED_SURFACE = "ruled_surface"
    ELLIPTIC_SURFACE_WITH_SECTION = "elliptic_surface_with_section"
    PRODUCT = "product"
    SPHERE = "sphere"
    LIE_GROUP = "lie_group"
    CUBIC_THREEFOLD = "cubic_threefold"
    FAKE_P2 = "fake_p2"
    ABELIAN_VARIETY = "abelian_variety"
    PIC_Z_GENERAL = "pic_z_general"


class Mode(str, enum.Enum):
    ALGEBRAIC = "algebraic"
    TOPOLOGICAL = "topological"


# Which numeric parameters each kind takes.
PARAMETERS = {
    Kind.PROJECTIVE_SPACE: ("n",),
    Kind.GRASSMANNIAN: ("r", "n"),
    Kind.QUADRIC: ("n",),
    Kind.COMPLETE_INTERSECTION: ("n", "multidegree"),
    Kind.K3_GENERIC: ("d",),
    Kind.PRODUCT: ("factors",),
    Kind.SPHERE: ("n",),
    Kind.LIE_GROUP: ("dim", "point_property", "h1_mod2_zero"),
    Kind.ABELIAN_VARIETY: ("g", "point_property"),
    Kind.PIC_Z_GENERAL: ("dim", "r", "ample_generator_has_section"),
}
# Parameters that may be left out (tri-valued flags default to unknown).
OPTIONAL = {"point_property", "h1_mod2_zero", "ample_generator_has_section"}

SURFACE_KINDS = frozenset({
    Kind.K3_GENERIC, Kind.K3_TWO_DISJOINT_RATIONAL_CURVES, Kind.ABELIAN_SURFACE,
    Kind.ENRIQUES, Kind.HYPERELLIPTIC_SURFACE, Kind.RULED_SURFACE,
    Kind.ELLIPTIC_SURFACE_WITH_SECTION, Kind.FAKE_P2,
})

# Kinds whose Picard group is finitely generated for structural reasons (q = 0).
PIC_FG_KINDS = frozenset({
    Kind.PROJECTIVE_SPACE, Kind.GRASSMANNIAN, Kind.QUADRIC, Kind.COMPLETE_INTERSECTION,
    Kind.K3_GENERIC, Kind.K3_TWO_DISJOINT_RATIONAL_CURVES, Kind.ENRIQUES,
    Kind.CUBIC_THREEFOLD, Kind.FAKE_P2, Kind.PIC_Z_GENERAL,
})

# Kinds whose ample generator O(1) visibly has a nonzero section.
SECTION_KINDS = frozenset({
    Kind.PROJECTIVE_SPACE, Kind.QUADRIC, Kind.COMPLETE_INTERSECTION,
    Kind.K3_GENERIC, Kind.CUBIC_THREEFOLD,
})

TOPOLOGICAL_ONLY = frozenset({Kind.SPHERE})


def _check_flag(name, value):
    if value is not None and not isinstance(value, bool):
        raise InputError(f"{name} must be true, false or unknown, got {value!r}")


@dataclass(frozen=True)
class VarietySpec:
    """One catalog entry.

    Tri-valued flags use ``None`` for "unknown".  ``r`` is the subspace
    dimension for a Grassmannian G(r, n) and the twist with omega = O(r)
    for ``PIC_Z_GENERAL``.
    """

    kind: Kind
    n: int | None = None
    r: int | None = None
    d: int | None = None
    g: int | None = None
    dim: int | None = None
    multidegree: tuple = ()
    factors: tuple = ()
    point_property: bool | None = None
    h1_mod2_zero: bool | None = None
    ample_generator_has_section: bool | None = None
    pic_finitely_generated: bool | None = None
    mode: Mode = field(default=None)

    def __post_init__(self):
        kind = Kind(self.kind)
        object.__setattr__(self, "kind", kind)
        mode = self.mode
        if mode is None:
            mode = Mode.TOPOLOGICAL if kind in (Kind.SPHERE, Kind.LIE_GROUP) else Mode.ALGEBRAIC
        object.__setattr__(self, "mode", Mode(mode))
        object.__setattr__(self, "multidegree", tuple(self.multidegree))
        object.__setattr__(self, "factors", tuple(self.factors))
        for flag in ("point_property", "h1_mod2_zero", "ample_generator_has_section",
                     "pic_finitely_generated"):
            _check_flag(flag, getattr(self, flag))
        self._validate()

    def _need(self, *names):
        for name in names:
            v = getattr(self, name)
            if v is None or isinstance(v, bool) or not isinstance(v, int):
                raise InputError(f"{self.kind.value}: integer parameter {name!r} is required")

    def _validate(self):
        k = self.kind
        allowed = set(PARAMETERS.get(k, ()))
        for name in ("n", "r", "d", "g", "dim", "multidegree", "factors", "point_property",
                     "h1_mod2_zero", "ample_generator_has_section"):
            v = getattr(self, name)
            if name not in allowed and v not in (None, ()):
                raise InputError(f"{k.value} takes no parameter {name!r}")
        if k in (Kind.PROJECTIVE_SPACE, Kind.QUADRIC, Kind.SPHERE):
            self._need("n")
            if self.n < 1:
                raise InputError(f"{k.value}: n must be >= 1")
        elif k is Kind.GRASSMANNIAN:
            self._need("r", "n")
            if not 0 < self.r < self.n:
                raise InputError("grassmannian: need 0 < r < n")
        elif k is Kind.COMPLETE_INTERSECTION:
            self._need("n")
            if not self.multidegree:
                raise InputError("complete_intersection: multidegree must be nonempty")
            if any(isinstance(x, bool) or not isinstance(x, int) or x < 1 for x in self.multidegree):
                raise InputError("complete_intersection: multidegrees must be positive integers")
            if self.n - len(self.multidegree) < 1:
                raise InputError("complete_intersection: dimension n - len(multidegree) must be >= 1")
        elif k is Kind.K3_GENERIC:
            self._need("d")
            if self.d < 2 or self.d % 2:
                raise InputError("k3_generic: d = H^2 must be a positive even integer")
        elif k is Kind.PRODUCT:
            if len(self.factors) < 2:
                raise InputError("product: at least two factors are required")
            for f in self.factors:
                if not isinstance(f, VarietySpec):
                    raise InputError("product: factors must be variety specs")
        elif k is Kind.LIE_GROUP:
            self._need("dim")
            if self.dim < 1:
                raise InputError("lie_group: dim must be >= 1")
            if self.h1_mod2_zero and self.point_property and self.dim % 2:
                raise ContradictoryFlags(
                    "lie_group: H_1(M; Z/2) = 0 rules out (D_r) in odd dimension, "
                    "so point_property = true contradicts h1_mod2_zero = true")
        elif k is Kind.ABELIAN_VARIETY:
            self._need("g")
            if self.g < 1:
                raise InputError("abelian_variety: g must be >= 1")
        elif k is Kind.PIC_Z_GENERAL:
            self._need("dim", "r")
            if self.dim < 1:
                raise InputError("pic_z_general: dim must be >= 1")
            if self.pic_finitely_generated is False:
                raise ContradictoryFlags("pic_z_general: Pic = Z is finitely generated")
        if self.pic_finitely_generated is False and k in PIC_FG_KINDS:
            raise ContradictoryFlags(f"{k.value}: the Picard group is finitely generated")
        if k in TOPOLOGICAL_ONLY and self.mode is Mode.ALGEBRAIC:
            raise UnsupportedSpec(f"{k.value} is not an algebraic variety; use mode \"topological\"")

    @property
    def section_flag(self) -> bool | None:
        if self.kind in SECTION_KINDS:
            return True
        return self.ample_generator_has_section

    def with_mode(self, mode: Mode) -> VarietySpec:
        return replace(self, mode=mode)

    def describe(self) -> str:
        k = self.kind
        if k is Kind.PRODUCT:
            return " x ".join(f.describe() for f in self.factors)
        params = [f"{p}={getattr(self, p)!r}" for p in PARAMETERS.get(k, ())
                  if p != "factors" and getattr(self, p) is not None]
        return f"{k.value}({', '.join(params)})" if params else k.value


def complex_dimension(spec: VarietySpec) -> int | None:
    """Complex dimension, or None for spheres and Lie groups (real objects)."""
    k = spec.kind
    if k in (Kind.PROJECTIVE_SPACE, Kind.QUADRIC):
        return spec.n
    if k is Kind.GRASSMANNIAN:
        return spec.r * (spec.n - spec.r)
    if k is Kind.COMPLETE_INTERSECTION:
        return spec.n - len(spec.multidegree)
    if k in SURFACE_KINDS:
        return 2
    if k is Kind.CUBIC_THREEFOLD:
        return 3
    if k is Kind.ABELIAN_VARIETY:
        return spec.g
    if k is Kind.PIC_Z_GENERAL:
        return spec.dim
    if k is Kind.PRODUCT:
        dims = [complex_dimension(f) for f in spec.factors]
        return None if None in dims else sum(dims)
    return None


def real_dimension(spec: VarietySpec) -> int:
    k = spec.kind
    if k is Kind.SPHERE:
        return spec.n
    if k is Kind.LIE_GROUP:
        return spec.dim
    if k is Kind.PRODUCT:
        return sum(real_dimension(f) for f in spec.factors)
    return 2 * complex_dimension(spec)


def flatten_product(spec: VarietySpec) -> list:
    if spec.kind is not Kind.PRODUCT:
        return [spec]
    out = []
    for f in spec.factors:
        out.extend(flatten_product(f))
    return out


def normalize_complete_intersection(n: int, multidegree) -> tuple:
    """Drop hyperplane sections: returns (ambient n, sorted degrees >= 2)."""
    degs = sorted(d for d in multidegree if d != 1)
    return n - (len(multidegree) - len(degs)), tuple(degs)
