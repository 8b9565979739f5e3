"""Sq^2 on mod-2 cohomology rings with vanishing odd cohomology.

With Sq^1 = 0 the Cartan formula makes Sq^2 a derivation:
Sq^2(ab) = Sq^2(a) b + a Sq^2(b).  So Sq^2 is fixed by its values on the
generators, and Sq^2(g^e) = e g^{e-1} Sq^2(g).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType

from .errors import BadM, DegreeMismatch, InputError, MissingGeneratorImage, RingMismatch
from .graded_ring import CoefficientDomain, GradedRing, RingElement, quadric_ring


@dataclass(frozen=True)
class Sq2Spec:
    ring: GradedRing
    generator_images: MappingProxyType = field(hash=False)

    def __post_init__(self):
        r = self.ring
        if r.domain is not CoefficientDomain.INTEGERS_MOD_2:
            raise InputError(f"Sq^2 needs a mod-2 ring, {r.name} has coefficients in {r.domain.value}")
        images = {}
        for name, img in dict(self.generator_images).items():
            if name not in r.names:
                raise InputError(f"{r.name} has no generator {name!r}")
            img = r(img)
            g = r.gen(name)
            target = r.degrees[r.names.index(name)] + 2
            if not img.is_homogeneous(target):
                raise DegreeMismatch(f"Sq^2({name}) must have degree {target}")
            if g.degree == 2 and img != g * g:
                raise InputError(f"Sq^2({name}) must equal {name}^2 in degree 2")
            images[name] = img
        object.__setattr__(self, "generator_images", MappingProxyType(images))


@lru_cache(maxsize=None)
def quadric_sq2_spec(m: int) -> Sq2Spec:
    """Sq^2(xi) = xi^2 and Sq^2(eta) = (m-1) xi eta on H*(Q_{2m-1}; Z/2)."""
    if m < 2:
        raise BadM(f"m must be >= 2, got {m}")
    R = quadric_ring(m).mod2
    xi, eta = R.gens
    return Sq2Spec(R, MappingProxyType({"xi": xi * xi, "eta": xi * eta * (m - 1)}))


def sq2(spec: Sq2Spec, a: RingElement) -> RingElement:
    r = spec.ring
    if a.ring is not r:
        raise RingMismatch(f"element of {a.ring.name}, Sq^2 is defined on {r.name}")
    out = r.zero
    for mono, c in a.terms.items():
        for i, e in enumerate(mono):
            if e == 0 or e % 2 == 0:
                continue  # e * g^{e-1} Sq^2(g) vanishes mod 2 for even e
            name = r.names[i]
            if name not in spec.generator_images:
                raise MissingGeneratorImage(f"no Sq^2 image for generator {name!r}")
            rest = list(mono)
            rest[i] -= 1
            out = out + r.monomial(tuple(rest), c) * spec.generator_images[name]
    return out


def wu_identity_check(w2: RingElement, w_n: RingElement, w_nplus2: RingElement,
                      n: int, spec: Sq2Spec) -> bool:
    """Does Sq^2 w_n = w_2 w_n + C(2-n, 2) w_{n+2} hold (with w_1 = 0)?"""
    r = spec.ring
    if n % 2:
        raise DegreeMismatch("n must be even (odd Stiefel–Whitney classes vanish here)")
    for cls, deg, label in ((w2, 2, "w_2"), (w_n, n, "w_n"), (w_nplus2, n + 2, "w_{n+2}")):
        if cls.ring is not r:
            raise RingMismatch(f"{label} lives in {cls.ring.name}")
        if not cls.is_homogeneous(deg):
            raise DegreeMismatch(f"{label} = {cls} is not homogeneous of degree {deg}")
    binom = ((2 - n) * (1 - n) // 2) % 2
    rhs = w2 * w_n + w_nplus2 * binom
    return sq2(spec, w_n) == rhs


def congruence_cherniden2(m: int, c1: int, c_2m_minus_2: int, c_2m_minus_1: int) -> bool:
    """c_{2m-1} = c_{2m-2} (c_1 + 1) mod 2 for Chern numbers on Q_{2m-1}."""
    if m < 2:
        raise BadM(f"m must be >= 2, got {m}")
    return (c_2m_minus_1 - c_2m_minus_2 * (c1 + 1)) % 2 == 0


def stiefel_whitney_from_chern(m: int, c1: int, c_2m_minus_2: int, c_2m_minus_1: int) -> tuple:
    """(w_2, w_{4m-4}, w_{4m-2}) as mod-2 reductions of the integral Chern classes."""
    R = quadric_ring(m)
    x, y = R.gens
    return (R.reduce_mod2(x * c1),
            R.reduce_mod2(x ** (m - 2) * y * c_2m_minus_2),
            R.reduce_mod2(x ** (m - 1) * y * c_2m_minus_1))
