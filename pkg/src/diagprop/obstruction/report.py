"""Verdicts, trace steps and the citation index."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


class Verdict(str, enum.Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    UNKNOWN = "UNKNOWN"


class Property(str, enum.Enum):
    D = "D"
    D_r = "D_r"
    D_o = "D_o"
    D_c = "D_c"


# Keys are the labels of the source results; descriptions are ours.
CITATIONS = {
    'Intro (Grassmannian)': "Diagonal of a Grassmannian is the zero scheme of the section of "
                            "Hom(p1*S, p2*Q) induced by the tautological sequence.",
    'Intro (products)': "(D) and its topological variants are closed under products.",
    'Intro (curves)': "(D) holds for smooth curves.",
    'Intro (flag varieties)': "(D) holds for flag varieties SL_n/P.",
    'Theorem "Tm"': "Under Pic(X x X) = Pic(X) + Pic(X), (D) forces a cohomologically trivial "
                    "line bundle; on surfaces such a bundle gives (D).",
    'Lemma "Pic"': "The Picard splitting holds iff Pic(X) is finitely generated.",
    'Prop. "Pk3"': "A generic algebraic K3 surface fails (D): chi(O(n)) = n^2 d/2 + 2 >= 2.",
    'Prop. "blowup"': "Pullbacks of cohomologically trivial line bundles under blow-ups stay trivial.",
    'Lemma "ctl-curves"': "Every smooth projective curve carries a cohomologically trivial line bundle.",
    'Prop. "ruled"': "Birationally ruled surfaces carry a cohomologically trivial line bundle.",
    'Prop. (abelian surface)': "A nontrivial class in Pic^0 of an abelian surface is cohomologically trivial.",
    'Prop. "two"': "O(D1 - D2) is cohomologically trivial on a K3 with disjoint (-2)-curves D1, D2.",
    'Prop. "bielliptic"': "Hyperelliptic surfaces carry a cohomologically trivial line bundle.",
    'Prop. (Enriques)': "Enriques surfaces carry a cohomologically trivial line bundle "
                        "(O(-E) for a (-2)-curve E, or O(D1 - D2) for two half pencils).",
    'Prop. (elliptic with section)': "Elliptic fibrations with a section carry a cohomologically "
                                     "trivial line bundle.",
    'Theorem "th-surf"': "Surface summary: listed birational classes have (D); Pic = Z with an "
                         "effective ample generator and (D) forces P^2.",
    'Prop. "Tz"': "A surface other than P^2 with Pic = Z and effective ample generator fails (D).",
    'Remark (fake P2)': "Whether a fake projective plane has (D) is left open.",
    'Remark (open surface case)': "No example is known of Pic = Z, effective ample canonical "
                                  "class, and ample generator without sections.",
    'Prop. "fano1"': "Pic = Z, effective ample generator and (D) in dimension >= 3 force "
                     "omega = O(-r) with r >= 2.",
    'Cor. (complete intersections)': "Smooth complete intersections of multidegree d in P^n with "
                                     "r <= n - 3 and sum(d) >= n fail (D).",
    'Cor. (index 1 Fano)': "Fano varieties with b_2 = 1 and index 1 fail (D).",
    'Theorem (point property)': "(D) with finitely generated Pic gives a cohomologically trivial L "
                                "with the L^-1 and L (x) omega^-1 point properties.",
    'Cor. "Lpt"': "If each cohomologically trivial L violates one of the two point properties, "
                  "(D) fails.",
    'Prop. "quadric1"': "Q_3 fails (D): a rank 3 bundle with d_1 = d_3 = 1 would have "
                        "chi = 15/2 - 2 d_2.",
    'Prop. "Pwpp"': "A group variety has (D) iff it has the weak point property.",
    'Cor. (abelian varieties)': "An abelian variety has (D) iff it has the weak point property.",
    'Note (abelian varieties)': "Jacobians have (D); general abelian varieties of dimension > 2 do not "
                                "(communicated result, no criterion given).",
    'Lemma (cubic 3-fold)': "A smooth cubic 3-fold has the O(1)-point property; (D) stays undecided.",
    'Remark "almcomp"': "(D_c) implies (D_o) implies (D_r); for complex manifolds (D) implies (D_c).",
    'Example "liegroup"': "A Lie group has (D_r)/(D_o)/(D_c) iff the matching point property holds; "
                          "S^1 and SO(3) have (D_r).",
    'Example "prodexample"': "Products of manifolds with a diagonal property keep it.",
    'Example "projgras"': "Real and complex Grassmannians have (D_r) resp. (D_c).",
    'Example "riemsurf"': "Compact Riemann surfaces have (D_c).",
    'Example "projline2"': "S^1 has (D_r); S^2, S^4, S^8 have (D_o); S^2 has (D_c).",
    'Theorem "top"': "Topological summary: spheres, odd dimension, dimensions 4 and 6, odd quadrics.",
    'Theorem "prop1"': "S^n has (D_r) iff n = 1, 2, 4, 8 (needs a parallelizable S^{n-1}).",
    'Theorem "prop3"': "Compact orientable odd-dimensional manifolds fail (D_o), and fail (D_r) "
                       "when H_1(M; Z/2) = 0.",
    'Remark "proj3rmk"': "RP^3 has (D_r) but not (D_o); the H_1 hypothesis is sharp.",
    'Theorem "dim4"': "Almost complex 4-manifolds have (D_c).",
    'Lemma "cherneven"': "On an almost complex 3-fold c_3 - c_2 (c_1(M) + c_1) is even.",
    'Theorem "spinprop2"': "An almost complex 6-manifold with H^1 = 0, H^2 = Z and (D_c) is spin.",
    'Remark "spinproprmk"': "The H^2 = Z hypothesis cannot be dropped (CP^2 x CP^1); spin is not "
                            "sufficient (S^6).",
    'Cor. "compinter"': "A complete intersection 3-fold with (D_c) is spin.",
    'Cor. "hyperP4"': "A complete intersection 3-fold in CP^n has (D_c) only if n + 1 - sum(d) is even.",
    'Prop. "quadricZ"': "H*(Q_{2m-1}) = Z[x, y]/(x^m - 2y, y^2).",
    'Cor. "Z2coho"': "H*(Q_{2m-1}; Z/2) = Z/2[xi, eta]/(xi^m, eta^2).",
    'Lemma "steenrod2"': "Sq^2 xi = xi^2, Sq^2 eta = (m-1) xi eta, Sq^2(xi^{m-2} eta) = xi^{m-1} eta.",
    'Prop. "cherniden2"': "c_{2m-1} = c_{2m-2}(c_1 + 1) mod 2 for complex bundles on Q_{2m-1}.",
    'Theorem "oddquad"': "Odd quadrics Q_{2m-1}, m >= 2, fail (D_c).",
    'Theorem "oddquad-alg"': "Odd quadrics of dimension >= 3 fail (D) over any algebraically closed field.",
    'Remark (even quadrics)': "Even-dimensional quadrics are open; Q_2 and Q_4 have (D_c); conjecturally "
                              "Q_n has (D) iff n = 1, 2, 4.",
}


def _normalize(value: Any) -> Any:
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, (list, tuple)):
        return tuple(_normalize(v) for v in value)
    if isinstance(value, dict):
        return {str(k): _normalize(v) for k, v in value.items()}
    if isinstance(value, enum.Enum):
        return value.value
    return value


@dataclass(frozen=True)
class TraceStep:
    rule: str
    citation: str
    values: dict = field(default_factory=dict, hash=False)
    note: str = ""

    def __post_init__(self):
        if self.citation not in CITATIONS:
            raise KeyError(f"unknown citation {self.citation!r}")
        object.__setattr__(self, "values", _normalize(dict(self.values)))


@dataclass(frozen=True)
class ObstructionReport:
    property: Property
    verdict: Verdict
    trace: tuple = ()
    subject: str = ""

    @property
    def citations(self) -> list:
        seen = []
        for step in self.trace:
            if step.citation not in seen:
                seen.append(step.citation)
        return seen

    def with_steps(self, *steps, verdict: Verdict | None = None) -> ObstructionReport:
        return ObstructionReport(self.property, verdict or self.verdict,
                                 tuple(self.trace) + tuple(steps), self.subject)
