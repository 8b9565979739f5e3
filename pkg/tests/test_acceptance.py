"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""
import random
import time
from fractions import Fraction
from itertools import product

import pytest

from diagprop.charclass import (
    ENRIQUES,
    K3,
    CharClassVector,
    euler_char_hrr,
    euler_char_surface,
    hrr_q3_closed_form,
    q3_tangent,
)
from diagprop.graded_ring import catalog_rings, quadric_ring
from diagprop.obstruction import (
    Kind,
    Property,
    VarietySpec,
    Verdict,
    dc_odd_quadric_verdict,
    diagonal_verdict,
    odd_dim_manifold_verdict,
    sphere_verdicts,
    spin_ci_threefold_verdict,
    surface_verdict,
)
from diagprop.steenrod import (
    congruence_cherniden2,
    quadric_sq2_spec,
    sq2,
    stiefel_whitney_from_chern,
    wu_identity_check,
)


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def report(number, ok=True):
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'}")


@pytest.mark.criterion(1, "HRR on Q3 equals the closed form on the full grid, < 1 s")
def test_criterion_1_hrr_grid():
    T = q3_tangent()
    with Timer() as t:
        for rank, d1, d2, d3 in product(range(4), *[range(-2, 3)] * 3):
            E = CharClassVector.from_coordinates(T.ring, rank, (d1, d2, d3), virtual=True)
            assert euler_char_hrr(T, E) == hrr_q3_closed_form(rank, d1, d2, d3)
    assert t.seconds < 1, t.seconds
    report(1)


@pytest.mark.criterion(2, "chi(3, 1, d2, 1) = 15/2 - 2 d2 is never integral; Q3 fails (D), < 1 s")
def test_criterion_2_q3_non_integral():
    with Timer() as t:
        for d2 in range(-5, 6):
            v = hrr_q3_closed_form(3, 1, d2, 1)
            assert v == Fraction(15, 2) - 2 * d2
            assert Fraction(v).denominator != 1
        assert diagonal_verdict(VarietySpec(Kind.QUADRIC, n=3)).verdict is Verdict.FAILS
    assert t.seconds < 1, t.seconds
    report(2)


def _power(name, e):
    return "" if e == 0 else name if e == 1 else f"{name}^{e}"


def _expected_basis(m, degree, x, y):
    # {x^k} below degree 2m, {x^(k-m) y} from there up
    k = degree // 2
    if k < m:
        return [_power(x, k) or "1"]
    return ["*".join(filter(None, [_power(x, k - m), y]))]


@pytest.mark.criterion(3, "odd quadric Chow and mod-2 bases, degree evaluation")
def test_criterion_3_quadric_bases():
    for m in (2, 3, 4):
        R = quadric_ring(m)
        for ring, (x, y) in ((R, ("x", "y")), (R.mod2, ("xi", "eta"))):
            assert sorted(ring.bases) == list(range(0, 4 * m - 1, 2))
            for degree in ring.bases:
                got = [str(b) for b in ring.basis(degree)]
                assert got == _expected_basis(m, degree, x, y), (ring.name, degree, got)
        x, y = R.gens
        assert R.degree_evaluate(x ** (2 * m - 1)) == 2
        assert R.degree_evaluate(x ** (m - 1) * y) == 1
    report(3)


@pytest.mark.criterion(4, "Sq^2 relations, third one recomputed by Cartan")
def test_criterion_4_steenrod_relations():
    for m in (2, 3, 4):
        s = quadric_sq2_spec(m)
        xi, eta = s.ring.gens
        assert set(s.generator_images) == {"xi", "eta"}
        assert sq2(s, xi) == xi * xi
        assert sq2(s, eta) == (m - 1) * xi * eta
        # Cartan by hand from the generator images only
        img_xi, img_eta = s.generator_images["xi"], s.generator_images["eta"]
        by_cartan = (m - 2) * xi ** (m - 3) * img_xi * eta if m > 2 else s.ring.zero
        by_cartan = by_cartan + xi ** (m - 2) * img_eta
        target = xi ** (m - 1) * eta
        assert by_cartan == target
        assert sq2(s, xi ** (m - 2) * eta) == target
    report(4)


@pytest.mark.criterion(5, "Wu identity check iff the mod-2 congruence, exhaustive, < 1 s")
def test_criterion_5_wu_congruence():
    with Timer() as t:
        for m in (2, 3, 4):
            s = quadric_sq2_spec(m)
            for c1, c22, c21 in product((0, 1), repeat=3):
                w2, wn, wn2 = stiefel_whitney_from_chern(m, c1, c22, c21)
                assert wu_identity_check(w2, wn, wn2, 4 * m - 4, s) == \
                    congruence_cherniden2(m, c1, c22, c21)
    assert t.seconds < 1, t.seconds
    report(5)


@pytest.mark.criterion(6, "odd quadrics fail (D_c) by a parity contradiction; Q1 holds")
def test_criterion_6_odd_quadric_dc():
    assert dc_odd_quadric_verdict(1).verdict is Verdict.HOLDS
    for m in (2, 3, 4):
        rep = dc_odd_quadric_verdict(m)
        assert rep.verdict is Verdict.FAILS
        steps = {s.rule: s for s in rep.trace}
        assert "a1 + a2 = 1 mod 2" in steps["kunneth-restriction"].note
        assert steps["slice-congruence"].values["a_values_consistent"] == (0,)
        assert steps["contradiction"].values["consistent_pairs"] == ()
        assert "a1 = a2 = 0" in steps["contradiction"].note
    report(6)


@pytest.mark.criterion(7, "surface chi tables and verdicts")
def test_criterion_7_surfaces():
    for d in (4, 6):
        for n in range(-3, 4):
            chi = euler_char_surface(K3, n * n * d, 0)
            assert chi == Fraction(n * n * d, 2) + 2 and chi != 0
        assert surface_verdict(VarietySpec(Kind.K3_GENERIC, d=d)).verdict is Verdict.FAILS
    assert euler_char_surface(K3, -4, 0) == 0
    assert euler_char_surface(ENRIQUES, -2, 0) == 0
    two = surface_verdict(VarietySpec(Kind.K3_TWO_DISJOINT_RATIONAL_CURVES))
    assert two.verdict is Verdict.HOLDS
    assert any(s.values.get("chi") == 0 for s in two.trace)
    enr = surface_verdict(VarietySpec(Kind.ENRIQUES))
    assert enr.verdict is Verdict.HOLDS
    assert {s.values.get("divisor") for s in enr.trace if s.values.get("chi") == 0} == \
        {"-E", "D1 - D2"}
    report(7)


@pytest.mark.criterion(8, "sphere table for n = 1..10 and the RP^3 sharpness case")
def test_criterion_8_topology():
    for n in range(1, 11):
        got = {r.property: r.verdict for r in sphere_verdicts(n)}
        expect = {Property.D_r: n in (1, 2, 4, 8), Property.D_o: n in (2, 4, 8),
                  Property.D_c: n == 2}
        for prop, holds in expect.items():
            assert got[prop] is (Verdict.HOLDS if holds else Verdict.FAILS), (n, prop)
    d_r, d_o = odd_dim_manifold_verdict(True, False, True, "RP^3")
    assert (d_r.verdict, d_o.verdict) == (Verdict.HOLDS, Verdict.FAILS)
    report(8)


def _random_element(ring, rng):
    terms = {mono: rng.randint(-5, 5) for monos in ring.bases.values() for mono in monos}
    return ring.element(terms)


@pytest.mark.criterion(9, "ring axioms, Cartan on H*(Q7; Z/2), mod-2 reduction, < 10 s")
def test_criterion_9_property_suites():
    rng = random.Random(20261017)
    with Timer() as t:
        for R in catalog_rings():
            one = R.one
            for _ in range(1000):
                a, b, c = (_random_element(R, rng) for _ in range(3))
                ab = a * b
                assert ab == b * a
                assert ab * c == a * (b * c)
                assert one * a == a
        s = quadric_sq2_spec(4)
        basis = [b for d in sorted(s.ring.bases) for b in s.ring.basis(d)]
        for a, b in product(basis, repeat=2):
            assert sq2(s, a + b) == sq2(s, a) + sq2(s, b)
            assert sq2(s, a * b) == sq2(s, a) * b + a * sq2(s, b)
        rings = [quadric_ring(m) for m in (2, 3, 4)]
        for i in range(1000):
            R = rings[i % 3]
            a, b = _random_element(R, rng), _random_element(R, rng)
            assert R.reduce_mod2(a * b) == R.reduce_mod2(a) * R.reduce_mod2(b)
            assert R.reduce_mod2(a + b) == R.reduce_mod2(a) + R.reduce_mod2(b)
    assert t.seconds < 10, t.seconds
    report(9)


def _sample_multidegrees(count, rng):
    out = set()
    while len(out) < count:
        n = rng.randint(4, 10)
        k = rng.randint(1, n - 3)
        degs = sorted(rng.randint(2, 6) for _ in range(k))
        if sum(degs) >= n:
            out.add((n, tuple(degs)))
    return sorted(out)


@pytest.mark.criterion(10, "spin criterion for CI 3-folds and the index corollary")
def test_criterion_10_complete_intersections():
    assert spin_ci_threefold_verdict(4, [2]).verdict is Verdict.FAILS
    assert spin_ci_threefold_verdict(4, [3]).verdict is Verdict.UNKNOWN
    samples = _sample_multidegrees(20, random.Random(7))
    assert len(samples) == 20
    for n, degs in samples:
        assert n - len(degs) >= 3 and sum(degs) >= n
        spec = VarietySpec(Kind.COMPLETE_INTERSECTION, n=n, multidegree=degs)
        assert diagonal_verdict(spec).verdict is Verdict.FAILS, (n, degs)
    report(10)
