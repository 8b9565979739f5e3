from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from diagprop.errors import (
    ElementSyntaxError,
    FundamentalMonomialReducible,
    NoCompanionRing,
    NonHomogeneousRelation,
    NotKunnethRing,
    NotTopDegree,
    OddDegreeGenerator,
    RewriteBudgetExceeded,
    RingMismatch,
)
from diagprop.graded_ring import (
    CoefficientDomain,
    RingPresentation,
    catalog_rings,
    degree_evaluate,
    kunneth_square,
    make_ring,
    multiply,
    projective_space_ring,
    quadric_ring,
    reduce_mod2,
    restrict_to_diagonal,
    ring_by_id,
)


@pytest.fixture
def q3():
    return quadric_ring(2)


def test_q3_bases(q3):
    assert {d: [str(b) for b in q3.basis(d)] for d in q3.bases} == {
        0: ["1"], 2: ["x"], 4: ["y"], 6: ["x*y"]}


def test_p2_bases():
    P2 = make_ring(RingPresentation("P2", (("h", 2),), ("h^3 -> 0",), 4, "h^2"))
    assert [str(P2.basis(d)[0]) for d in (0, 2, 4)] == ["1", "h", "h^2"]


def test_quadric_products(q3):
    x, y = q3.gens
    assert multiply(x, x) == 2 * y
    assert y * y == 0
    assert x * (x * y) == 0


def test_degree_evaluate(q3):
    x, y = q3.gens
    assert degree_evaluate(x ** 3) == 2
    assert degree_evaluate(x * y) == 1
    assert degree_evaluate(q3.zero) == 0
    with pytest.raises(NotTopDegree):
        degree_evaluate(x)


def test_reduce_mod2(q3):
    x, y = q3.gens
    assert reduce_mod2(x * x).is_zero
    assert str(reduce_mod2(x + 3 * y)) == "xi + eta"
    assert reduce_mod2(2 * x).is_zero


def test_kunneth_p1():
    S = kunneth_square(projective_space_ring(1))
    h1, h2 = S.gen("h_1"), S.gen("h_2")
    assert [str(b) for b in S.basis(2)] == ["h_1", "h_2"]
    assert h1 * h2 != 0 and S.degree_evaluate(h1 * h2) == 1
    assert h1 * h1 == 0


def test_kunneth_q3_and_restriction(q3):
    S = q3.kunneth_square()
    x1, x2 = S.gen("x_1"), S.gen("x_2")
    assert [str(b) for b in S.basis(2)] == ["x_1", "x_2"]
    for a1 in range(-3, 4):
        for a2 in range(-3, 4):
            assert restrict_to_diagonal(a1 * x1 + a2 * x2) == (a1 + a2) * q3.gen("x")
    with pytest.raises(NotKunnethRing):
        restrict_to_diagonal(q3.gen("x"))


def test_square_top_class(q3):
    S = q3.kunneth_square()
    assert S.top_degree == 12
    assert S.degree_evaluate(S.parse("x_1*y_1*x_2*y_2")) == 1
    # pairing of cross products multiplies degrees
    assert S.degree_evaluate(S.parse("x_1^3*x_2^3")) == 4


def test_errors():
    with pytest.raises(NonHomogeneousRelation):
        make_ring(RingPresentation("bad", (("x", 2), ("y", 6)), ("x^2 -> y",), 6, "x*y"))
    with pytest.raises(OddDegreeGenerator):
        make_ring(RingPresentation("bad", (("x", 3),), (), 3, "x"))
    with pytest.raises(FundamentalMonomialReducible):
        make_ring(RingPresentation("bad", (("x", 2),), ("x^2 -> 0",), 4, "x^2"))
    with pytest.raises(RewriteBudgetExceeded):
        make_ring(RingPresentation("loop", (("x", 2), ("y", 2)),
                                   ("x*y -> y*x + x^2", "x^2 -> x*y"), 4, "y^2"))
    with pytest.raises(RingMismatch):
        multiply(quadric_ring(2).gen("x"), projective_space_ring(2).gen("h"))
    with pytest.raises(NoCompanionRing):
        make_ring(RingPresentation("noc", (("h", 2),), ("h^2 -> 0",), 2, "h")).mod2
    with pytest.raises(ElementSyntaxError):
        quadric_ring(2).parse("x +* y")


def test_mod2_ring_is_z2():
    R = quadric_ring(3).mod2
    assert R.domain is CoefficientDomain.INTEGERS_MOD_2
    xi, eta = R.gens
    assert xi ** 3 == 0 and eta * eta == 0
    assert {d: [str(b) for b in R.basis(d)] for d in sorted(R.bases)} == {
        0: ["1"], 2: ["xi"], 4: ["xi^2"], 6: ["eta"], 8: ["xi*eta"], 10: ["xi^2*eta"]}
    assert 3 * xi == xi


def test_ring_by_id():
    assert ring_by_id("Q3") is quadric_ring(2)
    assert ring_by_id("P2^2") is projective_space_ring(2).kunneth_square()
    assert ring_by_id("Q5_mod2") is quadric_ring(3).mod2
    assert str(ring_by_id("Q3").parse("x") * ring_by_id("Q3").parse("x")) == "2*y"


def test_fraction_scalars(q3):
    x = q3.gen("x")
    half = x * Fraction(1, 2)
    assert half + half == x
    assert x / 2 == half


# ---------------------------------------------------------------------------
# properties


def _elements(ring, coeff=st.integers(-4, 4)):
    mons = [m for d in sorted(ring.bases) for m in ring.basis(d)]
    return st.lists(coeff, min_size=len(mons), max_size=len(mons)).map(
        lambda cs: sum((c * m for c, m in zip(cs, mons)), ring.zero))


RINGS = catalog_rings()


@pytest.mark.parametrize("ring", RINGS, ids=[r.name for r in RINGS])
@given(data=st.data())
def test_ring_axioms(ring, data):
    a, b, c = (data.draw(_elements(ring)) for _ in range(3))
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * ring.one == a
    assert a + ring.zero == a


@pytest.mark.parametrize("ring", RINGS, ids=[r.name for r in RINGS])
@given(data=st.data())
def test_normal_form_idempotent(ring, data):
    a = data.draw(_elements(ring))
    assert ring.element(a.terms) == a


@pytest.mark.parametrize("m", [2, 3, 4])
@given(data=st.data())
def test_mod2_is_homomorphism(m, data):
    R = quadric_ring(m)
    a, b = data.draw(_elements(R)), data.draw(_elements(R))
    assert reduce_mod2(a * b) == reduce_mod2(a) * reduce_mod2(b)
    assert reduce_mod2(a + b) == reduce_mod2(a) + reduce_mod2(b)


@given(data=st.data())
def test_restriction_is_homomorphism(data):
    R = quadric_ring(2)
    S = R.kunneth_square()
    a, b = data.draw(_elements(S, st.integers(-2, 2))), data.draw(_elements(S, st.integers(-2, 2)))
    assert restrict_to_diagonal(a * b) == restrict_to_diagonal(a) * restrict_to_diagonal(b)
