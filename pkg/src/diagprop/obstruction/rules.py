"""Decision rules for (D), (D_r), (D_o) and (D_c)."""
from __future__ import annotations

from fractions import Fraction

from ..charclass import (
    ABELIAN,
    BIELLIPTIC,
    ENRIQUES,
    K3,
    P2,
    CharClassVector,
    SurfaceRRData,
    euler_char_curve,
    euler_char_hrr,
    euler_char_surface,
    hrr_q3_closed_form,
    q3_tangent,
    quadric_tangent,
    twist_by_line_bundle,
)
from ..errors import BadM, InvariantViolation, MissingFlag, UnsupportedSpec, WrongDimension
from ..graded_ring import projective_space_ring
from ..steenrod import congruence_cherniden2
from .linebundles import coh_trivial_candidates, scan_line_bundles
from .report import ObstructionReport, Property, TraceStep, Verdict
from .variety import (
    Kind,
    Mode,
    VarietySpec,
    complex_dimension,
    flatten_product,
    normalize_complete_intersection,
)

HOLDS, FAILS, UNKNOWN = Verdict.HOLDS, Verdict.FAILS, Verdict.UNKNOWN
_P_DIAGONAL_CHECK_MAX = 8
_FAKE_P2 = SurfaceRRData(1, "fake P2")


def _report(prop, verdict, steps, subject=""):
    return ObstructionReport(Property(prop), verdict, tuple(steps), subject)


def _step(rule, citation, note="", **values):
    return TraceStep(rule, citation, values, note)


# ---------------------------------------------------------------------------
# Q_3 and odd quadrics


def point_property_q3_verdict(window: int = 5) -> ObstructionReport:
    """The point property for the two cohomologically trivial bundles on Q_3 fails."""
    Q3 = VarietySpec(Kind.QUADRIC, n=3)
    cands = [row.n for row in coh_trivial_candidates(Q3)]
    steps = [_step("coh-trivial-search", 'Prop. "quadric1"', candidates=cands,
                   canonical_twist=-3)]
    # O(-1)^{-1} = O(-2) (x) omega^{-1}: 1 = -2 + 3.
    a, b = cands
    if -a != b + 3 or -b != a + 3:
        raise InvariantViolation(f"Serre pairing of candidates {cands} failed")
    steps.append(_step("serre-pairing", 'Prop. "quadric1"',
                       note="L1^-1 = L2 (x) omega^-1 as twists: 1 = -2 + 3",
                       L1=a, L2=b, lhs=-a, rhs=b + 3))
    steps.append(_step("reduce-to-rank-3", 'Cor. "Lpt"',
                       note="both point properties ask for a rank 3 bundle E with "
                            "det E = O(1) and c_3(E) = [point]",
                       rank=3, d1=1, d3=1))
    T = q3_tangent()
    R = T.ring
    table = {}
    for d2 in range(-window, window + 1):
        closed = hrr_q3_closed_form(3, 1, d2, 1)
        hrr = euler_char_hrr(T, CharClassVector.from_coordinates(R, 3, (1, d2, 1)))
        if closed != hrr or closed != Fraction(15, 2) - 2 * d2:
            raise InvariantViolation(f"chi mismatch at d2={d2}: {closed} vs {hrr}")
        table[d2] = closed
    residues = sorted({Fraction(v) - (Fraction(v).numerator // Fraction(v).denominator)
                       for v in table.values()})
    steps.append(_step("hrr-integrality", 'Prop. "quadric1"',
                       note="chi = 15/2 - 2 d_2 is never an integer; consecutive values differ "
                            "by 2, so the fractional part 1/2 is constant in d_2",
                       chi=table, fractional_parts=residues))
    return _report("D", FAILS, steps, "quadric(n=3)")


def dc_odd_quadric_verdict(m: int) -> ObstructionReport:
    """(D_c) for Q_{2m-1}."""
    if m < 1:
        raise BadM(f"m must be >= 1, got {m}")
    subject = f"quadric(n={2 * m - 1})"
    if m == 1:
        return _report("D_c", HOLDS, [
            _step("riemann-surface", 'Example "riemsurf"', note="Q_1 is P^1", m=1)], subject)
    tau = quadric_tangent(m)
    R = tau.ring
    c1_coeff = tau.c(1).coefficient("x")
    steps = [_step("tangent-c1", 'Theorem "oddquad"', note="c_1(tau) = (2m+1)x - 2x",
                   m=m, c1=c1_coeff)]
    # c_1(E) = a1 (x*1) + a2 (1*x); delta^* det E = omega^{-1} = O(2m-1).
    sq = R.kunneth_square()
    x1, x2 = sq.gen("x_1"), sq.gen("x_2")
    restricted = {}
    for a1 in (0, 1):
        for a2 in (0, 1):
            img = R.restrict_to_diagonal(x1 * a1 + x2 * a2)
            restricted[f"{a1},{a2}"] = img.coefficient("x")
    parity_ok = [k for k, v in restricted.items() if (v - c1_coeff) % 2 == 0]
    steps.append(_step("kunneth-restriction", 'Theorem "oddquad"',
                       note="delta^* c_1(E) = (a1 + a2) x must equal c_1(tau), "
                            "so a1 + a2 = 1 mod 2",
                       restricted_coefficient=restricted, allowed=parity_ok))
    # Slices x * Q and Q * x: c_{2m-1} of the restriction is the point class.
    forced_even = [a for a in (0, 1)
                   if any(congruence_cherniden2(m, a, c, 1) for c in (0, 1))]
    steps.append(_step("slice-congruence", 'Prop. "cherniden2"',
                       note="each slice restriction has c_{2m-1} = 1; the congruence "
                            "1 = c_{2m-2}(a + 1) mod 2 forces a even",
                       m=m, a_values_consistent=forced_even))
    survivors = [k for k in parity_ok
                 if all(int(a) in forced_even for a in k.split(","))]
    if survivors:
        raise InvariantViolation(f"parity pairs {survivors} survived on Q_{2 * m - 1}")
    steps.append(_step("contradiction", 'Theorem "oddquad"',
                       note="a1 = a2 = 0 mod 2 contradicts a1 + a2 = 1 mod 2",
                       consistent_pairs=survivors))
    if m == 2:
        steps.append(_step("ci-spin", 'Cor. "hyperP4"', note="n + 1 - sum(d) = 3 is odd",
                           n=4, multidegree=[2], parity=3 % 2))
    return _report("D_c", FAILS, steps, subject)


def _odd_quadric_algebraic(n: int) -> ObstructionReport:
    m = (n + 1) // 2
    spec = VarietySpec(Kind.QUADRIC, n=n)
    cands = [row.n for row in coh_trivial_candidates(spec)]
    steps = [_step("coh-trivial-search", 'Theorem "Tm"', canonical_twist=-n, candidates=cands)]
    per = {}
    for k in cands:
        inv, twist = -k, k + n
        odd = inv if inv % 2 else twist
        if inv % 2 == twist % 2:
            raise InvariantViolation("determinant twists must have opposite parity")
        blocked = all(not congruence_cherniden2(m, odd, c, 1) for c in (0, 1))
        if not blocked:
            raise InvariantViolation(f"congruence admits determinant O({odd}) on Q_{n}")
        per[k] = {"L_inverse": inv, "L_omega_inverse": twist, "odd_determinant": odd,
                  "residues": [(1 - c * (odd + 1)) % 2 for c in (0, 1)]}
    steps.append(_step("odd-determinant", 'Theorem "oddquad-alg"',
                       note="the twists of L^-1 and L (x) omega^-1 sum to the odd dimension, so one is "
                            "odd; an odd determinant violates c_{2m-1} = c_{2m-2}(c_1 + 1) mod 2",
                       m=m, per_candidate=per))
    steps.append(_step("point-property", 'Cor. "Lpt"', note="every candidate is excluded"))
    report = _report("D", FAILS, steps, spec.describe())
    if n == 3:
        report = report.with_steps(*point_property_q3_verdict().trace)
    return report


# ---------------------------------------------------------------------------
# topology


_SPHERE_DR = frozenset({1, 2, 4, 8})
_SPHERE_DO = frozenset({2, 4, 8})
_SPHERE_DC = frozenset({2})


def sphere_verdicts(n: int) -> tuple:
    if n < 1:
        raise WrongDimension(f"sphere dimension must be >= 1, got {n}")
    subject = f"sphere(n={n})"
    out = []
    for prop, table in (("D_r", _SPHERE_DR), ("D_o", _SPHERE_DO), ("D_c", _SPHERE_DC)):
        if n in table:
            steps = [_step("sphere-table", 'Example "projline2"', n=n, holds_for=sorted(table))]
            verdict = HOLDS
        else:
            cite = 'Theorem "prop1"' if prop == "D_r" else 'Theorem "top"'
            steps = [_step("sphere-table", cite, n=n, holds_for=sorted(table))]
            verdict = FAILS
        out.append(_report(prop, verdict, steps, subject))
    return tuple(out)


def odd_dim_manifold_verdict(orientable: bool, h1_mod2_zero: bool | None,
                             lie_group_with_point_property: bool,
                             subject: str = "odd-dimensional manifold") -> tuple:
    """(D_r, D_o) reports for a compact odd-dimensional manifold."""
    from ..errors import ContradictoryFlags
    if h1_mod2_zero is True and lie_group_with_point_property:
        raise ContradictoryFlags(
            "h1_mod2_zero = true forbids (D_r), yet a Lie-group point property was asserted")
    if orientable:
        d_o = _report("D_o", FAILS, [
            _step("odd-dimension", 'Theorem "prop3"', orientable=True)], subject)
    else:
        d_o = _report("D_o", UNKNOWN, [
            _step("odd-dimension", 'Theorem "prop3"', orientable=False,
                  note="the obstruction needs an orientation")], subject)
    if orientable and h1_mod2_zero is True:
        d_r = _report("D_r", FAILS, [
            _step("odd-dimension-h1", 'Theorem "prop3"', h1_mod2_zero=True)], subject)
    elif lie_group_with_point_property:
        d_r = _report("D_r", HOLDS, [
            _step("lie-group", 'Example "liegroup"', point_property=True),
            _step("sharpness", 'Remark "proj3rmk"', h1_mod2_zero=h1_mod2_zero)], subject)
    else:
        d_r = _report("D_r", UNKNOWN, [
            _step("odd-dimension-h1", 'Theorem "prop3"', h1_mod2_zero=h1_mod2_zero,
                  note="H_1(M; Z/2) = 0 not established")], subject)
    return d_r, d_o


def dim4_almost_complex_verdict(subject: str = "almost complex 4-manifold") -> ObstructionReport:
    return _report("D_c", HOLDS, [
        _step("dim4", 'Theorem "dim4"',
              note="H^2(M x M) -> H^2(M) is onto, so any degree-2 class lifts and the "
                   "rank 2 bundle on M x M is built from a section vanishing on the diagonal",
              complex_dim=2)], subject)


def spin_6fold_necessary(h1_zero, h2_is_Z, w2_zero,
                         subject: str = "almost complex 6-manifold") -> ObstructionReport:
    flags = {"h1_zero": h1_zero, "h2_is_Z": h2_is_Z, "w2_zero": w2_zero}
    if h1_zero is True and h2_is_Z is True and w2_zero is False:
        return _report("D_c", FAILS, [
            _step("spin-necessary", 'Theorem "spinprop2"', note="w_2 != 0", **flags)], subject)
    if h2_is_Z is False:
        note = "H^2 = Z hypothesis unmet"
        cite = 'Remark "spinproprmk"'
    elif w2_zero is True:
        note = "spin, but the condition is only necessary"
        cite = 'Remark "spinproprmk"'
    else:
        note = "hypotheses not all established"
        cite = 'Theorem "spinprop2"'
    return _report("D_c", UNKNOWN, [_step("spin-necessary", cite, note=note, **flags)], subject)


def spin_ci_threefold_verdict(n: int, multidegree) -> ObstructionReport:
    degs = list(multidegree)
    if n - len(degs) != 3:
        raise WrongDimension(f"n - len(multidegree) = {n - len(degs)}, need 3")
    s = n + 1 - sum(degs)
    subject = f"complete_intersection(n={n}, multidegree={degs})"
    values = dict(n=n, multidegree=degs, first_chern_twist=s, parity=s % 2)
    if s % 2:
        return _report("D_c", FAILS, [
            _step("ci-spin", 'Cor. "hyperP4"', note="w_2 = (n + 1 - sum d) x mod 2 != 0",
                  **values),
            _step("spin-necessary", 'Cor. "compinter"')], subject)
    return _report("D_c", UNKNOWN, [
        _step("ci-spin", 'Cor. "hyperP4"', note="w_2 = 0; spin is necessary, not sufficient",
              **values)], subject)


# ---------------------------------------------------------------------------
# surfaces


def _chi_surface_step(rule, cite, data: SurfaceRRData, D_sq, D_dot_K, label, note=""):
    chi = euler_char_surface(data, D_sq, D_dot_K)
    return _step(rule, cite, note=note, surface=data.name, divisor=label,
                 D_squared=D_sq, D_dot_K=D_dot_K, chi=chi)


def surface_verdict(spec: VarietySpec) -> ObstructionReport:
    k = spec.kind
    subject = spec.describe()
    holds_summary = _step("surface-table", 'Theorem "th-surf"')
    if k is Kind.K3_TWO_DISJOINT_RATIONAL_CURVES:
        return _report("D", HOLDS, [
            _chi_surface_step("coh-trivial", 'Prop. "two"', K3, -4, 0, "D1 - D2",
                              note="H^0 = H^2 = 0 for disjoint (-2)-curves; chi = 0 kills H^1"),
            _step("surface-converse", 'Theorem "Tm"'), holds_summary], subject)
    if k is Kind.ENRIQUES:
        return _report("D", HOLDS, [
            _chi_surface_step("coh-trivial", 'Prop. (Enriques)', ENRIQUES, -2, 0, "-E",
                              note="E a smooth (-2)-curve"),
            _chi_surface_step("coh-trivial", 'Prop. (Enriques)', ENRIQUES, 0 + 0 - 2 * 1, 0,
                              "D1 - D2", note="half pencils with D1^2 = D2^2 = 0, D1.D2 = 1"),
            _step("surface-converse", 'Theorem "Tm"'), holds_summary], subject)
    if k is Kind.ABELIAN_SURFACE:
        return _report("D", HOLDS, [
            _chi_surface_step("coh-trivial", 'Prop. (abelian surface)', ABELIAN, 0, 0,
                              "nontrivial class in Pic^0"),
            _step("surface-converse", 'Theorem "Tm"'), holds_summary], subject)
    if k is Kind.HYPERELLIPTIC_SURFACE:
        return _report("D", HOLDS, [
            _chi_surface_step("coh-trivial", 'Prop. "bielliptic"', BIELLIPTIC, 0, 0,
                              "pullback of a degree 0 class from E/G"),
            _step("surface-converse", 'Theorem "Tm"'), holds_summary], subject)
    if k is Kind.RULED_SURFACE:
        return _report("D", HOLDS, [
            _chi_surface_step("coh-trivial", 'Prop. "ruled"', P2, 1, 3, "-H on P^2",
                              note="pulled back along blow-ups"),
            _step("blow-up", 'Prop. "blowup"'),
            _step("surface-converse", 'Theorem "Tm"'), holds_summary], subject)
    if k is Kind.ELLIPTIC_SURFACE_WITH_SECTION:
        chis = {g: euler_char_curve(g, g - 1) for g in range(4)}
        return _report("D", HOLDS, [
            _step("coh-trivial", 'Prop. (elliptic with section)',
                  note="a line bundle of degree g - 1 on the base has chi = 0", chi_by_genus=chis),
            _step("surface-converse", 'Theorem "Tm"'), holds_summary], subject)
    if k is Kind.K3_GENERIC:
        d = spec.d
        table = {n: euler_char_surface(K3, n * n * d, 0) for n in range(-3, 4)}
        cands = [row.n for row in coh_trivial_candidates(spec)]
        return _report("D", FAILS, [
            _step("chi-table", 'Prop. "Pk3"', note="chi(O(n)) = n^2 d / 2 + 2 >= 2",
                  d=d, chi=table, minimum=min(table.values()), candidates=cands),
            _step("no-coh-trivial", 'Theorem "Tm"'),
            _step("surface-table", 'Theorem "th-surf"')], subject)
    if k is Kind.FAKE_P2:
        return _report("D", UNKNOWN, [
            _chi_surface_step("chi", 'Remark (fake P2)', _FAKE_P2, 1, 3, "H",
                              note="chi(O_X) = 1, K = 3H, H^2 = 1; vanishing chi does not "
                                   "decide whether H^0(O(H)) = 0")], subject)
    if k is Kind.PIC_Z_GENERAL and spec.dim == 2:
        return _pic_z_surface(spec)
    if k is Kind.COMPLETE_INTERSECTION and complex_dimension(spec) == 2:
        return _ci_surface(spec)
    raise UnsupportedSpec(f"{k.value} is not a surface kind")


def _pic_z_surface(spec: VarietySpec) -> ObstructionReport:
    r = spec.r
    subject = spec.describe()
    if r < 0:
        if r != -3:
            raise UnsupportedSpec(
                f"no surface with Pic = Z has omega = O({r}); the only one with negative "
                "twist is P^2 (r = -3), try projective_space n=2")
        return diagonal_verdict(VarietySpec(Kind.PROJECTIVE_SPACE, n=2))
    flag = spec.ample_generator_has_section
    if flag is None:
        raise MissingFlag("ample_generator_has_section")
    if flag:
        rows = scan_line_bundles(spec)
        return _report("D", FAILS, [
            _step("coh-trivial-search", 'Prop. "Tz"',
                  note="n >= 0 has sections, n <= r has top cohomology",
                  canonical_twist=r, window=[rows[0].n, rows[-1].n],
                  candidates=[row.n for row in rows if row.candidate]),
            _step("surface-table", 'Theorem "th-surf"')], subject)
    return _report("D", UNKNOWN, [
        _step("open-case", 'Remark (open surface case)', canonical_twist=r,
              ample_generator_has_section=False)], subject)


def _ci_surface(spec: VarietySpec) -> ObstructionReport:
    amb, degs = normalize_complete_intersection(spec.n, spec.multidegree)
    s = sum(degs)
    if s <= amb:
        return _report("D", HOLDS, [
            _step("rational-surface", 'Prop. "ruled"',
                  note="sum(d) <= n: a del Pezzo surface, hence rational",
                  n=amb, multidegree=list(degs), canonical_twist=s - amb - 1),
            _step("surface-table", 'Theorem "th-surf"')], spec.describe())
    return _report("D", UNKNOWN, [
        _step("surface-table", 'Theorem "th-surf"',
              note="Pic of this surface is not determined by the multidegree; "
                   "use k3_generic or pic_z_general with explicit flags",
              n=amb, multidegree=list(degs), canonical_twist=s - amb - 1)], spec.describe())


# ---------------------------------------------------------------------------
# projective space consistency


def _projective_space_steps(n: int) -> list:
    steps = [_step("tautological-section", 'Intro (Grassmannian)',
                   note="P^n = G(1, n+1); E = p1*O(1) (x) p2*Q", n=n, rank=n)]
    if n > _P_DIAGONAL_CHECK_MAX:
        return steps
    P = projective_space_ring(n)
    h = P.gen("h")
    sq = P.kunneth_square()
    h1, h2 = sq.gen("h_1"), sq.gen("h_2")
    quotient = sq.one
    for i in range(1, n + 1):
        quotient = quotient + h2 ** i
    E = twist_by_line_bundle(CharClassVector.from_total(sq, n, quotient), h1)
    top = E.c(n)
    expected = sq.zero
    for i in range(n + 1):
        expected = expected + h1 ** (n - i) * h2 ** i
    if top != expected:
        raise InvariantViolation(f"c_n(E) = {top} is not the diagonal class on P^{n}")
    pairing = {}
    for a in range(n + 1):
        pairing[a] = sq.degree_evaluate(top * h1 ** a * h2 ** (n - a))
    if set(pairing.values()) != {1}:
        raise InvariantViolation(f"diagonal pairing on P^{n} gave {pairing}")
    restricted = CharClassVector.from_total(P, n, P.one + sum(
        (h ** i for i in range(1, n + 1)), P.zero))
    tangent = twist_by_line_bundle(restricted, h)
    if tangent.total != (P.one + h) ** (n + 1):
        raise InvariantViolation(f"delta^* E is not the tangent bundle of P^{n}")
    c1 = tangent.c(1).coefficient("h")
    deg = P.degree_evaluate(sq.restrict_to_diagonal(top))
    steps.append(_step("diagonal-class", 'Intro (Grassmannian)',
                       note="c_n(E) = sum h1^(n-i) h2^i pairs to 1 with each h1^a h2^(n-a); "
                            "delta^* E = T_P with c = (1+h)^(n+1)",
                       c_top=str(top), pairing=pairing, c1_restricted=c1,
                       degree_of_restricted_diagonal=deg))
    return steps


# ---------------------------------------------------------------------------
# dispatch


def _pic_z_higher(spec: VarietySpec) -> ObstructionReport:
    flag = spec.ample_generator_has_section
    subject = spec.describe()
    r = spec.r
    if flag is None:
        raise MissingFlag("ample_generator_has_section")
    if not flag:
        return _report("D", UNKNOWN, [
            _step("fano-index", 'Prop. "fano1"',
                  note="the index argument needs a section of the ample generator",
                  canonical_twist=r, ample_generator_has_section=False)], subject)
    rows = scan_line_bundles(spec)
    cands = [row.n for row in rows if row.candidate]
    if r >= -1:
        return _report("D", FAILS, [
            _step("coh-trivial-search", 'Prop. "fano1"',
                  note="omega = O(r) with r >= -1 leaves no twist between r and 0",
                  canonical_twist=r, window=[rows[0].n, rows[-1].n], candidates=cands),
            _step("no-coh-trivial", 'Theorem "Tm"')], subject)
    return _report("D", UNKNOWN, [
        _step("coh-trivial-search", 'Prop. "fano1"',
              note="chi(O(n)) is not known for the surviving twists",
              canonical_twist=r, candidates=cands)], subject)


def _complete_intersection(spec: VarietySpec) -> ObstructionReport:
    amb, degs = normalize_complete_intersection(spec.n, spec.multidegree)
    dim = amb - len(degs)
    if not degs:
        return diagonal_verdict(VarietySpec(Kind.PROJECTIVE_SPACE, n=amb))
    if dim == 1:
        return _report("D", HOLDS, [_step("curve", 'Intro (curves)', n=amb,
                                          multidegree=list(degs))], spec.describe())
    if degs == (2,):
        return diagonal_verdict(VarietySpec(Kind.QUADRIC, n=dim))
    if (amb, degs) == (4, (3,)):
        return diagonal_verdict(VarietySpec(Kind.CUBIC_THREEFOLD))
    if dim == 2:
        return _ci_surface(spec)
    norm = VarietySpec(Kind.COMPLETE_INTERSECTION, n=amb, multidegree=degs)
    rows = scan_line_bundles(norm)
    r = sum(degs) - amb - 1
    chi_table = {row.n: row.chi for row in rows if abs(row.n) <= 3}
    cands = [row.n for row in rows if row.candidate]
    if sum(degs) >= amb:
        return _report("D", FAILS, [
            _step("canonical-twist", 'Cor. (complete intersections)',
                  note="omega = O(sum(d) - n - 1) with sum(d) >= n",
                  n=amb, multidegree=list(degs), canonical_twist=r, chi=chi_table,
                  candidates=cands),
            _step("fano-index", 'Prop. "fano1"'),
            _step("no-coh-trivial", 'Theorem "Tm"')], spec.describe())
    return _report("D", UNKNOWN, [
        _step("coh-trivial-search", 'Prop. "fano1"',
              note="Fano of index >= 2; the point property for the candidates is not decided",
              n=amb, multidegree=list(degs), canonical_twist=r, chi=chi_table,
              candidates=cands)], spec.describe())


def _quadric(spec: VarietySpec) -> ObstructionReport:
    n = spec.n
    subject = spec.describe()
    if n == 1:
        return _report("D", HOLDS, [_step("curve", 'Intro (curves)', note="Q_1 = P^1")], subject)
    if n == 2:
        return _report("D", HOLDS, [
            _step("product", 'Intro (products)', note="Q_2 = P^1 x P^1"),
            _step("even-quadric", 'Remark (even quadrics)', n=2)], subject)
    if n == 4:
        return _report("D", HOLDS, [
            _step("tautological-section", 'Intro (Grassmannian)', note="Q_4 = G(2, 4)"),
            _step("even-quadric", 'Remark (even quadrics)', n=4)], subject)
    if n % 2:
        return _odd_quadric_algebraic(n)
    return _report("D", UNKNOWN, [
        _step("even-quadric", 'Remark (even quadrics)',
              note="conjecturally (D) holds only for n = 1, 2, 4", n=n)], subject)


def _group_point_property(spec: VarietySpec, cite: str) -> ObstructionReport:
    pp = spec.point_property
    subject = spec.describe()
    if pp is True:
        return _report("D", HOLDS, [_step("weak-point-property", cite, point_property=True)],
                       subject)
    if pp is False:
        return _report("D", FAILS, [_step("weak-point-property", cite, point_property=False)],
                       subject)
    steps = [_step("weak-point-property", cite, point_property=None)]
    if spec.kind is Kind.ABELIAN_VARIETY:
        steps.append(_step("open-case", 'Note (abelian varieties)', g=spec.g))
    return _report("D", UNKNOWN, steps, subject)


def combine_products(reports, prop, subject) -> ObstructionReport:
    reports = list(reports)
    verdicts = [rep.verdict.value for rep in reports]
    verdict = HOLDS if all(v is HOLDS for v in (rep.verdict for rep in reports)) else UNKNOWN
    note = "" if verdict is HOLDS else "only HOLDS is known to pass to products"
    steps = [_step("product", 'Example "prodexample"' if prop != "D" else 'Intro (products)',
                   note=note, factor_verdicts=sorted(verdicts))]
    return _report(prop, verdict, steps, subject)


def diagonal_verdict(spec: VarietySpec) -> ObstructionReport:
    """(D) for an algebraic catalog entry."""
    k = spec.kind
    subject = spec.describe()
    if k is Kind.SPHERE:
        raise UnsupportedSpec("spheres are not algebraic; use mode \"topological\"")
    if k is Kind.PROJECTIVE_SPACE:
        return _report("D", HOLDS, _projective_space_steps(spec.n), subject)
    if k is Kind.GRASSMANNIAN:
        return _report("D", HOLDS, [
            _step("tautological-section", 'Intro (Grassmannian)',
                  note="section of Hom(p1*S, p2*Q) vanishing on the diagonal",
                  r=spec.r, n=spec.n, rank=spec.r * (spec.n - spec.r))], subject)
    if k is Kind.QUADRIC:
        return _quadric(spec)
    if k is Kind.COMPLETE_INTERSECTION:
        return _complete_intersection(spec)
    if k is Kind.CUBIC_THREEFOLD:
        cands = [row.n for row in coh_trivial_candidates(spec)]
        return _report("D", UNKNOWN, [
            _step("coh-trivial-search", 'Prop. "fano1"', canonical_twist=-2, candidates=cands),
            _step("point-property", 'Lemma (cubic 3-fold)',
                  note="L = O(-1): L^-1 = L (x) omega^-1 = O(1), and the O(1)-point "
                       "property holds, so no obstruction arises",
                  L_inverse=1, L_omega_inverse=1)], subject)
    if k is Kind.PIC_Z_GENERAL:
        if spec.dim == 1:
            return _report("D", HOLDS, [_step("curve", 'Intro (curves)')], subject)
        if spec.dim == 2:
            return _pic_z_surface(spec)
        return _pic_z_higher(spec)
    if k is Kind.LIE_GROUP:
        return _group_point_property(spec, 'Prop. "Pwpp"')
    if k is Kind.ABELIAN_VARIETY:
        if spec.g == 1:
            return _report("D", HOLDS, [_step("curve", 'Intro (curves)', g=1)], subject)
        if spec.g == 2:
            return surface_verdict(VarietySpec(Kind.ABELIAN_SURFACE))
        return _group_point_property(spec, 'Cor. (abelian varieties)')
    if k is Kind.PRODUCT:
        factors = flatten_product(spec)
        return combine_products([diagonal_verdict(f.with_mode(Mode.ALGEBRAIC)) for f in factors],
                                "D", subject)
    return surface_verdict(spec)


def _topological_complex(spec: VarietySpec) -> tuple:
    subject = spec.describe()
    dim = complex_dimension(spec)
    algebraic = None
    try:
        algebraic = diagonal_verdict(spec.with_mode(Mode.ALGEBRAIC))
    except MissingFlag:
        pass
    if dim == 1:
        d_c = _report("D_c", HOLDS, [_step("riemann-surface", 'Example "riemsurf"')], subject)
    elif dim == 2:
        d_c = dim4_almost_complex_verdict(subject)
        if algebraic is not None and algebraic.verdict is FAILS:
            d_c = d_c.with_steps(_step("contrast", 'Theorem "dim4"',
                                       note="algebraic (D) fails, (D_c) still holds",
                                       algebraic_verdict=algebraic.verdict))
    elif algebraic is not None and algebraic.verdict is HOLDS:
        d_c = _report("D_c", HOLDS, [
            _step("algebraic-implies-complex", 'Remark "almcomp"', algebraic_verdict="HOLDS")],
            subject)
    elif spec.kind is Kind.QUADRIC and spec.n % 2:
        d_c = dc_odd_quadric_verdict((spec.n + 1) // 2)
    elif spec.kind in (Kind.COMPLETE_INTERSECTION, Kind.CUBIC_THREEFOLD) and dim == 3:
        n, degs = (4, [3]) if spec.kind is Kind.CUBIC_THREEFOLD else (spec.n, spec.multidegree)
        d_c = spin_ci_threefold_verdict(n, degs)
    else:
        d_c = _report("D_c", UNKNOWN, [
            _step("no-rule", 'Theorem "top"', note="no topological rule applies",
                  complex_dim=dim)], subject)
    return _implied(d_c, subject)


def _implied(d_c, subject) -> tuple:
    if d_c.verdict is HOLDS:
        d_o = _report("D_o", HOLDS, [_step("complex-implies-oriented", 'Remark "almcomp"')],
                      subject)
        d_r = _report("D_r", HOLDS, [_step("oriented-implies-real", 'Remark "almcomp"')],
                      subject)
    else:
        d_o = _report("D_o", UNKNOWN, [_step("no-rule", 'Theorem "top"',
                                             note=f"(D_c) is {d_c.verdict.value}")], subject)
        d_r = _report("D_r", UNKNOWN, [_step("no-rule", 'Theorem "top"',
                                             note=f"(D_c) is {d_c.verdict.value}")], subject)
    return d_r, d_o, d_c


def _lie_group_topological(spec: VarietySpec) -> tuple:
    subject = spec.describe()
    pp = spec.point_property
    if spec.dim % 2:
        d_r, d_o = odd_dim_manifold_verdict(True, spec.h1_mod2_zero, pp is True, subject)
        if pp is False and d_r.verdict is UNKNOWN:
            d_r = _report("D_r", FAILS, [_step("lie-group", 'Example "liegroup"',
                                               point_property=False)], subject)
        d_c = _report("D_c", FAILS, [
            _step("odd-dimension", 'Theorem "prop3"', note="(D_c) would give (D_o)",
                  dim=spec.dim)], subject)
        return d_r, d_o, d_c
    if pp is None:
        d_r = _report("D_r", UNKNOWN, [_step("lie-group", 'Example "liegroup"',
                                             point_property=None)], subject)
    else:
        d_r = _report("D_r", HOLDS if pp else FAILS, [
            _step("lie-group", 'Example "liegroup"', point_property=pp)], subject)
    unknown = [_step("lie-group", 'Example "liegroup"',
                     note="the flag records the real point property only")]
    return (d_r, _report("D_o", UNKNOWN, unknown, subject),
            _report("D_c", UNKNOWN, unknown, subject))


def topological_verdicts(spec: VarietySpec) -> tuple:
    """(D_r, D_o, D_c) reports."""
    k = spec.kind
    if k is Kind.SPHERE:
        return sphere_verdicts(spec.n)
    if k is Kind.LIE_GROUP:
        return _lie_group_topological(spec)
    if k is Kind.PRODUCT:
        factors = [topological_verdicts(f.with_mode(Mode.TOPOLOGICAL))
                   for f in flatten_product(spec)]
        subject = spec.describe()
        return tuple(combine_products([fac[i] for fac in factors], prop, subject)
                     for i, prop in enumerate(("D_r", "D_o", "D_c")))
    return _topological_complex(spec)


def evaluate(spec: VarietySpec) -> list:
    """All reports for the variety's mode."""
    if spec.mode is Mode.ALGEBRAIC:
        return [diagonal_verdict(spec)]
    return list(topological_verdicts(spec))


__all__ = [
    "combine_products", "dc_odd_quadric_verdict", "diagonal_verdict",
    "dim4_almost_complex_verdict", "evaluate", "odd_dim_manifold_verdict",
    "point_property_q3_verdict", "sphere_verdicts",
    "spin_6fold_necessary", "spin_ci_threefold_verdict", "surface_verdict",
    "topological_verdicts",
]
