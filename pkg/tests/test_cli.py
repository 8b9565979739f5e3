import importlib
import io
import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from diagprop.cli import (
    Computation,
    NamedVariety,
    Options,
    SpecFile,
    cli_main,
    from_json,
    parse_spec_file,
    render_text,
    run_reports,
    serialize_spec_file,
    to_json,
)
from diagprop.errors import (
    ContradictoryFlags,
    InvariantViolation,
    MissingFlag,
    SpecSyntaxError,
    UnknownKind,
)
from diagprop.obstruction import Kind, Mode, Property, VarietySpec, Verdict

ROOT = Path(__file__).resolve().parent.parent
CATALOG = ROOT / "catalog" / "catalog.json"
GOLDEN = ROOT / "catalog" / "report.json"
cli_module = importlib.import_module("diagprop.cli.main")


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli_main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def doc(*varieties, **extra):
    return json.dumps({"version": 1, "varieties": list(varieties), **extra})


# -- parsing ---------------------------------------------------------------

def test_minimal_file():
    spec = parse_spec_file(doc({"name": "q3", "kind": "quadric", "n": 3}))
    assert spec.varieties == (NamedVariety("q3", VarietySpec(Kind.QUADRIC, n=3)),)
    assert spec.options == Options()


def test_quartic_alias():
    spec = parse_spec_file(doc({"name": "X", "kind": "quartic_surface_generic"}))
    assert spec.variety("X") == VarietySpec(Kind.K3_GENERIC, d=4)
    with pytest.raises(SpecSyntaxError):
        parse_spec_file(doc({"name": "X", "kind": "quartic_surface_generic", "d": 6}))


def test_duplicate_names():
    text = doc({"name": "a", "kind": "quadric", "n": 3}, {"name": "a", "kind": "quadric", "n": 5})
    with pytest.raises(SpecSyntaxError) as info:
        parse_spec_file(text)
    assert "duplicate" in str(info.value)


def test_duplicate_keys():
    with pytest.raises(SpecSyntaxError):
        parse_spec_file('{"version": 1, "version": 1, "varieties": []}')


def test_unknown_kind():
    with pytest.raises(UnknownKind):
        parse_spec_file(doc({"name": "a", "kind": "banana"}))


def test_unknown_field_and_bad_types():
    with pytest.raises(SpecSyntaxError):
        parse_spec_file(doc({"name": "a", "kind": "quadric", "n": 3, "colour": "red"}))
    with pytest.raises(SpecSyntaxError):
        parse_spec_file(doc({"name": "a", "kind": "quadric", "n": "3"}))
    with pytest.raises(SpecSyntaxError):
        parse_spec_file(doc({"name": "a", "kind": "quadric"}))
    with pytest.raises(SpecSyntaxError):
        parse_spec_file('{"version": 2, "varieties": []}')
    with pytest.raises(SpecSyntaxError):
        parse_spec_file('{"version": 1, "varieties": [}')


def test_error_line_numbers():
    text = '{"version": 1,\n "varieties": [\n  {"name": "a", "kind": "quadric", "n": 3},\n' \
           '  {"name": "b", "kind": "quadric", "n": 3, "bad": 1}\n]}'
    with pytest.raises(SpecSyntaxError) as info:
        parse_spec_file(text)
    assert info.value.line == 4


def test_missing_flag():
    with pytest.raises(MissingFlag):
        parse_spec_file(doc({"name": "g", "kind": "lie_group", "dim": 3, "h1_mod2_zero": False}))


def test_unknown_flag_value():
    spec = parse_spec_file(doc({"name": "A", "kind": "abelian_variety", "g": 3,
                                "point_property": "unknown"}))
    assert spec.variety("A").point_property is None


def test_contradictory_flags_keep_type():
    with pytest.raises(ContradictoryFlags):
        parse_spec_file(doc({"name": "g", "kind": "lie_group", "dim": 3,
                             "point_property": True, "h1_mod2_zero": True}))


def test_computations_parsed():
    spec = parse_spec_file(CATALOG.read_text())
    ops = [c.op for c in spec.computations]
    assert sorted(ops) == ["candidates", "chi_q3", "chi_surface", "ring_mul", "sq2"]
    with pytest.raises(SpecSyntaxError):
        parse_spec_file(doc(computations=[{"name": "c", "op": "chi_q3", "rank": 1}]))


# -- round trip ------------------------------------------------------------

_flag = st.sampled_from([True, False, None])
_leaf = st.one_of(
    st.builds(lambda n: VarietySpec(Kind.PROJECTIVE_SPACE, n=n), st.integers(1, 6)),
    st.builds(lambda n: VarietySpec(Kind.QUADRIC, n=n), st.integers(1, 9)),
    st.builds(lambda r, k: VarietySpec(Kind.GRASSMANNIAN, r=r, n=r + k),
              st.integers(1, 3), st.integers(1, 3)),
    st.builds(lambda d: VarietySpec(Kind.K3_GENERIC, d=2 * d), st.integers(1, 5)),
    st.builds(lambda n, degs: VarietySpec(Kind.COMPLETE_INTERSECTION, n=n + len(degs),
                                          multidegree=tuple(degs)),
              st.integers(1, 4), st.lists(st.integers(1, 5), min_size=1, max_size=3)),
    st.builds(lambda g, p: VarietySpec(Kind.ABELIAN_VARIETY, g=g, point_property=p),
              st.integers(1, 4), _flag),
    st.builds(lambda dim, r, f: VarietySpec(Kind.PIC_Z_GENERAL, dim=dim, r=r,
                                            ample_generator_has_section=f),
              st.integers(1, 5), st.integers(-6, 6), _flag),
    st.builds(lambda n: VarietySpec(Kind.SPHERE, n=n), st.integers(1, 10)),
    st.sampled_from([VarietySpec(k) for k in (
        Kind.ENRIQUES, Kind.ABELIAN_SURFACE, Kind.FAKE_P2, Kind.CUBIC_THREEFOLD,
        Kind.RULED_SURFACE, Kind.HYPERELLIPTIC_SURFACE)]),
)
_algebraic_leaf = _leaf.filter(lambda v: v.kind is not Kind.SPHERE)
_variety = st.one_of(
    _leaf,
    st.builds(lambda fs: VarietySpec(Kind.PRODUCT, factors=tuple(fs)),
              st.lists(_algebraic_leaf, min_size=2, max_size=3)),
)
_spec_file = st.builds(
    lambda vs, fmt, w: SpecFile(1, tuple(NamedVariety(f"v{i}", v) for i, v in enumerate(vs)),
                                Options(fmt, w)),
    st.lists(_variety, max_size=5), st.sampled_from(["json", "text"]),
    st.one_of(st.none(), st.integers(0, 20)),
)


@given(_spec_file)
def test_serialize_parse_round_trip(spec):
    text = serialize_spec_file(spec)
    again = parse_spec_file(text)
    assert again == spec
    assert serialize_spec_file(again) == text


def test_catalog_round_trip():
    spec = parse_spec_file(CATALOG.read_text())
    assert parse_spec_file(serialize_spec_file(spec)) == spec


@given(st.lists(_variety, max_size=4))
def test_report_json_round_trip(varieties):
    spec = SpecFile(1, tuple(NamedVariety(f"v{i}", v) for i, v in enumerate(varieties)))
    text = to_json(run_reports(spec))
    assert to_json(from_json(text)) == text


# -- documents -------------------------------------------------------------

def test_determinism():
    spec = parse_spec_file(CATALOG.read_text())
    assert to_json(run_reports(spec)) == to_json(run_reports(spec))
    a = run("verdict", str(CATALOG), "--json")
    b = run("verdict", str(CATALOG), "--json")
    assert a == b and a[0] == 0


def test_golden_report():
    code, out, _ = run("verdict", str(CATALOG), "--json")
    assert code == 0
    assert out == GOLDEN.read_text()


def test_golden_rebuilds_from_json():
    d = from_json(GOLDEN.read_text())
    q3 = next(e for e in d.varieties if e.name == "Q3")
    assert q3.reports[0].verdict is Verdict.FAILS
    chi = next(c for c in d.computations if c.op == "chi_q3")
    assert chi.output == Fraction(15, 2)


def test_batch_p2_q3_s6():
    spec = parse_spec_file(doc({"name": "P2", "kind": "projective_space", "n": 2},
                               {"name": "Q3", "kind": "quadric", "n": 3},
                               {"name": "S6", "kind": "sphere", "n": 6}))
    d = run_reports(spec)
    got = {e.name: {r.property: r.verdict for r in e.reports} for e in d.varieties}
    assert got["P2"] == {Property.D: Verdict.HOLDS}
    assert got["Q3"] == {Property.D: Verdict.FAILS}
    assert got["S6"] == {p: Verdict.FAILS for p in (Property.D_r, Property.D_o, Property.D_c)}


def test_empty_batch(tmp_path):
    path = tmp_path / "empty.json"
    path.write_text(doc())
    code, out, _ = run("verdict", str(path))
    assert code == 0
    body = json.loads(out)
    assert body["varieties"] == [] and body["computations"] == [] and body["citations"] == {}


def test_error_isolation():
    spec = parse_spec_file(doc(
        {"name": "ok", "kind": "quadric", "n": 3},
        {"name": "bad", "kind": "pic_z_general", "dim": 2, "r": -2,
         "ample_generator_has_section": True},
        {"name": "also ok", "kind": "projective_space", "n": 2}))
    d = run_reports(spec)
    assert [e.error is None for e in d.varieties] == [True, False, True]
    assert d.varieties[1].error.type == "UnsupportedSpec"


def test_text_mode_citations_on_every_verdict_line():
    code, out, _ = run("verdict", str(CATALOG), "--text")
    assert code == 0
    lines = [ln for ln in out.splitlines()
             if ln.startswith("  (") and any(v in ln for v in ("HOLDS", "FAILS", "UNKNOWN"))]
    assert lines
    for ln in lines:
        assert ln.rstrip().endswith("]") and "[" in ln and "[]" not in ln
    assert "not an integer: fractional part 1/2" in out


def test_options_format_text(tmp_path):
    path = tmp_path / "t.json"
    path.write_text(doc({"name": "P2", "kind": "projective_space", "n": 2},
                        options={"format": "text"}))
    code, out, _ = run("verdict", str(path))
    assert code == 0 and out.startswith("diagprop ")


def test_timing_sidecar(tmp_path):
    timing = tmp_path / "timing.json"
    code, out, _ = run("verdict", str(CATALOG), "--timing", str(timing))
    assert code == 0
    data = json.loads(timing.read_text())
    assert "varieties/Q3" in data["seconds"]
    assert "seconds" not in out


def test_render_text_is_deterministic():
    spec = parse_spec_file(CATALOG.read_text())
    assert render_text(run_reports(spec)) == render_text(run_reports(spec))


# -- commands --------------------------------------------------------------

def test_chi_q3():
    assert run("chi", "q3", "--rank", "3", "--d1", "1", "--d2", "0", "--d3", "1")[1] == "15/2\n"
    assert run("chi", "q3", "--rank", "1", "--d1", "1", "--d2", "0", "--d3", "0")[1] == "5\n"


def test_chi_surface():
    assert run("chi", "surface", "--chi0", "2", "--dsq", "-4", "--ddotk", "0")[1] == "0\n"


def test_sq2_command():
    assert run("sq2", "3", "xi^1*eta^1") == (0, "xi^2*eta\n", "")


def test_ring_mul():
    assert run("ring", "mul", "Q3", "x", "x")[1] == "2*y\n"
    assert run("ring", "mul", "Q3", "x", "x*y")[1] == "0\n"


def test_candidates_command():
    code, out, _ = run("candidates", str(CATALOG))
    assert code == 0
    table = json.loads(out)
    assert table["Q3"]["candidates"] == [-1, -2]
    assert table["cubic threefold"]["candidates"] == [-1]
    assert table["Enriques"]["error"]["type"] == "UnsupportedSpec"


def test_exit_codes(tmp_path, monkeypatch):
    assert run("chi", "q3", "--rank", "x")[0] == 1
    assert run("no-such-command")[0] == 1
    assert run("ring", "mul", "Z7", "x", "x")[0] == 1
    assert run("sq2", "1", "xi")[0] == 1
    assert run("verdict", str(tmp_path / "missing.json"))[0] == 1
    bad = tmp_path / "bad.json"
    bad.write_text(doc({"name": "a", "kind": "banana"}))
    code, _, err = run("verdict", str(bad))
    assert code == 1 and "UnknownKind" in err
    assert run("--version")[0] == 0

    def boom(*_):
        raise InvariantViolation("forced")

    monkeypatch.setattr(cli_module, "hrr_q3_closed_form", boom)
    assert run("chi", "q3", "--rank", "1", "--d1", "0", "--d2", "0", "--d3", "0")[0] == 2


def test_computation_inputs():
    comp = Computation("c", "chi_q3", (("d1", 1), ("d2", 0), ("d3", 1), ("rank", 3)))
    assert comp.inputs == {"d1": 1, "d2": 0, "d3": 1, "rank": 3}


def test_mode_written_explicitly():
    spec = SpecFile(1, (NamedVariety("s", VarietySpec(Kind.SPHERE, n=3)),))
    body = json.loads(serialize_spec_file(spec))
    assert body["varieties"][0]["mode"] == Mode.TOPOLOGICAL.value
