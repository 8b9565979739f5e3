"""Strict reader and canonical writer for variety spec files (JSON, version 1)."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass

from ..errors import InputError, MissingFlag, SpecSyntaxError, UnknownKind
from ..obstruction.variety import OPTIONAL, PARAMETERS, Kind, Mode, VarietySpec

FORMATS = ("json", "text")
TRI_FLAGS = ("point_property", "h1_mod2_zero", "ample_generator_has_section",
             "pic_finitely_generated")
ALIASES = {"quartic_surface_generic": (Kind.K3_GENERIC, {"d": 4})}

COMPUTATIONS = {
    "chi_q3": ("rank", "d1", "d2", "d3"),
    "chi_surface": ("chi0", "dsq", "ddotk"),
    "ring_mul": ("ring", "a", "b"),
    "sq2": ("m", "element"),
    "candidates": ("variety",),
}


@dataclass(frozen=True)
class Options:
    format: str = "json"
    chi_window: int | None = None


@dataclass(frozen=True)
class NamedVariety:
    name: str
    spec: VarietySpec


@dataclass(frozen=True)
class Computation:
    name: str
    op: str
    params: tuple  # sorted (key, value) pairs

    @property
    def inputs(self) -> dict:
        return dict(self.params)


@dataclass(frozen=True)
class SpecFile:
    version: int = 1
    varieties: tuple = ()
    options: Options = Options()
    computations: tuple = ()

    def variety(self, name: str) -> VarietySpec:
        for entry in self.varieties:
            if entry.name == name:
                return entry.spec
        raise InputError(f"no variety named {name!r}")


# ---------------------------------------------------------------------------
# reading


class _Reader:
    def __init__(self, text: str):
        self.text = text

    def line_of(self, name: str | None) -> int | None:
        if not name:
            return None
        m = re.search(r'"name"\s*:\s*' + re.escape(json.dumps(name)), self.text)
        return self.text.count("\n", 0, m.start()) + 1 if m else None

    def fail(self, message, path, name=None, cls=SpecSyntaxError):
        raise cls(message, path, self.line_of(name))


def _no_duplicate_keys(pairs):
    out = {}
    for key, value in pairs:
        if key in out:
            raise SpecSyntaxError(f"duplicate key {key!r}")
        out[key] = value
    return out


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def _tri(value, path, rd, name):
    if value is True or value is False:
        return value
    if value == "unknown":
        return None
    rd.fail(f"expected true, false or \"unknown\", got {value!r}", path, name)


def _read_variety(obj, path, rd: _Reader, name=None, named=True) -> VarietySpec:
    if not isinstance(obj, dict):
        rd.fail("variety entry must be an object", path, name)
    obj = dict(obj)
    if named:
        obj.pop("name", None)
    elif "name" in obj:
        name = obj.pop("name")
    if "kind" not in obj:
        rd.fail("missing field 'kind'", f"{path}.kind", name)
    raw_kind = obj.pop("kind")
    preset = {}
    if raw_kind in ALIASES:
        kind, preset = ALIASES[raw_kind]
    else:
        try:
            kind = Kind(raw_kind)
        except ValueError:
            rd.fail(f"unknown kind {raw_kind!r}; known: "
                    + ", ".join(sorted([k.value for k in Kind] + list(ALIASES))),
                    f"{path}.kind", name, UnknownKind)
    params = PARAMETERS.get(kind, ())
    allowed = set(params) | {"mode", "pic_finitely_generated"}
    for key in sorted(obj):
        if key not in allowed:
            rd.fail(f"unknown field {key!r} for kind {kind.value}", f"{path}.{key}", name)
    fields = {}
    for key in params:
        fpath = f"{path}.{key}"
        if key in preset:
            if key in obj and obj[key] != preset[key]:
                rd.fail(f"{raw_kind} fixes {key} = {preset[key]}", fpath, name)
            fields[key] = preset[key]
            continue
        if key not in obj:
            if key in OPTIONAL:
                raise MissingFlag(fpath, f"{fpath}: flag is required (true, false or \"unknown\")")
            rd.fail("missing field", fpath, name)
        value = obj[key]
        if key in OPTIONAL:
            fields[key] = _tri(value, fpath, rd, name)
        elif key == "multidegree":
            if not isinstance(value, list) or not all(_is_int(x) for x in value):
                rd.fail("multidegree must be a list of integers", fpath, name)
            fields[key] = tuple(value)
        elif key == "factors":
            if not isinstance(value, list):
                rd.fail("factors must be a list", fpath, name)
            fields[key] = tuple(_read_variety(f, f"{fpath}[{i}]", rd, name, named=False)
                                for i, f in enumerate(value))
        else:
            if not _is_int(value):
                rd.fail(f"expected an integer, got {value!r}", fpath, name)
            fields[key] = value
    if "pic_finitely_generated" in obj:
        fields["pic_finitely_generated"] = _tri(obj["pic_finitely_generated"],
                                                f"{path}.pic_finitely_generated", rd, name)
    if "mode" in obj:
        try:
            fields["mode"] = Mode(obj["mode"])
        except ValueError:
            rd.fail(f"mode must be \"algebraic\" or \"topological\", got {obj['mode']!r}",
                    f"{path}.mode", name)
    try:
        return VarietySpec(kind, **fields)
    except SpecSyntaxError:
        raise
    except InputError as exc:
        # keep the class (ContradictoryFlags, UnsupportedSpec, ...) and add the location
        line = rd.line_of(name)
        where = f"line {line}: {path}" if line else path
        raise type(exc)(f"{where}: {exc}") from None


def _read_computation(obj, path, rd: _Reader) -> Computation:
    if not isinstance(obj, dict):
        rd.fail("computation entry must be an object", path)
    obj = dict(obj)
    name = obj.pop("name", None)
    if not isinstance(name, str) or not name:
        rd.fail("computation needs a nonempty string 'name'", f"{path}.name")
    op = obj.pop("op", None)
    if op not in COMPUTATIONS:
        rd.fail(f"unknown op {op!r}; known: {', '.join(sorted(COMPUTATIONS))}", f"{path}.op", name)
    expected = COMPUTATIONS[op]
    for key in sorted(obj):
        if key not in expected:
            rd.fail(f"unknown field {key!r} for op {op}", f"{path}.{key}", name)
    for key in expected:
        if key not in obj:
            rd.fail("missing field", f"{path}.{key}", name)
        value = obj[key]
        if key in ("ring", "a", "b", "element", "variety"):
            if not isinstance(value, str):
                rd.fail("expected a string", f"{path}.{key}", name)
        elif not _is_int(value):
            rd.fail("expected an integer", f"{path}.{key}", name)
    return Computation(name, op, tuple(sorted(obj.items())))


def parse_spec_file(text: str) -> SpecFile:
    try:
        doc = json.loads(text, object_pairs_hook=_no_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise SpecSyntaxError(exc.msg, "", exc.lineno) from None
    rd = _Reader(text)
    if not isinstance(doc, dict):
        rd.fail("top level must be an object", "")
    for key in sorted(doc):
        if key not in ("version", "varieties", "options", "computations"):
            rd.fail(f"unknown field {key!r}", key)
    if "version" not in doc:
        rd.fail("missing field", "version")
    if doc["version"] != 1 or not _is_int(doc["version"]):
        rd.fail(f"unsupported version {doc['version']!r} (expected 1)", "version")
    if "varieties" not in doc:
        rd.fail("missing field", "varieties")
    if not isinstance(doc["varieties"], list):
        rd.fail("must be a list", "varieties")

    opts = doc.get("options", {})
    if not isinstance(opts, dict):
        rd.fail("must be an object", "options")
    for key in sorted(opts):
        if key not in ("format", "chi_window"):
            rd.fail(f"unknown option {key!r}", f"options.{key}")
    fmt = opts.get("format", "json")
    if fmt not in FORMATS:
        rd.fail(f"format must be one of {FORMATS}", "options.format")
    window = opts.get("chi_window")
    if window is not None and (not _is_int(window) or window < 0):
        rd.fail("chi_window must be a nonnegative integer or null", "options.chi_window")

    names = set()
    varieties = []
    for i, entry in enumerate(doc["varieties"]):
        path = f"varieties[{i}]"
        name = entry.get("name") if isinstance(entry, dict) else None
        if not isinstance(name, str) or not name:
            rd.fail("entry needs a nonempty string 'name'", f"{path}.name")
        if name in names:
            rd.fail(f"duplicate name {name!r}", f"{path}.name", name)
        names.add(name)
        varieties.append(NamedVariety(name, _read_variety(entry, path, rd, name)))

    comps = doc.get("computations", [])
    if not isinstance(comps, list):
        rd.fail("must be a list", "computations")
    computations = []
    cnames = set()
    for i, entry in enumerate(comps):
        comp = _read_computation(entry, f"computations[{i}]", rd)
        if comp.name in cnames:
            rd.fail(f"duplicate name {comp.name!r}", f"computations[{i}].name", comp.name)
        cnames.add(comp.name)
        computations.append(comp)
    return SpecFile(1, tuple(varieties), Options(fmt, window), tuple(computations))


# ---------------------------------------------------------------------------
# writing


def _flag_out(v):
    return "unknown" if v is None else v


def variety_to_dict(spec: VarietySpec) -> dict:
    out = {"kind": spec.kind.value, "mode": spec.mode.value}
    for key in PARAMETERS.get(spec.kind, ()):
        value = getattr(spec, key)
        if key == "factors":
            out[key] = [variety_to_dict(f) for f in value]
        elif key == "multidegree":
            out[key] = list(value)
        elif key in OPTIONAL:
            out[key] = _flag_out(value)
        else:
            out[key] = value
    out["pic_finitely_generated"] = _flag_out(spec.pic_finitely_generated)
    return out


def spec_file_to_dict(spec: SpecFile) -> dict:
    doc = {
        "version": spec.version,
        "options": {"format": spec.options.format, "chi_window": spec.options.chi_window},
        "varieties": [dict(name=e.name, **variety_to_dict(e.spec)) for e in spec.varieties],
    }
    if spec.computations:
        doc["computations"] = [dict(name=c.name, op=c.op, **c.inputs) for c in spec.computations]
    return doc


def serialize_spec_file(spec: SpecFile) -> str:
    return json.dumps(spec_file_to_dict(spec), indent=2, sort_keys=True) + "\n"
