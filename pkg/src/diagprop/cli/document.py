"""Report documents: evaluation, canonical JSON and a text renderer."""
from __future__ import annotations

import json
import re
import time
from dataclasses import dataclass
from fractions import Fraction

from .._version import __version__
from ..charclass import SurfaceRRData, euler_char_surface, hrr_q3_closed_form
from ..errors import InputError
from ..graded_ring import ring_by_id
from ..obstruction import (
    CITATIONS,
    ObstructionReport,
    Property,
    TraceStep,
    Verdict,
    coh_trivial_candidates,
    evaluate,
    scan_line_bundles,
)
from ..steenrod import quadric_sq2_spec, sq2
from .specfile import Computation, NamedVariety, SpecFile, variety_to_dict

FORMAT_VERSION = 1
_RATIONAL = re.compile(r"^-?\d+/\d+$")
_RATIONAL_OPS = ("chi_q3",)


@dataclass(frozen=True)
class EntryError:
    type: str
    message: str


@dataclass(frozen=True)
class VarietyEntry:
    name: str
    spec: dict
    reports: tuple = ()
    error: EntryError | None = None


@dataclass(frozen=True)
class ComputationEntry:
    name: str
    op: str
    inputs: dict
    output: object = None
    error: EntryError | None = None


@dataclass(frozen=True)
class ReportDocument:
    tool_version: str
    varieties: tuple = ()
    computations: tuple = ()

    @property
    def citation_index(self) -> dict:
        used = set()
        for entry in self.varieties:
            for rep in entry.reports:
                used.update(rep.citations)
        return {label: CITATIONS[label] for label in sorted(used)}


# ---------------------------------------------------------------------------
# evaluation


def _error(exc: InputError) -> EntryError:
    return EntryError(type(exc).__name__, str(exc))


def _exact(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v


def run_computation(comp: Computation, spec: SpecFile | None = None):
    """Exact output of one raw computation."""
    p = comp.inputs
    if comp.op == "chi_q3":
        return _exact(hrr_q3_closed_form(p["rank"], p["d1"], p["d2"], p["d3"]))
    if comp.op == "chi_surface":
        return euler_char_surface(SurfaceRRData(p["chi0"]), p["dsq"], p["ddotk"])
    if comp.op == "ring_mul":
        R = ring_by_id(p["ring"])
        return str(R.parse(p["a"]) * R.parse(p["b"]))
    if comp.op == "sq2":
        s = quadric_sq2_spec(p["m"])
        return str(sq2(s, s.ring.parse(p["element"])))
    if comp.op == "candidates":
        if spec is None:
            raise InputError("candidates needs the spec file's varieties")
        window = spec.options.chi_window
        return [row.n for row in coh_trivial_candidates(spec.variety(p["variety"]), window)]
    raise InputError(f"unknown op {comp.op!r}")


def run_reports(spec: SpecFile, timings: dict | None = None) -> ReportDocument:
    """Evaluate every entry in input order; input errors are recorded per entry."""
    varieties = []
    for entry in spec.varieties:
        start = time.perf_counter()
        try:
            reports = tuple(evaluate(entry.spec))
            varieties.append(VarietyEntry(entry.name, variety_to_dict(entry.spec), reports))
        except InputError as exc:
            varieties.append(VarietyEntry(entry.name, variety_to_dict(entry.spec),
                                          error=_error(exc)))
        if timings is not None:
            timings[f"varieties/{entry.name}"] = time.perf_counter() - start
    computations = []
    for comp in spec.computations:
        start = time.perf_counter()
        try:
            computations.append(ComputationEntry(comp.name, comp.op, comp.inputs,
                                                 run_computation(comp, spec)))
        except InputError as exc:
            computations.append(ComputationEntry(comp.name, comp.op, comp.inputs,
                                                 error=_error(exc)))
        if timings is not None:
            timings[f"computations/{comp.name}"] = time.perf_counter() - start
    return ReportDocument(__version__, tuple(varieties), tuple(computations))


def candidate_table(spec: SpecFile) -> dict:
    """Per variety: surviving twists and the full scan, or the error."""
    out = {}
    for entry in spec.varieties:
        try:
            rows = scan_line_bundles(entry.spec, spec.options.chi_window)
            out[entry.name] = {
                "candidates": [row.n for row in sorted(rows, key=lambda r: -r.n)
                               if row.candidate],
                "scan": [{"n": row.n, "chi": row.chi, "excluded_by": row.excluded_by}
                         for row in rows],
            }
        except InputError as exc:
            out[entry.name] = {"error": {"type": type(exc).__name__, "message": str(exc)}}
    return out


# ---------------------------------------------------------------------------
# JSON


def _encode(value):
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, dict):
        return {str(k): _encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    return value


def _decode(value):
    if isinstance(value, str) and _RATIONAL.match(value):
        return Fraction(value)
    if isinstance(value, dict):
        return {k: _decode(v) for k, v in value.items()}
    if isinstance(value, list):
        return tuple(_decode(v) for v in value)
    return value


def _report_dict(rep: ObstructionReport) -> dict:
    return {
        "property": rep.property.value,
        "verdict": rep.verdict.value,
        "subject": rep.subject,
        "citations": rep.citations,
        "trace": [{"rule": s.rule, "citation": s.citation, "note": s.note,
                   "values": _encode(s.values)} for s in rep.trace],
    }


def _error_dict(err):
    return None if err is None else {"type": err.type, "message": err.message}


def document_to_dict(doc: ReportDocument) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "tool": "diagprop",
        "tool_version": doc.tool_version,
        "varieties": [{"name": e.name, "spec": e.spec, "error": _error_dict(e.error),
                       "reports": [_report_dict(r) for r in e.reports]}
                      for e in doc.varieties],
        "computations": [{"name": c.name, "op": c.op, "inputs": _encode(c.inputs),
                          "output": _encode(c.output), "error": _error_dict(c.error)}
                         for c in doc.computations],
        "citations": doc.citation_index,
    }


def to_json(doc: ReportDocument) -> str:
    return json.dumps(document_to_dict(doc), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def from_json(text: str) -> ReportDocument:
    raw = json.loads(text)
    if raw.get("format_version") != FORMAT_VERSION:
        raise InputError(f"unsupported report format {raw.get('format_version')!r}")

    def err(d):
        return None if d is None else EntryError(d["type"], d["message"])

    varieties = []
    for e in raw["varieties"]:
        reports = tuple(
            ObstructionReport(Property(r["property"]), Verdict(r["verdict"]),
                              tuple(TraceStep(s["rule"], s["citation"], _decode(s["values"]),
                                              s["note"]) for s in r["trace"]),
                              r["subject"])
            for r in e["reports"])
        varieties.append(VarietyEntry(e["name"], e["spec"], reports, err(e["error"])))
    computations = []
    for c in raw["computations"]:
        out = c["output"]
        if c["op"] in _RATIONAL_OPS:
            out = _decode(out)
        computations.append(ComputationEntry(c["name"], c["op"], dict(c["inputs"]), out,
                                             err(c["error"])))
    return ReportDocument(raw["tool_version"], tuple(varieties), tuple(computations))


# ---------------------------------------------------------------------------
# text


def _fmt(value) -> str:
    value = _encode(value)
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_fmt(v)}" for k, v in value.items()) + "}"
    if isinstance(value, list):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    if value is None:
        return "unknown"
    return str(value)


def render_text(doc: ReportDocument) -> str:
    lines = [f"diagprop {doc.tool_version}"]
    for e in doc.varieties:
        lines.append("")
        lines.append(f"{e.name}")
        if e.error is not None:
            lines.append(f"  error: {e.error.type}: {e.error.message}")
            continue
        for rep in e.reports:
            cites = "; ".join(rep.citations)
            lines.append(f"  ({rep.property.value}) {rep.verdict.value}  [{cites}]")
            for s in rep.trace:
                vals = ", ".join(f"{k}={_fmt(v)}" for k, v in s.values.items())
                detail = "; ".join(x for x in (vals, s.note) if x)
                lines.append(f"    - {s.rule} [{s.citation}]" + (f": {detail}" if detail else ""))
    if doc.computations:
        lines.append("")
        lines.append("computations")
        for c in doc.computations:
            inputs = ", ".join(f"{k}={_fmt(v)}" for k, v in c.inputs.items())
            if c.error is not None:
                lines.append(f"  {c.name} {c.op}({inputs}): error: {c.error.type}: {c.error.message}")
                continue
            note = ""
            if isinstance(c.output, Fraction):
                note = f"  (not an integer: fractional part {c.output - (c.output.numerator // c.output.denominator)})"
            lines.append(f"  {c.name} {c.op}({inputs}) = {_fmt(c.output)}{note}")
    index = doc.citation_index
    if index:
        lines.append("")
        lines.append("citations")
        for label, text in index.items():
            lines.append(f"  {label}: {text}")
    return "\n".join(lines) + "\n"


__all__ = [
    "ComputationEntry", "EntryError", "NamedVariety", "ReportDocument", "VarietyEntry",
    "candidate_table", "document_to_dict", "from_json", "render_text", "run_computation",
    "run_reports", "to_json",
]
