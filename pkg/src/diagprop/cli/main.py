"""Command-line entry point."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .._version import __version__
from ..charclass import SurfaceRRData, euler_char_surface, hrr_q3_closed_form
from ..errors import InputError, InvariantViolation
from ..graded_ring import ring_by_id
from ..steenrod import quadric_sq2_spec, sq2
from .document import candidate_table, render_text, run_reports, to_json
from .specfile import parse_spec_file

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _cmd_verdict(args, out):
    spec = parse_spec_file(_read(args.file))
    timings = {} if args.timing else None
    doc = run_reports(spec, timings)
    fmt = args.format or spec.options.format
    out.write(to_json(doc) if fmt == "json" else render_text(doc))
    if args.timing:
        Path(args.timing).write_text(json.dumps(
            {"seconds": timings, "total_seconds": sum(timings.values())},
            indent=2, sort_keys=True) + "\n", encoding="utf-8")


def _cmd_chi(args, out):
    if args.target == "q3":
        out.write(f"{hrr_q3_closed_form(args.rank, args.d1, args.d2, args.d3)}\n")
    else:
        out.write(f"{euler_char_surface(SurfaceRRData(args.chi0), args.dsq, args.ddotk)}\n")


def _cmd_ring(args, out):
    R = ring_by_id(args.ring_id)
    out.write(f"{R.parse(args.a) * R.parse(args.b)}\n")


def _cmd_sq2(args, out):
    s = quadric_sq2_spec(args.m)
    out.write(f"{sq2(s, s.ring.parse(args.element))}\n")


def _cmd_candidates(args, out):
    spec = parse_spec_file(_read(args.file))
    out.write(json.dumps(candidate_table(spec), indent=2, sort_keys=True) + "\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="diagprop", description="Diagonal property verdicts and exact "
                                             "characteristic class computations.")
    p.add_argument("--version", action="version", version=f"diagprop {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verdict", help="evaluate every entry of a spec file")
    v.add_argument("file")
    g = v.add_mutually_exclusive_group()
    g.add_argument("--json", dest="format", action="store_const", const="json")
    g.add_argument("--text", dest="format", action="store_const", const="text")
    v.add_argument("--timing", metavar="PATH", help="write per-entry timings to PATH")
    v.set_defaults(func=_cmd_verdict)

    c = sub.add_parser("chi", help="Euler characteristics")
    csub = c.add_subparsers(dest="target", required=True, parser_class=_Parser)
    q3 = csub.add_parser("q3", help="chi of a bundle on Q_3 from (rank, d1, d2, d3)")
    for name in ("--rank", "--d1", "--d2", "--d3"):
        q3.add_argument(name, type=int, required=True)
    surf = csub.add_parser("surface", help="chi(O(D)) = chi0 + (D^2 - D.K)/2")
    surf.add_argument("--chi0", type=int, required=True)
    surf.add_argument("--dsq", type=int, required=True)
    surf.add_argument("--ddotk", type=int, required=True)
    c.set_defaults(func=_cmd_chi)

    r = sub.add_parser("ring", help="arithmetic in catalog rings")
    rsub = r.add_subparsers(dest="op", required=True, parser_class=_Parser)
    mul = rsub.add_parser("mul", help="product of two elements, e.g. ring mul Q3 x x")
    mul.add_argument("ring_id")
    mul.add_argument("a")
    mul.add_argument("b")
    r.set_defaults(func=_cmd_ring)

    s = sub.add_parser("sq2", help="Sq^2 on H*(Q_{2m-1}; Z/2)")
    s.add_argument("m", type=int)
    s.add_argument("element")
    s.set_defaults(func=_cmd_sq2)

    cand = sub.add_parser("candidates", help="cohomologically trivial O(n) search")
    cand.add_argument("file")
    cand.set_defaults(func=_cmd_candidates)
    return p


def cli_main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        args.func(args, out)
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_INPUT
    except InputError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_INPUT
    except InvariantViolation as exc:
        err.write(f"internal invariant violated: {exc}\n")
        return EXIT_INVARIANT
    except SystemExit as exc:  # --help / --version
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    return EXIT_OK


def main() -> None:
    sys.exit(cli_main())
