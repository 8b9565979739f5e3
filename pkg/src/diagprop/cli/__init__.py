"""Spec files, report documents and the command-line interface."""
from .document import (
    ComputationEntry,
    EntryError,
    ReportDocument,
    VarietyEntry,
    candidate_table,
    from_json,
    render_text,
    run_computation,
    run_reports,
    to_json,
)
from .main import build_parser, cli_main, main
from .specfile import (
    Computation,
    NamedVariety,
    Options,
    SpecFile,
    parse_spec_file,
    serialize_spec_file,
    variety_to_dict,
)

__all__ = [
    "Computation", "ComputationEntry", "EntryError", "NamedVariety", "Options",
    "ReportDocument", "SpecFile", "VarietyEntry", "build_parser", "candidate_table",
    "cli_main", "from_json", "main", "parse_spec_file", "render_text", "run_computation",
    "run_reports", "serialize_spec_file", "to_json", "variety_to_dict",
]
