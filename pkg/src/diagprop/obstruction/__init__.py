"""Rule engine deciding the diagonal properties for catalog entries."""
from .linebundles import (
    LineBundleRow,
    chi_complete_intersection,
    chi_projective_space,
    coh_trivial_candidates,
    scan_line_bundles,
)
from .report import CITATIONS, ObstructionReport, Property, TraceStep, Verdict
from .rules import (
    combine_products,
    dc_odd_quadric_verdict,
    diagonal_verdict,
    dim4_almost_complex_verdict,
    evaluate,
    odd_dim_manifold_verdict,
    point_property_q3_verdict,
    sphere_verdicts,
    spin_6fold_necessary,
    spin_ci_threefold_verdict,
    surface_verdict,
    topological_verdicts,
)
from .variety import Kind, Mode, VarietySpec, complex_dimension, real_dimension

__all__ = [
    "CITATIONS", "Kind", "LineBundleRow", "Mode", "ObstructionReport", "Property",
    "TraceStep", "VarietySpec", "Verdict", "chi_complete_intersection",
    "chi_projective_space", "coh_trivial_candidates", "combine_products",
    "complex_dimension", "dc_odd_quadric_verdict", "diagonal_verdict",
    "dim4_almost_complex_verdict", "evaluate", "odd_dim_manifold_verdict",
    "point_property_q3_verdict", "real_dimension", "scan_line_bundles", "sphere_verdicts",
    "spin_6fold_necessary", "spin_ci_threefold_verdict", "surface_verdict",
    "topological_verdicts",
]
