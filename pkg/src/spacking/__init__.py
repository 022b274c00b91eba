"""Exact computation and verification toolkit for S-packing colorings of
paths and cycles."""

__version__ = "0.1.0"

from .coloring import (
    Coloring,
    GraphSpec,
    ValidationReport,
    canonical_path_coloring,
    coloring_to_text,
    cycle,
    parse_coloring,
    path,
    used_colors,
    validate,
)
from .criticality import (
    CriticalityVerdict,
    DiscrepancyReport,
    characterization_predicate,
    characterized_families,
    cross_validate,
    decide_cycle,
    decide_path,
)
from .formulas import (
    PathFormulaResult,
    critical_path_set,
    path_chromatic_formula,
    vertex_critical_path_set,
)
from .patterns import (
    CertificateReport,
    Coverage,
    LibraryEntry,
    PatternSpec,
    certify_family,
    instantiate,
    parse_pattern,
    pattern_library,
)
from .sequences import (
    PackingSequence,
    SequenceFamily,
    SkClass,
    classify,
    dominates,
    doubling_band_suite,
    enumerate_family,
    halve,
    normalize_odd,
    parse_family,
    parse_sequence,
)
from .solver import (
    ORACLE_SIZE_BOUND,
    SolveResult,
    brute_force_chromatic,
    chromatic,
    chromatic_value,
    feasible,
)

__all__ = [
    "Coloring",
    "GraphSpec",
    "ValidationReport",
    "canonical_path_coloring",
    "coloring_to_text",
    "cycle",
    "parse_coloring",
    "path",
    "used_colors",
    "validate",
    "CriticalityVerdict",
    "DiscrepancyReport",
    "characterization_predicate",
    "characterized_families",
    "cross_validate",
    "decide_cycle",
    "decide_path",
    "PathFormulaResult",
    "critical_path_set",
    "path_chromatic_formula",
    "vertex_critical_path_set",
    "CertificateReport",
    "Coverage",
    "LibraryEntry",
    "PatternSpec",
    "certify_family",
    "instantiate",
    "parse_pattern",
    "pattern_library",
    "PackingSequence",
    "SequenceFamily",
    "SkClass",
    "classify",
    "dominates",
    "doubling_band_suite",
    "enumerate_family",
    "halve",
    "normalize_odd",
    "parse_family",
    "parse_sequence",
    "ORACLE_SIZE_BOUND",
    "SolveResult",
    "brute_force_chromatic",
    "chromatic",
    "chromatic_value",
    "feasible",
    "__version__",
]
