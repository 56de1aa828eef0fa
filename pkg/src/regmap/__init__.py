"""Patterns and link indices of mirrors on reflexible regular maps."""

from .flag_tracer import (
    FlagComplex,
    MirrorTrace,
    TraceError,
    build_flag_complex,
    trace_class,
    trace_mirror,
    verify_against_patterns,
)
from .hyperbolic_metrics import TriangleSides, mirror_length, triangle_sides
from .lattice_tori import (
    EisensteinInteger,
    GaussianInteger,
    ToroidalMapId,
    ring_divides,
    toroidal_patterns,
    translation_order,
)
from .patterns import (
    MapType,
    PatternReport,
    classify_type,
    dualize,
    full_pattern_report,
    link_index,
    mirror_automorphism_word,
)
from .presentations import (
    BudgetExceeded,
    CosetTable,
    Presentation,
    PresentationError,
    Word,
    element_order,
    enumerate_cosets,
    free_reduce,
    group_order,
    parse_presentation,
)
from .reports import MapReport, build_map_report, from_json, to_csv, to_json
from .surface_families import (
    MatrixModP,
    MonomialMatrix,
    accola_maclachlan,
    bolza_matrix_check,
    fermat_generators,
    fermat_patterns,
    fixture_map,
    genus_from_order,
    hurwitz_quotient,
    wiman_I,
    wiman_II,
)

__all__ = [
    "accola_maclachlan",
    "bolza_matrix_check",
    "BudgetExceeded",
    "build_flag_complex",
    "build_map_report",
    "classify_type",
    "CosetTable",
    "dualize",
    "EisensteinInteger",
    "element_order",
    "enumerate_cosets",
    "fermat_generators",
    "fermat_patterns",
    "fixture_map",
    "FlagComplex",
    "free_reduce",
    "from_json",
    "full_pattern_report",
    "GaussianInteger",
    "genus_from_order",
    "group_order",
    "hurwitz_quotient",
    "link_index",
    "MapReport",
    "MapType",
    "MatrixModP",
    "mirror_automorphism_word",
    "mirror_length",
    "MirrorTrace",
    "MonomialMatrix",
    "parse_presentation",
    "PatternReport",
    "Presentation",
    "PresentationError",
    "ring_divides",
    "to_csv",
    "to_json",
    "toroidal_patterns",
    "ToroidalMapId",
    "trace_class",
    "trace_mirror",
    "TraceError",
    "translation_order",
    "triangle_sides",
    "TriangleSides",
    "verify_against_patterns",
    "wiman_I",
    "wiman_II",
    "Word",
]
