"""Optimal k-fold colorings of webs and antiwebs."""

from .bounds import BoundsReport, bounds_report, strictness_check
from .coloring import KFoldColoring, chi_k, color_antiweb, color_web, optimal_coloring, verify_coloring
from .criticality import (
    CriticalityReport,
    chi_k_antiweb_minus_v,
    chi_k_minus_v,
    chi_k_web_minus_v,
    criticality_gap_bounds,
    is_chik_critical,
    is_chistar_critical,
)
from .families import (
    Family,
    FamilyParams,
    GenericGraph,
    InstanceTooLargeError,
    InvalidParamsError,
    antiweb,
    materialize,
    web,
)
from .oracle import exact_chi_k, exact_chi_k_via_lex

__version__ = "0.1.0"
