"""Exact arithmetic on the space of closed subgroups of R x Z.

Canonical four-family subgroup values, the Chabauty (pointed-Hausdorff)
metric with exact rational brackets, chart maps onto the cone / Hawaiian
earring model space, a constructive circle blow-up with its gluing, and
seeded verification suites behind a CLI.
"""

from .rationals import INF, ExtQ, as_fraction, fmt_q, is_inf
from .subgroups import (
    BallElements,
    ClosedSubgroup,
    InvalidParameter,
    PointRZ,
    Strip,
    TypeI,
    TypeII,
    TypeIII,
    TypeIV,
    ZeroPoint,
    canonicalize_params,
    classify_from_generators,
    distance_point_to_subgroup,
    elements_in_ball,
    eta_cyclic,
    level_set,
    membership,
)
from .metric import (
    DistanceBracket,
    InvalidSequence,
    LimitReport,
    ToleranceInvalid,
    chabauty_distance,
    hausdorff_inclusion_ok,
    subgroup_subset,
    verify_limit,
)
from .earring import (
    BASEPOINT,
    Basepoint,
    BoundaryPoint,
    ConeInterior,
    ConePoint,
    Earring,
    EarringPoint,
    ModelPoint,
    NonCanonicalModelPoint,
    OnCircle,
    Segment,
    chart_psi_I,
    chart_psi_I_inverse,
    chart_psi_II_n,
    chart_psi_II_n_inverse,
    chart_psi_III_n,
    chart_psi_III_n_inverse,
    embed_earring,
    model_to_subgroup,
    subgroup_to_model,
    winding_count,
)
from .denjoy import (
    IRRATIONAL,
    DenjoyCoord,
    Interval,
    IrrationalPoint,
    Unresolved,
    UnresolvedInput,
    UnresolvedSample,
    blowup_interval_start,
    blowup_total_length,
    denjoy_xi,
    glue_boundary,
    slope_from_lambda,
    winding_count_sampled,
)
from .oracle import (
    NonDiscreteSuspected,
    SweepInfeasible,
    oracle_closure_ball,
    oracle_closure_ball_sweep,
    totient,
)
from .equivalence import (
    AxisCoord,
    BoundaryCoord,
    Coordinate,
    check_equivalence,
    subgroup_image,
)
from .literals import ParseError, format_subgroup, parse_subgroup
from .suites import CaseResult, SuiteReport, UnknownSuite, run_suite
from .cli import run_cli

__all__ = [name for name in dir() if not name.startswith("_")]
