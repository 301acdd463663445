"""Sharp Bohr-type radii for fully starlike harmonic mappings.

Solves the four radius equations (Bohr-Rogosinski, area-improved,
Jacobian-improved and refined) for the class with parameter ``M``, checks
sharpness at the extremal map ``f_M``, and regenerates the radius tables and
radius-vs-M curves.
"""
from .functionals import FunctionalKind, evaluate, evaluate_series, slope_positive, theorem_lhs
from .harmonic import (
    M_MAX,
    ClassParameter,
    GrowthEnvelope,
    OutOfRangeError,
    area_ratio,
    boundary_distance,
    extremal_coefficient,
    extremal_value,
    growth_envelope,
    jacobian_sqrt_bound,
    majorant_tail,
    validate_parameter,
)
from .series import (
    DomainError,
    SeriesTruncation,
    SumKind,
    alternating_constant,
    dilog,
    neg_log_one_minus,
    sum_area,
    sum_basic,
    sum_refined,
    tail_bound,
    truncated_sum,
)
from .solver import RadiusResult, SweepRow, solve, sweep
from .verify import inequality_scan, sharpness_check, table_check

__version__ = "0.1.0"
