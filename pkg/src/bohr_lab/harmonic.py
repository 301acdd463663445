"""Sharp bounds for the fully starlike harmonic class and its extremal map.

A member ``f = h + conj(g)`` of the class is never built explicitly.  What
the radius problems need is the coefficient bound

    |a_n| + |b_n| <= 2M / (n(n-1)),   n >= 2,

the growth envelope it implies, and the extremal function

    f_M(z) = z + 2M sum_{n>=2} z^n / (n(n-1)),

which attains all of them (its co-analytic part is zero).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Union

from .series import DomainError, neg_log_one_minus, sum_area, sum_basic

__all__ = [
    "M_MAX",
    "OutOfRangeError",
    "ClassParameter",
    "GrowthEnvelope",
    "validate_parameter",
    "as_parameter",
    "extremal_coefficient",
    "extremal_value",
    "growth_envelope",
    "boundary_distance",
    "majorant_tail",
    "area_ratio",
    "jacobian_sqrt_bound",
]

#: Upper end of the admissible range, 1 / (2 (log 4 - 1)) ~ 1.294349.
M_MAX = 1.0 / (2.0 * (math.log(4.0) - 1.0))

_LOG2 = math.log(2.0)


class OutOfRangeError(ValueError):
    """Class parameter outside the open interval (0, M_MAX)."""


@dataclass(frozen=True)
class ClassParameter:
    """Validated constant ``M`` of the class, ``0 < M < M_MAX``."""

    m: float

    def __post_init__(self):
        m = self.m
        if not (isinstance(m, (int, float)) and 0.0 < m < M_MAX):
            raise OutOfRangeError(
                f"M must lie in the open interval (0, {M_MAX:.7f}) = "
                f"(0, 1/(2(log 4 - 1))), got {m!r}"
            )
        object.__setattr__(self, "m", float(m))

    def __float__(self):
        return self.m


ParamLike = Union[ClassParameter, float]


class GrowthEnvelope(NamedTuple):
    """Bounds ``lower <= |f(z)| <= upper`` on the circle ``|z| = r``."""

    lower: float
    upper: float


def validate_parameter(m_raw: float) -> ClassParameter:
    """Return ``m_raw`` as a :class:`ClassParameter`.

    Raises
    ------
    OutOfRangeError
        If ``m_raw`` is not in ``(0, M_MAX)``.
    """
    return ClassParameter(m_raw)


def as_parameter(p: ParamLike) -> ClassParameter:
    if isinstance(p, ClassParameter):
        return p
    return ClassParameter(p)


def _radius(r: float) -> float:
    if not 0.0 <= r < 1.0:
        raise DomainError(f"radius must lie in [0, 1), got {r!r}")
    return r


def extremal_coefficient(p: ParamLike, n: int) -> float:
    """n-th Taylor coefficient of ``f_M``.

    Equals 1 for ``n = 1`` and ``2M / (n(n-1))`` for ``n >= 2``; the latter
    is also the sharp bound on ``|a_n| + |b_n|`` over the class.
    """
    m = as_parameter(p).m
    if n < 1:
        raise DomainError(f"coefficient index must be >= 1, got {n!r}")
    if n == 1:
        return 1.0
    return 2.0 * m / (n * (n - 1))


def extremal_value(p: ParamLike, r: float) -> float:
    """``f_M(r) = r + 2M (r + (1-r) log(1-r))``."""
    m = as_parameter(p).m
    r = _radius(r)
    return r + 2.0 * m * sum_basic(r)


def _alternating_basic(r: float) -> float:
    # sum_{n>=2} (-1)^(n-1) r^n / (n(n-1)) = r - (1+r) log(1+r)
    return r - (1.0 + r) * math.log1p(r)


def growth_envelope(p: ParamLike, r: float) -> GrowthEnvelope:
    """Sharp lower and upper bounds on ``|f(z)|`` for ``|z| = r``."""
    m = as_parameter(p).m
    r = _radius(r)
    lower = r + 2.0 * m * _alternating_basic(r)
    upper = r + 2.0 * m * sum_basic(r)
    return GrowthEnvelope(lower, upper)


def boundary_distance(p: ParamLike) -> float:
    """Distance from ``f_M(0)`` to the boundary of ``f_M(D)``: ``1 + 2M(1 - 2 log 2)``."""
    m = as_parameter(p).m
    return 1.0 + 2.0 * m * (1.0 - 2.0 * _LOG2)


def majorant_tail(p: ParamLike, r: float) -> float:
    """Sharp bound on ``sum_{n>=2} (|a_n| + |b_n|) r^n`` over the class."""
    m = as_parameter(p).m
    return 2.0 * m * sum_basic(_radius(r))


def area_ratio(p: ParamLike, r: float) -> float:
    """Area of ``f_M(|z| < r)`` divided by pi.

    ``S_r / pi = r^2 + 4M^2 sum_{n>=2} r^(2n) / (n(n-1)^2)``.
    """
    m = as_parameter(p).m
    r = _radius(r)
    return r * r + 4.0 * m * m * sum_area(r)


def jacobian_sqrt_bound(p: ParamLike, r: float) -> float:
    """Bound ``1 - 2M log(1-r)`` on ``sqrt(|J_f|)`` at ``|z| = r``.

    This majorises ``|h'(z)|``; for ``f_M`` it equals ``h_M'(r)`` exactly.
    """
    m = as_parameter(p).m
    return 1.0 + 2.0 * m * neg_log_one_minus(_radius(r))
