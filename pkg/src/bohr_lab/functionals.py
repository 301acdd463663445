"""The four Bohr-type functionals whose zeros in (0, 1) are the sharp radii.

With ``D(M) = 1 + 2M(1 - 2 log 2)``, ``B(r) = r + (1-r) log(1-r)``,
``A(r)`` the area sum and ``R(r)`` the refined sum from :mod:`bohr_lab.series`:

* ``H1(r) = 2r + 4M B(r) - D``                       (Bohr-Rogosinski)
* ``H2(r) = r^2 + r + 4M B(r) + 4M^2 A(r) - D``      (area-improved)
* ``H3(r) = 2r + 2M (r + (1-2r) log(1-r)) - D``      (Jacobian-improved)
* ``H4(r) = (r + 2M B)^2 + 2M B + 4M^2 r/(1-r) R - D`` (refined)

Each functional is ``theorem_lhs - D``, where ``theorem_lhs`` is the left
side of the corresponding inequality evaluated at the extremal map.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import harmonic
from .harmonic import ParamLike, as_parameter, boundary_distance
from .series import (
    DomainError,
    SumKind,
    neg_log_one_minus,
    sum_area,
    sum_basic,
    sum_refined,
    tail_bound,
    truncated_sum,
)

__all__ = [
    "FunctionalKind",
    "SlopeWitness",
    "evaluate",
    "evaluate_series",
    "series_error_bound",
    "theorem_lhs",
    "slope_positive",
    "h3_displayed",
    "h4_displayed",
    "FD_STEP",
]

FD_STEP = 1e-6


class FunctionalKind(enum.Enum):
    H1 = "h1"
    H2 = "h2"
    H3 = "h3"
    H4 = "h4"

    @property
    def label(self) -> str:
        return _LABELS[self]

    @classmethod
    def parse(cls, tag) -> "FunctionalKind":
        if isinstance(tag, cls):
            return tag
        try:
            return cls(str(tag).lower())
        except ValueError:
            raise ValueError(f"unknown functional {tag!r}; expected one of h1, h2, h3, h4") from None


_LABELS = {
    FunctionalKind.H1: "Bohr-Rogosinski",
    FunctionalKind.H2: "area-improved",
    FunctionalKind.H3: "Jacobian-improved",
    FunctionalKind.H4: "refined",
}


def _check_r(r: float) -> float:
    if not 0.0 <= r < 1.0:
        raise DomainError(f"radius must lie in [0, 1), got {r!r}")
    return r


def _combine(kind, m, r, basic, area, refined, neglog):
    # shared algebra for the closed-form and truncated evaluations
    d = 1.0 + 2.0 * m * (1.0 - 2.0 * math.log(2.0))
    if kind is FunctionalKind.H1:
        return 2.0 * r + 4.0 * m * basic - d
    if kind is FunctionalKind.H2:
        return r * r + r + 4.0 * m * basic + 4.0 * m * m * area - d
    if kind is FunctionalKind.H3:
        return r + 2.0 * m * basic + (1.0 + 2.0 * m * neglog) * r - d
    if kind is FunctionalKind.H4:
        grow = r + 2.0 * m * basic
        return grow * grow + 2.0 * m * basic + 4.0 * m * m * r / (1.0 - r) * refined - d
    raise TypeError(f"not a FunctionalKind: {kind!r}")


def evaluate(kind: FunctionalKind, p: ParamLike, r: float) -> float:
    """Closed-form value of functional ``kind`` at radius ``r``."""
    kind = FunctionalKind.parse(kind)
    m = as_parameter(p).m
    r = _check_r(r)
    if kind is FunctionalKind.H3:
        # single canonical expression; the sum of parts form is h3_displayed
        d = boundary_distance(m)
        return 2.0 * r + 2.0 * m * (r + (1.0 - 2.0 * r) * math.log1p(-r)) - d
    area = sum_area(r) if kind is FunctionalKind.H2 else 0.0
    refined = sum_refined(r) if kind is FunctionalKind.H4 else 0.0
    return _combine(kind, m, r, sum_basic(r), area, refined, 0.0)


def evaluate_series(kind: FunctionalKind, p: ParamLike, r: float, order: int) -> float:
    """Functional with each infinite sum cut after ``order`` terms.

    The constant ``D(M)`` keeps its closed value.
    """
    kind = FunctionalKind.parse(kind)
    m = as_parameter(p).m
    r = _check_r(r)
    basic = truncated_sum(SumKind.BASIC, r, order)
    area = truncated_sum(SumKind.AREA, r, order) if kind is FunctionalKind.H2 else 0.0
    refined = truncated_sum(SumKind.REFINED, r, order) if kind is FunctionalKind.H4 else 0.0
    neglog = truncated_sum(SumKind.NEG_LOG_ONE_MINUS, r, order) if kind is FunctionalKind.H3 else 0.0
    return _combine(kind, m, r, basic, area, refined, neglog)


def series_error_bound(kind: FunctionalKind, p: ParamLike, r: float, order: int) -> float:
    """Bound on ``|evaluate - evaluate_series|`` from the individual tail bounds.

    All truncated sums undershoot (nonnegative terms), so the squared growth
    term of H4 moves by at most ``e (2 B_N + e)`` with ``e = 2M tail``.
    """
    kind = FunctionalKind.parse(kind)
    m = as_parameter(p).m
    r = _check_r(r)
    tb = tail_bound(SumKind.BASIC, r, order)
    if kind is FunctionalKind.H1:
        return 4.0 * m * tb
    if kind is FunctionalKind.H2:
        return 4.0 * m * tb + 4.0 * m * m * tail_bound(SumKind.AREA, r, order)
    if kind is FunctionalKind.H3:
        return 2.0 * m * tb + 2.0 * m * r * tail_bound(SumKind.NEG_LOG_ONE_MINUS, r, order)
    e = 2.0 * m * tb
    grow_n = r + 2.0 * m * truncated_sum(SumKind.BASIC, r, order)
    refined_tb = tail_bound(SumKind.REFINED, r, order)
    return e * (2.0 * grow_n + e) + e + 4.0 * m * m * r / (1.0 - r) * refined_tb


def theorem_lhs(kind: FunctionalKind, p: ParamLike, r: float) -> float:
    """Left side of the radius inequality evaluated at ``f_M`` and ``|z| = r``.

    Built from the extremal-map quantities in :mod:`bohr_lab.harmonic`, not
    from the functional closed forms, so ``theorem_lhs - D == evaluate`` is a
    genuine consistency check.
    """
    kind = FunctionalKind.parse(kind)
    p = as_parameter(p)
    r = _check_r(r)
    value = harmonic.extremal_value(p, r)
    tail = harmonic.majorant_tail(p, r)
    if kind is FunctionalKind.H1:
        return r + value + tail
    if kind is FunctionalKind.H2:
        return value + tail + harmonic.area_ratio(p, r)
    if kind is FunctionalKind.H3:
        # |z| itself comes from the n = 1 coefficient of f_M
        return r + tail + harmonic.jacobian_sqrt_bound(p, r) * r
    # (|a_n| + |b_n|)^2 = (2M / (n(n-1)))^2 summed against r^(2n)
    squares = 4.0 * p.m * p.m * sum_refined(r)
    return value * value + tail + r / (1.0 - r) * squares


@dataclass(frozen=True)
class SlopeWitness:
    """Finite-difference slope of a functional at ``r``."""

    positive: bool
    slope: float
    r: float

    def __bool__(self):
        return self.positive


def slope_positive(kind: FunctionalKind, p: ParamLike, r: float, step: float = FD_STEP) -> SlopeWitness:
    """Central-difference witness that ``kind`` is increasing at ``r``.

    Falls back to a one-sided difference within ``step`` of either end of
    ``(0, 1)``.
    """
    if not 0.0 < r < 1.0:
        raise DomainError(f"slope check needs r in (0, 1), got {r!r}")
    lo = max(r - step, 0.0)
    hi = r + step if r + step < 1.0 else r
    slope = (evaluate(kind, p, hi) - evaluate(kind, p, lo)) / (hi - lo)
    return SlopeWitness(slope > 0.0, slope, r)


def h3_displayed(p: ParamLike, r: float) -> float:
    """H3 written as ``2r + 2M B(r) - 2M r log(1-r) - D``."""
    m = as_parameter(p).m
    r = _check_r(r)
    return 2.0 * r + 2.0 * m * sum_basic(r) + 2.0 * m * r * neg_log_one_minus(r) - boundary_distance(m)


def h4_displayed(p: ParamLike, r: float) -> float:
    """Variant of H4 with ``-2M r log(1-r)`` in place of the refined term.

    The tabulated refined radii are zeros of
    :func:`evaluate` with ``H4``, not of this expression; it is kept only to
    pin that discrepancy down.
    """
    m = as_parameter(p).m
    r = _check_r(r)
    b = sum_basic(r)
    grow = r + 2.0 * m * b
    return grow * grow + 2.0 * m * b + 2.0 * m * r * neg_log_one_minus(r) - boundary_distance(m)
