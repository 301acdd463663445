"""Closed-form power series sums and their truncated-series oracles.

Every closed form here is a sum of the shape ``sum_n c_n * t**n`` with
nonnegative, nonincreasing coefficients.  Each one comes with a partial sum
and a geometric majorant for the discarded tail, so the closed forms can be
checked against plain summation.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

__all__ = [
    "DomainError",
    "SumKind",
    "SeriesTruncation",
    "PI2_OVER_6",
    "dilog",
    "neg_log_one_minus",
    "sum_basic",
    "sum_area",
    "sum_refined",
    "alternating_constant",
    "alternating_partial_sum",
    "truncated_sum",
    "tail_bound",
    "closed_form",
]

PI2_OVER_6 = math.pi ** 2 / 6.0

# series terms below this are dropped in dilog
_DILOG_CUTOFF = 1e-17


class DomainError(ValueError):
    """Argument outside the domain on which a series converges."""


class SumKind(enum.Enum):
    """The series that appear in the radius equations.

    ======================  ==================================
    ``BASIC``               sum_{n>=2} r^n / (n (n-1))
    ``AREA``                sum_{n>=2} r^(2n) / (n (n-1)^2)
    ``REFINED``             sum_{n>=2} r^(2n) / (n^2 (n-1)^2)
    ``DILOG``               sum_{n>=1} x^n / n^2
    ``NEG_LOG_ONE_MINUS``   sum_{n>=1} r^n / n
    ======================  ==================================
    """

    BASIC = "basic"
    AREA = "area"
    REFINED = "refined"
    DILOG = "dilog"
    NEG_LOG_ONE_MINUS = "neg_log_one_minus"


# (first index, power multiplier, coefficient)
_TERMS = {
    SumKind.BASIC: (2, 1, lambda n: 1.0 / (n * (n - 1))),
    SumKind.AREA: (2, 2, lambda n: 1.0 / (n * (n - 1) ** 2)),
    SumKind.REFINED: (2, 2, lambda n: 1.0 / (n * n * (n - 1) ** 2)),
    SumKind.DILOG: (1, 1, lambda n: 1.0 / (n * n)),
    SumKind.NEG_LOG_ONE_MINUS: (1, 1, lambda n: 1.0 / n),
}

# kinds whose partial sums stay finite at the argument 1
_CLOSED_AT_ONE = {SumKind.BASIC, SumKind.DILOG, SumKind.AREA, SumKind.REFINED}


def _check_unit(x: float, name: str, closed: bool) -> None:
    if closed:
        ok = 0.0 <= x <= 1.0
        interval = "[0, 1]"
    else:
        ok = 0.0 <= x < 1.0
        interval = "[0, 1)"
    if not ok:
        raise DomainError(f"{name} requires an argument in {interval}, got {x!r}")


@dataclass(frozen=True)
class SeriesTruncation:
    """Number of retained terms plus a certified bound on what was dropped.

    ``order`` counts terms from the first index of the series, so for
    ``BASIC`` an order of 3 keeps n = 2, 3, 4.
    """

    order: int
    tail_bound: float = 0.0

    def __post_init__(self):
        if int(self.order) != self.order or self.order < 2:
            raise ValueError(f"truncation order must be an integer >= 2, got {self.order!r}")
        if not self.tail_bound >= 0.0:
            raise ValueError(f"tail bound must be nonnegative, got {self.tail_bound!r}")

    @classmethod
    def at(cls, kind: SumKind, r: float, order: int) -> "SeriesTruncation":
        """Truncation of ``kind`` at ``r`` carrying its tail bound."""
        return cls(order, tail_bound(kind, r, order))


def _dilog_series(x: float) -> float:
    total = 0.0
    power = x
    n = 1
    while True:
        term = power / (n * n)
        total += term
        if term < _DILOG_CUTOFF:
            return total
        n += 1
        power *= x


def dilog(x: float) -> float:
    """Dilogarithm ``Li2(x)`` for real ``0 <= x <= 1``.

    Uses the power series directly up to ``x = 1/2`` and the reflection
    ``Li2(x) = pi^2/6 - log(x) log(1-x) - Li2(1-x)`` above it, so at most
    about 55 terms are ever summed.
    """
    _check_unit(x, "dilog", closed=True)
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return PI2_OVER_6
    if x <= 0.5:
        return _dilog_series(x)
    y = 1.0 - x  # exact for x in (1/2, 1)
    return PI2_OVER_6 - math.log(x) * math.log(y) - _dilog_series(y)


def neg_log_one_minus(r: float) -> float:
    """``-log(1 - r) = sum_{n>=1} r^n / n`` for ``0 <= r < 1``."""
    _check_unit(r, "neg_log_one_minus", closed=False)
    return -math.log1p(-r)


def _xlog_one_minus(r: float) -> float:
    # (1 - r) log(1 - r), with its limit 0 at r = 1
    if r == 1.0:
        return 0.0
    return (1.0 - r) * math.log1p(-r)


def _log_one_minus_square(r: float) -> float:
    # log(1 - r^2) without losing digits near either end of [0, 1)
    q = r * r
    if q < 0.5:
        return math.log1p(-q)
    return math.log((1.0 - r) * (1.0 + r))


def sum_basic(r: float) -> float:
    """``sum_{n>=2} r^n / (n(n-1)) = r + (1-r) log(1-r)`` on ``[0, 1]``.

    The value at ``r = 1`` is the telescoping limit 1.
    """
    _check_unit(r, "sum_basic", closed=True)
    return r + _xlog_one_minus(r)


def sum_area(r: float) -> float:
    """``sum_{n>=2} r^(2n) / (n(n-1)^2)`` on ``[0, 1)``.

    Closed form ``r^2 Li2(r^2) - r^2 - (1-r^2) log(1-r^2)``.
    """
    _check_unit(r, "sum_area", closed=False)
    q = r * r
    one_minus_q = (1.0 - r) * (1.0 + r)
    return q * dilog(q) - q - one_minus_q * _log_one_minus_square(r)


def sum_refined(r: float) -> float:
    """``sum_{n>=2} r^(2n) / (n^2 (n-1)^2)`` on ``[0, 1)``.

    Partial fractions give ``(1+r^2) Li2(r^2) - 3r^2 - 2(1-r^2) log(1-r^2)``.
    """
    _check_unit(r, "sum_refined", closed=False)
    q = r * r
    one_minus_q = (1.0 - r) * (1.0 + r)
    return (1.0 + q) * dilog(q) - 3.0 * q - 2.0 * one_minus_q * _log_one_minus_square(r)


def alternating_constant() -> float:
    """``sum_{n>=2} (-1)^(n-1) / (n(n-1)) = 1 - 2 log 2``."""
    return 1.0 - 2.0 * math.log(2.0)


def alternating_partial_sum(n_terms: int) -> tuple[float, float]:
    """Partial sum of the alternating constant's series and its tail bound.

    Returns ``(partial, bound)`` where ``bound`` is the modulus of the first
    omitted term, which bounds the error of an alternating series with
    decreasing terms.
    """
    if n_terms < 1:
        raise ValueError("n_terms must be positive")
    total = 0.0
    # summed smallest-first to limit rounding over long runs
    for n in range(n_terms + 1, 1, -1):
        term = 1.0 / (n * (n - 1))
        total += term if n % 2 == 1 else -term
    last = n_terms + 2
    return total, 1.0 / (last * (last - 1))


def closed_form(kind: SumKind, r: float) -> float:
    """Closed-form value of the series ``kind`` at ``r``."""
    return _CLOSED[kind](r)


_CLOSED = {
    SumKind.BASIC: sum_basic,
    SumKind.AREA: sum_area,
    SumKind.REFINED: sum_refined,
    SumKind.DILOG: dilog,
    SumKind.NEG_LOG_ONE_MINUS: neg_log_one_minus,
}


def _order(trunc) -> int:
    if isinstance(trunc, SeriesTruncation):
        return trunc.order
    return SeriesTruncation(trunc).order


def truncated_sum(kind: SumKind, r: float, trunc) -> float:
    """Sum of the first ``trunc.order`` terms of the series ``kind`` at ``r``.

    ``trunc`` may be a :class:`SeriesTruncation` or a plain integer order.
    Terms are added smallest-first.
    """
    order = _order(trunc)
    _check_unit(r, f"truncated_sum({kind.value})", closed=kind in _CLOSED_AT_ONE)
    first, mult, coeff = _TERMS[kind]
    total = 0.0
    for n in range(first + order - 1, first - 1, -1):
        total += coeff(n) * r ** (mult * n)
    return total


def tail_bound(kind: SumKind, r: float, order: int) -> float:
    """Geometric majorant of the tail left out by :func:`truncated_sum`.

    The coefficients are nonincreasing, so consecutive terms shrink at least
    by ``rho = r`` (or ``r^2`` for the squared kinds) and the tail is at most
    ``next_term / (1 - rho)``.
    """
    order = _order(order)
    _check_unit(r, f"tail_bound({kind.value})", closed=False)
    first, mult, coeff = _TERMS[kind]
    n_next = first + order
    rho = r ** mult
    return coeff(n_next) * r ** (mult * n_next) / (1.0 - rho)
