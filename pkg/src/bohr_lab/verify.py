"""Sharpness and table checks at the extremal function.

Checks return report objects with a ``passed`` flag and the numbers behind
it; a mathematical failure never raises, only evaluation errors do.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .functionals import FunctionalKind, theorem_lhs
from .harmonic import ParamLike, as_parameter, boundary_distance
from .reference import TABLE_TOLERANCE
from .solver import solve

__all__ = [
    "SCAN_SLACK",
    "SharpnessReport",
    "ScanReport",
    "TableRow",
    "TableReport",
    "sharpness_check",
    "inequality_scan",
    "table_check",
    "area_quadrature",
]

SCAN_SLACK = 1e-12


@dataclass(frozen=True)
class SharpnessReport:
    kind: FunctionalKind
    m: float
    root: float
    delta: float
    distance: float
    lhs_below: float
    lhs_above: float

    @property
    def holds_below(self) -> bool:
        return self.lhs_below < self.distance

    @property
    def fails_above(self) -> bool:
        return self.distance < self.lhs_above

    @property
    def passed(self) -> bool:
        return self.holds_below and self.fails_above


@dataclass(frozen=True)
class ScanReport:
    kind: FunctionalKind
    m: float
    root: float
    samples: int
    max_excess: float
    argmax: float

    @property
    def passed(self) -> bool:
        return self.max_excess <= SCAN_SLACK


@dataclass(frozen=True)
class TableRow:
    m: float
    expected: float
    computed: float

    @property
    def deviation(self) -> float:
        return abs(self.computed - self.expected)


@dataclass(frozen=True)
class TableReport:
    kind: FunctionalKind
    tolerance: float
    rows: list = field(default_factory=list)

    @property
    def max_deviation(self) -> float:
        return max((row.deviation for row in self.rows), default=0.0)

    @property
    def failures(self) -> list:
        return [row for row in self.rows if row.deviation > self.tolerance]

    @property
    def passed(self) -> bool:
        return not self.failures


def sharpness_check(kind: FunctionalKind, p: ParamLike, delta: float = 1e-4,
                    tol: float = 1e-12) -> SharpnessReport:
    """Compare the inequality's left side just inside and outside the radius.

    The radius is sharp when ``lhs(root - delta) < d < lhs(root + delta)``
    with ``d`` the boundary distance of ``f_M``.
    """
    kind = FunctionalKind.parse(kind)
    p = as_parameter(p)
    root = solve(kind, p, tol).root
    if not 0.0 < delta < min(root, 1.0 - root):
        raise ValueError(f"delta must lie in (0, {min(root, 1.0 - root)!r}), got {delta!r}")
    return SharpnessReport(
        kind=kind,
        m=p.m,
        root=root,
        delta=delta,
        distance=boundary_distance(p),
        lhs_below=theorem_lhs(kind, p, root - delta),
        lhs_above=theorem_lhs(kind, p, root + delta),
    )


def inequality_scan(kind: FunctionalKind, p: ParamLike, samples: int = 1000,
                    tol: float = 1e-12) -> ScanReport:
    """Largest excess ``lhs(r) - d`` over ``samples`` equispaced r in ``(0, root]``."""
    kind = FunctionalKind.parse(kind)
    p = as_parameter(p)
    if samples < 10:
        raise ValueError(f"samples must be >= 10, got {samples!r}")
    root = solve(kind, p, tol).root
    d = boundary_distance(p)
    radii = root * np.arange(1, samples + 1) / samples
    radii[-1] = root
    excess = np.array([theorem_lhs(kind, p, float(r)) - d for r in radii])
    i = int(np.argmax(excess))
    return ScanReport(kind, p.m, root, samples, float(excess[i]), float(radii[i]))


def table_check(kind: FunctionalKind, expected, tolerance: float = TABLE_TOLERANCE,
                tol: float = 1e-12) -> TableReport:
    """Solve every ``(m, root)`` pair in ``expected`` and record deviations."""
    kind = FunctionalKind.parse(kind)
    rows = [TableRow(m, want, solve(kind, m, tol).root) for m, want in expected]
    return TableReport(kind, tolerance, rows)


def area_quadrature(p: ParamLike, r: float, n: int = 400) -> float:
    """Area of ``f_M(|z| < r)`` over pi by midpoint quadrature of the Jacobian.

    ``f_M`` has no co-analytic part, so ``J = |h'|^2`` with
    ``h'(z) = 1 - 2M log(1 - z)``; the integral runs over an ``n x n`` polar
    grid.
    """
    m = as_parameter(p).m
    if not 0.0 <= r < 1.0:
        raise ValueError(f"radius must lie in [0, 1), got {r!r}")
    drho = r / n
    dtheta = 2.0 * np.pi / n
    rho = (np.arange(n) + 0.5) * drho
    theta = (np.arange(n) + 0.5) * dtheta
    z = rho[:, None] * np.exp(1j * theta[None, :])
    jac = np.abs(1.0 - 2.0 * m * np.log(1.0 - z)) ** 2
    return float(np.sum(jac * rho[:, None]) * drho * dtheta / np.pi)
