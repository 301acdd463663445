"""Bracketing root finder for the radius functionals and sweeps over M."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .functionals import FunctionalKind, evaluate, slope_positive
from .harmonic import M_MAX, ClassParameter, ParamLike, as_parameter

__all__ = [
    "SolverError",
    "NoSignChangeError",
    "ConvergenceError",
    "RadiusResult",
    "SweepRow",
    "find_root",
    "solve",
    "sweep",
    "sweep_results",
    "BRACKET_LO",
    "BRACKET_HI",
    "MAX_ITER",
]

BRACKET_LO = 1e-15
BRACKET_HI = 1.0 - 1e-9
MAX_ITER = 200
BISECT_WIDTH = 1e-3
WITNESS_POINTS = 32


class SolverError(RuntimeError):
    pass


class NoSignChangeError(SolverError):
    pass


class ConvergenceError(SolverError):
    pass


@dataclass(frozen=True)
class RadiusResult:
    kind: FunctionalKind
    m: ClassParameter
    root: float
    bracket_lo: float
    bracket_hi: float
    residual: float
    iterations: int
    monotone_witness: bool

    @property
    def bracket_width(self) -> float:
        return self.bracket_hi - self.bracket_lo


@dataclass(frozen=True)
class SweepRow:
    m: float
    root: float
    residual: float


def find_root(f: Callable[[float], float], lo: float, hi: float, tol: float,
              max_iter: int = MAX_ITER, bisect_width: float = BISECT_WIDTH):
    """Locate the sign change of an increasing-through-zero ``f`` on ``[lo, hi]``.

    Bisection shrinks the bracket to ``bisect_width``; an Illinois-style
    false-position iteration then takes it to ``tol``, falling back to
    bisection whenever an interpolated point leaves the bracket or three
    steps in a row fail to halve it.

    Requires ``f(lo) < 0 < f(hi)``.

    Returns
    -------
    root, lo, hi, iterations
        ``lo < root < hi`` with ``f(lo) < 0 < f(hi)`` and ``hi - lo <= tol``
        (or the two ends adjacent floats).
    """
    flo = f(lo)
    fhi = f(hi)
    if not (flo < 0.0 < fhi):
        raise NoSignChangeError(f"no sign change on [{lo!r}, {hi!r}]: f(lo)={flo!r}, f(hi)={fhi!r}")
    it = 0

    def step_limit():
        if it >= max_iter:
            raise ConvergenceError(
                f"no convergence after {max_iter} iterations; bracket [{lo!r}, {hi!r}]")

    while hi - lo > max(tol, bisect_width):
        step_limit()
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        it += 1
        if fm < 0.0:
            lo, flo = mid, fm
        elif fm > 0.0:
            hi, fhi = mid, fm
        else:
            return _settle(f, mid, lo, hi, tol, it)

    # weights used for interpolation only; true signs are kept by lo/hi
    wlo, whi = flo, fhi
    side = 0
    stale = 0
    width_ref = hi - lo
    while hi - lo > tol:
        step_limit()
        if stale >= 3:
            x = 0.5 * (lo + hi)
            stale = 0
            width_ref = hi - lo
        else:
            x = (lo * whi - hi * wlo) / (whi - wlo)
            if not lo < x < hi:
                x = 0.5 * (lo + hi)
        if not lo < x < hi:
            break  # lo and hi are adjacent floats
        fx = f(x)
        it += 1
        if fx < 0.0:
            lo, wlo = x, fx
            if side == -1:
                whi *= 0.5
            side = -1
        elif fx > 0.0:
            hi, whi = x, fx
            if side == 1:
                wlo *= 0.5
            side = 1
        else:
            return _settle(f, x, lo, hi, tol, it)
        if hi - lo <= 0.5 * width_ref:
            width_ref = hi - lo
            stale = 0
        else:
            stale += 1

    flo, fhi = f(lo), f(hi)
    root = (lo * fhi - hi * flo) / (fhi - flo)
    if not lo < root < hi:
        root = 0.5 * (lo + hi)
    if not lo < root < hi:
        # adjacent floats: keep the better end and step the bracket out one ulp
        if -flo <= fhi:
            root, below = lo, math.nextafter(lo, -math.inf)
            if f(below) < 0.0:
                lo = below
        else:
            root, above = hi, math.nextafter(hi, math.inf)
            if f(above) > 0.0:
                hi = above
    return root, lo, hi, it


def _settle(f, x, lo, hi, tol, it):
    # f(x) == 0 exactly: tighten the bracket around x where signs allow
    for d in (0.25 * tol, 0.5 * tol):
        a, b = max(lo, x - d), min(hi, x + d)
        if a < x < b and f(a) < 0.0 < f(b):
            return x, a, b, it
    return x, lo, hi, it


def _monotone_witness(kind, p) -> bool:
    pts = np.arange(1, WITNESS_POINTS + 1) / (WITNESS_POINTS + 1)
    return all(slope_positive(kind, p, float(r)).positive for r in pts)


def solve(kind: FunctionalKind, p: ParamLike, tol: float = 1e-12) -> RadiusResult:
    """Sharp radius for ``kind`` at parameter ``p``.

    Raises
    ------
    NoSignChangeError
        If the functional is not negative at 0 and positive near 1.
    ConvergenceError
        If the iteration cap is hit.
    """
    kind = FunctionalKind.parse(kind)
    p = as_parameter(p)
    if not 0.0 < tol <= 1e-6:
        raise ValueError(f"tolerance must lie in (0, 1e-6], got {tol!r}")

    def f(r):
        return evaluate(kind, p, r)

    root, lo, hi, it = find_root(f, BRACKET_LO, BRACKET_HI, tol)
    return RadiusResult(
        kind=kind,
        m=p,
        root=root,
        bracket_lo=lo,
        bracket_hi=hi,
        residual=f(root),
        iterations=it,
        monotone_witness=_monotone_witness(kind, p),
    )


def _m_grid(m_lo, m_hi, steps):
    if int(steps) != steps or steps < 2:
        raise ValueError(f"a sweep needs at least 2 steps, got {steps!r}")
    if not 0.0 < m_lo < m_hi < M_MAX:
        raise ValueError(f"sweep range must satisfy 0 < m_lo < m_hi < {M_MAX:.7f}, got [{m_lo!r}, {m_hi!r}]")
    grid = np.linspace(m_lo, m_hi, int(steps))
    grid[-1] = m_hi
    return [float(m) for m in grid]


def sweep_results(kind: FunctionalKind, m_lo: float, m_hi: float, steps: int,
                  tol: float = 1e-12) -> list[RadiusResult]:
    """Solve ``kind`` at ``steps`` equally spaced M values, endpoints included."""
    kind = FunctionalKind.parse(kind)
    out = []
    for m in _m_grid(m_lo, m_hi, steps):
        try:
            out.append(solve(kind, m, tol))
        except SolverError as exc:
            raise type(exc)(f"M={m!r}: {exc}") from exc
    return out


def sweep(kind: FunctionalKind, m_lo: float, m_hi: float, steps: int,
          tol: float = 1e-12) -> list[SweepRow]:
    """Like :func:`sweep_results` but reduced to ``(m, root, residual)`` rows."""
    return [SweepRow(res.m.m, res.root, res.residual)
            for res in sweep_results(kind, m_lo, m_hi, steps, tol)]
