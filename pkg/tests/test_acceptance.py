"""Acceptance suite: one test and one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v``; the lines are collected in
an "acceptance criteria" section at the end of the terminal report.
"""
import math
import time

import numpy as np

from bohr_lab.functionals import FunctionalKind, evaluate, h4_displayed, slope_positive, theorem_lhs
from bohr_lab.harmonic import M_MAX, area_ratio, boundary_distance
from bohr_lab.reference import M_GRID, REFERENCE_RADII
from bohr_lab.series import (
    PI2_OVER_6,
    SumKind,
    alternating_constant,
    alternating_partial_sum,
    closed_form,
    dilog,
    tail_bound,
)
from bohr_lab.solver import solve, sweep
from bohr_lab.verify import area_quadrature, sharpness_check, table_check

H1, H2, H3, H4 = FunctionalKind


def test_criterion_1_table_reproduction(criterion):
    start = time.perf_counter()
    reports = [table_check(kind, REFERENCE_RADII[kind], 1e-4) for kind in FunctionalKind]
    elapsed = time.perf_counter() - start
    rows = [row for rep in reports for row in rep.rows]
    bad = [(rep.kind.label, row.m, row.expected, round(row.computed, 7))
           for rep in reports for row in rep.failures]
    ok = len(rows) == 44 and not bad and elapsed < 1.0
    criterion(1, "44 tabulated radii within 1e-4 in under 1 s", ok,
              f"{len(rows) - len(bad)}/{len(rows)} rows, {elapsed:.3f} s, off: {bad}")


def test_criterion_2_plug_back(criterion):
    worst_h = worst_lhs = 0.0
    for kind in FunctionalKind:
        for m in M_GRID:
            root = solve(kind, m).root
            worst_h = max(worst_h, abs(evaluate(kind, m, root)))
            worst_lhs = max(worst_lhs, abs(theorem_lhs(kind, m, root) - boundary_distance(m)))
    ok = worst_h <= 1e-10 and worst_lhs <= 1e-9
    criterion(2, "|H(root)| <= 1e-10 and lhs(root) = D within 1e-9", ok,
              f"max |H| {worst_h:.2e}, max |lhs - D| {worst_lhs:.2e}")


def test_criterion_3_sharpness(criterion):
    failed = [(kind.label, m) for kind in FunctionalKind for m in M_GRID
              if not sharpness_check(kind, m, 1e-4).passed]
    criterion(3, "inequality holds at root - 1e-4 and fails at root + 1e-4", not failed,
              f"{44 - len(failed)}/44 grid points, failing: {failed}")


# brute-force series written out independently of the package
_BRUTE = {
    SumKind.BASIC: lambda r, n: math.fsum(r ** k / (k * (k - 1)) for k in range(2, n + 2)),
    SumKind.AREA: lambda r, n: math.fsum(r ** (2 * k) / (k * (k - 1) ** 2) for k in range(2, n + 2)),
    SumKind.REFINED: lambda r, n: math.fsum(r ** (2 * k) / (k * k * (k - 1) ** 2) for k in range(2, n + 2)),
    SumKind.DILOG: lambda r, n: math.fsum(r ** k / (k * k) for k in range(1, n + 1)),
    SumKind.NEG_LOG_ONE_MINUS: lambda r, n: math.fsum(r ** k / k for k in range(1, n + 1)),
}


def test_criterion_4_series_oracle(criterion):
    grid = np.linspace(0.0, 0.999, 1000)
    worst = {}
    for kind, brute in _BRUTE.items():
        excess = -math.inf
        for order in (10, 50, 200):
            for r in grid:
                r = float(r)
                gap = abs(closed_form(kind, r) - brute(r, order))
                excess = max(excess, gap - tail_bound(kind, r, order) - 1e-12)
        worst[kind.value] = excess
    alt_excess = -math.inf
    for order in (10, 50, 200, 10_000):
        partial, bound = alternating_partial_sum(order)
        alt_excess = max(alt_excess, abs(alternating_constant() - partial) - bound - 1e-12)
    worst["alternating"] = alt_excess
    ok = all(v <= 0.0 for v in worst.values())
    criterion(4, "closed forms within tail bound + 1e-12 of truncated series", ok,
              "max excess " + ", ".join(f"{k} {v:.1e}" for k, v in worst.items()))


def test_criterion_5_dilog(criterion):
    at_one = abs(dilog(1.0) - math.pi ** 2 / 6)
    xs = np.linspace(0.0, 1.0, 1002)[1:-1]
    refl = max(abs(dilog(x) + dilog(1 - x) - (PI2_OVER_6 - math.log(x) * math.log1p(-x)))
               for x in map(float, xs))
    ok = at_one <= 1e-12 and refl <= 1e-11
    criterion(5, "Li2(1) = pi^2/6 and reflection identity", ok,
              f"|Li2(1) - pi^2/6| {at_one:.1e}, max reflection error {refl:.1e}")


def test_criterion_6_structure(criterion):
    problems = []
    ms = np.concatenate([[1e-8, 1e-4], np.linspace(0.01, 1.29, 60), [M_MAX * (1 - 1e-12)]])
    for m in map(float, ms):
        d = boundary_distance(m)
        for kind in FunctionalKind:
            h0 = evaluate(kind, m, 0.0)
            if not (h0 < 0 and abs(h0 + d) <= 1e-15):
                problems.append(f"H({kind.label}, M={m})(0)={h0!r}")
    rs = np.linspace(0.0, 1.0, 202)[1:-1]
    for m in M_GRID:
        for kind in FunctionalKind:
            if not all(slope_positive(kind, m, float(r)) for r in rs):
                problems.append(f"{kind.label} not increasing at M={m}")
    for kind in FunctionalKind:
        roots = np.array([row.root for row in sweep(kind, 0.02, 1.29, 60)])
        if not np.all(np.diff(roots) < 0):
            problems.append(f"{kind.label} sweep not decreasing")
    for m in M_GRID:
        r1, r2, r3, r4 = (solve(kind, m).root for kind in FunctionalKind)
        if not r3 < r1 < r2 < r4:
            problems.append(f"ordering broken at M={m}")
    criterion(6, "H(0) = -D < 0, monotone functionals, decreasing roots, ordering", not problems,
              "; ".join(problems[:5]))


def test_criterion_7_small_m_limit(criterion):
    root = solve(H2, 1e-8).root
    err = abs(root - (math.sqrt(5.0) - 1.0) / 2.0)
    criterion(7, "H2 root at M = 1e-8 tends to (sqrt 5 - 1)/2", err <= 1e-6, f"error {err:.1e}")


def test_criterion_8_area_quadrature(criterion):
    errs = {(m, r): abs(area_ratio(m, r) - area_quadrature(m, r))
            for m in (0.5, 1.0) for r in (0.3, 0.6)}
    worst = max(errs.values())
    criterion(8, "area ratio matches polar quadrature within 1e-3", worst <= 1e-3,
              f"max error {worst:.1e}")


def test_criterion_9_h4_variant(criterion):
    m, r = 1.0, 0.281757
    proof = evaluate(H4, m, r)
    gap = abs(h4_displayed(m, r) - proof)
    ok = gap > 1e-6 and abs(proof) <= 5e-5
    criterion(9, "refined functional differs from the variant and vanishes at (1, 0.281757)", ok,
              f"|H4| {abs(proof):.1e}, variant gap {gap:.3e}")
