#!/usr/bin/env python3
"""Closed-form sums next to their truncated series."""
import math

from bohr_lab.series import SeriesTruncation, SumKind, closed_form, dilog, truncated_sum

# the dilogarithm at a few familiar points
print("Li2(1)   =", dilog(1.0), " pi^2/6 =", math.pi ** 2 / 6)
print("Li2(1/2) =", dilog(0.5), " pi^2/12 - log(2)^2/2 =", math.pi ** 2 / 12 - math.log(2) ** 2 / 2)

# every series converges geometrically, so the gap to the closed form
# sits under the certified tail bound, up to rounding
r = 0.6
for kind in SumKind:
    exact = closed_form(kind, r)
    print(f"\n{kind.value} at r = {r}: closed form {exact:.15f}")
    for order in (5, 20, 80):
        trunc = SeriesTruncation.at(kind, r, order)
        gap = exact - truncated_sum(kind, r, trunc)
        print(f"  {order:3d} terms  gap {gap:.3e}  tail bound {trunc.tail_bound:.3e}")
