#!/usr/bin/env python3
"""Sharpness at the extremal map: the inequality flips exactly at the radius."""
from bohr_lab import FunctionalKind, boundary_distance, inequality_scan, sharpness_check, theorem_lhs

m = 0.7
d = boundary_distance(m)
print(f"M = {m}, distance to the boundary D = {d:.12f}")

for kind in FunctionalKind:
    rep = sharpness_check(kind, m, delta=1e-4)
    root = rep.root
    # left side of the inequality for f_M just inside and just outside the radius
    below = theorem_lhs(kind, m, root - 1e-4)
    above = theorem_lhs(kind, m, root + 1e-4)
    print(f"\n{kind.label}: radius {root:.10f}")
    print(f"  lhs(root - 1e-4) - D = {below - d:+.3e}")
    print(f"  lhs(root + 1e-4) - D = {above - d:+.3e}")
    scan = inequality_scan(kind, m, samples=1000)
    print(f"  1000-point scan below the radius: max excess {scan.max_excess:+.2e}, passed {scan.passed}")
