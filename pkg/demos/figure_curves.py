#!/usr/bin/env python3
"""Radius-vs-M curves for all four functionals, written as CSV."""
import sys
from pathlib import Path

from bohr_lab import FunctionalKind
from bohr_lab.records import OutputRecord, write_records
from bohr_lab.solver import sweep_results

out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("figure_data")
out_dir.mkdir(parents=True, exist_ok=True)

# the same grid the CLI's figure-data command uses
for number, kind in enumerate(FunctionalKind, start=1):
    results = sweep_results(kind, 0.02, 1.29, 256)
    path = out_dir / f"figure{number}.csv"
    write_records(path, [OutputRecord.from_result(res) for res in results], "csv")
    roots = [res.root for res in results]
    print(f"{path}: {kind.label}, radius falls from {roots[0]:.4f} to {roots[-1]:.4f}")

# each curve decreases in M; the refined one sits on top, the Jacobian one at the bottom
