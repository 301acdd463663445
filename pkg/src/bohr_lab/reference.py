"""Tabulated reference radii for the four functionals on the standard M grid.

Values are as printed to six significant digits.  The H2 entry at M = 0.5 is
printed as "0.0.347564" in the source table and is stored here as 0.347564.

Known inconsistency: the H2 and H4 entries listed under M = 1.25
(0.0371406 and 0.125838) are the roots at M = 1.24; the roots at M = 1.25
are about 0.030895 and 0.114302.  They are kept verbatim so that the table
comparison reports the disagreement instead of hiding it.
"""
from __future__ import annotations

from .functionals import FunctionalKind

__all__ = ["M_GRID", "REFERENCE_RADII", "TABLE_TOLERANCE"]

M_GRID = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0, 1.25)

TABLE_TOLERANCE = 1e-4

_ROOTS = {
    FunctionalKind.H1: (0.438485, 0.387786, 0.343722, 0.304054, 0.267404, 0.23283,
                        0.19963, 0.167229, 0.135111, 0.102764, 0.0167782),
    FunctionalKind.H2: (0.546723, 0.487374, 0.435926, 0.389886, 0.347564, 0.307711,
                        0.269313, 0.231445, 0.193148, 0.153247, 0.0371406),
    FunctionalKind.H3: (0.426832, 0.372123, 0.327085, 0.287924, 0.252589, 0.2198,
                        0.18866, 0.158469, 0.128614, 0.0984794, 0.0166108),
    FunctionalKind.H4: (0.802472, 0.696255, 0.619712, 0.558217, 0.505494, 0.458107,
                        0.413815, 0.370862, 0.327549, 0.281757, 0.125838),
}

#: kind -> list of (M, tabulated root)
REFERENCE_RADII = {kind: list(zip(M_GRID, roots)) for kind, roots in _ROOTS.items()}
