"""
Sign tables at small fugacity
=============================

The standard summary of who behaves like whom: sign of R at z = 0.05 for the
canonical deformation values of each gas.  Matches the `qgasgeo signtable`
command output.
"""

from qgasgeo import GasSpec, curvature_closed_form

TABLE = [
    ("boson", 3, (0.5, 1.0, 1.2, 1.35, 2.0)),
    ("fermion", 3, (0.5, 1.0, 1.9, 2.5)),
    ("boson", 2, (0.5, 1.0, 1.3, 1.5, 2.0)),
    ("fermion", 2, (0.5, 1.0, 2.0, 10.0)),
]
z = 0.05

print(f"sign of R at z = {z:g} (paper normalization)")
for stat, dim, qs in TABLE:
    rs = [curvature_closed_form(GasSpec(stat, q, dim), z).R_reduced for q in qs]
    qcells = "".join(f"{q:>8g}" for q in qs)
    scells = "".join(f"{'+' if r > 0 else '-':>8}" for r in rs)
    print(f"\nD={dim} {stat:<8} q: {qcells}")
    print(f"   {'':<8} R: {scells}")

# the bracketing pairs pin each transmutation point to within the table grid:
# boson D=3 between 1.2 and 1.35, fermion D=3 between 1.9 and 2.5,
# boson D=2 between 1.3 and 1.5, fermion D=2 nowhere
