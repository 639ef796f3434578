"""
The anyonic window of the planar deformed boson
===============================================

Just past the eta-threshold the D = 2 boson sits between statistics: R < 0
at small fugacity (fermion-like) and R > 0 near degeneracy (boson-like), so
one isotherm crosses zero as z grows.  Slightly below the threshold, at
q = 1.15, the gas is boson-like at small z and turns fermion-like beyond
z of about 0.7, staying negative up to the domain edge.
"""

from dataclasses import replace

import numpy as np

from qgasgeo import GasSpec, curvature_closed_form, curvature_sign_boundary

zs = np.linspace(0.05, 0.97, 24)
for q in (1.15, 1.5):
    spec = GasSpec("boson", q, 2)
    rs = [curvature_closed_form(spec, float(z)).R_reduced for z in zs]
    print(f"q = {q:<5g} sign(R):", "".join("+" if r > 0 else "-" for r in rs))

# bisect the crossing of the q = 1.15 isotherm in z by scanning the grid
spec = GasSpec("boson", 1.15, 2)
rs = [curvature_closed_form(spec, float(z)).R_reduced for z in zs]
for z1, z2, r1, r2 in zip(zs, zs[1:], rs, rs[1:]):
    if r1 * r2 < 0:
        # refine with the q-boundary helper transposed to z via a local lambda:
        # plain interval halving is enough at table resolution
        lo, hi = float(z1), float(z2)
        for _ in range(40):
            mid = 0.5 * (lo + hi)
            if curvature_closed_form(spec, mid).R_reduced * r1 > 0:
                lo = mid
            else:
                hi = mid
        print(f"\nq = 1.15 crossing at z = {0.5 * (lo + hi):.6f}")

# and the crossing in q at fixed z, on both sides of the window
for z in (0.05, 0.9):
    q_star = curvature_sign_boundary(replace(spec, q=1.0), z, 1.0, 2.0)
    label = f"{q_star:.4f}" if q_star is not None else "None"
    print(f"z = {z:<4g} boundary in q on [1, 2]: {label}")
