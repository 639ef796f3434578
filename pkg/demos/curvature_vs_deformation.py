"""
Scalar curvature along the deformation axis
===========================================

R(q) at fixed small fugacity for all four gases.  The zero crossings are the
statistics-transmutation points: a deformed boson with R < 0 behaves like a
fermion gas and vice versa.  The D = 2 fermion gas never crosses.
"""

import numpy as np

from qgasgeo import GasSpec, curvature_closed_form, curvature_sign_boundary

qs = np.linspace(0.3, 3.0, 28)
z = 0.05

cases = [("boson", 3), ("fermion", 3), ("boson", 2), ("fermion", 2)]
curves = {}
for stat, dim in cases:
    curves[(stat, dim)] = np.array(
        [curvature_closed_form(GasSpec(stat, q, dim), z).R_reduced for q in qs])

print(f"sign of R at z = {z:g} (rows: q from {qs[0]:g} to {qs[-1]:g})")
for key, rs in curves.items():
    stat, dim = key
    print(f"D={dim} {stat:<8}", "".join("+" if r > 0 else "-" for r in rs))

# locate each crossing by bisection on the closed form
print("\ncrossings in q (None = no sign change on [0.3, 3]):")
for stat, dim in cases:
    q_star = curvature_sign_boundary(GasSpec(stat, 1.0, dim), z, 0.3, 3.0)
    label = f"{q_star:.4f}" if q_star is not None else "None"
    print(f"  D={dim} {stat:<8} q* = {label}")

try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    for (stat, dim), rs in curves.items():
        plt.plot(qs, rs, label=f"{stat}, D = {dim}")
    plt.axhline(0.0, color="k", lw=0.5)
    plt.xlabel("deformation q")
    plt.ylabel(r"R  [$\lambda^D / V$]")
    plt.title(f"Curvature vs deformation at z = {z:g}")
    plt.legend()
    plt.tight_layout()
    plt.savefig("curvature_vs_deformation.png", dpi=150)
    print("\nwrote curvature_vs_deformation.png")
