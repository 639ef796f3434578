"""
Scalar curvature along the fugacity axis
========================================

R(z) for the deformed Bose gas in three dimensions at several deformation
values.  Near q = 1 the gas is boson-like (R > 0) everywhere; past the
delta-threshold near q = 1.27 the low-fugacity end turns fermion-like.
"""

import numpy as np

from qgasgeo import GasSpec, curvature_closed_form

zs = np.linspace(0.02, 0.98, 25)
q_values = (0.5, 1.0, 1.15, 1.5, 2.0)

# one column of R per deformation value, paper normalization, units lambda^3/V
table = np.empty((len(zs), len(q_values)))
for j, q in enumerate(q_values):
    spec = GasSpec("boson", q, 3)
    table[:, j] = [curvature_closed_form(spec, z).R_reduced for z in zs]

header = "      z " + "".join(f"  q={q:<11g}" for q in q_values)
print(header)
for z, row in zip(zs, table):
    print(f"{z:7.3f} " + "".join(f"{r:+14.6e}" for r in row))

# the q = 1.15 column changes sign once along the isotherm: boson-like at
# small z, fermion-like toward degeneracy; q = 2 is fermion-like throughout
for q in (1.15, 2.0):
    col = table[:, q_values.index(q)]
    print(f"\nq = {q:<5g} sign pattern:", "".join("+" if r > 0 else "-" for r in col))

try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    for j, q in enumerate(q_values):
        plt.plot(zs, table[:, j], label=f"q = {q:g}")
    plt.axhline(0.0, color="k", lw=0.5)
    plt.xlabel("fugacity z")
    plt.ylabel(r"R  [$\lambda^3 / V$]")
    plt.title("Deformed Bose gas, D = 3")
    plt.legend()
    plt.tight_layout()
    plt.savefig("curvature_vs_fugacity.png", dpi=150)
    print("\nwrote curvature_vs_fugacity.png")
