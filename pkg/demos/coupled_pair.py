# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # Two lines joined by a capacitor
#
# Solve the pair spectrum, compare it with the even expansion in the
# capacitor displacement, and check the mode normalization.

# %%
import numpy as np

from quadcircuit import membrane
from quadcircuit.params import CoupledPairSpec

d, c, ell = 0.02, 1.46e-10, 4.57e-7
v = 1 / np.sqrt(c * ell)
cap = CoupledPairSpec.coupling_cap_for(10 * v / d, c, ell)
pair = CoupledPairSpec.from_displacement(d, 0.0, cap, c, ell)
modes = membrane.solve_modes(pair, 5)
print([round(m.omega * d / v, 6) for m in modes])

# %% [markdown]
# Frequencies against displacement, with the expansion overlaid inside its
# validity extent.

# %%
for n in range(4):
    exp = membrane.expand_modes(pair, n)
    for xi in np.linspace(-exp.validity_extent, exp.validity_extent, 5):
        shifted = CoupledPairSpec.from_displacement(d, xi, cap, c, ell)
        root = membrane.solve_modes(shifted, n)[n].omega
        print(f"n={n} xi={xi:+.3e}  root={root:.9e}  expansion={float(exp.evaluate(xi)):.9e}")
