# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # Quadratic coupling of the reference two-resonator system
#
# Coupling rate, validity amplitude and photon-number ceilings at the
# default 0.4 Phi0 bias, then a small bias scan.

# %%
from quadcircuit import analog, presets, validity

spec = presets.reference_system()
for n in (1, 9):
    rep = analog.coupling_strength(spec, n, 2)
    print(f"n={n}: g/Omega = {rep.normalized:.3e}, X* = {rep.x_star:.2f}")

# %%
rep = analog.coupling_strength(spec, 9, 2)
omega_b = analog.resonator_b_modes(spec.res_b, 2)[-1].Omega
thermal = validity.max_photon_number("thermal", rep.x_star, omega_b)
coherent = validity.max_photon_number("coherent", rep.x_star)
print(f"thermal n_max = {thermal.n_max:.1f} (T_max = {thermal.temperature:.3f} K)")
print(f"coherent n_max = {coherent.n_max:.1f}")

# %%
for bias in (0.1, 0.2, 0.3, 0.4, 0.45):
    rep = analog.coupling_strength(presets.reference_system(bias_flux=bias), 1, 2)
    print(f"bias {bias:.2f} Phi0: |g|/Omega = {abs(rep.normalized):.3e}, X* = {rep.x_star:.1f}")
