"""Property-based checks over randomly drawn specifications."""
import math

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from quadcircuit import membrane, squid, validity
from quadcircuit.params import (CONSTANTS, CoupledPairSpec, SquidSpec, TransmissionLineSpec,
                                effective_inductance, plasma_frequency)
from quadcircuit.specio import build, to_document

SETTINGS = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])

log_uniform = lambda lo, hi: st.floats(math.log10(lo), math.log10(hi)).map(lambda e: 10.0**e)
flux = st.floats(-3.0, 3.0).filter(lambda f: abs(math.cos(math.pi * f)) > 1e-3)
PHI_RED = CONSTANTS.flux_quantum / (2 * math.pi)


def unit_pair(wc, xi):
    return CoupledPairSpec.from_displacement(1.0, xi, 1.0 / wc, 1.0, 1.0)


@SETTINGS
@given(wc=log_uniform(1e-2, 1e4), w=log_uniform(1e-6, 1e8))
def test_unitarity_anywhere(wc, w):
    amp = membrane.scattering(unit_pair(wc, 0.0), w)
    assert abs(abs(amp.reflectivity) ** 2 + abs(amp.transmissivity) ** 2 - 1) <= 1e-12


@SETTINGS
@given(wc=log_uniform(0.1, 1e3), xi=st.floats(0.0, 0.45))
def test_spectrum_even_in_displacement(wc, xi):
    a = [m.omega for m in membrane.solve_modes(unit_pair(wc, xi), 4)]
    b = [m.omega for m in membrane.solve_modes(unit_pair(wc, -xi), 4)]
    assert a == pytest.approx(b, rel=1e-10)


@SETTINGS
@given(wc=log_uniform(0.1, 1e3), xi=st.floats(-0.45, 0.45))
def test_roots_sorted_distinct_and_bounded(wc, xi):
    w = np.array([m.omega for m in membrane.solve_modes(unit_pair(wc, xi), 6)])
    assert np.all(np.diff(w) > 0)
    # the capacitor only lowers frequencies relative to the open/shorted limits
    assert np.all(w < (np.arange(7) + 1) * math.pi / (0.5 - abs(xi)) + 1e-9)
    assert all(m.residual < 1e-9 for m in membrane.solve_modes(unit_pair(wc, xi), 6))


@SETTINGS
@given(f=flux, k=st.integers(-3, 3))
def test_inductance_even_periodic_bounded(f, k):
    sq = SquidSpec(6.17e-22, 3e-14)
    lj = effective_inductance(sq, f)
    assert effective_inductance(sq, -f) == pytest.approx(lj, rel=1e-12)
    assert effective_inductance(sq, f + k) == pytest.approx(lj, rel=1e-9)
    assert lj >= sq.inductance0 * (1 - 1e-15)
    wj = plasma_frequency(sq, f)
    assert wj * math.sqrt(sq.capacitance * lj) == pytest.approx(1.0, rel=1e-14)


@SETTINGS
@given(f=st.floats(0.0, 0.45), k=st.integers(-2, 2),
       lj0=log_uniform(1e-3, 1e-2), cj=log_uniform(1e-3, 1e-1))
def test_tunable_spectrum_periodic(f, k, lj0, cj):
    line = TransmissionLineSpec(1.0, 1.0, 1.0)
    sq = SquidSpec(PHI_RED**2 / (2 * lj0), cj)
    base = [m.omega for m in squid.solve_modes(squid.TunableResonatorSpec(line, sq, f), 3)]
    shifted = [m.omega for m in squid.solve_modes(squid.TunableResonatorSpec(line, sq, -f + k), 3)]
    assert shifted == pytest.approx(base, rel=1e-9)


@SETTINGS
@given(x_star=st.floats(1.0, 1e4), omega=log_uniform(1e8, 1e11))
def test_thermal_bound_coth_identity(x_star, omega):
    th = validity.max_photon_number("thermal", x_star, omega)
    assert th.n_max == pytest.approx((x_star**2 - 1) / 2, rel=1e-12)
    if th.n_max > 0:
        x = CONSTANTS.hbar * omega / (CONSTANTS.boltzmann * th.temperature)
        assert 1 / math.expm1(x) == pytest.approx(th.n_max, rel=1e-9)
    co = validity.max_photon_number("coherent", x_star)
    if x_star > 3:
        assert co.n_max < th.n_max


@SETTINGS
@given(length=log_uniform(1e-3, 1.0), xi=st.floats(-0.4, 0.4), cap=log_uniform(1e-16, 1e-12))
def test_pair_document_round_trip(length, xi, cap):
    spec = CoupledPairSpec.from_displacement(length, xi * length, cap, 1.46e-10, 4.57e-7)
    again = build(to_document(spec))
    assert again.total_length == pytest.approx(spec.total_length, rel=1e-15)
    assert again.displacement == pytest.approx(spec.displacement, rel=1e-12, abs=1e-15 * length)
    assert again.coupling_cap == spec.coupling_cap
