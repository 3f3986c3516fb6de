import math

import pytest

from quadcircuit.errors import DegenerateSpec, HalfQuantumFlux, PhysicsError
from quadcircuit.params import (CONSTANTS, CoupledPairSpec, LoopGeometry, ResonatorASpec,
                                SquidSpec, TransmissionLineSpec, derived_line_quantities,
                                effective_inductance, plasma_frequency)

EJ0 = 6.17e-22


def test_constants():
    assert CONSTANTS.flux_quantum == pytest.approx(2.067833848e-15, rel=1e-9)
    assert CONSTANTS.mu0 == 4e-7 * math.pi
    assert all(v > 0 for v in (CONSTANTS.hbar, CONSTANTS.boltzmann, CONSTANTS.speed_of_light))


def test_line_quantities_reference():
    v, z = derived_line_quantities(TransmissionLineSpec(1.0, 1.46e-10, 4.57e-7))
    assert v == pytest.approx(1.224e8, rel=1e-3)
    assert z == pytest.approx(55.9, rel=1e-3)


def test_line_quantities_units_and_scaling():
    assert derived_line_quantities(TransmissionLineSpec(1.0, 1.0, 1.0)) == (1.0, 1.0)
    v1, z1 = derived_line_quantities(TransmissionLineSpec(1.0, 2.0, 3.0))
    v4, z4 = derived_line_quantities(TransmissionLineSpec(1.0, 2.0, 12.0))
    assert v4 == pytest.approx(v1 / 2, rel=1e-15)
    assert z4 == pytest.approx(2 * z1, rel=1e-15)


@pytest.mark.parametrize("kwargs", [
    dict(length=0.0, cap_per_len=1.0, ind_per_len=1.0),
    dict(length=1.0, cap_per_len=-1.0, ind_per_len=1.0),
    dict(length=1.0, cap_per_len=1.0, ind_per_len=float("nan")),
])
def test_line_rejects_nonpositive(kwargs):
    with pytest.raises(DegenerateSpec, match="must be finite and > 0"):
        TransmissionLineSpec(**kwargs)


def test_effective_inductance_examples():
    sq = SquidSpec(EJ0, 30e-15)
    assert effective_inductance(sq, 0.0) == sq.inductance0
    assert sq.inductance0 == pytest.approx(8.78e-11, rel=2e-3)
    assert effective_inductance(sq, 1 / 3) == pytest.approx(2 * sq.inductance0, rel=1e-12)
    with pytest.raises(HalfQuantumFlux):
        effective_inductance(sq, 0.5)
    with pytest.raises(PhysicsError):
        effective_inductance(sq, -1.5)


def test_inductance_even_periodic_and_bounded_below():
    sq = SquidSpec(EJ0, 30e-15)
    for f in (0.1, 0.27, 0.44):
        lj = effective_inductance(sq, f)
        assert effective_inductance(sq, -f) == pytest.approx(lj, rel=1e-14)
        assert effective_inductance(sq, f + 1) == pytest.approx(lj, rel=1e-12)
        assert lj >= sq.inductance0


def test_plasma_frequency():
    sq = SquidSpec(EJ0, 30e-15)
    assert plasma_frequency(sq, 0.0) == pytest.approx(1 / math.sqrt(30e-15 * sq.inductance0), rel=1e-14)
    assert plasma_frequency(sq, 1.0) == pytest.approx(plasma_frequency(sq, 0.0), rel=1e-12)
    ws = [plasma_frequency(sq, f) for f in (0.0, 0.3, 0.45, 0.49, 0.4999)]
    assert all(a > b for a, b in zip(ws, ws[1:]))
    for f in (0.0, 0.2, 0.41):
        assert plasma_frequency(sq, f) * math.sqrt(30e-15 * effective_inductance(sq, f)) == \
            pytest.approx(1.0, rel=1e-14)


def test_coupled_pair_derived():
    p = CoupledPairSpec.from_displacement(1.0, 0.1, 2.0, 3.0, 5.0)
    assert (p.left_len, p.right_len) == pytest.approx((0.6, 0.4))
    assert p.displacement == pytest.approx(0.1)
    assert p.omega_c == pytest.approx(1 / (math.sqrt(5 / 3) * 2))
    assert CoupledPairSpec.coupling_cap_for(p.omega_c, 3.0, 5.0) == pytest.approx(2.0)
    with pytest.raises(DegenerateSpec):
        CoupledPairSpec.from_displacement(1.0, 0.5, 1.0, 1.0, 1.0)


def test_resonator_a_total_length():
    line = TransmissionLineSpec(0.02, 1.46e-10, 4.57e-7)
    sq = SquidSpec(EJ0, 30e-15)
    a = ResonatorASpec(line, 1e-15, sq, 0.4)
    assert a.total_effective_length == pytest.approx(0.02 + 4 * sq.inductance0 / 4.57e-7, rel=1e-12)
    assert a.total_effective_length > line.length
    with pytest.raises(HalfQuantumFlux):
        ResonatorASpec(line, 1e-15, sq, 0.5)


def test_loop_geometry():
    g = LoopGeometry(0.1, 50e-6, 55e-6, 4e-3)
    assert g.area == pytest.approx(4e-3 * 5e-6)
    with pytest.raises(DegenerateSpec):
        LoopGeometry(0.1, 55e-6, 50e-6, 4e-3)
