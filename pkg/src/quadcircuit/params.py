"""Physical constants and circuit specification records.

All quantities are SI.  Angular frequencies are in rad/s.  External flux is
always passed around as the dimensionless ratio ``Phi / Phi0``; conversion to
webers happens only where a quantity is explicitly per-weber.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import constants as _sc

from .errors import DegenerateSpec, HalfQuantumFlux

__all__ = [
    "PhysicalConstants",
    "CONSTANTS",
    "TransmissionLineSpec",
    "SquidSpec",
    "CoupledPairSpec",
    "ResonatorASpec",
    "ResonatorBSpec",
    "LoopGeometry",
    "CavityBaselineSpec",
    "derived_line_quantities",
    "effective_inductance",
    "plasma_frequency",
    "flux_cosine",
    "HALF_FLUX_GUARD",
]

#: ``|cos(pi Phi/Phi0)|`` below this is treated as a half flux quantum.
HALF_FLUX_GUARD = 1e-12


@dataclass(frozen=True)
class PhysicalConstants:
    """CODATA constants used throughout (``mu0`` is the exact pre-2019 value)."""

    hbar: float = _sc.hbar
    flux_quantum: float = _sc.h / (2.0 * _sc.e)
    mu0: float = 4e-7 * math.pi
    boltzmann: float = _sc.k
    speed_of_light: float = _sc.c


CONSTANTS = PhysicalConstants()


def _positive(owner: str, **values: float) -> None:
    for name, value in values.items():
        if not (np.isfinite(value) and value > 0):
            raise DegenerateSpec(f"{owner}.{name} must be finite and > 0, got {value!r}")


@dataclass(frozen=True)
class TransmissionLineSpec:
    """Uniform, lossless transmission-line segment.

    Parameters
    ----------
    length : float
        Physical length ``d`` (m).
    cap_per_len : float
        Capacitance per unit length ``c`` (F/m).
    ind_per_len : float
        Inductance per unit length ``l`` (H/m).
    """

    length: float
    cap_per_len: float
    ind_per_len: float

    def __post_init__(self):
        _positive("TransmissionLineSpec", length=self.length,
                  cap_per_len=self.cap_per_len, ind_per_len=self.ind_per_len)

    @property
    def wave_speed(self) -> float:
        return 1.0 / math.sqrt(self.ind_per_len * self.cap_per_len)

    @property
    def impedance(self) -> float:
        return math.sqrt(self.ind_per_len / self.cap_per_len)

    @property
    def total_capacitance(self) -> float:
        return self.cap_per_len * self.length


def derived_line_quantities(line: TransmissionLineSpec) -> tuple[float, float]:
    """Return ``(v0, Z0)``: phase velocity (m/s) and characteristic impedance (ohm)."""
    return line.wave_speed, line.impedance


@dataclass(frozen=True)
class SquidSpec:
    """Symmetric dc SQUID treated as a flux-tunable linear inductor.

    Parameters
    ----------
    josephson_energy : float
        Single-junction Josephson energy ``E_J0`` (J).
    capacitance : float
        Total SQUID capacitance ``C_J`` (F).
    """

    josephson_energy: float
    capacitance: float

    def __post_init__(self):
        _positive("SquidSpec", josephson_energy=self.josephson_energy,
                  capacitance=self.capacitance)

    @property
    def inductance0(self) -> float:
        """Zero-flux inductance ``L_J0 = (Phi0/2pi)^2 / (2 E_J0)`` (H)."""
        phi_red = CONSTANTS.flux_quantum / (2.0 * math.pi)
        return phi_red**2 / (2.0 * self.josephson_energy)


def flux_cosine(flux: float) -> float:
    """``cos(pi * flux)`` with the half-quantum guard applied.

    Raises
    ------
    HalfQuantumFlux
        If ``|cos(pi*flux)| < 1e-12``.
    """
    c = math.cos(math.pi * flux)
    if abs(c) < HALF_FLUX_GUARD:
        raise HalfQuantumFlux(
            f"flux {flux!r} Phi0 is at a half flux quantum: |cos(pi Phi/Phi0)| = {abs(c):.3e} "
            f"< {HALF_FLUX_GUARD:g}, SQUID inductance diverges"
        )
    return c


def effective_inductance(squid: SquidSpec, flux: float) -> float:
    """Flux-dependent SQUID inductance ``L_J = L_J0 / |cos(pi Phi/Phi0)|`` (H).

    Parameters
    ----------
    squid : SquidSpec
    flux : float
        External flux in units of the flux quantum.
    """
    return squid.inductance0 / abs(flux_cosine(flux))


def plasma_frequency(squid: SquidSpec, flux: float) -> float:
    """SQUID plasma frequency ``1/sqrt(C_J L_J)`` (rad/s)."""
    return 1.0 / math.sqrt(squid.capacitance * effective_inductance(squid, flux))


@dataclass(frozen=True)
class CoupledPairSpec:
    """Two grounded line segments joined through a series capacitor at ``x = 0``.

    The left segment spans ``[-left_len, 0]`` and the right one ``[0, right_len]``.

    Parameters
    ----------
    left_len, right_len : float
        Segment lengths ``d_L``, ``d_R`` (m).
    coupling_cap : float
        Series capacitance ``C_c`` (F).
    cap_per_len, ind_per_len : float
        Line constants shared by both segments.
    """

    left_len: float
    right_len: float
    coupling_cap: float
    cap_per_len: float
    ind_per_len: float

    def __post_init__(self):
        _positive("CoupledPairSpec", left_len=self.left_len, right_len=self.right_len,
                  coupling_cap=self.coupling_cap, cap_per_len=self.cap_per_len,
                  ind_per_len=self.ind_per_len)

    @classmethod
    def from_displacement(cls, total_length, displacement, coupling_cap,
                          cap_per_len, ind_per_len) -> "CoupledPairSpec":
        """Build from the total length ``d`` and displacement ``xi = (d_L - d_R)/2``."""
        if not abs(displacement) < total_length / 2:
            raise DegenerateSpec(
                f"|xi| = {abs(displacement)!r} must be < d/2 = {total_length / 2!r}")
        return cls(total_length / 2 + displacement, total_length / 2 - displacement,
                   coupling_cap, cap_per_len, ind_per_len)

    @staticmethod
    def coupling_cap_for(omega_c: float, cap_per_len: float, ind_per_len: float) -> float:
        """Series capacitance giving the characteristic frequency ``omega_c``."""
        return 1.0 / (math.sqrt(ind_per_len / cap_per_len) * omega_c)

    @property
    def total_length(self) -> float:
        return self.left_len + self.right_len

    @property
    def displacement(self) -> float:
        return 0.5 * (self.left_len - self.right_len)

    @property
    def wave_speed(self) -> float:
        return 1.0 / math.sqrt(self.ind_per_len * self.cap_per_len)

    @property
    def impedance(self) -> float:
        return math.sqrt(self.ind_per_len / self.cap_per_len)

    @property
    def omega_c(self) -> float:
        """Characteristic frequency ``1/(Z0 C_c)`` of the coupling capacitor (rad/s)."""
        return 1.0 / (self.impedance * self.coupling_cap)

    @property
    def total_capacitance(self) -> float:
        """``C_Sigma = c d + C_c``."""
        return self.cap_per_len * self.total_length + self.coupling_cap


@dataclass(frozen=True)
class ResonatorASpec:
    """Resonator A: a line split by a series capacitor and terminated by two SQUIDs.

    Parameters
    ----------
    line : TransmissionLineSpec
        Physical line; ``line.length`` is the total physical length ``d_A``.
    coupling_cap : float
        Middle series capacitance ``C_c`` (F).
    squid : SquidSpec
        Both end SQUIDs are identical.
    bias_flux : float
        Static bias flux in units of ``Phi0``; the two loops see ``bias +/- delta``.
    """

    line: TransmissionLineSpec
    coupling_cap: float
    squid: SquidSpec
    bias_flux: float

    def __post_init__(self):
        _positive("ResonatorASpec", coupling_cap=self.coupling_cap)
        if not np.isfinite(self.bias_flux):
            raise DegenerateSpec(f"bias_flux must be finite, got {self.bias_flux!r}")
        flux_cosine(self.bias_flux)

    @property
    def effective_length0(self) -> float:
        """Per-end zero-bias length correction ``(Phi0/2pi)^2/(l E_J0)`` (m)."""
        phi_red = CONSTANTS.flux_quantum / (2.0 * math.pi)
        return phi_red**2 / (self.line.ind_per_len * self.squid.josephson_energy)

    @property
    def total_effective_length(self) -> float:
        """``D_A = d_A + 2 (Phi0/2pi)^2 / (l_A E_J0)`` (m)."""
        return self.line.length + 2.0 * self.effective_length0

    @property
    def omega_c(self) -> float:
        return 1.0 / (self.line.impedance * self.coupling_cap)

    @property
    def total_capacitance(self) -> float:
        """``c d_A + 2 C_J + C_c``."""
        return (self.line.total_capacitance + 2.0 * self.squid.capacitance
                + self.coupling_cap)


@dataclass(frozen=True)
class ResonatorBSpec:
    """Resonator B: an open-ended line centred on ``z = 0``."""

    line: TransmissionLineSpec

    @property
    def total_capacitance(self) -> float:
        return self.line.total_capacitance


@dataclass(frozen=True)
class LoopGeometry:
    """Placement of the two SQUID loops next to resonator B.

    Loops sit at ``z = +/- z0`` and span radial distance ``s1 < s < s2`` from
    the resonator B conductor, with extent ``width`` along ``z``.
    """

    z0: float
    s1: float
    s2: float
    width: float

    def __post_init__(self):
        _positive("LoopGeometry", z0=self.z0, s1=self.s1, s2=self.s2, width=self.width)
        if not self.s1 < self.s2:
            raise DegenerateSpec(f"LoopGeometry needs s1 < s2, got s1={self.s1!r}, s2={self.s2!r}")

    @property
    def area(self) -> float:
        return self.width * (self.s2 - self.s1)


@dataclass(frozen=True)
class CavityBaselineSpec:
    """Membrane-in-the-middle optical cavity used as a comparison point.

    Parameters
    ----------
    cavity_len : float
        Cavity length ``L`` (m).
    reflectivity : float
        Membrane amplitude reflectivity, in (0, 1).
    wavelength : float
        Optical wavelength (m).
    mass : float
        Membrane effective mass (kg).
    mech_freq : float
        Mechanical angular frequency (rad/s).
    """

    cavity_len: float
    reflectivity: float
    wavelength: float
    mass: float
    mech_freq: float

    def __post_init__(self):
        _positive("CavityBaselineSpec", cavity_len=self.cavity_len,
                  reflectivity=self.reflectivity, wavelength=self.wavelength,
                  mass=self.mass, mech_freq=self.mech_freq)
        if not self.reflectivity < 1:
            raise DegenerateSpec(f"reflectivity must be < 1, got {self.reflectivity!r}")
