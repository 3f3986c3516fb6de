"""The combined circuit: flux-driven resonator A inductively coupled to resonator B.

Resonator A is a line split by a series capacitor and terminated at both ends
by SQUIDs.  Biasing both SQUIDs at ``Phi_bias`` and adding ``+dPhi`` / ``-dPhi``
to the two loops moves the capacitor off-centre in effective length, so mode
``n`` of A shifts by an amount quadratic in ``dPhi``.  Resonator B supplies
``dPhi`` through its current at the loop positions ``z = +/- z0``; the result
is a coupling ``g a^dag a (b + b^dag)^2``.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import IntegrationWarning, quad

from . import membrane
from ._eigen import EndLoad, TwoSegmentLine
from .errors import (DegenerateSpec, GeometryOutOfRegime, OutOfDomain, ParityRejected,
                     QuadratureFailure, RegimeWarning)
from .params import (CONSTANTS, CavityBaselineSpec, CoupledPairSpec, LoopGeometry,
                     ResonatorASpec, ResonatorBSpec, effective_inductance)
from .squid import linearize_length

__all__ = [
    "AnalogSystemSpec",
    "AnalogSpectrum",
    "QuadraticShift",
    "CombinedMode",
    "CombinedSpectrum",
    "ResonatorBMode",
    "GateResult",
    "CouplingReport",
    "HamiltonianReport",
    "CavityBaselineResult",
    "spectrum",
    "exact_modes",
    "quadratic_shift",
    "resonator_b_modes",
    "b_mode_function",
    "parity_gate",
    "inductive_coupling",
    "coupling_tensor",
    "coupling_strength",
    "coupling_direct",
    "normalized_ratio",
    "validity_extent",
    "hamiltonian_report",
    "cavity_baseline",
    "cavity_coupling",
    "MAX_LJ0_RATIO",
    "MAX_CJ_RATIO",
    "ADIABATIC_LIMIT",
    "THIN_LOOP_LIMIT",
]

MAX_LJ0_RATIO = 1e-2
MAX_CJ_RATIO = 1e-1
#: ``Omega_m/omega_n`` above this triggers an adiabaticity warning.
ADIABATIC_LIMIT = 0.1
#: Closed-form loop fluxes require ``s2 < THIN_LOOP_LIMIT * d_B``.
THIN_LOOP_LIMIT = 0.05

G_METHODS = ("closed_form", "simplified", "biot_savart")


@dataclass(frozen=True)
class AnalogSystemSpec:
    """Resonator A, resonator B and the loop geometry that couples them.

    Construction evaluates the lumped-SQUID regime gates ``L_J0/(l_A D_A)``
    and ``C_J/(c_A D_A)`` and warns (:class:`RegimeWarning`) when they exceed
    ``1e-2`` and ``1e-1``.
    """

    res_a: ResonatorASpec
    res_b: ResonatorBSpec
    geometry: LoopGeometry
    lj0_ratio: float = field(init=False)
    cj_ratio: float = field(init=False)

    def __post_init__(self):
        d_b = self.res_b.line.length
        if not self.geometry.z0 < d_b / 2:
            raise DegenerateSpec(f"loop position z0 = {self.geometry.z0!r} must be < d_B/2 = {d_b / 2!r}")
        a = self.res_a
        big_d = a.total_effective_length
        object.__setattr__(self, "lj0_ratio", a.squid.inductance0 / (a.line.ind_per_len * big_d))
        object.__setattr__(self, "cj_ratio", a.squid.capacitance / (a.line.cap_per_len * big_d))
        if self.lj0_ratio > MAX_LJ0_RATIO:
            warnings.warn(f"L_J0/(l_A D_A) = {self.lj0_ratio:.3g} exceeds {MAX_LJ0_RATIO:g}; "
                          "the effective-length picture is unreliable", RegimeWarning, stacklevel=2)
        if self.cj_ratio > MAX_CJ_RATIO:
            warnings.warn(f"C_J/(c_A D_A) = {self.cj_ratio:.3g} exceeds {MAX_CJ_RATIO:g}; "
                          "the effective-length picture is unreliable", RegimeWarning, stacklevel=2)

    @property
    def total_effective_length(self) -> float:
        return self.res_a.total_effective_length


# --------------------------------------------------------------------- spectra
@dataclass(frozen=True)
class AnalogSpectrum:
    """Resonator-A modes at a flux offset, with the equivalent coupled pair.

    ``epsilon = k_max * max(Delta d_L, Delta d_R)`` estimates the neglected
    higher-order terms of the effective-length picture.
    """

    modes: list
    pair: CoupledPairSpec
    epsilon: float


def _end_lengths(spec: AnalogSystemSpec, dflux: float, linearized: bool) -> tuple[float, float]:
    a = spec.res_a
    if linearized:
        lin = linearize_length(a.line.ind_per_len, a.squid, a.bias_flux)
        step = lin.delta_d1 * dflux * CONSTANTS.flux_quantum
        return lin.delta_d0 + step, lin.delta_d0 - step
    ell = a.line.ind_per_len
    return (effective_inductance(a.squid, a.bias_flux + dflux) / ell,
            effective_inductance(a.squid, a.bias_flux - dflux) / ell)


def spectrum(spec: AnalogSystemSpec, dflux: float, n_max: int,
             linearized: bool = False) -> AnalogSpectrum:
    """Resonator-A eigenmodes with the two loops at ``bias + dflux`` and ``bias - dflux``.

    Each SQUID is replaced by its effective length ``L_J(Phi)/l`` and the
    resulting coupled pair is solved exactly.  With ``linearized=True`` the
    lengths come from the linear model ``Delta d0 +/- Delta d1 dPhi`` instead.

    Parameters
    ----------
    dflux : float
        Antisymmetric flux offset in units of ``Phi0``.
    """
    a = spec.res_a
    dl, dr = _end_lengths(spec, dflux, linearized)
    half = 0.5 * a.line.length
    pair = CoupledPairSpec(half + dl, half + dr, a.coupling_cap, a.line.cap_per_len,
                           a.line.ind_per_len)
    modes = membrane.solve_modes(pair, n_max)
    eps = modes[-1].wavenumber * max(dl, dr)
    return AnalogSpectrum(modes, pair, eps)


@dataclass(frozen=True)
class CombinedMode:
    """Eigenmode of resonator A with the SQUIDs kept as lumped ``L_J || C_J`` loads."""

    index: int
    omega: float
    wavenumber: float
    amplitudes: tuple
    residual: float


@dataclass(frozen=True)
class CombinedSpectrum:
    """Modes of the four-boundary resonator A problem on ``[-d_A/2, d_A/2]``."""

    line: TwoSegmentLine
    modes: list

    def mode_function(self, mode: CombinedMode, x, derivative: bool = False):
        """``u_n(x)`` normalized to ``c int u u + C_c du du + C_J sum u_end u_end = C_Sigma``."""
        return self.line.evaluate(mode.omega, mode.amplitudes, x, derivative=derivative)

    def edge_values(self, mode: CombinedMode):
        """``(u(-d/2), u(0-), u(0+), u(d/2))``."""
        return self.line.edge_values(mode.omega, mode.amplitudes)


def exact_modes(spec: AnalogSystemSpec, dflux: float, n_max: int) -> CombinedSpectrum:
    """Resonator-A modes with both SQUIDs as lumped inductor-capacitor terminations.

    Unlike :func:`spectrum`, the SQUID capacitance enters the boundary
    condition directly, so this is the reference the effective-length picture
    is measured against.
    """
    a = spec.res_a
    left = EndLoad(effective_inductance(a.squid, a.bias_flux + dflux), a.squid.capacitance)
    right = EndLoad(effective_inductance(a.squid, a.bias_flux - dflux), a.squid.capacitance)
    half = 0.5 * a.line.length
    line = TwoSegmentLine(half, half, a.line.cap_per_len, a.line.ind_per_len, a.coupling_cap,
                          left, right)
    roots = line.roots(n_max + 1)
    v = line.wave_speed
    modes = [CombinedMode(n, float(w), float(w / v), line.amplitudes(w),
                          abs(float(line.residual(w)))) for n, w in enumerate(roots)]
    return CombinedSpectrum(line, modes)


@dataclass(frozen=True)
class QuadraticShift:
    """``omega_n(dPhi) ~ omega0 [1 - (-1)^n (curvature/omega0) dPhi^2]``, ``dPhi`` in Wb."""

    omega0: float
    curvature: float
    n: int

    def evaluate(self, dflux):
        """Model frequency at flux offset ``dflux`` (in ``Phi0``)."""
        dphi = np.asarray(dflux) * CONSTANTS.flux_quantum
        sign = -1.0 if self.n % 2 else 1.0
        return self.omega0 - sign * self.curvature * dphi**2


def _pair_at_bias(spec: AnalogSystemSpec) -> CoupledPairSpec:
    a = spec.res_a
    return CoupledPairSpec.from_displacement(a.total_effective_length, 0.0, a.coupling_cap,
                                             a.line.cap_per_len, a.line.ind_per_len)


def quadratic_shift(spec: AnalogSystemSpec, n: int) -> QuadraticShift:
    """Unperturbed frequency and curvature ``omega0 omega_c (Delta d1)^2/(v D_A)`` (rad/s/Wb^2)."""
    a = spec.res_a
    big_d, v, wc = a.total_effective_length, a.line.wave_speed, a.omega_c
    w0 = membrane.unperturbed_frequency(n, big_d, v, wc)
    lin = linearize_length(a.line.ind_per_len, a.squid, a.bias_flux)
    return QuadraticShift(w0, w0 * wc * lin.delta_d1**2 / (v * big_d), n)


# ---------------------------------------------------------------- resonator B
@dataclass(frozen=True)
class ResonatorBMode:
    """Mode ``m`` of the open-ended resonator B on ``[-d_B/2, d_B/2]``."""

    index: int
    Omega: float
    parity: str
    zero_point_flux: float
    length: float


def resonator_b_modes(spec: ResonatorBSpec, m_max: int) -> list[ResonatorBMode]:
    """Modes ``m = 1..m_max``: ``Omega_m = m pi v_B/d_B``, parity even iff ``m`` even."""
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    line = spec.line
    out = []
    for m in range(1, m_max + 1):
        omega = m * math.pi * line.wave_speed / line.length
        out.append(ResonatorBMode(
            index=m, Omega=omega, parity="even" if m % 2 == 0 else "odd",
            zero_point_flux=math.sqrt(CONSTANTS.hbar / (2.0 * omega * spec.total_capacitance)),
            length=line.length))
    return out


def b_mode_function(mode: ResonatorBMode, z, derivative: bool = False):
    """``sqrt(2) cos(m pi z/d_B)`` (even ``m``) or ``sqrt(2) sin(m pi z/d_B)`` (odd ``m``)."""
    z = np.asarray(z, dtype=float)
    half = 0.5 * mode.length
    if np.any(np.abs(z) > half * (1 + 1e-12)):
        raise OutOfDomain(f"z must lie in [{-half!r}, {half!r}] m")
    q = mode.index * math.pi / mode.length
    if mode.index % 2 == 0:
        return -math.sqrt(2) * q * np.sin(q * z) if derivative else math.sqrt(2) * np.cos(q * z)
    return math.sqrt(2) * q * np.cos(q * z) if derivative else math.sqrt(2) * np.sin(q * z)


@dataclass(frozen=True)
class GateResult:
    accepted: bool
    reason: str | None = None


def parity_gate(mode: ResonatorBMode, geometry: LoopGeometry) -> GateResult:
    """Whether mode ``m`` drives the two loops with opposite flux.

    Requires even parity (currents at ``+/- z0`` opposite) and a non-vanishing
    current at ``z0``.
    """
    if mode.parity != "even":
        return GateResult(False, "odd parity: currents at +z0 and -z0 have the same sign")
    slope = float(b_mode_function(mode, geometry.z0, derivative=True))
    if abs(slope) <= 1e-9 * math.sqrt(2) * mode.index * math.pi / mode.length:
        return GateResult(False, "current node at z0: mode current vanishes at the loops")
    return GateResult(True)


def _b_mode(spec: AnalogSystemSpec, m: int) -> ResonatorBMode:
    mode = resonator_b_modes(spec.res_b, m)[-1]
    gate = parity_gate(mode, spec.geometry)
    if not gate.accepted:
        raise ParityRejected(f"resonator-B mode m={m} rejected: {gate.reason}")
    return mode


def _current_profile(spec: AnalogSystemSpec, mode: ResonatorBMode):
    """Resonator-B current per unit ``(b + b^dag)``, ``-(1/l_B) Phi_zpf u_m'(z)`` (A)."""
    scale = -mode.zero_point_flux / spec.res_b.line.ind_per_len

    def current(z):
        return scale * b_mode_function(mode, z, derivative=True)

    return current


def inductive_coupling(spec: AnalogSystemSpec, m: int, method: str = "simplified") -> float:
    """Flux ``G_m`` through the loop at ``+z0`` per unit ``(b + b^dag)`` of mode ``m`` (Wb).

    Parameters
    ----------
    method : {"simplified", "closed_form", "biot_savart"}
        ``closed_form``: long straight wire, ``mu0 I w ln(s2/s1)/(2 pi)``.
        ``simplified``: the same with ``w ln(s2/s1)`` replaced by ``A/s1``.
        ``biot_savart``: direct integration of the field of the full standing-wave
        current over the loop area.

    The sign follows the resonator-B current at ``z0``; the loop at ``-z0``
    sees the opposite flux.
    """
    if method not in G_METHODS:
        raise ValueError(f"method must be one of {G_METHODS}, got {method!r}")
    mode = _b_mode(spec, m)
    geo, line_b = spec.geometry, spec.res_b.line
    current = _current_profile(spec, mode)
    if method == "biot_savart":
        return _biot_savart_flux(spec, current)
    if geo.s2 >= THIN_LOOP_LIMIT * line_b.length:
        raise GeometryOutOfRegime(
            f"s2 = {geo.s2!r} m is not << d_B: need s2 < {THIN_LOOP_LIMIT} d_B = "
            f"{THIN_LOOP_LIMIT * line_b.length!r} m for the straight-wire flux")
    amp = (CONSTANTS.mu0 / (2.0 * math.pi * line_b.ind_per_len * line_b.length)
           * math.sqrt(m * math.pi * CONSTANTS.hbar / (line_b.wave_speed * line_b.cap_per_len)))
    extent = geo.width * math.log(geo.s2 / geo.s1) if method == "closed_form" else geo.area / geo.s1
    return math.copysign(amp * extent, float(current(geo.z0)))


def _biot_savart_flux(spec: AnalogSystemSpec, current) -> float:
    geo = spec.geometry
    half = 0.5 * spec.res_b.line.length
    z_lo, z_hi = geo.z0 - 0.5 * geo.width, geo.z0 + 0.5 * geo.width

    def kernel(zp):
        # int_{z_lo}^{z_hi} dz int_{s1}^{s2} ds s / (s^2 + (z - zp)^2)^{3/2}
        total = 0.0
        for s, sign in ((geo.s1, 1.0), (geo.s2, -1.0)):
            total += sign * (math.asinh((z_hi - zp) / s) - math.asinh((z_lo - zp) / s))
        return total

    def integrand(zp):
        return float(current(zp)) * kernel(zp)

    edges = sorted({-half, max(-half, z_lo - 50 * geo.s2), z_lo, geo.z0, z_hi,
                    min(half, z_hi + 50 * geo.s2), half})
    total, err = 0.0, 0.0
    with warnings.catch_warnings():
        # quad's roundoff notice fires near 1e-10; the summed error estimate is checked below
        warnings.simplefilter("ignore", IntegrationWarning)
        for a, b in zip(edges[:-1], edges[1:]):
            val, e = quad(integrand, a, b, epsabs=0.0, epsrel=1e-10, limit=400)
            total += val
            err += e
    if not np.isfinite(total) or err > 1e-8 * abs(total):
        raise QuadratureFailure(f"loop flux integral error {err:.3e} vs value {total:.3e}")
    return CONSTANTS.mu0 / (4.0 * math.pi) * total


# ------------------------------------------------------------------- coupling
def validity_extent(spec: AnalogSystemSpec, n: int) -> float:
    """Validity extent ``xi_n*`` (m) of mode ``n`` of resonator A at zero flux offset."""
    return membrane.expand_modes(_pair_at_bias(spec), n).validity_extent


def coupling_tensor(spec: AnalogSystemSpec, n: int, m: int, l: int,
                    method: str = "simplified") -> float:
    """``gamma_nml = (-1)^n omega_n0 omega_c (Delta d1)^2 G_m G_l / (v_A D_A)`` (rad/s)."""
    a = spec.res_a
    shift = quadratic_shift(spec, n)
    g_m = inductive_coupling(spec, m, method)
    g_l = g_m if l == m else inductive_coupling(spec, l, method)
    lin = linearize_length(a.line.ind_per_len, a.squid, a.bias_flux)
    sign = -1.0 if n % 2 else 1.0
    return (sign * shift.omega0 * a.omega_c * lin.delta_d1**2 * g_m * g_l
            / (a.line.wave_speed * a.total_effective_length))


def coupling_direct(spec: AnalogSystemSpec, n: int, m: int, method: str = "simplified") -> float:
    """``g_nm`` written directly in circuit parameters (rad/s); equals ``gamma_nmm``."""
    a = spec.res_a
    w0 = quadratic_shift(spec, n).omega0
    g_m = inductive_coupling(spec, m, method)
    sign = -1.0 if n % 2 else 1.0
    t = math.tan(math.pi * a.bias_flux)
    return (sign * w0 * a.line.cap_per_len / (a.coupling_cap * a.total_effective_length)
            * (g_m * CONSTANTS.flux_quantum / (4.0 * math.pi * a.line.ind_per_len
                                               * a.squid.josephson_energy)) ** 2 * t**2)


def normalized_ratio(spec: AnalogSystemSpec) -> float:
    """``|g_nm| / (hbar omega_n0 Omega_m)`` from circuit parameters alone (1/J).

    Independent of ``n`` and ``m``; assumes the simplified loop flux ``A/s1``.
    """
    a, b, geo = spec.res_a, spec.res_b.line, spec.geometry
    big_d = a.total_effective_length
    phi0 = CONSTANTS.flux_quantum
    return ((b.ind_per_len * b.length / phi0**2)
            * (a.line.cap_per_len * big_d / a.coupling_cap)
            * (a.squid.inductance0 / (a.line.ind_per_len * big_d)) ** 2
            * (geo.area / (b.length * geo.s1)) ** 2
            * (CONSTANTS.mu0 / b.ind_per_len) ** 2
            * math.tan(math.pi * a.bias_flux) ** 2)


@dataclass(frozen=True)
class CouplingReport:
    """Quadratic coupling of resonator-A mode ``n`` to resonator-B mode ``m``.

    Attributes
    ----------
    omega_n0, Omega_m : float
        Mode frequencies (rad/s).
    G_m : float
        Loop flux per unit ``(b + b^dag)`` (Wb).
    g : float
        Coupling rate ``g_nm = gamma_nmm`` (rad/s); sign ``(-1)^n``.
    normalized : float
        ``g / Omega_m``.
    frequency_ratio : float
        ``g / (omega_n0 Omega_m)`` (s), independent of ``n`` and ``m`` in magnitude.
    x_star : float
        Largest resonator-B quadrature amplitude keeping the coupling quadratic
        (``inf`` when there is no flux sensitivity).
    """

    n: int
    m: int
    omega_n0: float
    Omega_m: float
    G_m: float
    g: float
    normalized: float
    frequency_ratio: float
    x_star: float
    method: str = "simplified"

    def as_dict(self) -> dict:
        return {
            "n": self.n, "m": self.m, "method": self.method,
            "omega_n0_rad_s": self.omega_n0, "Omega_m_rad_s": self.Omega_m,
            "G_m_Wb": self.G_m, "g_rad_s": self.g, "normalized_coupling": self.normalized,
            "g_over_omega_Omega_s": self.frequency_ratio, "x_star": self.x_star,
        }


def coupling_strength(spec: AnalogSystemSpec, n: int, m: int,
                      method: str = "simplified") -> CouplingReport:
    """Assemble the coupling report for the pair ``(n, m)``."""
    a = spec.res_a
    mode = _b_mode(spec, m)
    w0 = quadratic_shift(spec, n).omega0
    g_m = inductive_coupling(spec, m, method)
    g = coupling_tensor(spec, n, m, m, method)
    lin = linearize_length(a.line.ind_per_len, a.squid, a.bias_flux)
    lever = abs(lin.delta_d1 * g_m)
    x_star = validity_extent(spec, n) / lever if lever > 0 else math.inf
    return CouplingReport(n=n, m=m, omega_n0=w0, Omega_m=mode.Omega, G_m=g_m, g=g,
                          normalized=g / mode.Omega, frequency_ratio=g / (w0 * mode.Omega),
                          x_star=x_star, method=method)


@dataclass(frozen=True)
class HamiltonianReport:
    """Parameters of ``H = hbar w a^dag a + hbar W b^dag b + hbar g a^dag a (b + b^dag)^2``."""

    omega_n0: float
    Omega_m: float
    g: float
    zero_point_flux_a: float
    zero_point_flux_b: float
    adiabaticity: float
    adiabatic: bool

    def as_dict(self) -> dict:
        return {
            "omega_n0_rad_s": self.omega_n0, "Omega_m_rad_s": self.Omega_m, "g_rad_s": self.g,
            "zero_point_flux_a_Wb": self.zero_point_flux_a,
            "zero_point_flux_b_Wb": self.zero_point_flux_b,
            "Omega_over_omega": self.adiabaticity, "adiabatic": self.adiabatic,
        }


def hamiltonian_report(spec: AnalogSystemSpec, n: int, m: int,
                       method: str = "simplified") -> HamiltonianReport:
    """Frequencies, coupling and zero-point flux amplitudes of the single-mode Hamiltonian."""
    rep = coupling_strength(spec, n, m, method)
    mode = _b_mode(spec, m)
    zpf_a = math.sqrt(CONSTANTS.hbar / (2.0 * rep.omega_n0 * spec.res_a.total_capacitance))
    ratio = rep.Omega_m / rep.omega_n0
    if ratio > ADIABATIC_LIMIT:
        warnings.warn(f"Omega_m/omega_n = {ratio:.3g} > {ADIABATIC_LIMIT}: resonator A may not "
                      "follow resonator B adiabatically", RegimeWarning, stacklevel=2)
    return HamiltonianReport(rep.omega_n0, rep.Omega_m, rep.g, zpf_a, mode.zero_point_flux,
                             ratio, ratio <= ADIABATIC_LIMIT)


# ------------------------------------------------------------------- baseline
@dataclass(frozen=True)
class CavityBaselineResult:
    omega2: float
    g_over_Omega: float


def cavity_coupling(omega2: float, mass: float, mech_freq: float) -> float:
    """``g/Omega = hbar omega'' / (4 m Omega^2)`` for curvature ``omega''`` (rad/s/m^2)."""
    return CONSTANTS.hbar * omega2 / (4.0 * mass * mech_freq**2)


def cavity_baseline(spec: CavityBaselineSpec) -> CavityBaselineResult:
    """Curvature ``16 pi^2 c/(L lambda^2) sqrt(2(1-r))`` and the resulting ``g/Omega``."""
    omega2 = (16.0 * math.pi**2 * CONSTANTS.speed_of_light / (spec.cavity_len * spec.wavelength**2)
              * math.sqrt(2.0 * (1.0 - spec.reflectivity)))
    return CavityBaselineResult(omega2, cavity_coupling(omega2, spec.mass, spec.mech_freq))
