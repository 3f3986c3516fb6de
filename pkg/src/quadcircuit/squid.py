"""Eigenmodes of a line grounded at ``x = d`` and terminated by a SQUID at ``x = 0``.

For frequencies well below the SQUID plasma frequency the termination acts
like an extra length ``Delta d = L_J / l`` of line, which the external flux
tunes -- a movable-mirror analog.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from ._eigen import EndLoad, end_phase, integral_sin_squared, single_end_roots
from .errors import DegenerateSpec, NearPole, OutOfDomain, RegimeWarning
from .params import (CONSTANTS, SquidSpec, TransmissionLineSpec, effective_inductance,
                     flux_cosine, plasma_frequency)

__all__ = [
    "TunableResonatorSpec",
    "TunableMode",
    "EffectiveLengthLinearization",
    "solve_modes",
    "effective_length",
    "approx_modes",
    "linearize_length",
    "mode_function",
    "virtual_end",
    "continued_mode_function",
    "exact_length_slope",
    "ETA_UNRELIABLE",
]

#: Modes with ``omega/omega_J`` above this are flagged as outside the effective-length picture.
ETA_UNRELIABLE = 0.3


@dataclass(frozen=True)
class TunableResonatorSpec:
    """Line of length ``d`` with a SQUID at ``x = 0`` and ground at ``x = d``.

    Parameters
    ----------
    line : TransmissionLineSpec
    squid : SquidSpec
    flux : float
        External flux through the SQUID loop, in units of ``Phi0``.
    """

    line: TransmissionLineSpec
    squid: SquidSpec
    flux: float

    def __post_init__(self):
        if not np.isfinite(self.flux):
            raise DegenerateSpec(f"flux must be finite, got {self.flux!r}")
        flux_cosine(self.flux)

    @property
    def inductance(self) -> float:
        return effective_inductance(self.squid, self.flux)

    @property
    def plasma_frequency(self) -> float:
        return plasma_frequency(self.squid, self.flux)

    @property
    def total_capacitance(self) -> float:
        return self.line.total_capacitance + self.squid.capacitance

    def load(self) -> EndLoad:
        return EndLoad(self.inductance, self.squid.capacitance)


@dataclass(frozen=True)
class TunableMode:
    """One eigenmode of a SQUID-terminated resonator.

    Attributes
    ----------
    index : int
        Mode number ``n >= 1``.
    omega, wavenumber : float
        Angular frequency (rad/s) and ``omega/v0`` (1/m).
    eta : float
        ``omega / omega_J``.
    normalization : float
        ``N_n`` of ``u_n = N_n sin(k(x-d))/cos(kd)``.
    residual : float
        ``|sin(k d + theta)|``, the residual of the phase condition.
    effective_length_unreliable : bool
        ``eta > 0.3``.
    """

    index: int
    omega: float
    wavenumber: float
    eta: float
    normalization: float
    residual: float
    effective_length_unreliable: bool


@dataclass(frozen=True)
class EffectiveLengthLinearization:
    """Linear model ``Delta d(Phi0_bias + dPhi) ~ delta_d0 + delta_d1 * dPhi``.

    Attributes
    ----------
    delta_d0 : float
        ``(Phi0/2pi)^2 / (l E_J0)`` (m).
    delta_d1 : float
        ``(Phi0/2pi) tan(pi bias) / (2 l E_J0)`` (m/Wb).
    bias : float
        Bias flux in units of ``Phi0``.
    """

    delta_d0: float
    delta_d1: float
    bias: float

    def evaluate(self, dflux):
        """Linear-model length correction at flux offset ``dflux`` (in ``Phi0``)."""
        return self.delta_d0 + self.delta_d1 * np.asarray(dflux) * CONSTANTS.flux_quantum


def _theta(spec: TunableResonatorSpec, omega):
    return end_phase(omega, spec.line.wave_speed, spec.line.ind_per_len, spec.load())


def _normalization(spec: TunableResonatorSpec, k: float, eta: float) -> float:
    line = spec.line
    d = line.length
    lj = spec.inductance
    num = 2.0 * (1.0 + spec.squid.capacitance / (line.cap_per_len * d))
    c = math.cos(k * d)
    # tangent form multiplied through by cos^2(kd) so it stays finite at the pole
    den = 1.0 + (lj / (line.ind_per_len * d)) * (1.0 + eta**2) / (1.0 - eta**2) ** 2 * c**2
    return abs(c) * math.sqrt(num / den)


def solve_modes(spec: TunableResonatorSpec, n_max: int,
                include_plasma_branch: bool = False) -> list[TunableMode]:
    """The first ``n_max`` eigenmodes, ascending.

    Roots of ``tan(omega d/v0) = -(omega/v0)(L_J/l)/(1 - eta^2)`` are found as
    the crossings ``k d + theta(omega) = n pi``, which never meet a pole.  By
    default only roots below the plasma frequency (``eta < 1``) are returned,
    so fewer than ``n_max`` modes come back when the plasma frequency is low.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    line = spec.line
    v, d = line.wave_speed, line.length
    w_j = spec.plasma_frequency
    load = spec.load()
    out = []
    n = 0
    while len(out) < n_max:
        n += 1
        (omega,) = single_end_roots(d, v, line.ind_per_len, load, [n])
        eta = omega / w_j
        if eta >= 1.0 and not include_plasma_branch:
            break
        k = omega / v
        theta = float(end_phase(omega, v, line.ind_per_len, load))
        out.append(TunableMode(
            index=n, omega=float(omega), wavenumber=float(k), eta=float(eta),
            normalization=_normalization(spec, k, eta) if eta != 1.0 else 0.0,
            residual=abs(math.sin(k * d + theta)),
            effective_length_unreliable=bool(eta > ETA_UNRELIABLE),
        ))
    if len(out) < n_max:
        warnings.warn(f"only {len(out)} of {n_max} modes lie below the plasma frequency",
                      RegimeWarning, stacklevel=2)
    return out


def effective_length(spec: TunableResonatorSpec) -> float:
    """``Delta d = L_J(Phi) / l`` (m)."""
    return spec.inductance / spec.line.ind_per_len


def approx_modes(spec: TunableResonatorSpec, n_max: int) -> list[tuple[int, float]]:
    """Effective-length wavenumbers ``k_n = n pi/(d + Delta d)`` for ``n = 1..n_max``."""
    length = spec.line.length + effective_length(spec)
    return [(n, n * math.pi / length) for n in range(1, n_max + 1)]


def linearize_length(ind_per_len: float, squid: SquidSpec, bias: float) -> EffectiveLengthLinearization:
    """Linearize the SQUID length correction about a bias flux.

    The zero-order term is the fixed value ``(Phi0/2pi)^2/(l E_J0)`` (twice the
    zero-flux ``L_J0/l``) and the slope is ``(Phi0/2pi) tan(pi bias)/(2 l E_J0)``
    per weber.  This is the linearization that underlies the quadratic
    coupling formulas; it is *not* the Taylor expansion of ``L_J(Phi)/l``,
    whose slope is larger by ``1/(2 cos(pi bias))`` -- see
    :func:`exact_length_slope`.
    """
    flux_cosine(bias)
    phi_red = CONSTANTS.flux_quantum / (2.0 * math.pi)
    lej = ind_per_len * squid.josephson_energy
    return EffectiveLengthLinearization(
        delta_d0=phi_red**2 / lej,
        delta_d1=0.5 * phi_red * math.tan(math.pi * bias) / lej,
        bias=bias,
    )


def exact_length_slope(ind_per_len: float, squid: SquidSpec, bias: float) -> float:
    """``d(L_J/l)/dPhi`` at the bias (m/Wb), from ``L_J = L_J0 |sec(pi Phi/Phi0)|``."""
    c = flux_cosine(bias)
    lj0 = squid.inductance0
    return (lj0 / ind_per_len) * math.pi / CONSTANTS.flux_quantum * math.tan(math.pi * bias) / abs(c)


def mode_function(spec: TunableResonatorSpec, mode: TunableMode, x, strict: bool = False,
                  derivative: bool = False):
    """``u_n(x) = N_n sin(k(x-d))/cos(kd)`` on ``0 <= x <= d``.

    Normalized so that ``c int u_n u_m + C_J u_n(0) u_m(0) = C_Sigma delta_nm``.
    At ``cos(kd) = 0`` (a mode exactly at the plasma frequency) the equivalent
    form ``sin(k x + theta)`` is used unless ``strict``.
    """
    x = np.asarray(x, dtype=float)
    d = spec.line.length
    if np.any(x < -1e-12 * d) or np.any(x > d * (1 + 1e-12)):
        raise OutOfDomain(f"x must lie in [0, {d!r}] m")
    return _continued(spec, mode, x, strict, derivative)


def _continued(spec, mode, x, strict, derivative=False):
    d, k = spec.line.length, mode.wavenumber
    c = math.cos(k * d)
    if abs(c) >= 1e-10:
        amp = mode.normalization / c
        f = np.cos if derivative else np.sin
        return amp * (k if derivative else 1.0) * f(k * (x - d))
    if strict:
        raise NearPole(f"mode {mode.index}: |cos(k d)| = {abs(c):.2e} < 1e-10")
    theta = float(_theta(spec, mode.omega))
    line = spec.line
    norm = (line.cap_per_len * integral_sin_squared(d, k, theta)
            + spec.squid.capacitance * math.sin(theta) ** 2)
    amp = math.sqrt(spec.total_capacitance / norm)
    if derivative:
        return amp * k * np.cos(k * x + theta)
    return amp * np.sin(k * x + theta)


def continued_mode_function(spec: TunableResonatorSpec, mode: TunableMode, x, derivative: bool = False):
    """``u_n`` analytically continued to any ``x`` (including ``x < 0``, past the SQUID)."""
    return _continued(spec, mode, np.asarray(x, dtype=float), False, derivative)


def virtual_end(spec: TunableResonatorSpec, mode: TunableMode) -> float:
    """Nearest zero below ``x = 0`` of the mode function continued past the SQUID (m).

    The continuation ``sin(k(x - d))`` vanishes at ``x = d - j pi/k``; this
    returns the largest such point that is ``< 0`` (always negative).
    """
    d, k = spec.line.length, mode.wavenumber
    j = math.floor(k * d / math.pi) + 1
    return d - j * math.pi / k
