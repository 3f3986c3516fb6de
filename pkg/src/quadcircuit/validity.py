"""How hard resonator B may be driven before the coupling stops being quadratic.

The quadratic form of the coupling holds while the effective displacement of
the middle capacitor stays inside resonator A's validity extent ``xi_n*``.
Expressed in resonator-B quadrature units this is the amplitude bound ``X*``;
a state is compatible when ``max |<X>| + Delta X <= X*``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import analog
from .analog import AnalogSystemSpec, ResonatorBMode
from .errors import DegenerateSpec, NonPositiveTemperature, SubVacuumBound
from .params import CONSTANTS

__all__ = [
    "UNCONSTRAINED",
    "StateSpec",
    "QuadratureStats",
    "StateCheck",
    "PhotonBound",
    "maximal_amplitude",
    "quadrature_stats",
    "check_state",
    "max_photon_number",
]

#: Amplitude bound returned when the bias has no flux sensitivity (no coupling at all).
UNCONSTRAINED = math.inf

KINDS = ("vacuum", "thermal", "coherent")


@dataclass(frozen=True)
class StateSpec:
    """Resonator-B state: ``vacuum``, ``thermal`` (temperature in K) or ``coherent`` (amplitude beta)."""

    kind: str
    mode: ResonatorBMode | None = None
    temperature: float | None = None
    beta: complex = 0j

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DegenerateSpec(f"state kind must be one of {KINDS}, got {self.kind!r}")
        if self.kind == "thermal":
            if self.mode is None:
                raise DegenerateSpec("a thermal state needs the resonator-B mode for its frequency")
            if self.temperature is None or not self.temperature > 0:
                raise NonPositiveTemperature(f"temperature must be > 0 K, got {self.temperature!r}")
        if self.kind == "coherent" and not cmath.isfinite(complex(self.beta)):
            raise DegenerateSpec(f"coherent amplitude must be finite, got {self.beta!r}")

    @classmethod
    def vacuum(cls, mode: ResonatorBMode | None = None) -> "StateSpec":
        return cls("vacuum", mode)

    @classmethod
    def thermal(cls, mode: ResonatorBMode, temperature: float) -> "StateSpec":
        return cls("thermal", mode, temperature=temperature)

    @classmethod
    def coherent(cls, beta: complex, mode: ResonatorBMode | None = None) -> "StateSpec":
        return cls("coherent", mode, beta=complex(beta))


@dataclass(frozen=True)
class QuadratureStats:
    """Moments of ``X = b + b^dag``.

    ``max_over_cycle`` is the largest ``|<X(t)>|`` over one oscillation period.
    """

    mean: float
    fluctuation: float
    max_over_cycle: float


@dataclass(frozen=True)
class StateCheck:
    passed: bool
    margin: float


@dataclass(frozen=True)
class PhotonBound:
    """Largest mean photon number allowed by ``X*``; ``temperature`` only for thermal states (K)."""

    n_max: float
    temperature: float | None = None


def maximal_amplitude(spec: AnalogSystemSpec, n: int, m: int, method: str = "simplified") -> float:
    """``X*_nm = xi_n* / |Delta d1 G_m|``; :data:`UNCONSTRAINED` at zero flux sensitivity."""
    return analog.coupling_strength(spec, n, m, method).x_star


def quadrature_stats(state: StateSpec, time: float = 0.0) -> QuadratureStats:
    """Mean, standard deviation and cycle maximum of the position quadrature.

    For a coherent state the mean is ``2|beta| cos(arg(beta) - Omega t)``
    (``t`` is ignored when the state carries no mode).
    """
    if state.kind == "vacuum":
        return QuadratureStats(0.0, 1.0, 0.0)
    if state.kind == "thermal":
        if not state.temperature > 0:
            raise NonPositiveTemperature(f"temperature must be > 0 K, got {state.temperature!r}")
        x = CONSTANTS.hbar * state.mode.Omega / (2.0 * CONSTANTS.boltzmann * state.temperature)
        return QuadratureStats(0.0, math.sqrt(1.0 / math.tanh(x)), 0.0)
    amp, phase = abs(state.beta), cmath.phase(state.beta)
    omega_t = state.mode.Omega * time if state.mode is not None else 0.0
    return QuadratureStats(2.0 * amp * math.cos(phase - omega_t), 1.0, 2.0 * amp)


def check_state(state: StateSpec, x_star: float) -> StateCheck:
    """Pass iff ``max_over_cycle + Delta X <= X*``; ``margin = X* - (max_over_cycle + Delta X)``."""
    stats = quadrature_stats(state)
    margin = x_star - (stats.max_over_cycle + stats.fluctuation)
    return StateCheck(margin >= 0, margin)


def max_photon_number(kind: str, x_star: float, Omega: float | None = None) -> PhotonBound:
    """Photon-number ceiling for a thermal or coherent state under ``X*``.

    ``X* = 1`` admits only the vacuum (``n_max = 0``, ``T_max = 0``).

    thermal: ``((X*)^2 - 1)/2``, reached at the temperature where
    ``coth(hbar Omega/2 k_B T) = (X*)^2`` (closed form, needs ``Omega``);
    coherent: ``(X* - 1)^2/4``.
    """
    if kind not in ("thermal", "coherent"):
        raise DegenerateSpec(f"kind must be 'thermal' or 'coherent', got {kind!r}")
    if not x_star >= 1:
        raise SubVacuumBound(f"X* = {x_star!r} < 1: even vacuum fluctuations break the bound")
    if x_star == 1:
        return PhotonBound(0.0, 0.0 if kind == "thermal" and Omega is not None else None)
    if kind == "coherent":
        return PhotonBound((x_star - 1.0) ** 2 / 4.0)
    if math.isinf(x_star):
        return PhotonBound(math.inf, math.inf if Omega is not None else None)
    n_bar = (x_star**2 - 1.0) / 2.0
    if Omega is None:
        return PhotonBound(n_bar)
    t_max = CONSTANTS.hbar * Omega / (2.0 * CONSTANTS.boltzmann * math.atanh(1.0 / x_star**2))
    return PhotonBound(n_bar, t_max)
