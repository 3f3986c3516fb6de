"""Eigenmodes of two grounded lines coupled through a series capacitor.

The series capacitor at ``x = 0`` acts on the standing waves like a fixed,
frequency-dependent semi-transparent mirror; moving it off-centre by
``xi = (d_L - d_R)/2`` shifts the mode frequencies quadratically in ``xi``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from ._eigen import TwoSegmentLine
from .errors import FixedPointNotConverged, NearPole, NonPositiveFrequency, OutOfDomain
from .params import CoupledPairSpec

__all__ = [
    "ScatteringAmplitudes",
    "ModeSolution",
    "ExpansionCoefficients",
    "scattering",
    "solve_modes",
    "expand_modes",
    "unperturbed_frequency",
    "exact_second_order",
    "mode_function",
    "mode_jump",
    "residual_tangent",
    "residual_phase",
    "NEAR_POLE_COS",
]

#: ``|cos(k d_{L,R})|`` below this switches the mode function to its limit form.
NEAR_POLE_COS = 1e-10


@dataclass(frozen=True)
class ScatteringAmplitudes:
    """Reflection and transmission amplitudes of the series capacitor."""

    reflectivity: complex
    transmissivity: complex


@dataclass(frozen=True)
class ModeSolution:
    """One eigenmode of a coupled pair.

    Attributes
    ----------
    index : int
        Mode number ``n >= 0``, ascending in frequency.
    omega : float
        Angular frequency (rad/s).
    wavenumber : float
        ``omega / v0`` (1/m).
    normalization : float
        Normalization constant ``N_n`` of the tangent-form mode function
        (0 when a segment sits exactly on a tangent pole).
    refl_abs : float
        ``|r(omega_n)|``.
    phase : float
        Scattering phase ``delta_n`` in ``(pi/2, pi]`` with ``cos = -|r|``, ``sin = |t|``.
    residual : float
        ``|F(omega_n)|`` of the pole-free eigen residual.
    """

    index: int
    omega: float
    wavenumber: float
    normalization: float
    refl_abs: float
    phase: float
    residual: float


@dataclass(frozen=True)
class ExpansionCoefficients:
    """Even-order Taylor coefficients of ``omega_n(xi)`` about ``xi = 0``."""

    omega0: float
    omega2: float
    omega4: float
    validity_extent: float

    def evaluate(self, xi):
        """``omega0 + omega2 xi^2 + omega4 xi^4``."""
        xi2 = np.asarray(xi, dtype=float) ** 2
        return self.omega0 + self.omega2 * xi2 + self.omega4 * xi2**2


def scattering(spec: CoupledPairSpec, omega) -> ScatteringAmplitudes:
    """Reflection and transmission amplitudes at angular frequency ``omega``.

    ``r = i x / (1 + i x)`` and ``t = -i / (1 + i x)`` with ``x = omega_c / (2 omega)``.
    Vectorised over ``omega``.
    """
    omega = np.asarray(omega, dtype=float)
    if np.any(~(omega > 0)):
        raise NonPositiveFrequency(f"omega must be > 0, got {omega!r}")
    x = spec.omega_c / (2.0 * omega)
    den = 1.0 + 1j * x
    r, t = 1j * x / den, -1j / den
    if np.ndim(r) == 0:
        r, t = complex(r), complex(t)
    return ScatteringAmplitudes(r, t)


def _line(spec: CoupledPairSpec) -> TwoSegmentLine:
    return TwoSegmentLine(spec.left_len, spec.right_len, spec.cap_per_len,
                          spec.ind_per_len, spec.coupling_cap)


def residual_tangent(spec: CoupledPairSpec, omega):
    """``omega_c/omega - tan(k d_L) - tan(k d_R)``; singular at the tangent poles."""
    omega = np.asarray(omega, dtype=float)
    k = omega / spec.wave_speed
    return spec.omega_c / omega - np.tan(k * spec.left_len) - np.tan(k * spec.right_len)


def residual_phase(spec: CoupledPairSpec, omega):
    """``cos(k d - delta) - |r| cos(2 k xi)``; the bounded equivalent of the tangent form."""
    omega = np.asarray(omega, dtype=float)
    k = omega / spec.wave_speed
    sc = scattering(spec, omega)
    r_abs, t_abs = np.abs(sc.reflectivity), np.abs(sc.transmissivity)
    delta = np.arctan2(t_abs, -r_abs)
    return (np.cos(k * spec.total_length - delta)
            - r_abs * np.cos(2.0 * k * spec.displacement))


def _normalization(spec: CoupledPairSpec, omega: float) -> float:
    """``N_n`` of the tangent-form mode function (0 at a tangent pole)."""
    v, d = spec.wave_speed, spec.total_length
    k = omega / v
    c_l, c_r = math.cos(k * spec.left_len), math.cos(k * spec.right_len)
    num = 2.0 * (1.0 + v / (spec.omega_c * d))
    # multiply through by cos_L^2 cos_R^2 so the expression stays finite at poles
    den = (spec.left_len / d * c_r**2 + spec.right_len / d * c_l**2
           + spec.omega_c / (k**2 * v * d) * c_l**2 * c_r**2)
    if den == 0.0:
        return 0.0
    return abs(c_l * c_r) * math.sqrt(num / den)


def solve_modes(spec: CoupledPairSpec, n_max: int) -> list[ModeSolution]:
    """The lowest ``n_max + 1`` eigenmodes, ascending in frequency.

    Roots are bracketed between consecutive tangent poles of the two segments
    (each bracket holds exactly one root) and polished with Brent's method on
    a residual that stays finite at the poles.

    Parameters
    ----------
    spec : CoupledPairSpec
    n_max : int
        Highest mode index returned.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    line = _line(spec)
    roots = line.roots(n_max + 1)
    out = []
    for n, omega in enumerate(roots):
        sc = scattering(spec, omega)
        r_abs, t_abs = abs(sc.reflectivity), abs(sc.transmissivity)
        out.append(ModeSolution(
            index=n,
            omega=float(omega),
            wavenumber=float(omega / spec.wave_speed),
            normalization=_normalization(spec, omega),
            refl_abs=r_abs,
            phase=math.atan2(t_abs, -r_abs),
            residual=abs(float(line.residual(omega))),
        ))
    return out


def unperturbed_frequency(n: int, total_length: float, wave_speed: float,
                          omega_c: float) -> float:
    """Mode frequency at ``xi = 0`` from its closed form.

    Odd ``n`` modes have a node at the capacitor and sit at ``n pi v/d``.
    Even ``n`` modes solve ``omega d/v = (n+1) pi - 2 arccos|r(omega)|``, with
    ``arccos|r| = arctan(2 omega/omega_c)``; this is solved self-consistently
    by Brent's method on the monotone residual.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    base = math.pi * wave_speed / total_length
    if n % 2:
        return n * base

    def h(w):
        return w / base - (n + 1) + 2.0 / math.pi * math.atan(2.0 * w / omega_c)

    lo, hi = n * base, (n + 1) * base
    try:
        if n == 0:
            lo = 0.0
        return brentq(h, lo, hi, xtol=1e-300, rtol=1e-15, maxiter=500)
    except ValueError as exc:  # pragma: no cover - bracket is analytic
        raise FixedPointNotConverged(
            f"self-consistent frequency for n={n} not bracketed in [{lo!r}, {hi!r}]") from exc


def expand_modes(spec: CoupledPairSpec, n: int) -> ExpansionCoefficients:
    """Quadratic and quartic coefficients of ``omega_n(xi)`` and the validity extent.

    Uses the total length and ``omega_c`` of ``spec``; its displacement is ignored.
    The validity extent ``xi*`` is where the quartic term reaches ``1e-2 v0/d``.
    """
    d, v, wc = spec.total_length, spec.wave_speed, spec.omega_c
    w0 = unperturbed_frequency(n, d, v, wc)
    sign = -1.0 if n % 2 else 1.0
    w2 = -sign * w0 * wc / (v * d)
    w4 = sign * w0 * wc**3 / (12.0 * v**3 * d) * (1.0 + 4.0 * w0**2 / wc**2)
    xi_star = v * (0.12 / (w0 * wc**3 + 4.0 * w0**3 * wc)) ** 0.25
    return ExpansionCoefficients(w0, w2, w4, xi_star)


def exact_second_order(spec: CoupledPairSpec, n: int) -> float:
    """Exact ``d omega_n / d(xi^2)`` at ``xi = 0`` by implicit differentiation.

    :func:`expand_modes` returns the weak-coupling (``omega_c >> omega``) form of
    this coefficient; the two agree exactly for odd ``n``.  Useful as a
    diagnostic when ``omega_c`` is comparable to the mode frequency.
    """
    d, v, wc = spec.total_length, spec.wave_speed, spec.omega_c
    w = unperturbed_frequency(n, d, v, wc)
    k = w / v
    # F(w, xi) = (w/wc) sin(kd) - [cos(kd) + cos(2 k xi)]/2
    df_dw = math.sin(k * d) / wc + (w / wc) * (d / v) * math.cos(k * d) + 0.5 * (d / v) * math.sin(k * d)
    return -(k**2) / df_dw


def _limit_amplitudes(spec: CoupledPairSpec, mode: ModeSolution) -> tuple[float, float]:
    """Amplitudes of ``sin(k(x+d_L))`` and ``sin(k(x-d_R))`` from the regular form."""
    a_l, a_r = _line(spec).amplitudes(mode.omega)
    return a_l, -a_r


def _amplitudes(spec: CoupledPairSpec, mode: ModeSolution, strict: bool) -> tuple[float, float]:
    k = mode.wavenumber
    c_l, c_r = math.cos(k * spec.left_len), math.cos(k * spec.right_len)
    if min(abs(c_l), abs(c_r)) >= NEAR_POLE_COS:
        return mode.normalization / c_l, mode.normalization / c_r
    if strict:
        raise NearPole(
            f"mode {mode.index}: |cos(k d_L)| = {abs(c_l):.2e}, |cos(k d_R)| = {abs(c_r):.2e} "
            f"< {NEAR_POLE_COS:g}; the tangent-form normalization degenerates")
    return _limit_amplitudes(spec, mode)


def mode_function(spec: CoupledPairSpec, mode: ModeSolution, x, derivative: bool = False,
                  strict: bool = False):
    """Normalized mode function ``u_n(x)`` on ``[-d_L, d_R]``.

    ``u_n = N_n sin(k(x + d_L))/cos(k d_L)`` for ``x < 0`` and
    ``N_n sin(k(x - d_R))/cos(k d_R)`` for ``x >= 0`` (so ``x = 0`` returns the
    right-hand limit).  Normalization: ``c int u_n u_m + C_c du_n du_m = C_Sigma delta_nm``.

    When a segment sits within ``1e-10`` of a tangent pole the tangent form is
    0/0; the same function is then evaluated from the matching conditions at
    the capacitor (``strict=True`` raises :class:`NearPole` instead).

    Parameters
    ----------
    derivative : bool
        Return ``du/dx`` (1/m) instead.
    """
    x = np.asarray(x, dtype=float)
    if np.any(x < -spec.left_len * (1 + 1e-12)) or np.any(x > spec.right_len * (1 + 1e-12)):
        raise OutOfDomain(f"x must lie in [{-spec.left_len!r}, {spec.right_len!r}] m")
    a_l, a_r = _amplitudes(spec, mode, strict)
    k = mode.wavenumber
    if derivative:
        return np.where(x < 0, a_l * k * np.cos(k * (x + spec.left_len)),
                        a_r * k * np.cos(k * (x - spec.right_len)))
    return np.where(x < 0, a_l * np.sin(k * (x + spec.left_len)),
                    a_r * np.sin(k * (x - spec.right_len)))


def mode_jump(spec: CoupledPairSpec, mode: ModeSolution) -> float:
    """``u_n(0+) - u_n(0-)``, the voltage-like discontinuity across the capacitor."""
    a_l, a_r = _amplitudes(spec, mode, strict=False)
    k = mode.wavenumber
    return a_r * math.sin(-k * spec.right_len) - a_l * math.sin(k * spec.left_len)
