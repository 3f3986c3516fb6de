"""Shared eigenvalue machinery for one- and two-segment line resonators.

A segment of length ``a`` terminated at its outer end by a lumped load
(inductance ``L`` in parallel with capacitance ``C`` to ground, or a short when
``L = 0``) carries the standing wave ``u = A sin(k y + theta(omega))`` with
``y`` measured from the loaded end and ``tan(theta) = k L / (l (1 - L C w^2))``.
``theta`` is taken in ``[0, pi)`` so it stays continuous through the load's
plasma resonance.

Two such segments joined through a series capacitor ``C_c`` have the
eigenvalue condition ``F(omega) = 0`` with the pole-free residual::

    F = (omega/omega_c) sin(Phi_L + Phi_R) - cos(Phi_L) cos(Phi_R),
    Phi_a = k a_a + theta_a(omega).

``F = rho cos(Phi_L) cos(Phi_R) G`` with ``G = tan Phi_L + tan Phi_R - omega_c/omega``
strictly increasing between consecutive poles of the tangents, so every
inter-pole interval (the first one starting at 0) holds exactly one root; a
zero-length interval (coincident poles) has its root at the pole.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import DegenerateSpec, OutOfDomain, RootNotBracketed

#: Relative root tolerance in omega.
ROOT_RTOL = 1e-14
#: Poles closer than this (relative) are treated as coincident.
POLE_MERGE_RTOL = 1e-13


@dataclass(frozen=True)
class EndLoad:
    """Lumped termination at a line end; ``inductance = 0`` is a short to ground."""

    inductance: float = 0.0
    capacitance: float = 0.0


SHORT = EndLoad()


def end_phase(omega, wave_speed: float, ind_per_len: float, load: EndLoad):
    """Boundary phase ``theta(omega)`` in ``[0, pi)`` of a loaded line end."""
    omega = np.asarray(omega, dtype=float)
    num = omega / wave_speed * load.inductance
    den = ind_per_len * (1.0 - load.inductance * load.capacitance * omega**2)
    return np.arctan2(num, den)


def _phase_crossing(target: float, length: float, wave_speed: float,
                    ind_per_len: float, load: EndLoad) -> float:
    """Frequency where ``k*length + theta(omega)`` equals ``target``."""
    if load.inductance == 0.0:
        return target * wave_speed / length
    hi = target * wave_speed / length
    lo = max(0.0, (target - math.pi) * wave_speed / length)

    def f(w):
        return w * length / wave_speed + float(end_phase(w, wave_speed, ind_per_len, load)) - target

    if f(hi) == 0.0:
        return hi
    return brentq(f, lo, hi, xtol=1e-300, rtol=ROOT_RTOL, maxiter=500)


def integral_sin_squared(a: float, k: float, theta: float) -> float:
    """``int_0^a sin^2(k y + theta) dy``."""
    return 0.5 * a - (math.sin(2.0 * (k * a + theta)) - math.sin(2.0 * theta)) / (4.0 * k)


@dataclass(frozen=True)
class TwoSegmentLine:
    """Two loaded segments joined by a series capacitor at ``x = 0``.

    The left segment spans ``[-left_len, 0]``, the right one ``[0, right_len]``.
    """

    left_len: float
    right_len: float
    cap_per_len: float
    ind_per_len: float
    coupling_cap: float
    left_load: EndLoad = SHORT
    right_load: EndLoad = SHORT

    def __post_init__(self):
        for name in ("left_len", "right_len", "cap_per_len", "ind_per_len", "coupling_cap"):
            value = getattr(self, name)
            if not (np.isfinite(value) and value > 0):
                raise DegenerateSpec(f"{name} must be finite and > 0, got {value!r}")

    @property
    def wave_speed(self) -> float:
        return 1.0 / math.sqrt(self.ind_per_len * self.cap_per_len)

    @property
    def omega_c(self) -> float:
        return 1.0 / (math.sqrt(self.ind_per_len / self.cap_per_len) * self.coupling_cap)

    @property
    def total_capacitance(self) -> float:
        return (self.cap_per_len * (self.left_len + self.right_len) + self.coupling_cap
                + self.left_load.capacitance + self.right_load.capacitance)

    def thetas(self, omega):
        v, l = self.wave_speed, self.ind_per_len
        return end_phase(omega, v, l, self.left_load), end_phase(omega, v, l, self.right_load)

    def phases(self, omega):
        """Total phases ``(Phi_L, Phi_R)`` accumulated up to the capacitor."""
        k = np.asarray(omega, dtype=float) / self.wave_speed
        th_l, th_r = self.thetas(omega)
        return k * self.left_len + th_l, k * self.right_len + th_r

    def residual(self, omega):
        """Pole-free residual ``F(omega)``; vectorised over ``omega``."""
        omega = np.asarray(omega, dtype=float)
        p_l, p_r = self.phases(omega)
        return (omega / self.omega_c) * np.sin(p_l + p_r) - np.cos(p_l) * np.cos(p_r)

    def poles(self, count: int) -> np.ndarray:
        """The ``count`` lowest tangent poles of either segment, sorted, with multiplicity."""
        v, l = self.wave_speed, self.ind_per_len
        out = []
        for length, load in ((self.left_len, self.left_load), (self.right_len, self.right_load)):
            for j in range(count):
                out.append(_phase_crossing(math.pi * (j + 0.5), length, v, l, load))
        out = np.sort(np.asarray(out))[:count]
        # snap near-coincident pairs onto one value so the interval has zero length
        for i in range(1, out.size):
            if out[i] - out[i - 1] <= POLE_MERGE_RTOL * out[i]:
                out[i] = out[i - 1]
        return out

    def roots(self, count: int) -> np.ndarray:
        """The ``count`` lowest positive eigenfrequencies (rad/s), ascending."""
        if count < 1:
            raise ValueError(f"count must be >= 1, got {count}")
        edges = np.concatenate(([0.0], self.poles(count)))
        out = np.empty(count)
        # an edge shared by two poles carries a root of its own; F there is rounding noise
        shared = np.zeros(edges.size, dtype=bool)
        shared[1:] |= edges[1:] == edges[:-1]
        shared[:-1] |= edges[:-1] == edges[1:]
        for i in range(count):
            lo, hi = edges[i], edges[i + 1]
            out[i] = self._root_in(lo, hi, noisy_edge=bool(shared[i] or shared[i + 1]))
        return out

    def _root_in(self, lo: float, hi: float, noisy_edge: bool = False) -> float:
        if hi == lo:
            return hi
        span = hi - lo
        # Step inward until the guaranteed sign change shows up; never trust
        # the edge value itself at a coincident pole pair.
        fracs = (1e-12, 1e-9, 1e-6) if noisy_edge else (0.0, 1e-12, 1e-9, 1e-6)
        for frac in fracs:
            a, b = lo + frac * span, hi - frac * span
            f_a, f_b = float(self.residual(a)), float(self.residual(b))
            if f_a * f_b < 0:
                return brentq(lambda w: float(self.residual(w)), a, b,
                              xtol=1e-300, rtol=ROOT_RTOL, maxiter=500)
        if span <= 1e-12 * hi:
            return 0.5 * (lo + hi)
        raise RootNotBracketed(
            f"no sign change of the eigen residual on [{lo!r}, {hi!r}] rad/s "
            f"(F = {f_a:.3e}, {f_b:.3e})"
        )

    # ------------------------------------------------------------------ modes
    def amplitudes(self, omega: float) -> tuple[float, float]:
        """Normalized amplitudes ``(A_L, A_R)`` of the eigenmode at ``omega``.

        The segments carry ``A_L sin(k(x + a_L) + theta_L)`` and
        ``A_R sin(k(a_R - x) + theta_R)``.  The amplitude ratio is the null
        vector of the matching conditions at the capacitor; the overall scale
        satisfies ``c int u^2 + C_c (du)^2 + sum C_J u_end^2 = C_Sigma``.  The
        sign is fixed so that ``A_L >= 0`` (``A_R > 0`` if ``A_L = 0``).
        """
        k = omega / self.wave_speed
        th_l, th_r = (float(t) for t in self.thetas(omega))
        p_l, p_r = k * self.left_len + th_l, k * self.right_len + th_r
        rho = omega / self.omega_c
        mat = np.array([[math.cos(p_l), math.cos(p_r)],
                        [rho * math.sin(p_l) - math.cos(p_l), -rho * math.sin(p_r)]])
        _, _, vt = np.linalg.svd(mat)
        a_l, a_r = vt[-1]
        jump = a_r * math.sin(p_r) - a_l * math.sin(p_l)
        norm = (self.cap_per_len * (a_l**2 * integral_sin_squared(self.left_len, k, th_l)
                                    + a_r**2 * integral_sin_squared(self.right_len, k, th_r))
                + self.coupling_cap * jump**2
                + self.left_load.capacitance * (a_l * math.sin(th_l))**2
                + self.right_load.capacitance * (a_r * math.sin(th_r))**2)
        s = math.sqrt(self.total_capacitance / norm)
        if a_l < 0 or (a_l == 0 and a_r < 0):
            s = -s
        return a_l * s, a_r * s

    def evaluate(self, omega: float, amps: tuple[float, float], x, derivative: bool = False):
        """Mode function (or its ``x`` derivative) at positions ``x``.

        At ``x = 0`` the right-segment value ``u(0+)`` is returned.
        """
        x = np.asarray(x, dtype=float)
        if np.any(x < -self.left_len * (1 + 1e-12)) or np.any(x > self.right_len * (1 + 1e-12)):
            raise OutOfDomain(f"x must lie in [{-self.left_len!r}, {self.right_len!r}]")
        k = omega / self.wave_speed
        th_l, th_r = (float(t) for t in self.thetas(omega))
        a_l, a_r = amps
        arg_l = k * (x + self.left_len) + th_l
        arg_r = k * (self.right_len - x) + th_r
        if derivative:
            return np.where(x < 0, a_l * k * np.cos(arg_l), -a_r * k * np.cos(arg_r))
        return np.where(x < 0, a_l * np.sin(arg_l), a_r * np.sin(arg_r))

    def edge_values(self, omega: float, amps: tuple[float, float]):
        """``(u(-a_L), u(0-), u(0+), u(a_R))``."""
        k = omega / self.wave_speed
        th_l, th_r = (float(t) for t in self.thetas(omega))
        a_l, a_r = amps
        return (a_l * math.sin(th_l), a_l * math.sin(k * self.left_len + th_l),
                a_r * math.sin(k * self.right_len + th_r), a_r * math.sin(th_r))


def single_end_roots(length: float, wave_speed: float, ind_per_len: float,
                     load: EndLoad, indices) -> np.ndarray:
    """Roots of ``k length + theta(omega) = n pi`` for each ``n`` in ``indices``.

    This is the eigenvalue condition of a line loaded at one end and shorted at
    the other.  Each root lies in ``((n-1) pi v/length, n pi v/length]``.
    """
    return np.array([_phase_crossing(math.pi * n, length, wave_speed, ind_per_len, load)
                     for n in indices])
