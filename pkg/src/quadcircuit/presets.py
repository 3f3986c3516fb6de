"""Ready-made circuit specifications used in the demos, tests and CLI defaults."""
from __future__ import annotations

import math

from .analog import AnalogSystemSpec
from .params import (CavityBaselineSpec, LoopGeometry, ResonatorASpec, ResonatorBSpec,
                     SquidSpec, TransmissionLineSpec)

__all__ = ["reference_system", "reference_geometry", "membrane_cavity", "LINE_IND", "LINE_CAP"]

#: Coplanar-waveguide line constants (H/m, F/m) shared by both resonators.
LINE_IND = 4.57e-7
LINE_CAP = 1.46e-10


def reference_geometry(d_b: float = 0.4, area_ratio: float = 1e-3, s1: float = 50e-6,
                       s2: float = 55e-6) -> LoopGeometry:
    """Loops at the ``m = 2`` current antinode ``z0 = d_B/4``.

    The loop width follows from the normalized area ``A/(d_B s1) = area_ratio``.
    """
    area = area_ratio * d_b * s1
    return LoopGeometry(z0=d_b / 4, s1=s1, s2=s2, width=area / (s2 - s1))


def reference_system(bias_flux: float = 0.4, coupling_cap: float = 1e-15,
                     area_ratio: float = 1e-3, d_a: float = 0.02, d_b: float = 0.4,
                     josephson_energy: float = 6.17e-22, squid_cap: float = 30e-15) -> AnalogSystemSpec:
    """20 mm resonator A, 400 mm resonator B, 1 fF middle capacitor, 30 fF SQUIDs."""
    res_a = ResonatorASpec(TransmissionLineSpec(d_a, LINE_CAP, LINE_IND), coupling_cap,
                           SquidSpec(josephson_energy, squid_cap), bias_flux)
    res_b = ResonatorBSpec(TransmissionLineSpec(d_b, LINE_CAP, LINE_IND))
    return AnalogSystemSpec(res_a, res_b, reference_geometry(d_b, area_ratio))


def membrane_cavity(mass: float = 5e-14) -> CavityBaselineSpec:
    """6.7 cm cavity, r = 0.999 membrane, 532 nm light, 100 kHz mechanics (mass in kg)."""
    return CavityBaselineSpec(cavity_len=0.067, reflectivity=0.999, wavelength=532e-9,
                              mass=mass, mech_freq=2 * math.pi * 1e5)
