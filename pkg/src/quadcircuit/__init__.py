"""Superconducting-circuit analog of quadratic optomechanics.

Modules
-------
params
    Constants and circuit specification records.
membrane
    Modes of two capacitively coupled resonators (fixed semi-transparent membrane).
squid
    Modes and effective length of a SQUID-terminated resonator (movable mirror).
analog
    Combined system: flux-dependent spectrum, inductive coupling, Hamiltonian parameters.
validity
    Amplitude and photon-number bounds for the quadratic regime.
sweep
    Figure datasets and the constrained design search.
"""
from . import analog, membrane, params, squid, sweep, validity
from .analog import AnalogSystemSpec, CouplingReport, coupling_strength
from .errors import PhysicsError, RegimeWarning
from .params import (CONSTANTS, CavityBaselineSpec, CoupledPairSpec, LoopGeometry, ResonatorASpec,
                     ResonatorBSpec, SquidSpec, TransmissionLineSpec)
from .specio import load_spec

__version__ = "0.1.0"

__all__ = [
    "analog", "membrane", "params", "squid", "sweep", "validity",
    "AnalogSystemSpec", "CouplingReport", "coupling_strength", "PhysicsError", "RegimeWarning",
    "CONSTANTS", "CavityBaselineSpec", "CoupledPairSpec", "LoopGeometry", "ResonatorASpec",
    "ResonatorBSpec", "SquidSpec", "TransmissionLineSpec", "load_spec",
]
