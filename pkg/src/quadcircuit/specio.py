"""JSON circuit specification documents (``"schema": 1``).

Every numeric key carries its SI unit as a suffix (``_m``, ``_F``, ``_H``,
``_J``, ``_kg``, ``_rad_s``) or ``_phi0`` for flux in units of the flux
quantum.  See ``docs/spec_schema.md`` for the full key list.
"""
from __future__ import annotations

import copy
import json
from pathlib import Path

from .analog import AnalogSystemSpec
from .params import (CavityBaselineSpec, CoupledPairSpec, LoopGeometry, ResonatorASpec,
                     ResonatorBSpec, SquidSpec, TransmissionLineSpec)
from .squid import TunableResonatorSpec

__all__ = ["SpecFormatError", "SCHEMA_VERSION", "load_document", "build", "load_spec",
           "to_document", "get_path", "set_path", "numeric_paths"]

SCHEMA_VERSION = 1


class SpecFormatError(ValueError):
    """A specification document does not match the schema."""


_LINE = {"length_m", "cap_per_m_F", "ell_per_m_H"}
_SQUID = {"josephson_energy_J", "capacitance_F"}
_GEOMETRY = {"z0_m", "s1_m", "s2_m", "width_m"}
_CAVITY = {"cavity_len_m", "reflectivity", "wavelength_m", "mass_kg", "mech_freq_rad_s"}


def _keys(section: dict, required: set, where: str, optional: set = frozenset()) -> None:
    if not isinstance(section, dict):
        raise SpecFormatError(f"{where}: expected an object, got {type(section).__name__}")
    missing = required - section.keys()
    if missing:
        raise SpecFormatError(f"{where}: missing key(s) {sorted(missing)}")
    unknown = section.keys() - required - optional
    if unknown:
        raise SpecFormatError(f"{where}: unknown key(s) {sorted(unknown)}")


def _num(section: dict, key: str, where: str) -> float:
    value = section[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SpecFormatError(f"{where}.{key}: expected a number, got {value!r}")
    return float(value)


def _line(doc, where) -> TransmissionLineSpec:
    _keys(doc, _LINE, where)
    return TransmissionLineSpec(_num(doc, "length_m", where), _num(doc, "cap_per_m_F", where),
                                _num(doc, "ell_per_m_H", where))


def _squid(doc, where) -> SquidSpec:
    _keys(doc, _SQUID, where)
    return SquidSpec(_num(doc, "josephson_energy_J", where), _num(doc, "capacitance_F", where))


def _pair(doc) -> CoupledPairSpec:
    common = {"coupling_cap_F", "cap_per_m_F", "ell_per_m_H"}
    if "total_len_m" in doc:
        _keys(doc, common | {"total_len_m"}, "pair", optional={"xi_m"})
        return CoupledPairSpec.from_displacement(
            _num(doc, "total_len_m", "pair"), _num(doc, "xi_m", "pair") if "xi_m" in doc else 0.0,
            _num(doc, "coupling_cap_F", "pair"), _num(doc, "cap_per_m_F", "pair"),
            _num(doc, "ell_per_m_H", "pair"))
    _keys(doc, common | {"left_len_m", "right_len_m"}, "pair")
    return CoupledPairSpec(*(_num(doc, k, "pair") for k in
                             ("left_len_m", "right_len_m", "coupling_cap_F", "cap_per_m_F",
                              "ell_per_m_H")))


def _tunable(doc) -> TunableResonatorSpec:
    _keys(doc, {"line", "squid", "flux_phi0"}, "tunable")
    return TunableResonatorSpec(_line(doc["line"], "tunable.line"),
                                _squid(doc["squid"], "tunable.squid"),
                                _num(doc, "flux_phi0", "tunable"))


def _analog(doc) -> AnalogSystemSpec:
    _keys(doc, {"resonator_a", "resonator_b", "geometry"}, "analog")
    ra = doc["resonator_a"]
    _keys(ra, {"line", "coupling_cap_F", "squid", "bias_flux_phi0"}, "resonator_a")
    res_a = ResonatorASpec(_line(ra["line"], "resonator_a.line"),
                           _num(ra, "coupling_cap_F", "resonator_a"),
                           _squid(ra["squid"], "resonator_a.squid"),
                           _num(ra, "bias_flux_phi0", "resonator_a"))
    rb = doc["resonator_b"]
    _keys(rb, {"line"}, "resonator_b")
    res_b = ResonatorBSpec(_line(rb["line"], "resonator_b.line"))
    geo = doc["geometry"]
    _keys(geo, _GEOMETRY, "geometry")
    geometry = LoopGeometry(*(_num(geo, k, "geometry") for k in ("z0_m", "s1_m", "s2_m", "width_m")))
    return AnalogSystemSpec(res_a, res_b, geometry)


def _cavity(doc) -> CavityBaselineSpec:
    _keys(doc, _CAVITY, "cavity")
    return CavityBaselineSpec(*(_num(doc, k, "cavity") for k in
                                ("cavity_len_m", "reflectivity", "wavelength_m", "mass_kg",
                                 "mech_freq_rad_s")))


_BUILDERS = {"pair": _pair, "tunable": _tunable, "analog": _analog, "cavity": _cavity}


def _strip(doc: dict) -> tuple[str, dict]:
    if not isinstance(doc, dict):
        raise SpecFormatError("specification must be a JSON object")
    if doc.get("schema") != SCHEMA_VERSION:
        raise SpecFormatError(f"unsupported schema {doc.get('schema')!r}; expected {SCHEMA_VERSION}")
    kind = doc.get("kind")
    if kind not in _BUILDERS:
        raise SpecFormatError(f"kind must be one of {sorted(_BUILDERS)}, got {kind!r}")
    body = {k: v for k, v in doc.items() if k not in ("schema", "kind", "description")}
    return kind, body


def load_document(path) -> dict:
    """Read a specification document from ``path`` without building it."""
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SpecFormatError(f"{path}: invalid JSON ({exc})") from exc


def build(doc: dict):
    """Construct the spec object described by ``doc``."""
    kind, body = _strip(doc)
    return _BUILDERS[kind](body)


def load_spec(path):
    """Load and build a specification file."""
    return build(load_document(Path(path)))


def _line_doc(line: TransmissionLineSpec) -> dict:
    return {"length_m": line.length, "cap_per_m_F": line.cap_per_len, "ell_per_m_H": line.ind_per_len}


def _squid_doc(squid: SquidSpec) -> dict:
    return {"josephson_energy_J": squid.josephson_energy, "capacitance_F": squid.capacitance}


def to_document(spec) -> dict:
    """Inverse of :func:`build`."""
    head = {"schema": SCHEMA_VERSION}
    if isinstance(spec, CoupledPairSpec):
        return {**head, "kind": "pair", "left_len_m": spec.left_len, "right_len_m": spec.right_len,
                "coupling_cap_F": spec.coupling_cap, "cap_per_m_F": spec.cap_per_len,
                "ell_per_m_H": spec.ind_per_len}
    if isinstance(spec, TunableResonatorSpec):
        return {**head, "kind": "tunable", "line": _line_doc(spec.line),
                "squid": _squid_doc(spec.squid), "flux_phi0": spec.flux}
    if isinstance(spec, AnalogSystemSpec):
        a, g = spec.res_a, spec.geometry
        return {**head, "kind": "analog",
                "resonator_a": {"line": _line_doc(a.line), "coupling_cap_F": a.coupling_cap,
                                "squid": _squid_doc(a.squid), "bias_flux_phi0": a.bias_flux},
                "resonator_b": {"line": _line_doc(spec.res_b.line)},
                "geometry": {"z0_m": g.z0, "s1_m": g.s1, "s2_m": g.s2, "width_m": g.width}}
    if isinstance(spec, CavityBaselineSpec):
        return {**head, "kind": "cavity", "cavity_len_m": spec.cavity_len,
                "reflectivity": spec.reflectivity, "wavelength_m": spec.wavelength,
                "mass_kg": spec.mass, "mech_freq_rad_s": spec.mech_freq}
    raise TypeError(f"cannot serialize {type(spec).__name__}")


def numeric_paths(doc: dict, prefix: str = "") -> list[str]:
    """Dotted paths of every numeric leaf (``schema`` excluded)."""
    out = []
    for key, value in doc.items():
        path = f"{prefix}{key}"
        if isinstance(value, dict):
            out.extend(numeric_paths(value, path + "."))
        elif isinstance(value, (int, float)) and not isinstance(value, bool) and key != "schema":
            out.append(path)
    return out


def get_path(doc: dict, path: str):
    node = doc
    for part in path.split("."):
        if not isinstance(node, dict) or part not in node:
            raise KeyError(path)
        node = node[part]
    return node


def set_path(doc: dict, path: str, value: float) -> dict:
    """Copy of ``doc`` with the numeric leaf at ``path`` replaced."""
    if path not in numeric_paths(doc):
        raise KeyError(path)
    out = copy.deepcopy(doc)
    node = out
    parts = path.split(".")
    for part in parts[:-1]:
        node = node[part]
    node[parts[-1]] = float(value)
    return out
