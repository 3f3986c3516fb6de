import json
from pathlib import Path

import pytest

from quadcircuit import presets
from quadcircuit.analog import AnalogSystemSpec
from quadcircuit.errors import HalfQuantumFlux
from quadcircuit.params import CoupledPairSpec
from quadcircuit.specio import (SpecFormatError, build, load_spec, numeric_paths, set_path,
                                to_document)

SPECS = Path(__file__).resolve().parents[1] / "specs"


@pytest.mark.parametrize("name", ["fig9.json", "pair.json", "tunable.json", "cavity.json"])
def test_shipped_specs_load_and_roundtrip(name):
    doc = json.loads((SPECS / name).read_text())
    spec = load_spec(SPECS / name)
    again = to_document(spec)
    assert build(again) == spec
    assert again["kind"] == doc["kind"]


def test_fig9_matches_preset():
    assert load_spec(SPECS / "fig9.json") == presets.reference_system()


def test_pair_total_length_form():
    doc = {"schema": 1, "kind": "pair", "total_len_m": 1.0, "xi_m": 0.1, "coupling_cap_F": 1.0,
           "cap_per_m_F": 1.0, "ell_per_m_H": 1.0}
    assert build(doc) == CoupledPairSpec(0.6, 0.4, 1.0, 1.0, 1.0)


@pytest.mark.parametrize("mutate,match", [
    (lambda d: d.update(schema=2), "unsupported schema"),
    (lambda d: d.update(kind="laser"), "kind must be one of"),
    (lambda d: d["resonator_a"].pop("coupling_cap_F"), "missing key"),
    (lambda d: d["geometry"].update(radius_m=1.0), "unknown key"),
    (lambda d: d["resonator_a"].update(bias_flux_phi0="0.4"), "expected a number"),
    (lambda d: d["resonator_a"].update(bias_flux_phi0=True), "expected a number"),
])
def test_schema_errors(mutate, match):
    doc = to_document(presets.reference_system())
    mutate(doc)
    with pytest.raises(SpecFormatError, match=match):
        build(doc)


def test_physics_errors_pass_through():
    doc = to_document(presets.reference_system())
    doc["resonator_a"]["bias_flux_phi0"] = 0.5
    with pytest.raises(HalfQuantumFlux):
        build(doc)


def test_invalid_json(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(SpecFormatError, match="invalid JSON"):
        load_spec(bad)


def test_paths():
    doc = to_document(presets.reference_system())
    paths = numeric_paths(doc)
    assert "resonator_a.bias_flux_phi0" in paths and "schema" not in paths
    new = set_path(doc, "resonator_a.coupling_cap_F", 2e-15)
    assert new["resonator_a"]["coupling_cap_F"] == 2e-15
    assert doc["resonator_a"]["coupling_cap_F"] == 1e-15
    assert isinstance(build(new), AnalogSystemSpec)
    with pytest.raises(KeyError):
        set_path(doc, "resonator_a.line", 1.0)
