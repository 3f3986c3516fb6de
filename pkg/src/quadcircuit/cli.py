"""``quadcircuit`` command-line interface.

Exit status: 0 on success, 1 when the physics rejects the input (for example
a half-quantum flux bias), 2 on usage errors (bad flags, malformed spec files
or sweep plans).
"""
from __future__ import annotations

import argparse
import json
import math
import sys
import warnings
from dataclasses import replace

from . import analog, membrane, presets, validity
from .errors import PhysicsError, PlanInvalid, RegimeWarning
from .params import CoupledPairSpec
from .specio import SpecFormatError, build, load_document, to_document
from .sweep import (Axis, DesignConstraints, SweepPlan, Table, design_search, run_sweep,
                    tunable_rows, write_csv)

EXIT_OK, EXIT_PHYSICS, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    """Bad command-line input that argparse itself cannot catch."""


# ------------------------------------------------------------------- output
def _jsonable(value):
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, float) and not math.isfinite(value):
        return "nan" if math.isnan(value) else ("inf" if value > 0 else "-inf")
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    return value


def _emit(args, table: Table | None = None, document: dict | None = None) -> None:
    fmt = args.format or ("json" if document is not None else "csv")
    if fmt == "json":
        if document is None:
            document = {"columns": table.columns,
                        "rows": [{c: row.get(c) for c in table.columns} for row in table.rows]}
        text = json.dumps(_jsonable(document), indent=2) + "\n"
    else:
        if table is None:
            flat = {k: v for k, v in document.items() if not isinstance(v, (dict, list))}
            table = Table(list(flat), [flat])
        text = write_csv(table)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(args, kind: str):
    doc = load_document(args.spec)
    if doc.get("kind") != kind:
        raise SpecFormatError(f"{args.spec}: expected a {kind!r} specification, got {doc.get('kind')!r}")
    return doc, build(doc)


# ----------------------------------------------------------------- commands
def cmd_modes(args):
    _, pair = _load(args, "pair")
    d, v = pair.total_length, pair.wave_speed
    xi = pair.displacement if args.xi is None else args.xi
    cap = pair.coupling_cap if args.omega_c_over is None else \
        CoupledPairSpec.coupling_cap_for(args.omega_c_over * v / d, pair.cap_per_len, pair.ind_per_len)
    pair = CoupledPairSpec.from_displacement(d, xi, cap, pair.cap_per_len, pair.ind_per_len)
    rows = [{"n": m.index, "omega_rad_s": m.omega, "k_per_m": m.wavenumber,
             "refl_abs": m.refl_abs, "residual": m.residual}
            for m in membrane.solve_modes(pair, args.n_max)]
    _emit(args, Table(["n", "omega_rad_s", "k_per_m", "refl_abs", "residual"], rows))


def cmd_tunable(args):
    _, spec = _load(args, "tunable")
    fluxes = args.flux if args.flux else [spec.flux]
    rows = []
    for flux in fluxes:
        rows.extend(tunable_rows(replace(spec, flux=flux), args.n_max, args.include_plasma_branch))
    _emit(args, Table(["phi_over_phi0", "n", "omega_rad_s", "omega_approx_rad_s", "eta",
                       "delta_d_m"], rows))


def cmd_analog_spectrum(args):
    _, spec = _load(args, "analog")
    if args.exact:
        res = analog.exact_modes(spec, args.dflux, args.n_max)
        rows = [{"n": m.index, "omega_rad_s": m.omega, "k_per_m": m.wavenumber,
                 "residual": m.residual} for m in res.modes]
        _emit(args, Table(["n", "omega_rad_s", "k_per_m", "residual"], rows))
        return
    res = analog.spectrum(spec, args.dflux, args.n_max, linearized=args.linearized)
    rows = [{"n": m.index, "omega_rad_s": m.omega, "k_per_m": m.wavenumber,
             "refl_abs": m.refl_abs, "residual": m.residual, "epsilon": res.epsilon}
            for m in res.modes]
    _emit(args, Table(["n", "omega_rad_s", "k_per_m", "refl_abs", "residual", "epsilon"], rows))


def cmd_coupling(args):
    _, spec = _load(args, "analog")
    rep = analog.coupling_strength(spec, args.n, args.m, args.method)
    doc = rep.as_dict()
    doc["bias_flux_phi0"] = spec.res_a.bias_flux
    doc["lj0_ratio"] = spec.lj0_ratio
    doc["cj_ratio"] = spec.cj_ratio
    _emit(args, document=doc)


def cmd_baseline(args):
    if args.spec:
        _, cav = _load(args, "cavity")
    else:
        cav = presets.membrane_cavity()
    res = analog.cavity_baseline(cav)
    w2_ref = 2 * math.pi * 10e6 * 1e18
    rows = [
        {"case": "membrane_cavity", "omega2_rad_s_m2": res.omega2,
         "omega2_over_2pi_Hz_nm2": res.omega2 / (2 * math.pi) * 1e-18,
         "g_over_Omega": res.g_over_Omega},
        {"case": "curvature_10MHz_per_nm2", "omega2_rad_s_m2": w2_ref,
         "omega2_over_2pi_Hz_nm2": 10e6,
         "g_over_Omega": analog.cavity_coupling(w2_ref, cav.mass, cav.mech_freq)},
    ]
    _emit(args, Table(["case", "omega2_rad_s_m2", "omega2_over_2pi_Hz_nm2", "g_over_Omega"], rows))


def _parse_beta(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError as exc:
        raise UsageError(f"--beta: cannot parse {text!r} as a complex number") from exc


def cmd_validity(args):
    _, spec = _load(args, "analog")
    rep = analog.coupling_strength(spec, args.n, args.m)
    (mode,) = [b for b in analog.resonator_b_modes(spec.res_b, args.m) if b.index == args.m]
    if args.state == "thermal":
        if args.T is None:
            raise UsageError("--state thermal needs --T")
        state = validity.StateSpec.thermal(mode, args.T)
        x = validity.CONSTANTS.hbar * mode.Omega / (validity.CONSTANTS.boltzmann * args.T)
        n_bar = 1.0 / math.expm1(x)
    elif args.state == "coherent":
        if args.beta is None:
            raise UsageError("--state coherent needs --beta")
        state = validity.StateSpec.coherent(_parse_beta(args.beta), mode)
        n_bar = abs(state.beta) ** 2
    else:
        state = validity.StateSpec.vacuum(mode)
        n_bar = 0.0
    stats = validity.quadrature_stats(state)
    check = validity.check_state(state, rep.x_star)
    doc = {"n": args.n, "m": args.m, "state": args.state, "x_star": rep.x_star,
           "passed": check.passed, "margin": check.margin, "n_bar": n_bar,
           "mean": stats.mean, "fluctuation": stats.fluctuation,
           "max_over_cycle": stats.max_over_cycle}
    if rep.x_star >= 1:
        th = validity.max_photon_number("thermal", rep.x_star, mode.Omega)
        doc["n_bar_max_thermal"] = th.n_max
        doc["T_max_K"] = th.temperature
        doc["n_bar_max_coherent"] = validity.max_photon_number("coherent", rep.x_star).n_max
    else:
        doc["n_bar_max_thermal"] = doc["T_max_K"] = doc["n_bar_max_coherent"] = None
    _emit(args, document=doc)


def _parse_axis(text: str) -> Axis:
    parts = text.split(":")
    if len(parts) not in (3, 4, 5):
        raise PlanInvalid(f"--axis {text!r}: expected name:start:stop[:num[:log]]")
    try:
        start, stop = float(parts[1]), float(parts[2])
        num = int(parts[3]) if len(parts) > 3 and parts[3] else 401
    except ValueError as exc:
        raise PlanInvalid(f"--axis {text!r}: {exc}") from exc
    spacing = parts[4] if len(parts) == 5 else "linear"
    return Axis(parts[0], start, stop, num, spacing)


def _parse_option(text: str):
    key, sep, value = text.partition("=")
    if not sep:
        raise PlanInvalid(f"--option {text!r}: expected key=value")
    try:
        return key, json.loads(value)
    except json.JSONDecodeError:
        return key, value


def cmd_sweep(args):
    doc = load_document(args.spec)
    plan = SweepPlan(args.target, doc, tuple(_parse_axis(a) for a in args.axis),
                     dict(_parse_option(o) for o in args.option))
    _emit(args, run_sweep(plan, jobs=args.jobs))


def _parse_range(text: str, flag: str):
    parts = text.split(":")
    try:
        if len(parts) == 3:
            return parts[0], (float(parts[1]), float(parts[2]))
        if len(parts) == 2:
            return float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise PlanInvalid(f"{flag} {text!r}: {exc}") from exc
    raise PlanInvalid(f"{flag} {text!r}: malformed range")


def cmd_design(args):
    _, spec = _load(args, "analog")
    free = dict(_parse_range(f, "--free") for f in args.free)
    bounds = _parse_range(args.flux_bounds, "--flux-bounds") if args.flux_bounds else (0.0, 0.45)
    cons = DesignConstraints(args.max_lj0_ratio, args.max_cj_ratio, args.min_x_star, bounds)
    result = design_search(spec, cons, free, args.n, args.m, grid_points=args.grid_points)
    doc = result.as_dict()
    doc["spec"] = to_document(result.spec)
    _emit(args, document=doc)


# ------------------------------------------------------------------- parser
def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quadcircuit",
                                description="Circuit analog of quadratic optomechanics: "
                                            "eigenmodes, couplings, validity bounds and sweeps.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, spec_required=True):
        sp.add_argument("--spec", required=spec_required, help="JSON specification file")
        sp.add_argument("--out", help="write output here instead of stdout")
        sp.add_argument("--format", choices=("csv", "json"), help="output format")

    sp = sub.add_parser("modes", help="eigenmodes of a capacitively coupled pair")
    common(sp)
    sp.add_argument("--xi", type=float, help="displacement of the coupling capacitor (m)")
    sp.add_argument("--omega-c-over", type=float, help="set omega_c in units of v0/d")
    sp.add_argument("--n-max", type=int, default=5)
    sp.set_defaults(func=cmd_modes)

    sp = sub.add_parser("tunable", help="eigenmodes of a SQUID-terminated resonator")
    common(sp)
    sp.add_argument("--flux", type=float, action="append", help="flux in Phi0 (repeatable)")
    sp.add_argument("--n-max", type=int, default=3)
    sp.add_argument("--include-plasma-branch", action="store_true")
    sp.set_defaults(func=cmd_tunable)

    sp = sub.add_parser("analog-spectrum", help="resonator-A modes at an antisymmetric flux offset")
    common(sp)
    sp.add_argument("--dflux", type=float, default=0.0, help="flux offset in Phi0")
    sp.add_argument("--n-max", type=int, default=5)
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--linearized", action="store_true", help="linear effective-length model")
    group.add_argument("--exact", action="store_true", help="SQUIDs as lumped L_J || C_J loads")
    sp.set_defaults(func=cmd_analog_spectrum)

    sp = sub.add_parser("coupling", help="quadratic coupling report for one (n, m) pair")
    common(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--method", choices=analog.G_METHODS, default="simplified")
    sp.set_defaults(func=cmd_coupling)

    sp = sub.add_parser("baseline", help="membrane-in-the-middle cavity comparison")
    common(sp, spec_required=False)
    sp.set_defaults(func=cmd_baseline)

    sp = sub.add_parser("validity", help="check a resonator-B state against X*")
    common(sp)
    sp.add_argument("--state", choices=("vacuum", "thermal", "coherent"), default="vacuum")
    sp.add_argument("--T", type=float, help="temperature (K) for thermal states")
    sp.add_argument("--beta", help="complex amplitude for coherent states, e.g. 3+1j")
    sp.add_argument("--n", type=int, default=9)
    sp.add_argument("--m", type=int, default=2)
    sp.set_defaults(func=cmd_validity)

    sp = sub.add_parser("sweep", help="regenerate a figure dataset or run a custom grid")
    common(sp)
    sp.add_argument("--target", required=True,
                    choices=("fig3_4", "fig5", "fig7", "fig8", "fig10", "fig11", "fig12", "custom"))
    sp.add_argument("--axis", action="append", default=[],
                    help="name:start:stop[:num[:log]] (repeatable; default: target's own axis)")
    sp.add_argument("--option", action="append", default=[],
                    help="key=value target option, value parsed as JSON")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("design", help="maximize |g/Omega| under regime constraints")
    common(sp)
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--m", type=int, default=2)
    sp.add_argument("--free", action="append", required=True,
                    help="name:lo:hi with name in coupling_cap, bias_flux, area_ratio")
    sp.add_argument("--min-x-star", type=float)
    sp.add_argument("--flux-bounds", help="lo:hi in Phi0 (default 0:0.45)")
    sp.add_argument("--max-lj0-ratio", type=float, default=1e-2)
    sp.add_argument("--max-cj-ratio", type=float, default=1e-1)
    sp.add_argument("--grid-points", type=int, default=41)
    sp.set_defaults(func=cmd_design)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("always", RegimeWarning)
            args.func(args)
    except PhysicsError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PHYSICS
    except (SpecFormatError, PlanInvalid, UsageError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
