"""Parameter sweeps that regenerate the figure datasets, and a constrained design search.

A :class:`SweepPlan` names a target, a base specification document and its
axes.  :func:`run_sweep` evaluates every grid point as an independent pure
task (optionally in a process pool), never aborting on a bad point: the
failure is recorded in the row's ``error`` column instead.
"""
from __future__ import annotations

import csv
import io
import itertools
import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from . import analog, membrane, squid
from .analog import AnalogSystemSpec
from .errors import InfeasibleConstraints, PhysicsError, PlanInvalid, RegimeWarning
from .params import CONSTANTS, CoupledPairSpec, SquidSpec, flux_cosine
from .specio import SpecFormatError, build, numeric_paths, set_path

__all__ = [
    "Axis",
    "SweepPlan",
    "Table",
    "TARGETS",
    "default_plan",
    "run_sweep",
    "write_csv",
    "format_value",
    "DesignConstraints",
    "DesignResult",
    "design_search",
    "FLUX_EXCLUSION",
]

#: Flux points closer than this (in Phi0) to a half-integer are dropped from sweeps.
FLUX_EXCLUSION = 5e-3
DEFAULT_POINTS = 401


@dataclass(frozen=True)
class Axis:
    """One sweep axis: ``num`` points from ``start`` to ``stop``, linear or log spaced."""

    name: str
    start: float
    stop: float
    num: int = DEFAULT_POINTS
    spacing: str = "linear"

    def __post_init__(self):
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise PlanInvalid(f"axis {self.name!r}: range must be finite")
        if self.num < 2:
            raise PlanInvalid(f"axis {self.name!r}: need at least 2 points, got {self.num}")
        if self.spacing not in ("linear", "log"):
            raise PlanInvalid(f"axis {self.name!r}: spacing must be 'linear' or 'log'")
        if self.spacing == "log" and not (self.start > 0 and self.stop > 0):
            raise PlanInvalid(f"axis {self.name!r}: log spacing needs a positive range")

    def values(self) -> np.ndarray:
        if self.spacing == "log":
            vals = np.geomspace(self.start, self.stop, self.num)
        else:
            vals = np.linspace(self.start, self.stop, self.num)
        if self.name.endswith("flux_phi0"):
            dist = np.abs(vals - 0.5 - np.round(vals - 0.5))
            vals = vals[dist >= FLUX_EXCLUSION]
        return vals


@dataclass(frozen=True)
class SweepPlan:
    """What to sweep.

    Parameters
    ----------
    target : str
        One of :data:`TARGETS`.
    base : dict
        Specification document (see :mod:`quadcircuit.specio`).
    axes : tuple of Axis
        Empty means the target's default axis.
    options : dict
        Target-specific settings (panels, mode ranges); see :data:`TARGETS`.
    """

    target: str
    base: dict
    axes: tuple = ()
    options: dict = field(default_factory=dict)


@dataclass
class Table:
    columns: list
    rows: list


# ------------------------------------------------------------------ targets
def _v0_over_d(doc):
    pair = build(doc)
    return pair, pair.wave_speed / pair.total_length


def _fig3_4_eval(payload):
    d, cap, ind, wc_over, xi, n_max = payload
    v = 1.0 / math.sqrt(cap * ind)
    pair = CoupledPairSpec.from_displacement(
        d, xi, CoupledPairSpec.coupling_cap_for(wc_over * v / d, cap, ind), cap, ind)
    modes = membrane.solve_modes(pair, n_max)
    quarter = sorted((j + 0.5) * math.pi * v / length
                     for length in (pair.left_len, pair.right_len) for j in range(n_max + 1))
    rows = []
    for mode in modes:
        exp = membrane.expand_modes(pair, mode.index)
        rows.append({"n": mode.index, "omega_rad_s": mode.omega,
                     "omega_expansion_rad_s": float(exp.evaluate(xi)),
                     "omega_decoupled_rad_s": quarter[mode.index],
                     "validity_extent_m": exp.validity_extent})
    return rows


def _fig3_4_points(plan, axis_vals, opts):
    pair, _ = _v0_over_d(plan.base)
    d = pair.total_length
    for wc in opts["omega_c_over"]:
        for xi in axis_vals[0]:
            yield ({"omega_c_v0_over_d": float(wc), "xi_m": xi},
                   (d, pair.cap_per_len, pair.ind_per_len, wc, xi, opts["n_max"]))


def _fig5_eval(payload):
    d, cap, ind, wc_over, xi, n_max, ys = payload
    v = 1.0 / math.sqrt(cap * ind)
    pair = CoupledPairSpec.from_displacement(
        d, xi, CoupledPairSpec.coupling_cap_for(wc_over * v / d, cap, ind), cap, ind)
    rows = []
    for mode in membrane.solve_modes(pair, n_max):
        u = membrane.mode_function(pair, mode, np.asarray(ys) - pair.left_len)
        rows.extend({"n": mode.index, "y_m": y, "u": float(val)} for y, val in zip(ys, u))
    return rows


def _fig5_points(plan, axis_vals, opts):
    pair, _ = _v0_over_d(plan.base)
    d = pair.total_length
    ys = tuple(float(y) * d for y in axis_vals[0])
    for wc in opts["omega_c_over"]:
        for xi_frac in opts["xi_over_d"]:
            yield ({"omega_c_v0_over_d": float(wc), "xi_m": float(xi_frac) * d},
                   (d, pair.cap_per_len, pair.ind_per_len, wc, xi_frac * d, opts["n_max"], ys))


def _squid_for_ratios(line, lj0_ratio, cj_ratio) -> SquidSpec:
    lj0 = lj0_ratio * line.ind_per_len * line.length
    phi_red = CONSTANTS.flux_quantum / (2 * math.pi)
    return SquidSpec(phi_red**2 / (2 * lj0), cj_ratio * line.cap_per_len * line.length)


def tunable_rows(spec: squid.TunableResonatorSpec, n_max: int, include_plasma_branch: bool):
    """Rows of the ``tunable`` table for one flux value."""
    modes = squid.solve_modes(spec, n_max, include_plasma_branch=include_plasma_branch)
    approx = dict(squid.approx_modes(spec, max(n_max, max((m.index for m in modes), default=1))))
    dd = squid.effective_length(spec)
    v = spec.line.wave_speed
    return [{"phi_over_phi0": spec.flux, "n": m.index, "omega_rad_s": m.omega,
             "omega_approx_rad_s": approx[m.index] * v, "eta": m.eta, "delta_d_m": dd}
            for m in modes]


def _fig7_eval(payload):
    line, lj0, cj, flux, n_max, plasma = payload
    spec = squid.TunableResonatorSpec(line, _squid_for_ratios(line, lj0, cj), flux)
    return tunable_rows(spec, n_max, plasma)


def _fig7_points(plan, axis_vals, opts):
    line = build(plan.base).line
    for lj0 in opts["lj0_ratios"]:
        for cj in opts["cj_ratios"]:
            for flux in axis_vals[0]:
                yield ({"lj0_ratio": float(lj0), "cj_ratio": float(cj), "phi_over_phi0": flux},
                       (line, lj0, cj, float(flux), opts["n_max"], opts["include_plasma_branch"]))


def _fig8_eval(payload):
    line, lj0, cj, flux, n, xs = payload
    spec = squid.TunableResonatorSpec(line, _squid_for_ratios(line, lj0, cj), flux)
    mode = squid.solve_modes(spec, n)[n - 1]
    x_star = squid.virtual_end(spec, mode)
    dd = squid.effective_length(spec)
    u = squid.continued_mode_function(spec, mode, np.asarray(xs))
    return [{"n": n, "x_m": x, "u": float(val), "virtual_end_m": x_star, "delta_d_m": dd}
            for x, val in zip(xs, u)]


def _fig8_points(plan, axis_vals, opts):
    line = build(plan.base).line
    xs = tuple(float(x) * line.length for x in axis_vals[0])
    for flux in opts["fluxes"]:
        yield ({"phi_over_phi0": float(flux)},
               (line, opts["lj0_ratio"], opts["cj_ratio"], flux, opts["n"], xs))


def _analog_points(plan, axis_vals, opts):
    names = [ax.name for ax in plan.axes]
    for combo in itertools.product(*axis_vals):
        doc = plan.base
        fixed = {}
        for name, value in zip(names, combo):
            doc = set_path(doc, name, float(value))
            fixed[_column(name)] = float(value)
        yield fixed, (doc, opts)


def _column(path: str) -> str:
    return {"resonator_a.bias_flux_phi0": "bias_flux_phi0",
            "resonator_a.coupling_cap_F": "coupling_cap_F"}.get(path, path)


def _n_values(opts):
    n = opts.get("n")
    if n is None:
        return range(opts["n_max"] + 1)
    return [n] if isinstance(n, int) else list(n)


def _fig10_eval(payload):
    doc, opts = payload
    spec = build(doc)
    rows = []
    for n in _n_values(opts):
        rep = analog.coupling_strength(spec, n, opts["m"])
        rows.append({"n": n, "m": opts["m"], "omega_n0_rad_s": rep.omega_n0,
                     "Omega_m_rad_s": rep.Omega_m, "g_rad_s": rep.g,
                     "abs_g_over_Omega": abs(rep.normalized)})
    return rows


def _fig11_eval(payload):
    doc, opts = payload
    spec = build(doc)
    a = spec.res_a
    w1 = membrane.unperturbed_frequency(1, a.total_effective_length, a.line.wave_speed, a.omega_c)
    r1 = abs(membrane.scattering(analog._pair_at_bias(spec), w1).reflectivity)
    rows = []
    for n in _n_values(opts):
        rep = analog.coupling_strength(spec, n, opts["m"])
        rows.append({"refl_abs_n1": r1, "n": n, "m": opts["m"], "g_rad_s": rep.g,
                     "abs_g_over_Omega": abs(rep.normalized)})
    return rows


def _fig12_eval(payload):
    doc, opts = payload
    spec = build(doc)
    return [{"n": n, "m": opts["m"],
             "x_star": analog.coupling_strength(spec, n, opts["m"]).x_star}
            for n in _n_values(opts)]


def _custom_eval(payload):
    doc, opts = payload
    spec = build(doc)
    rows = []
    for n in _n_values(opts):
        rep = analog.coupling_strength(spec, n, opts["m"])
        rows.append({"n": n, "m": opts["m"], "omega_n0_rad_s": rep.omega_n0,
                     "Omega_m_rad_s": rep.Omega_m, "g_rad_s": rep.g,
                     "abs_g_over_Omega": abs(rep.normalized), "x_star": rep.x_star})
    return rows


@dataclass(frozen=True)
class Target:
    kind: str
    fixed_columns: tuple
    columns: tuple
    default_axes: object
    axis_names: tuple | None
    options: dict
    points: object
    evaluate: object


def _pair_default_axes(doc):
    pair = build(doc)
    d = pair.total_length
    return (Axis("xi_m", -0.49 * d, 0.49 * d),)


TARGETS = {
    "fig3_4": Target(
        "pair", ("omega_c_v0_over_d", "xi_m"),
        ("n", "omega_rad_s", "omega_expansion_rad_s", "omega_decoupled_rad_s", "validity_extent_m"),
        _pair_default_axes, ("xi_m",), {"omega_c_over": [0.1, 1.0, 10.0, 100.0], "n_max": 5},
        _fig3_4_points, _fig3_4_eval),
    "fig5": Target(
        "pair", ("omega_c_v0_over_d", "xi_m"), ("n", "y_m", "u"),
        lambda doc: (Axis("y_over_d", 0.0, 1.0),), ("y_over_d",),
        {"omega_c_over": [0.1, 10.0, 1000.0], "xi_over_d": [0.0, 0.1, -0.3], "n_max": 3},
        _fig5_points, _fig5_eval),
    "fig7": Target(
        "tunable", ("lj0_ratio", "cj_ratio"),
        ("phi_over_phi0", "n", "omega_rad_s", "omega_approx_rad_s", "eta", "delta_d_m"),
        lambda doc: (Axis("flux_phi0", -1.0, 1.0),), ("flux_phi0",),
        {"lj0_ratios": [1.0, 0.1, 0.01], "cj_ratios": [1.0, 0.1, 0.01], "n_max": 3,
         "include_plasma_branch": True},
        _fig7_points, _fig7_eval),
    "fig8": Target(
        "tunable", ("phi_over_phi0",), ("n", "x_m", "u", "virtual_end_m", "delta_d_m"),
        lambda doc: (Axis("x_over_d", -0.1, 1.0),), ("x_over_d",),
        {"fluxes": [0.32, 0.38, 0.44], "lj0_ratio": 1e-2, "cj_ratio": 1e-1, "n": 1},
        _fig8_points, _fig8_eval),
    "fig10": Target(
        "analog", (), ("n", "m", "omega_n0_rad_s", "Omega_m_rad_s", "g_rad_s", "abs_g_over_Omega"),
        lambda doc: (Axis("resonator_a.bias_flux_phi0", 0.0, 0.5),),
        ("resonator_a.bias_flux_phi0",), {"n_max": 9, "m": 2}, _analog_points, _fig10_eval),
    "fig11": Target(
        "analog", (), ("refl_abs_n1", "n", "m", "g_rad_s", "abs_g_over_Omega"),
        lambda doc: (Axis("resonator_a.coupling_cap_F", 1e-17, 1e-13, spacing="log"),),
        ("resonator_a.coupling_cap_F",), {"n_max": 5, "m": 2}, _analog_points, _fig11_eval),
    "fig12": Target(
        "analog", (), ("n", "m", "x_star"),
        lambda doc: (Axis("resonator_a.bias_flux_phi0", 0.0, 0.5),),
        ("resonator_a.bias_flux_phi0",), {"n_max": 9, "m": 2}, _analog_points, _fig12_eval),
    "custom": Target(
        "analog", (),
        ("n", "m", "omega_n0_rad_s", "Omega_m_rad_s", "g_rad_s", "abs_g_over_Omega", "x_star"),
        None, None, {"n": [1], "m": 2}, _analog_points, _custom_eval),
}


def _validate(plan: SweepPlan):
    if plan.target not in TARGETS:
        raise PlanInvalid(f"unknown target {plan.target!r}; choose from {sorted(TARGETS)}")
    tgt = TARGETS[plan.target]
    kind = plan.base.get("kind") if isinstance(plan.base, dict) else None
    if kind != tgt.kind:
        raise PlanInvalid(f"target {plan.target!r} needs a {tgt.kind!r} specification, got {kind!r}")
    try:
        build(plan.base)
    except SpecFormatError as exc:
        raise PlanInvalid(str(exc)) from exc
    axes = plan.axes or (tgt.default_axes(plan.base) if tgt.default_axes else ())
    if not axes:
        raise PlanInvalid(f"target {plan.target!r} needs at least one axis")
    for ax in axes:
        if not isinstance(ax, Axis):
            raise PlanInvalid(f"axes must be Axis records, got {ax!r}")
        allowed = tgt.axis_names if tgt.axis_names is not None else tuple(numeric_paths(plan.base))
        if ax.name not in allowed:
            raise PlanInvalid(f"target {plan.target!r} cannot sweep {ax.name!r}; allowed: {list(allowed)}")
    if tgt.axis_names is not None and len(axes) != 1:
        raise PlanInvalid(f"target {plan.target!r} takes exactly one axis")
    unknown = set(plan.options) - set(tgt.options)
    if unknown:
        raise PlanInvalid(f"unknown option(s) {sorted(unknown)} for target {plan.target!r}; "
                          f"known: {sorted(tgt.options)}")
    return tgt, axes, {**tgt.options, **plan.options}


def _evaluate_point(job):
    target, fixed, payload = job
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RegimeWarning)
        try:
            rows = TARGETS[target].evaluate(payload)
        except (PhysicsError, ValueError, ArithmeticError) as exc:
            return [{**fixed, "error": f"{type(exc).__name__}: {exc}"}]
    return [{**fixed, **row, "error": ""} for row in rows]


def run_sweep(plan: SweepPlan, jobs: int = 1) -> Table:
    """Evaluate a sweep plan.

    Points are evaluated independently; with ``jobs > 1`` they run in a
    process pool whose ordered map keeps the output identical to a serial run.
    """
    tgt, axes, opts = _validate(plan)
    plan = replace(plan, axes=tuple(axes))
    axis_vals = [ax.values() for ax in axes]
    if any(v.size == 0 for v in axis_vals):
        raise PlanInvalid("an axis has no points left after flux exclusion")
    fixed_cols = tgt.fixed_columns or tuple(_column(ax.name) for ax in axes)
    jobs_list = [(plan.target, fixed, payload) for fixed, payload in tgt.points(plan, axis_vals, opts)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_evaluate_point, jobs_list,
                                   chunksize=max(1, len(jobs_list) // (4 * jobs))))
    else:
        chunks = [_evaluate_point(job) for job in jobs_list]
    columns = list(fixed_cols) + [c for c in tgt.columns if c not in fixed_cols] + ["error"]
    return Table(columns, [row for chunk in chunks for row in chunk])


def default_plan(target: str, base: dict, **options) -> SweepPlan:
    return SweepPlan(target, base, (), options)


def format_value(value) -> str:
    """``%.12e`` for floats, plain text for integers and strings, empty for missing."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return "%.12e" % float(value)
    return str(value)


def write_csv(table: Table, stream=None) -> str | None:
    """Write ``table`` as RFC-4180 CSV to ``stream`` (or return it as a string)."""
    own = stream is None
    if own:
        stream = io.StringIO()
    writer = csv.writer(stream, lineterminator="\r\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([format_value(row.get(col)) for col in table.columns])
    return stream.getvalue() if own else None


# ------------------------------------------------------------------- design
FREE_PARAMETERS = ("coupling_cap", "bias_flux", "area_ratio")


@dataclass(frozen=True)
class DesignConstraints:
    """Feasible region of the design search.

    ``max_lj0_ratio`` and ``max_cj_ratio`` bound ``L_J0/(l_A D_A)`` and
    ``C_J/(c_A D_A)``; ``min_x_star`` (optional) bounds the amplitude margin
    ``X*``; ``flux_bias_bounds`` limits the bias flux (in ``Phi0``).
    """

    max_lj0_ratio: float = 1e-2
    max_cj_ratio: float = 1e-1
    min_x_star: float | None = None
    flux_bias_bounds: tuple = (0.0, 0.45)


@dataclass(frozen=True)
class DesignResult:
    report: analog.CouplingReport
    parameters: dict
    binding: tuple
    spec: AnalogSystemSpec
    grid_best: float

    def as_dict(self) -> dict:
        return {"parameters": dict(self.parameters), "binding_constraints": list(self.binding),
                "objective_abs_g_over_Omega": abs(self.report.normalized),
                "coarse_grid_best": self.grid_best, "report": self.report.as_dict()}


def _area_ratio(spec: AnalogSystemSpec) -> float:
    g = spec.geometry
    return g.area / (spec.res_b.line.length * g.s1)


def _apply(spec: AnalogSystemSpec, params: dict) -> AnalogSystemSpec:
    res_a, geo = spec.res_a, spec.geometry
    if "coupling_cap" in params:
        res_a = replace(res_a, coupling_cap=params["coupling_cap"])
    if "bias_flux" in params:
        res_a = replace(res_a, bias_flux=params["bias_flux"])
    if "area_ratio" in params:
        area = params["area_ratio"] * spec.res_b.line.length * geo.s1
        geo = replace(geo, width=area / (geo.s2 - geo.s1))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RegimeWarning)
        return AnalogSystemSpec(res_a, spec.res_b, geo)


def _golden_max(f, a: float, b: float, iters: int = 80) -> tuple[float, float]:
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    c, d = b - inv_phi * (b - a), a + inv_phi * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = f(d)
        if b - a <= 1e-12 * max(abs(a), abs(b), 1e-300):
            break
    return (c, fc) if fc >= fd else (d, fd)


def design_search(spec: AnalogSystemSpec, constraints: DesignConstraints, free: dict,
                  n: int, m: int, grid_points: int = 41, cycles: int = 2) -> DesignResult:
    """Maximize ``|g_nm/Omega_m|`` over the free parameters, subject to ``constraints``.

    Coordinate-wise: each free axis is scanned on a grid (log spacing for
    ranges spanning more than a decade) with the others held fixed, then the
    best grid cell is refined by golden-section search; the sweep over axes
    is repeated ``cycles`` times.

    Parameters
    ----------
    free : dict
        Maps a subset of ``{"coupling_cap", "bias_flux", "area_ratio"}`` to
        ``(lo, hi)`` search ranges (F, Phi0, dimensionless).
    """
    if not free:
        raise PlanInvalid("design_search needs at least one free parameter")
    bad = set(free) - set(FREE_PARAMETERS)
    if bad:
        raise PlanInvalid(f"unknown free parameter(s) {sorted(bad)}; choose from {FREE_PARAMETERS}")
    ranges = {}
    for name, (lo, hi) in free.items():
        lo, hi = float(lo), float(hi)
        if name == "bias_flux":
            lo = max(lo, constraints.flux_bias_bounds[0])
            hi = min(hi, constraints.flux_bias_bounds[1])
        if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
            raise InfeasibleConstraints(f"empty search range for {name}: [{lo!r}, {hi!r}]")
        if name != "bias_flux" and lo <= 0:
            raise PlanInvalid(f"{name} range must be positive, got [{lo!r}, {hi!r}]")
        ranges[name] = (lo, hi)

    if spec.lj0_ratio > constraints.max_lj0_ratio:
        raise InfeasibleConstraints(
            f"L_J0/(l_A D_A) = {spec.lj0_ratio:.4g} > {constraints.max_lj0_ratio:g}; no free parameter changes it")
    if spec.cj_ratio > constraints.max_cj_ratio:
        raise InfeasibleConstraints(
            f"C_J/(c_A D_A) = {spec.cj_ratio:.4g} > {constraints.max_cj_ratio:g}; no free parameter changes it")

    def objective(params) -> float:
        flux = params.get("bias_flux", spec.res_a.bias_flux)
        lo, hi = constraints.flux_bias_bounds
        if not lo <= flux <= hi:
            return -math.inf
        try:
            rep = analog.coupling_strength(_apply(spec, params), n, m)
            flux_cosine(flux)
        except PhysicsError:
            return -math.inf
        if constraints.min_x_star is not None and rep.x_star < constraints.min_x_star:
            return -math.inf
        return abs(rep.normalized)

    current = {name: float(np.clip(
        {"coupling_cap": spec.res_a.coupling_cap, "bias_flux": spec.res_a.bias_flux,
         "area_ratio": _area_ratio(spec)}[name], *ranges[name])) for name in ranges}
    best = objective(current)
    grid_best = -math.inf
    for cycle in range(cycles):
        for name, (lo, hi) in ranges.items():
            log = name != "bias_flux" and hi / lo > 10
            grid = np.geomspace(lo, hi, grid_points) if log else np.linspace(lo, hi, grid_points)
            vals = np.array([objective({**current, name: float(x)}) for x in grid])
            if cycle == 0:
                grid_best = max(grid_best, float(vals.max()))
            i = int(np.argmax(vals))
            if not np.isfinite(vals[i]):
                continue
            if vals[i] > best:
                best, current = float(vals[i]), {**current, name: float(grid[i])}
            a, b = grid[max(i - 1, 0)], grid[min(i + 1, grid.size - 1)]
            if log:
                x, fx = _golden_max(lambda t: objective({**current, name: math.exp(t)}),
                                    math.log(a), math.log(b))
                x = math.exp(x)
            else:
                x, fx = _golden_max(lambda t: objective({**current, name: t}), float(a), float(b))
            if fx > best:
                best, current = fx, {**current, name: x}
    if not np.isfinite(best):
        raise InfeasibleConstraints("no feasible point found on the search grid")

    final = _apply(spec, current)
    report = analog.coupling_strength(final, n, m)
    binding = []
    if constraints.min_x_star is not None and report.x_star <= constraints.min_x_star * (1 + 1e-3):
        binding.append("min_x_star")
    for name, (lo, hi) in ranges.items():
        span = hi - lo
        if abs(current[name] - lo) <= 1e-6 * span:
            binding.append(f"{name}>={lo:.6g}")
        elif abs(current[name] - hi) <= 1e-6 * span:
            binding.append(f"{name}<={hi:.6g}")
    return DesignResult(report, current, tuple(binding), final, grid_best)
