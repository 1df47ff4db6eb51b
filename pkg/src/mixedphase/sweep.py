"""Parameter sweeps over the drive protocol and the Bloch model.

A sweep varies exactly one parameter over a linear grid while all
others stay fixed, producing one output row per grid point.  Rows carry
the requested grid values verbatim (so output order is the grid order)
together with every derived quantity; results are emitted as CSV or
JSON with a fixed per-model schema.

Configuration is a flat JSON object of key/value pairs; command-line
flags override file values key by key.
"""

from __future__ import annotations

import dataclasses
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .bloch import BlochParams, bloch_mixed_phase
from .engine import transport_residuals
from .su2 import (
    ProtocolParams,
    analytic_phase_visibility,
    protocol_family,
    solve_transport_amplitudes,
)
from .thermal import ThermalConfig, boltzmann_weights

__all__ = [
    "ConfigError",
    "SweepConfig",
    "Su2Row",
    "BlochRow",
    "parse_config",
    "run_sweep",
    "emit",
]

RESIDUAL_STEP = 1e-6

SU2_PARAMS = ("t", "omega1", "omega2", "phi", "beta", "omega_field")
BLOCH_PARAMS = ("omega_solid", "r")

SU2_DEFAULTS = {"phi": 0.0, "beta": 1.0, "omega_field": 1.0}
BLOCH_DEFAULTS: dict[str, float] = {}

DEFAULT_SWEEP = {"su2": "t", "bloch": "omega_solid"}

COMMON_KEYS = ("model", "sweep", "start", "end", "steps", "format", "output", "degeneracy_tol")

SU2_COLUMNS = (
    "t", "omega1", "omega2", "phi", "beta", "omega_field",
    "w1", "w2", "a", "b", "visibility", "phase", "defined", "res1_mag", "res2_mag",
)
BLOCH_COLUMNS = ("omega_solid", "r", "visibility", "phase", "defined")

# (lower bound, strict, upper bound) per parameter; None means unbounded
_PARAM_CONSTRAINTS = {
    "t": (">= 0", lambda x: x >= 0),
    "omega1": ("> 0", lambda x: x > 0),
    "omega2": ("> 0", lambda x: x > 0),
    "omega_field": ("> 0", lambda x: x > 0),
    "beta": (">= 0", lambda x: x >= 0),
    "phi": ("finite", lambda x: True),
    "r": ("in [0, 1]", lambda x: 0.0 <= x <= 1.0),
    "omega_solid": ("finite", lambda x: True),
}


class ConfigError(Exception):
    """Invalid sweep configuration or unusable output destination."""


@dataclass(frozen=True)
class SweepConfig:
    """Fully validated sweep description.

    `fixed` holds the effective value of every non-swept model parameter
    (defaults already applied), keyed by parameter name.
    """

    model: str
    sweep: str
    start: float
    end: float
    steps: int
    fixed: dict[str, float]
    fmt: str
    output: str
    degeneracy_tol: float


@dataclass(frozen=True)
class Su2Row:
    t: float
    omega1: float
    omega2: float
    phi: float
    beta: float
    omega_field: float
    w1: float
    w2: float
    a: float
    b: float
    visibility: float
    phase: float | None
    defined: bool
    res1_mag: float
    res2_mag: float


@dataclass(frozen=True)
class BlochRow:
    omega_solid: float
    r: float
    visibility: float
    phase: float | None
    defined: bool


def _as_float(key: str, value) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"key {key!r} must be a number, got {value!r}")
    x = float(value)
    if not math.isfinite(x):
        raise ConfigError(f"key {key!r} must be finite, got {value!r}")
    return x


def _check_param(key: str, value: float, *, via: str | None = None) -> None:
    constraint, ok = _PARAM_CONSTRAINTS[key]
    if not ok(value):
        where = f"{via} = {value!r} (for swept parameter {key!r})" if via else f"{key} = {value!r}"
        raise ConfigError(f"{where} violates constraint {key} {constraint}")


def parse_config(file_values=None, overrides=None) -> SweepConfig:
    """Merge file values with flag overrides and validate everything.

    Unknown keys are rejected by name; all missing required keys are
    reported at once; every constraint violation names the offending key
    and the constraint it breaks.
    """
    merged: dict = {}
    merged.update(file_values or {})
    merged.update(overrides or {})

    model = merged.get("model")
    if model is None:
        raise ConfigError("missing required keys: model")
    if model not in ("su2", "bloch"):
        raise ConfigError(f"model = {model!r} violates constraint model in {{su2, bloch}}")

    params = SU2_PARAMS if model == "su2" else BLOCH_PARAMS
    defaults = SU2_DEFAULTS if model == "su2" else BLOCH_DEFAULTS
    allowed = set(COMMON_KEYS) | set(params)
    unknown = sorted(set(merged) - allowed)
    if unknown:
        raise ConfigError(f"unknown key {unknown[0]!r}" if len(unknown) == 1
                          else f"unknown keys: {', '.join(repr(k) for k in unknown)}")

    sweep = merged.get("sweep", DEFAULT_SWEEP[model])
    if sweep not in params:
        raise ConfigError(f"sweep = {sweep!r} violates constraint sweep in {{{', '.join(params)}}}")

    missing = [k for k in ("start", "end", "steps") if k not in merged]
    for key in params:
        if key == sweep or key in defaults or key in merged:
            continue
        missing.append(key)
    if missing:
        raise ConfigError(f"missing required keys: {', '.join(missing)}")

    start = _as_float("start", merged["start"])
    end = _as_float("end", merged["end"])
    steps_raw = merged["steps"]
    if isinstance(steps_raw, bool) or not isinstance(steps_raw, (int, float)) \
            or float(steps_raw) != int(steps_raw):
        raise ConfigError(f"key 'steps' must be an integer, got {steps_raw!r}")
    steps = int(steps_raw)
    if steps < 1:
        raise ConfigError(f"steps = {steps!r} violates constraint steps >= 1")
    if start > end:
        raise ConfigError(f"start = {start!r}, end = {end!r} violates constraint start <= end")
    _check_param(sweep, start, via="start")
    _check_param(sweep, end, via="end")

    fixed: dict[str, float] = {}
    for key in params:
        if key == sweep:
            continue
        value = _as_float(key, merged.get(key, defaults.get(key)))
        _check_param(key, value)
        fixed[key] = value

    fmt = merged.get("format", "csv")
    if fmt not in ("csv", "json"):
        raise ConfigError(f"format = {fmt!r} violates constraint format in {{csv, json}}")
    output = merged.get("output", "-")
    if not isinstance(output, str) or not output:
        raise ConfigError(f"key 'output' must be a nonempty path or '-', got {output!r}")
    degeneracy_tol = _as_float("degeneracy_tol", merged.get("degeneracy_tol", 1e-12))
    if not degeneracy_tol > 0:
        raise ConfigError(
            f"degeneracy_tol = {degeneracy_tol!r} violates constraint degeneracy_tol > 0"
        )

    return SweepConfig(
        model=model, sweep=sweep, start=start, end=end, steps=steps,
        fixed=fixed, fmt=fmt, output=output, degeneracy_tol=degeneracy_tol,
    )


def _su2_row(values: dict[str, float], degeneracy_tol: float) -> Su2Row:
    weights = boltzmann_weights(ThermalConfig(values["omega_field"], values["beta"]))
    amps = solve_transport_amplitudes(values["omega1"], values["omega2"])
    params = ProtocolParams(values["omega1"], values["omega2"], values["phi"], values["t"])
    result = analytic_phase_visibility(params, weights, amps, degeneracy_tol=degeneracy_tol)
    family = protocol_family(values["omega1"], values["omega2"], values["phi"], amps)
    residuals = transport_residuals(family, values["t"], RESIDUAL_STEP)
    return Su2Row(
        t=values["t"], omega1=values["omega1"], omega2=values["omega2"],
        phi=values["phi"], beta=values["beta"], omega_field=values["omega_field"],
        w1=weights.w1, w2=weights.w2, a=amps.a, b=amps.b,
        visibility=result.visibility, phase=result.phase, defined=result.defined,
        res1_mag=residuals[0].magnitude, res2_mag=residuals[1].magnitude,
    )


def _bloch_row(values: dict[str, float], degeneracy_tol: float) -> BlochRow:
    result = bloch_mixed_phase(BlochParams(values["r"], values["omega_solid"]),
                               degeneracy_tol=degeneracy_tol)
    return BlochRow(
        omega_solid=values["omega_solid"], r=values["r"],
        visibility=result.visibility, phase=result.phase, defined=result.defined,
    )


def run_sweep(cfg: SweepConfig) -> list:
    """Evaluate the model on the grid, one row per point, in grid order."""
    grid = np.linspace(cfg.start, cfg.end, cfg.steps)
    build = _su2_row if cfg.model == "su2" else _bloch_row
    rows = []
    for value in grid:
        values = dict(cfg.fixed)
        values[cfg.sweep] = float(value)
        rows.append(build(values, cfg.degeneracy_tol))
    return rows


def _render_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return f"{value:.17g}"


def render_csv(rows, model: str) -> str:
    columns = SU2_COLUMNS if model == "su2" else BLOCH_COLUMNS
    lines = [",".join(columns)]
    for row in rows:
        d = dataclasses.asdict(row)
        lines.append(",".join(_render_cell(d[c]) for c in columns))
    return "\n".join(lines) + "\n"


def render_json(rows, model: str) -> str:
    columns = SU2_COLUMNS if model == "su2" else BLOCH_COLUMNS
    payload = [{c: dataclasses.asdict(row)[c] for c in columns} for row in rows]
    return json.dumps(payload, indent=2) + "\n"


def emit(rows, fmt: str, destination: str, model: str) -> None:
    """Write rows to `destination` ('-' means standard output).

    CSV has the fixed per-model header even when there are no rows;
    floats render with 17 significant digits so values round-trip
    exactly; JSON is an array of objects with the same keys.
    """
    if fmt == "csv":
        text = render_csv(rows, model)
    elif fmt == "json":
        text = render_json(rows, model)
    else:
        raise ConfigError(f"format = {fmt!r} violates constraint format in {{csv, json}}")
    if destination == "-":
        sys.stdout.write(text)
        return
    try:
        with open(destination, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as exc:
        raise ConfigError(f"cannot write output to {destination!r}: {exc}") from exc
