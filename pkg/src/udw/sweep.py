"""Parameter sweeps, figure presets and CSV/JSON emission."""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

import numpy as np

from . import __version__
from .dephasing import DephasingChannel, evolve
from .quantifiers import (
    coherence_l1,
    concurrence,
    entanglement_of_formation,
    gqd_trace_norm,
    steering,
)
from .thermodynamics import CycleSpec, entropy, internal_energy, stirling_cycle
from .xstate import gamma_ratio, steady_state

WORKERS_ENV = "UDW_WORKERS"

STATE_QUANTITIES = (
    "steering",
    "steering-ba",
    "asymmetry",
    "eof",
    "concurrence",
    "gqd",
    "coherence",
    "entropy",
)
CYCLE_QUANTITIES = ("cycle-heats", "work", "efficiency")
QUANTITIES = STATE_QUANTITIES + ("energy",) + CYCLE_QUANTITIES
AXES = ("temperature", "omega", "delta0", "time", "omega_b")
PARAMETERS = (
    "delta0",
    "omega",
    "temperature",
    "tau",
    "mu",
    "omega_a",
    "omega_b",
    "t_hot",
    "t_cold",
    "time",
)
STATE_PARAMS = ("delta0", "omega", "temperature")
CYCLE_PARAMS = ("delta0", "omega_a", "omega_b", "t_hot", "t_cold")
DYNAMICS_PARAMS = ("tau", "mu", "time")

UNITS = {
    "steering": "bits",
    "steering-ba": "bits",
    "asymmetry": "bits",
    "eof": "ebits",
    "concurrence": "dimensionless",
    "gqd": "dimensionless (trace distance)",
    "coherence": "dimensionless (l1 norm)",
    "entropy": "nats",
    "energy": "omega units",
    "cycle-heats": "omega units",
    "work": "omega units",
    "efficiency": "dimensionless",
}
LOG_BASES = {"steering": 2, "steering-ba": 2, "asymmetry": 2, "eof": 2, "entropy": "e"}


class ConfigError(ValueError):
    """An invalid or incomplete sweep configuration."""


@dataclass(frozen=True)
class SweepConfig:
    """One dataset: quantities along an axis, one column per series binding.

    ``axis2``/``axis2_range`` turn the sweep into a heatmap grid emitted in
    long format (one row per grid point).
    """

    quantity: tuple[str, ...]
    axis: str
    axis_range: tuple[float, float, int]
    series: tuple[dict, ...] = (dict(),)
    output_path: Optional[str] = None
    format: str = "csv"
    log_axis: bool = False
    axis2: Optional[str] = None
    axis2_range: Optional[tuple[float, float, int]] = None
    figure: Optional[str] = None
    defaults_used: tuple[str, ...] = ()

    def validate(self) -> None:
        problems = []
        for q in self.quantity:
            if q not in QUANTITIES:
                problems.append(f"unknown quantity {q!r}")
        if not self.quantity:
            problems.append("no quantity given")
        axes = [(self.axis, self.axis_range)]
        if self.axis2 is not None or self.axis2_range is not None:
            axes.append((self.axis2, self.axis2_range))
        for name, rng in axes:
            if name not in AXES:
                problems.append(f"unknown axis {name!r}")
            if rng is None or len(rng) != 3:
                problems.append(f"axis {name!r} needs a (min, max, points) range")
                continue
            lo, hi, points = rng
            if int(points) < 2:
                problems.append(f"axis {name!r}: points must be >= 2, got {points}")
            if not lo < hi:
                problems.append(f"axis {name!r}: min must be < max, got {lo} >= {hi}")
        if self.format not in ("csv", "json"):
            problems.append(f"unknown format {self.format!r}")
        swept = {self.axis} | ({self.axis2} if self.axis2 else set())
        for i, binding in enumerate(self.series):
            for key in binding:
                if key not in PARAMETERS:
                    problems.append(f"series {i}: unknown parameter {key!r}")
            bound = set(binding) | swept
            for q in self.quantity:
                for name in required_parameters(q, bound):
                    if name not in bound:
                        problems.append(f"series {i}: {q} needs unbound parameter {name!r}")
        if problems:
            raise ConfigError("; ".join(dict.fromkeys(problems)))


def required_parameters(quantity: str, bound) -> tuple[str, ...]:
    base = CYCLE_PARAMS if quantity in CYCLE_QUANTITIES else STATE_PARAMS
    if quantity != "energy" and any(p in bound for p in DYNAMICS_PARAMS):
        return base + DYNAMICS_PARAMS
    return base


def axis_values(lo: float, hi: float, points: int, log: bool = False) -> np.ndarray:
    if log:
        return np.geomspace(lo, hi, int(points))
    return np.linspace(lo, hi, int(points))


@dataclass
class Dataset:
    """Named columns of equal length; ``None`` marks an undefined value."""

    columns: dict = field(default_factory=dict)

    @property
    def n_rows(self) -> int:
        return len(next(iter(self.columns.values()))) if self.columns else 0


@dataclass
class RunMetadata:
    tool_version: str
    timestamp: str
    parameters: dict
    units: dict
    log_bases: dict
    corrections: dict


# --- evaluation --------------------------------------------------------------


def _channel(params: dict) -> Optional[DephasingChannel]:
    if "tau" in params:
        return DephasingChannel(params["tau"], params["mu"])
    return None


def evaluate(quantity: str, params: dict) -> tuple[dict, int]:
    """Evaluate one quantity at one parameter point.

    Returns a mapping of column suffix to value (``""`` for single-valued
    quantities) and the number of numerical GQD fallbacks taken.
    """
    channel = _channel(params)
    if quantity in CYCLE_QUANTITIES:
        spec = CycleSpec(
            omega_a=params["omega_a"],
            omega_b=params["omega_b"],
            t_hot=params["t_hot"],
            t_cold=params["t_cold"],
            delta0=params["delta0"],
            channel=channel,
            time=params.get("time") if channel is not None else None,
        )
        res = stirling_cycle(spec)
        if quantity == "cycle-heats":
            return {"q_hot": res.q_hot, "q_cold": res.q_cold, "work": res.work}, 0
        if quantity == "work":
            return {"": res.work}, 0
        return {"": res.efficiency}, 0

    state = steady_state(params["delta0"], gamma_ratio(params["omega"], params["temperature"]))
    if quantity == "energy":
        return {"": internal_energy(state, params["omega"])}, 0
    if channel is not None:
        state = evolve(state, params["time"], channel)
    if quantity in ("steering", "steering-ba", "asymmetry"):
        s = steering(state)
        value = {"steering": s.s_ab, "steering-ba": s.s_ba, "asymmetry": s.asymmetry}[quantity]
        return {"": value}, 0
    if quantity == "concurrence":
        return {"": concurrence(state)}, 0
    if quantity == "eof":
        return {"": entanglement_of_formation(min(1.0, concurrence(state)))}, 0
    if quantity == "gqd":
        value, fallback = gqd_trace_norm(state, full_output=True)
        return {"": value}, int(fallback)
    if quantity == "coherence":
        return {"": coherence_l1(state)}, 0
    if quantity == "entropy":
        return {"": entropy(state)}, 0
    raise ConfigError(f"unknown quantity {quantity!r}")


def series_label(binding: dict, skip=()) -> str:
    return ",".join(f"{k}={binding[k]:g}" for k in PARAMETERS if k in binding and k not in skip)


def _column_name(quantity: str, suffix: str, label: str) -> str:
    name = suffix or quantity
    return f"{name}[{label}]" if label else name


def _grid(config: SweepConfig) -> list[dict]:
    xs = axis_values(*config.axis_range, log=config.log_axis)
    if config.axis2 is None:
        return [{config.axis: float(x)} for x in xs]
    ys = axis_values(*config.axis2_range)
    return [{config.axis: float(x), config.axis2: float(y)} for x in xs for y in ys]


def _evaluate_series(args) -> tuple[dict, int]:
    config, binding = args
    label = series_label(binding, skip=(config.axis, config.axis2))
    columns: dict = {}
    fallbacks = 0
    for point in _grid(config):
        params = {**binding, **point}
        for q in config.quantity:
            values, n = evaluate(q, params)
            fallbacks += n
            for suffix, value in values.items():
                columns.setdefault(_column_name(q, suffix, label), []).append(value)
    return columns, fallbacks


def _workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def run_sweep(config: SweepConfig) -> tuple[Dataset, RunMetadata]:
    """Evaluate a sweep; rows follow ascending axis (then ``axis2``) values."""
    config.validate()
    grid = _grid(config)
    columns = {config.axis: [p[config.axis] for p in grid]}
    if config.axis2 is not None:
        columns[config.axis2] = [p[config.axis2] for p in grid]

    jobs = [(config, binding) for binding in config.series]
    workers = min(_workers(), len(jobs))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_evaluate_series, jobs))
    else:
        results = [_evaluate_series(job) for job in jobs]

    fallbacks = 0
    for cols, n in results:
        fallbacks += n
        for name, values in cols.items():
            if name in columns:
                raise ConfigError(f"duplicate column {name!r}; series bindings must differ")
            columns[name] = values
    metadata = build_metadata(config, fallbacks)
    return Dataset(columns), metadata


def build_metadata(config: SweepConfig, gqd_fallbacks: int) -> RunMetadata:
    params = asdict(config)
    params["series"] = [dict(b) for b in config.series]
    params.pop("output_path")
    uses_spectrum = any(q in ("entropy",) + CYCLE_QUANTITIES for q in config.quantity)
    return RunMetadata(
        tool_version=__version__,
        timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"),
        parameters=params,
        units={q: UNITS[q] for q in config.quantity},
        log_bases={q: LOG_BASES[q] for q in config.quantity if q in LOG_BASES},
        corrections={
            "steady_state_population_swap": True,
            "x_state_spectrum_correction": uses_spectrum,
            "gqd_fallback_count": gqd_fallbacks,
            "defaults_used": list(config.defaults_used),
        },
    )


# --- output ------------------------------------------------------------------


def _fmt(value) -> str:
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return ""
    return f"{value:.12g}"


def render_csv(dataset: Dataset) -> str:
    names = list(dataset.columns)
    lines = [",".join(names)]
    for row in zip(*dataset.columns.values()):
        lines.append(",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def render_json(dataset: Dataset, metadata: RunMetadata) -> str:
    def clean(v):
        if v is None or (isinstance(v, float) and math.isnan(v)):
            return None
        return float(f"{v:.12g}")

    doc = {
        "metadata": asdict(metadata),
        "columns": {k: [clean(v) for v in vals] for k, vals in dataset.columns.items()},
    }
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def emit(dataset: Dataset, metadata: RunMetadata, format: str, path) -> None:
    """Write a dataset.

    CSV output gets its metadata block in a ``<path>.meta.json`` sidecar;
    JSON output embeds it under ``"metadata"``.
    """
    if dataset.n_rows == 0:
        raise ValueError("refusing to emit an empty dataset")
    path = Path(path)
    if format == "csv":
        text = render_csv(dataset)
        meta_text = json.dumps({"metadata": asdict(metadata)}, indent=2) + "\n"
        _write(path, text)
        _write(path.with_name(path.name + ".meta.json"), meta_text)
    elif format == "json":
        _write(path, render_json(dataset, metadata))
    else:
        raise ConfigError(f"unknown format {format!r}")


def _write(path: Path, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc
