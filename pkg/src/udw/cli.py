"""Command-line front end: ``udw {sweep,dynamics,cycle,heatmap,figure,validate}``.

Exit codes: 0 success, 1 invalid configuration, 2 I/O failure, 3 internal
validation failure. Any option may also come from a ``key=value`` file given
with ``--config``; options on the command line win.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from pathlib import Path

from . import __version__
from .dephasing import DephasingChannel
from .oracle import ConvergenceError
from .presets import DEFAULT_POINTS, FIGURES, figure_preset
from .sweep import (
    PARAMETERS,
    ConfigError,
    SweepConfig,
    emit,
    render_csv,
    render_json,
    run_sweep,
)
from .thermodynamics import CycleSpec, stirling_cycle

EXIT_OK, EXIT_CONFIG, EXIT_IO, EXIT_VALIDATION = 0, 1, 2, 3

DEFAULTS = {
    "format": "csv",
    "axis_range": "0.01 10 200",
    "series": [],
}


class ValidationFailure(RuntimeError):
    pass


def parse_series(text: str) -> dict:
    """``"delta0=-1.9,omega=0.2"`` -> ``{"delta0": -1.9, "omega": 0.2}``."""
    binding = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        key, sep, value = item.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or key not in PARAMETERS:
            raise ConfigError(f"bad series binding {item!r}; expected one of {', '.join(PARAMETERS)}")
        try:
            binding[key] = float(value)
        except ValueError:
            raise ConfigError(f"series value for {key!r} is not a number: {value!r}") from None
    return binding


def parse_range(text) -> tuple[float, float, int]:
    parts = text if isinstance(text, (list, tuple)) else text.replace(",", " ").split()
    if len(parts) != 3:
        raise ConfigError(f"a range needs MIN MAX POINTS, got {text!r}")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ConfigError(f"malformed range {text!r}") from None


def read_config_file(path: str) -> dict:
    """Parse ``key=value`` lines; ``#`` starts a comment, ``series`` may hold
    several bindings separated by ``;``."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot read config file {path}: {exc.strerror or exc}") from exc
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"{path}:{lineno}: expected key=value")
        key = key.strip().replace("-", "_")
        value = value.strip()
        if key == "series":
            values[key] = [s for s in (v.strip() for v in value.split(";")) if s]
        else:
            values[key] = value
    return values


def _merge(args: argparse.Namespace, keys) -> dict:
    """Command line over config file over built-in defaults."""
    file_values = read_config_file(args.config) if getattr(args, "config", None) else {}
    merged = {}
    for key in keys:
        cli_value = getattr(args, key, None)
        if cli_value not in (None, [], False):
            merged[key] = cli_value
        elif key in file_values:
            merged[key] = file_values[key]
        elif key in DEFAULTS:
            merged[key] = DEFAULTS[key]
        else:
            merged[key] = cli_value
    return merged


def _truthy(value) -> bool:
    if isinstance(value, str):
        return value.strip().lower() in ("1", "true", "yes", "on")
    return bool(value)


def config_from_args(args: argparse.Namespace, axis: str | None = None) -> SweepConfig:
    keys = ("quantity", "axis", "axis_range", "series", "output_path", "format", "log_axis",
            "axis2", "axis2_range")
    m = _merge(args, keys)
    if not m["quantity"]:
        raise ConfigError("--quantity is required")
    axis = axis or m["axis"]
    if not axis:
        raise ConfigError("--axis is required")
    series = m["series"] or [""]
    if isinstance(series, str):
        series = [series]
    return SweepConfig(
        quantity=tuple(q.strip() for q in str(m["quantity"]).split(",") if q.strip()),
        axis=axis,
        axis_range=parse_range(m["axis_range"]),
        series=tuple(parse_series(s) for s in series),
        output_path=m["output_path"],
        format=m["format"],
        log_axis=_truthy(m["log_axis"]),
        axis2=m.get("axis2"),
        axis2_range=parse_range(m["axis2_range"]) if m.get("axis2_range") else None,
    )


def _write_dataset(config: SweepConfig, out=None) -> None:
    out = out or sys.stdout
    dataset, metadata = run_sweep(config)
    if config.output_path:
        emit(dataset, metadata, config.format, config.output_path)
        print(f"wrote {dataset.n_rows} rows to {config.output_path}", file=sys.stderr)
    elif config.format == "json":
        out.write(render_json(dataset, metadata))
    else:
        out.write(render_csv(dataset))


# --- subcommands --------------------------------------------------------------


def cmd_sweep(args):
    _write_dataset(config_from_args(args))


def cmd_dynamics(args):
    if args.axis_range is None:
        args.axis_range = ["0", "30", str(DEFAULT_POINTS)]
    _write_dataset(config_from_args(args, axis="time"))


def cmd_heatmap(args):
    config = config_from_args(args)
    if config.axis2 is None or config.axis2_range is None:
        raise ConfigError("heatmap needs --axis2 and --axis2-range")
    _write_dataset(config)


def cmd_cycle(args):
    keys = ("omega_a", "omega_b", "t_hot", "t_cold", "delta0", "tau", "mu", "time", "output_path")
    m = _merge(args, keys)
    try:
        core = {k: float(m[k]) for k in ("omega_a", "omega_b", "t_hot", "t_cold", "delta0")}
    except TypeError:
        missing = [k for k in keys[:5] if m[k] is None]
        raise ConfigError(f"cycle needs {', '.join('--' + k.replace('_', '-') for k in missing)}") from None
    channel, time = None, None
    if any(m[k] is not None for k in ("tau", "mu", "time")):
        if any(m[k] is None for k in ("tau", "mu", "time")):
            raise ConfigError("dynamical cycle needs all of --tau, --mu, --time")
        channel = DephasingChannel(float(m["tau"]), float(m["mu"]))
        time = float(m["time"])
    result = stirling_cycle(CycleSpec(**core, channel=channel, time=time))
    doc = {
        "tool_version": __version__,
        "parameters": {**core, "tau": m["tau"], "mu": m["mu"], "time": m["time"]},
        "units": {"heat": "omega units", "entropy": "nats"},
        "result": asdict(result),
    }
    text = json.dumps(doc, indent=2) + "\n"
    if m["output_path"]:
        try:
            Path(m["output_path"]).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise OSError(f"cannot write {m['output_path']}: {exc.strerror or exc}") from exc
    else:
        sys.stdout.write(text)


def cmd_figure(args):
    ids = FIGURES if args.id == "all" else (args.id,)
    points = args.points or DEFAULT_POINTS
    for fig in ids:
        config = figure_preset(fig, points=points)
        if args.output_dir:
            Path(args.output_dir).mkdir(parents=True, exist_ok=True)
            path = str(Path(args.output_dir) / f"fig{fig}.{args.format}")
        elif args.output_path and len(ids) == 1:
            path = args.output_path
        else:
            path = None
        config = SweepConfig(**{**config.__dict__, "output_path": path, "format": args.format})
        _write_dataset(config)


def cmd_validate(args):
    from .validation import run_checks

    checks = run_checks(n_random=200 if args.quick else 1000, n_gqd=20 if args.quick else 100)
    for check in checks:
        print(check.line())
    if not all(c.passed for c in checks):
        raise ValidationFailure(f"{sum(not c.passed for c in checks)} check(s) failed")


# --- parser -------------------------------------------------------------------


def _add_sweep_options(p: argparse.ArgumentParser, axis: bool = True) -> None:
    p.add_argument("--quantity", help="comma-separated quantities, e.g. steering,eof")
    if axis:
        p.add_argument("--axis", help="temperature, omega, delta0, time or omega_b")
    p.add_argument("--axis-range", nargs=3, metavar=("MIN", "MAX", "POINTS"))
    p.add_argument("--series", action="append", default=[],
                   help="fixed parameters of one curve, e.g. delta0=-1.9,omega=0.2 (repeatable)")
    p.add_argument("--output-path")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--log-axis", action="store_true", default=None,
                   help="geometric instead of linear axis spacing")
    p.add_argument("--config", help="key=value file; command-line options take precedence")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="udw", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"udw {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", help="one-dimensional parameter sweep")
    _add_sweep_options(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("dynamics", help="sweep over time under the dephasing channel")
    _add_sweep_options(p, axis=False)
    p.set_defaults(func=cmd_dynamics)

    p = sub.add_parser("heatmap", help="two-dimensional grid, long format")
    _add_sweep_options(p)
    p.add_argument("--axis2")
    p.add_argument("--axis2-range", nargs=3, metavar=("MIN", "MAX", "POINTS"))
    p.set_defaults(func=cmd_heatmap)

    p = sub.add_parser("cycle", help="heats, work and efficiency of one Stirling cycle")
    for name in ("omega-a", "omega-b", "t-hot", "t-cold", "delta0", "tau", "mu", "time"):
        p.add_argument(f"--{name}", type=float)
    p.add_argument("--output-path")
    p.add_argument("--config")
    p.set_defaults(func=cmd_cycle)

    p = sub.add_parser("figure", help="regenerate a figure dataset from its preset")
    p.add_argument("id", help=f"one of {', '.join(FIGURES)} or 'all'")
    p.add_argument("--output-path")
    p.add_argument("--output-dir")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--points", type=int)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("validate", help="run every oracle cross-check")
    p.add_argument("--quick", action="store_true")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except ValidationFailure as exc:
        print(f"udw: validation failed: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ConvergenceError as exc:
        print(f"udw: internal check failed: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"udw: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"udw: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_OK
