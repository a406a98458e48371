"""Sweep presets reproducing each figure family of the two-detector study.

Caption values are copied as given. Anything a caption leaves open (series
values for "different values of ...", axis ranges, the absolute cold-bath
temperature) is filled from the defaults below and listed in
``SweepConfig.defaults_used`` so it ends up in the run metadata.
"""

from __future__ import annotations

from .sweep import ConfigError, SweepConfig

DEFAULT_POINTS = 200
HEATMAP_POINTS = 100

T_RANGE = (0.01, 10.0)
T_RANGE_STEERING = (0.01, 1.0)
OMEGA_RANGE = (0.01, 5.0)
DELTA0_RANGE = (-3.0, 1.0)
OMEGA_B_RANGE = (0.01, 1.0)
TIME_RANGE_MARKOV = (0.0, 10.0)
TIME_RANGE_MEMORY = (0.0, 30.0)
T_COLD = 0.5

OMEGA_SERIES = (0.5, 1.0, 2.0, 3.0)
DELTA0_SERIES = (-3.0, -2.0, -1.0, 0.0, 1.0)
MU_SERIES_FIGS_7_8 = (0.0, 0.6, 0.8, 1.0)
MU_SERIES = (0.0, 0.4, 0.8, 1.0)
RESOURCES = ("steering", "eof", "gqd", "coherence")


def _cfg(quantity, axis, rng, series, points=DEFAULT_POINTS, defaults=(), **kw) -> SweepConfig:
    if isinstance(quantity, str):
        quantity = (quantity,)
    return SweepConfig(
        quantity=tuple(quantity),
        axis=axis,
        axis_range=(rng[0], rng[1], points),
        series=tuple(series),
        defaults_used=tuple(defaults),
        **kw,
    )


def _vary(key, values, **fixed):
    return [{**fixed, key: v} for v in values]


def _heatmap(axis, rng, axis2, rng2, fixed, points):
    return SweepConfig(
        quantity=("steering",),
        axis=axis,
        axis_range=(rng[0], rng[1], points),
        axis2=axis2,
        axis2_range=(rng2[0], rng2[1], points),
        series=(fixed,),
        defaults_used=("axis ranges",),
    )


def _dynamic_cfg(quantity, tau, series, defaults=(), points=DEFAULT_POINTS):
    rng = TIME_RANGE_MARKOV if tau < 0.25 else TIME_RANGE_MEMORY
    return _cfg(quantity, "time", rng, series, points, ("time range",) + tuple(defaults))


def _build(fig: str, points: int) -> SweepConfig:
    p = points
    hp = min(points, HEATMAP_POINTS)

    def _dynamic(quantity, tau, series, defaults=()):
        return _dynamic_cfg(quantity, tau, series, defaults, p)

    omega_series = ("omega series",)
    delta_series = ("delta0 series",)
    cold = (f"t_cold={T_COLD}",)
    table = {
        "1a": lambda: _cfg(("steering", "steering-ba"), "temperature", T_RANGE_STEERING,
                           _vary("omega", (0.2, 0.5, 1.0, 2.0), delta0=-1.9), p,
                           omega_series + ("temperature range",)),
        "1b": lambda: _cfg("steering", "temperature", T_RANGE,
                           _vary("delta0", (-3.0, -2.5, -2.0, -1.5), omega=5.0), p,
                           delta_series + ("temperature range",)),
        "1c": lambda: _cfg(("steering", "steering-ba", "asymmetry"), "temperature",
                           T_RANGE_STEERING, [{"delta0": -1.9, "omega": 0.2}], p,
                           ("temperature range",)),
        "2a": lambda: _heatmap("delta0", DELTA0_RANGE, "temperature", (0.01, 2.0),
                               {"omega": 1.0}, hp),
        "2b": lambda: _heatmap("omega", OMEGA_RANGE, "temperature", (0.01, 2.0),
                               {"delta0": -2.2}, hp),
        "2c": lambda: _heatmap("delta0", DELTA0_RANGE, "omega", OMEGA_RANGE,
                               {"temperature": 0.8}, hp),
        "3a": lambda: _cfg("eof", "temperature", T_RANGE,
                           _vary("omega", OMEGA_SERIES, delta0=-1.0), p, omega_series),
        "3b": lambda: _cfg("eof", "temperature", T_RANGE,
                           _vary("delta0", (-3.0, -2.5, -2.0, -1.5), omega=3.0), p, delta_series),
        "4a": lambda: _cfg("gqd", "temperature", T_RANGE,
                           _vary("omega", OMEGA_SERIES, delta0=0.1), p, omega_series),
        "4b": lambda: _cfg("gqd", "temperature", T_RANGE,
                           _vary("delta0", DELTA0_SERIES, omega=1.0), p, delta_series),
        "5a": lambda: _cfg("coherence", "temperature", T_RANGE,
                           _vary("omega", OMEGA_SERIES, delta0=1.0), p, omega_series),
        "5b": lambda: _cfg("coherence", "temperature", T_RANGE,
                           _vary("delta0", DELTA0_SERIES, omega=0.5), p, delta_series),
        "6a": lambda: _cfg(RESOURCES, "temperature", T_RANGE,
                           [{"delta0": -1.8, "omega": 0.8}], p),
        "6b": lambda: _cfg(RESOURCES, "omega", OMEGA_RANGE,
                           [{"delta0": -1.8, "temperature": 0.1}], p),
        "6c": lambda: _cfg(RESOURCES, "delta0", DELTA0_RANGE,
                           [{"omega": 1.5, "temperature": 0.5}], p),
        "7": lambda: _dynamic(RESOURCES, 0.1, _vary("mu", MU_SERIES_FIGS_7_8, tau=0.1,
                                                    temperature=0.1, delta0=-2.0, omega=1.0)),
        "8": lambda: _dynamic(RESOURCES, 5.0, _vary("mu", MU_SERIES_FIGS_7_8, tau=5.0,
                                                    temperature=0.1, delta0=-2.0, omega=1.0)),
        "9": lambda: _cfg(RESOURCES, "time", TIME_RANGE_MEMORY,
                          _vary("tau", (0.1, 5.0), delta0=-2.0, omega=3.0, mu=0.0,
                                temperature=0.2), p, ("time range",)),
        "11a": lambda: _cfg("cycle-heats", "omega_b", OMEGA_B_RANGE,
                            [{"delta0": -1.5, "omega_a": 1.0, "t_cold": T_COLD,
                              "t_hot": 2 * T_COLD}], p, cold),
        "11b": lambda: _cfg("efficiency", "omega_b", OMEGA_B_RANGE,
                            _vary("omega_a", (1.0, 1.5, 2.0), delta0=-1.5, t_cold=T_COLD,
                                  t_hot=2 * T_COLD), p, cold + ("omega_a series",)),
        "12a": lambda: _cfg("entropy", "temperature", T_RANGE,
                            _vary("omega", OMEGA_SERIES, delta0=-1.5), p, omega_series),
        "12b": lambda: _cfg("energy", "temperature", T_RANGE,
                            _vary("omega", OMEGA_SERIES, delta0=-1.5), p, omega_series),
        "13a": lambda: _cfg("entropy", "omega", OMEGA_RANGE,
                            _vary("delta0", (-2.5, -1.5, -0.5, 0.5), temperature=0.1), p,
                            delta_series),
        "13b": lambda: _cfg("energy", "omega", OMEGA_RANGE,
                            _vary("delta0", (-2.5, -1.5, -0.5, 0.5), temperature=0.1), p,
                            delta_series),
    }
    cycle_fixed = dict(delta0=-1.5, omega_a=1.0, omega_b=0.5, t_cold=T_COLD, t_hot=2 * T_COLD)
    fig17 = dict(delta0=-1.8, omega=3.0, mu=0.0, temperature=0.2, omega_a=2.0, omega_b=0.5,
                 t_cold=0.2, t_hot=0.3)
    for panel, tau in (("a", 0.1), ("b", 5.0)):
        table["9" + panel] = (lambda tau=tau: _cfg(
            RESOURCES, "time", TIME_RANGE_MARKOV if tau < 0.25 else TIME_RANGE_MEMORY,
            [{"delta0": -2.0, "omega": 3.0, "mu": 0.0, "temperature": 0.2, "tau": tau}], p,
            ("time range",)))
        table["14" + panel] = (lambda tau=tau: _dynamic(
            "cycle-heats", tau, [{**cycle_fixed, "tau": tau, "mu": 0.4}], cold))
        table["15" + panel] = (lambda tau=tau: _dynamic(
            "entropy", tau, _vary("mu", MU_SERIES, tau=tau, delta0=-2.0, omega=2.0,
                                  temperature=0.1), ("mu series",)))
        table["16" + panel] = (lambda tau=tau: _dynamic(
            "efficiency", tau, _vary("mu", MU_SERIES, tau=tau, **cycle_fixed),
            cold + ("mu series",)))
        table["17" + panel] = (lambda tau=tau: _dynamic(
            ("steering", "eof", "coherence", "work"), tau, [{**fig17, "tau": tau}],
            ("t_cold=temperature=0.2",)))
    if fig not in table:
        raise ConfigError(f"unknown figure {fig!r}; known: {', '.join(FIGURES)}")
    return table[fig]()


FIGURES = (
    "1a", "1b", "1c", "2a", "2b", "2c", "3a", "3b", "4a", "4b", "5a", "5b",
    "6a", "6b", "6c", "7", "8", "9", "9a", "9b", "11a", "11b", "12a", "12b",
    "13a", "13b", "14a", "14b", "15a", "15b", "16a", "16b", "17a", "17b",
)


def figure_preset(fig: str, points: int = DEFAULT_POINTS) -> SweepConfig:
    """Sweep configuration behind a figure panel, e.g. ``"7"`` or ``"11a"``."""
    fig = str(fig).strip().lower()
    cfg = _build(fig, points)
    return SweepConfig(**{**cfg.__dict__, "figure": fig})
