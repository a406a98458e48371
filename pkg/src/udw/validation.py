"""Cross-checks of every closed form against the dense-matrix oracles.

``run_checks`` is what ``udw validate`` executes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import oracle
from .dephasing import DephasingChannel, dephasing_probability, evolve, kraus_probabilities
from .quantifiers import GQD_DEGENERACY_TOL, concurrence, gqd_trace_norm, steering
from .thermodynamics import spectrum
from .xstate import XState, delta_of, fano_bloch, steady_state, validate


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    worst: float
    tolerance: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}: worst {self.worst:.3e} (tol {self.tolerance:g})"


def grid_axes(n: int = 101) -> tuple[np.ndarray, np.ndarray]:
    """``n`` x ``n`` grid over delta0 in [-3, 1] and gamma in [0, 1]."""
    return np.linspace(-3.0, 1.0, n), np.linspace(0.0, 1.0, n)


def steady_state_grid(n: int = 101) -> list[XState]:
    deltas, gammas = grid_axes(n)
    return [steady_state(float(d), float(g)) for d in deltas for g in gammas]


def random_x_states(n: int, rng: np.random.Generator, symmetric: bool = False) -> list[XState]:
    """Uniformly weighted populations with a coherence anywhere in the PSD range."""
    states = []
    for _ in range(n):
        p = rng.dirichlet(np.ones(4))
        if symmetric:
            inner = p[1] + p[2]
            p[1] = p[2] = inner / 2
        r23 = rng.uniform(-1.0, 1.0) * np.sqrt(p[1] * p[2])
        states.append(XState(*map(float, p), float(r23)))
    return states


def gqd_denominator(state: XState) -> float:
    f11, f22, f33, f30 = fano_bloch(state)
    return max(f22**2 + f30**2, f33**2) - min(f11**2, f33**2) + f11**2 - f22**2


def _stack(states) -> np.ndarray:
    return np.array([oracle.assemble(s) for s in states])


def check_physicality(states) -> Check:
    worst = 0.0
    for s in states:
        if validate(s):
            worst = max(worst, 1.0)
    return Check("steady states are physical", worst == 0.0, worst, 1e-12)


def check_delta_conservation(n: int = 101) -> Check:
    deltas, gammas = grid_axes(n)
    worst = max(abs(delta_of(steady_state(float(d), float(g))) - d) for d in deltas for g in gammas)
    return Check("delta0 conservation", worst <= 1e-12, worst, 1e-12)


def check_concurrence(states) -> Check:
    closed = np.array([concurrence(s) for s in states])
    dense = oracle.wootters_concurrence(_stack(states))
    worst = float(np.max(np.abs(closed - dense)))
    return Check("concurrence vs Wootters", worst <= 1e-10, worst, 1e-10)


def check_spectrum(states) -> Check:
    closed = np.array([spectrum(s) for s in states])
    dense = oracle.dense_spectrum(_stack(states))
    worst = float(np.max(np.abs(closed - dense)))
    return Check("spectrum vs Jacobi", worst <= 1e-10, worst, 1e-10)


def check_steering(states) -> Check:
    closed = [steering(s) for s in states]
    dense = oracle.entropic_steering_oracle(_stack(states))
    worst = max(
        max(abs(c.s_ab - d.s_ab), abs(c.s_ba - d.s_ba), abs(c.f_ab - d.f_ab))
        for c, d in zip(closed, dense)
    )
    return Check("steering vs entropic oracle", worst <= 1e-9, worst, 1e-9)


def check_kraus(states, times=np.linspace(0.0, 30.0, 301)) -> Check:
    worst = 0.0
    for tau in (0.1, 5.0):
        for mu in (0.0, 0.3, 0.6, 1.0):
            channel = DephasingChannel(tau, mu)
            for t in times:
                table = kraus_probabilities(dephasing_probability(float(t), tau), mu)
                for s in states:
                    explicit = oracle.kraus_apply(oracle.assemble(s), table)
                    shortcut = oracle.assemble(evolve(s, float(t), channel))
                    worst = max(worst, float(np.max(np.abs(explicit - shortcut))))
    return Check("Kraus map vs attenuation", worst <= 1e-12, worst, 1e-12)


def check_gqd(states) -> Check:
    worst = 0.0
    for s in states:
        worst = max(worst, abs(gqd_trace_norm(s) - oracle.gqd_numerical(oracle.assemble(s))))
    return Check("GQD vs measurement search", worst <= 1e-3, worst, 1e-3)


def run_checks(n_random: int = 1000, n_gqd: int = 100, seed: int = 2024) -> list[Check]:
    rng = np.random.default_rng(seed)
    grid = steady_state_grid()
    generic = random_x_states(n_random, rng)
    symmetric = random_x_states(n_random, rng, symmetric=True)
    nondegenerate = [
        s for s in random_x_states(4 * n_gqd, rng) if abs(gqd_denominator(s)) > 1e3 * GQD_DEGENERACY_TOL
    ][:n_gqd]
    kraus_states = [steady_state(-2.0, 0.5), steady_state(1.0, 0.0), steady_state(-3.0, 1.0)]
    return [
        check_physicality(grid),
        check_delta_conservation(),
        check_concurrence(grid + generic),
        check_spectrum(grid + symmetric),
        check_steering(grid + generic),
        check_kraus(kraus_states),
        check_gqd(nondegenerate),
    ]
