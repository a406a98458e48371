"""Acceptance criteria 1-11, one PASS/FAIL line each.

The lines are printed as each test runs and again in a summary section at the
end of the pytest session.
"""

import math
import time

import numpy as np
import pytest

import conftest
from udw import (
    DephasingChannel,
    coherence_l1,
    concurrence,
    entanglement_of_formation,
    entropy,
    evolve,
    gqd_trace_norm,
    spectrum,
    steering,
    steady_state,
    stirling_cycle,
    CycleSpec,
    delta_of,
    gamma_ratio,
)
from udw.cli import main
from udw.validation import (
    GQD_DEGENERACY_TOL,
    check_concurrence,
    check_gqd,
    check_kraus,
    check_spectrum,
    check_steering,
    gqd_denominator,
    grid_axes,
    random_x_states,
    steady_state_grid,
)

T_GRID = np.linspace(0.0, 30.0, 301)


def report(number: int, passed: bool, text: str) -> None:
    line = f"{'PASS' if passed else 'FAIL'} [{number}] {text}"
    conftest.ACCEPTANCE_LINES[number] = line
    print(line)
    assert passed, line


def quantifiers(state):
    return (
        steering(state).s_ab,
        entanglement_of_formation(min(1.0, concurrence(state))),
        gqd_trace_norm(state),
        coherence_l1(state),
    )


def test_criterion_01_physicality():
    start = time.perf_counter()
    deltas, gammas = grid_axes(101)
    worst_trace = worst_eig = worst_delta = 0.0
    count = 0
    for d in deltas:
        for g in gammas:
            state = steady_state(float(d), float(g))
            worst_trace = max(worst_trace, abs(sum(state.diagonal) - 1.0))
            worst_eig = max(worst_eig, -min(spectrum(state)))
            worst_delta = max(worst_delta, abs(delta_of(state) - d))
            count += 1
    elapsed = time.perf_counter() - start
    ok = count == 10201 and max(worst_trace, worst_eig, worst_delta) <= 1e-12 and elapsed < 5.0
    report(1, ok, f"physicality on {count} grid points: trace {worst_trace:.1e}, "
                  f"negative eigenvalue {max(worst_eig, 0):.1e}, delta0 drift {worst_delta:.1e} "
                  f"(tol 1e-12), {elapsed:.2f} s (< 5 s)")


def test_criterion_02_oracle_equivalence():
    start = time.perf_counter()
    rng = np.random.default_rng(2024)
    grid = steady_state_grid()
    generic = random_x_states(1000, rng)
    symmetric = random_x_states(1000, rng, symmetric=True)
    nondegenerate = [s for s in random_x_states(400, rng)
                     if abs(gqd_denominator(s)) > 1e3 * GQD_DEGENERACY_TOL][:100]
    checks = [
        check_concurrence(grid + generic),
        check_spectrum(grid + symmetric),
        check_steering(grid + generic),
        check_gqd(nondegenerate),
    ]
    elapsed = time.perf_counter() - start
    ok = all(c.passed for c in checks) and len(nondegenerate) == 100 and elapsed < 120.0
    detail = "; ".join(f"{c.name} {c.worst:.1e}/{c.tolerance:g}" for c in checks)
    report(2, ok, f"oracle equivalence: {detail}; {elapsed:.1f} s (< 120 s)")


def test_criterion_03_kraus_equivalence():
    states = [steady_state(d, g) for d, g in [(-2.0, 0.5), (1.0, 0.0), (-3.0, 1.0), (-1.9, 0.76)]]
    check = check_kraus(states, times=T_GRID)
    report(3, check.passed, f"Kraus map vs zeta shortcut over 301 t x 4 mu x 2 tau: "
                            f"worst {check.worst:.1e} (tol 1e-12)")


def test_criterion_04_anchor_states():
    singlet = steady_state(-3.0, 1.0)
    s = steering(singlet)
    c = concurrence(singlet)
    singlet_err = max(abs(s.s_ab - 1), abs(c - 1), abs(entanglement_of_formation(c) - 1),
                      abs(coherence_l1(singlet) - 1), abs(entropy(singlet)))
    mixed = steady_state(0.0, 0.0)
    m = steering(mixed)
    mixed_err = max(m.s_ab, m.s_ba, concurrence(mixed),
                    entanglement_of_formation(concurrence(mixed)), gqd_trace_norm(mixed),
                    coherence_l1(mixed), abs(entropy(mixed) - math.log(4)))
    ok = singlet_err <= 1e-9 and mixed_err <= 1e-12
    report(4, ok, f"anchors: singlet error {singlet_err:.1e} (tol 1e-9), "
                  f"maximally mixed error {mixed_err:.1e} (tol 1e-12)")


def test_criterion_05_coherence_plateau():
    omega = 1.0
    state = steady_state(1.0, gamma_ratio(omega, 1000.0 * omega))
    err = abs(coherence_l1(state) - 1.0 / 3.0)
    report(5, err <= 1e-3, f"coherence plateau at T = 1000 omega: |C - 1/3| = {err:.1e} (tol 1e-3)")


def test_criterion_06_steering_threshold():
    def s(t):
        return steering(steady_state(-1.9, gamma_ratio(0.2, t))).s_ab

    lo, hi = 0.1, 0.5
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        lo, hi = (mid, hi) if s(mid) > 0 else (lo, mid)
    ok = s(0.1) > 0 and s(0.5) == 0 and 0.15 <= hi <= 0.35
    report(6, ok, f"steering S(T=0.1) = {s(0.1):.4f} > 0, S(T=0.5) = {s(0.5):g}, "
                  f"vanishes at T = {hi:.4f} (window [0.15, 0.35])")


def _trajectories(tau, mu):
    channel = DephasingChannel(tau, mu)
    base = steady_state(-2.0, gamma_ratio(1.0, 0.1))
    return np.array([quantifiers(evolve(base, float(t), channel)) for t in T_GRID])


def _interior_maxima(y):
    idx = np.where((y[1:-1] > y[:-2]) & (y[1:-1] >= y[2:]))[0] + 1
    return y[idx]


def test_criterion_07_freezing_and_decay():
    frozen = _trajectories(0.1, 1.0)
    variation = float(np.max(frozen.max(axis=0) - frozen.min(axis=0)))
    decay = _trajectories(0.1, 0.0)
    worst_rise = float(np.max(np.diff(decay, axis=0)))
    peaks = _interior_maxima(_trajectories(5.0, 0.0)[:, 3])
    peaks_ok = len(peaks) >= 3 and bool(np.all(np.diff(peaks) <= 1e-12))
    ok = variation <= 1e-12 and worst_rise <= 1e-12 and peaks_ok
    report(7, ok, f"mu=1 variation {variation:.1e} (tol 1e-12); mu=0 tau=0.1 largest rise "
                  f"{worst_rise:.1e}; mu=0 tau=5 coherence has {len(peaks)} maxima, "
                  f"non-increasing: {peaks_ok}")


def test_criterion_08_hierarchy():
    deltas, gammas = grid_axes(101)
    counter = {"steering=>concurrence": 0, "concurrence=>gqd": 0, "gqd=>coherence": 0}
    for d in deltas:
        for g in gammas:
            state = steady_state(float(d), float(g))
            s, c = steering(state).s_ab, concurrence(state)
            q, l1 = gqd_trace_norm(state), coherence_l1(state)
            counter["steering=>concurrence"] += s > 1e-9 and not c > 1e-9
            counter["concurrence=>gqd"] += c > 1e-9 and not q > 1e-9
            counter["gqd=>coherence"] += q > 1e-9 and not l1 > 1e-9
    ok = sum(counter.values()) == 0
    report(8, ok, "hierarchy counterexamples on 10201 grid points: "
                  + ", ".join(f"{k} {v}" for k, v in counter.items()))


def test_criterion_09_thermodynamic_bounds():
    closure_fail = carnot_fail = engine_points = 0
    worst_excess = -np.inf
    for delta0 in np.linspace(-3.0, 1.0, 17):
        for wa in (0.5, 1.0, 2.0):
            for wb in np.linspace(0.05, 0.9, 18):
                for tc in np.linspace(0.1, 2.0, 20):
                    for ratio in (1.5, 2.0, 4.0):
                        res = stirling_cycle(CycleSpec(wa, float(wb), ratio * tc, tc, float(delta0)))
                        closure_fail += res.work != res.q_hot + res.q_cold
                        if res.q_hot > 0 and res.work > 0:
                            engine_points += 1
                            excess = res.efficiency - (1 - 1 / ratio)
                            worst_excess = max(worst_excess, excess)
                            carnot_fail += excess > 1e-9
    omega_b = np.linspace(0.05, 0.9, 101)[1:-1]
    engine_tc = []
    for tc in np.linspace(0.1, 2.0, 20):
        runs = [stirling_cycle(CycleSpec(1.0, float(wb), 2 * tc, tc, -1.5)) for wb in omega_b]
        if all(r.q_hot > 0 and r.work > 0 and r.q_cold < 0 for r in runs):
            engine_tc.append(round(float(tc), 3))
    ok = closure_fail == 0 and carnot_fail == 0 and engine_points > 0 and len(engine_tc) >= 1
    report(9, ok, f"first-law mismatches {closure_fail}; Carnot violations {carnot_fail} of "
                  f"{engine_points} engine points (max eta - eta_C = {worst_excess:.2e}); "
                  f"T_c with engine across omega_B: {len(engine_tc)} of 20")


def test_criterion_10_entropy_dynamics():
    base = steady_state(-2.0, gamma_ratio(2.0, 0.1))
    curves = {}
    for mu in (0.0, 0.2, 0.4, 0.6, 0.8, 0.95):
        channel = DephasingChannel(0.1, mu)
        curves[mu] = np.array([entropy(evolve(base, float(t), channel)) for t in T_GRID])
    worst_drop = max(float(-np.min(np.diff(c))) for c in curves.values())
    mus = sorted(curves)
    worst_order = max(float(np.max(curves[b] - curves[a])) for a, b in zip(mus, mus[1:]))
    ok = worst_drop <= 1e-12 and worst_order <= 1e-12
    report(10, ok, f"entropy under tau=0.1: largest decrease in t {max(worst_drop, 0):.1e}; "
                   f"largest excess of larger mu {max(worst_order, 0):.1e} (tol 1e-12)")


def test_criterion_11_full_suite(tmp_path):
    start = time.perf_counter()
    code = main(["figure", "all", "--output-dir", str(tmp_path)])
    regen = time.perf_counter() - start
    produced = len(list(tmp_path.glob("fig*.csv")))
    so_far = time.perf_counter() - conftest.SESSION_START
    ok = code == 0 and produced == 34 and so_far < conftest.FULL_SUITE_BUDGET
    report(11, ok, f"CLI regenerated {produced} figure datasets in {regen:.1f} s; "
                   f"suite elapsed {so_far:.1f} s so far (budget 300 s)")
