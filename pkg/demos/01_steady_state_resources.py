"""How the four quantum resources of the detector pair fade with temperature.

Two accelerated detectors settle into an X state that depends only on the
initial correlator delta0 and the ratio gamma = tanh(omega / 2T). Steering
is the most fragile resource and disappears first; coherence survives the
longest.

Run with ``python demos/01_steady_state_resources.py``.
"""

import numpy as np

from udw import (
    coherence_l1,
    concurrence,
    entanglement_of_formation,
    gamma_ratio,
    gqd_trace_norm,
    steady_state,
    steering,
)

DELTA0, OMEGA = -1.8, 0.8

print(f"delta0 = {DELTA0}, omega = {OMEGA}")
print(f"{'T':>6} {'gamma':>7} {'steer':>7} {'EoF':>7} {'GQD':>7} {'C_l1':>7}")
for temperature in np.geomspace(0.02, 5.0, 12):
    g = gamma_ratio(OMEGA, temperature)
    state = steady_state(DELTA0, g)
    row = (
        steering(state).s_ab,
        entanglement_of_formation(concurrence(state)),
        gqd_trace_norm(state),
        coherence_l1(state),
    )
    print(f"{temperature:6.3f} {g:7.4f} " + " ".join(f"{v:7.4f}" for v in row))

# At infinite temperature gamma -> 0 and only delta0 is left: r23 = delta0 / 6.
hot = steady_state(DELTA0, 0.0)
print(f"\ninfinite temperature: C_l1 = {coherence_l1(hot):.4f} = |delta0| / 3")
