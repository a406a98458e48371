"""Closed-form resource measures for X states.

Steering, concurrence and entanglement of formation are in bits (base-2
logarithms). Geometric discord and l1 coherence are dimensionless norms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .xstate import XState, fano_bloch

LOG_BASE = 2
GQD_DEGENERACY_TOL = 1e-9
F_MAX = 6.0


@dataclass(frozen=True)
class SteeringResult:
    s_ab: float
    s_ba: float
    asymmetry: float
    f_ab: float


def _xlog2x(x: float) -> float:
    if x <= 0.0:
        return 0.0
    return x * math.log2(x)


def _criterion(joint: list[float], marginal: list[float]) -> float:
    return 0.5 * sum(_xlog2x(w) for w in joint) - sum(_xlog2x(w) for w in marginal)


def steering(state: XState) -> SteeringResult:
    """Entropic steering ``S = max(0, (f - 2) / (f_max - 2))`` in both directions.

    The outcome weights are four times the joint probabilities of the
    ``xx``, ``yy`` and ``zz`` measurements and twice the marginal ones of
    the steering party. For X states only the ``z`` marginal is biased.
    """
    r11, r22, r33, r44 = state.diagonal
    c = 2.0 * state.r23
    joint = [1.0 + c, 1.0 + c, 1.0 - c, 1.0 - c] * 2 + [4.0 * r11, 4.0 * r22, 4.0 * r33, 4.0 * r44]
    z_a = r11 + r22 - r33 - r44
    z_b = r11 + r33 - r22 - r44
    f_ab = _criterion(joint, [1.0] * 4 + [1.0 + z_a, 1.0 - z_a])
    f_ba = _criterion(joint, [1.0] * 4 + [1.0 + z_b, 1.0 - z_b])
    s_ab = max(0.0, (f_ab - 2.0) / (F_MAX - 2.0))
    s_ba = max(0.0, (f_ba - 2.0) / (F_MAX - 2.0))
    return SteeringResult(s_ab, s_ba, abs(s_ab - s_ba), f_ab)


def concurrence(state: XState) -> float:
    return 2.0 * max(
        0.0,
        abs(state.r23) - math.sqrt(max(state.r11 * state.r44, 0.0)),
        -math.sqrt(max(state.r22 * state.r33, 0.0)),
    )


def binary_entropy(x: float) -> float:
    return -_xlog2x(x) - _xlog2x(1.0 - x)


def entanglement_of_formation(c: float) -> float:
    if not 0.0 <= c <= 1.0:
        raise ValueError(f"concurrence must lie in [0, 1], got {c!r}")
    return binary_entropy((1.0 + math.sqrt(1.0 - c * c)) / 2.0)


def gqd_trace_norm(state: XState, full_output: bool = False):
    """Trace-norm geometric quantum discord with the first qubit measured.

    Where the closed form degenerates to 0/0 (Bell states, and the locus
    ``F30 = 0, |F33| = |F11|``) the value comes from the numerical
    measurement search in ``udw.oracle``.

    Args:
        state: the X state.
        full_output: also return whether the numerical fallback was used.

    Returns:
        The discord, or ``(discord, used_fallback)`` if ``full_output``.
    """
    f11, f22, f33, f30 = fano_bloch(state)
    upper = max(f22 * f22 + f30 * f30, f33 * f33)
    lower = min(f11 * f11, f33 * f33)
    den = upper - lower + f11 * f11 - f22 * f22
    if abs(den) > GQD_DEGENERACY_TOL:
        num = f11 * f11 * upper - f22 * f22 * lower
        value = 0.5 * math.sqrt(max(num / den, 0.0))
        fallback = False
    else:
        value = _gqd_fallback(state)
        fallback = True
    return (value, fallback) if full_output else value


@lru_cache(maxsize=4096)
def _gqd_fallback(state: XState) -> float:
    # degenerate loci recur across sweeps (singlet column, infinite-temperature row)
    from .oracle import assemble, gqd_numerical

    return gqd_numerical(assemble(state))


def coherence_l1(state: XState) -> float:
    return 2.0 * abs(state.r23)
