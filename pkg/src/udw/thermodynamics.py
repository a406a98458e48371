"""Spectrum, entropy, internal energy and the quantum Stirling cycle.

Entropies are in nats. Energies are in the units of ``omega``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .dephasing import DephasingChannel, evolve
from .xstate import TOL, XState, gamma_ratio, steady_state

ENTROPY_UNIT = "nats"


def _inner_block_eigenvalues(state: XState) -> tuple[float, float]:
    mean = 0.5 * (state.r22 + state.r33)
    radius = math.hypot(0.5 * (state.r22 - state.r33), state.r23)
    return mean + radius, mean - radius


def spectrum(state: XState) -> tuple[float, float, float, float]:
    """Eigenvalues ``{r11, r44, r22 + r23, r22 - r23}``, largest first.

    Only defined for states with ``r22 == r33``.
    """
    if abs(state.r22 - state.r33) > TOL:
        raise ValueError(f"spectrum needs r22 == r33, got {state.r22!r} and {state.r33!r}")
    eig = (state.r11, state.r44, state.r22 + state.r23, state.r22 - state.r23)
    return tuple(sorted(eig, reverse=True))


def entropy(state: XState) -> float:
    """Von Neumann entropy in nats."""
    eig = (state.r11, state.r44) + _inner_block_eigenvalues(state)
    return max(0.0, -sum(lam * math.log(lam) for lam in eig if lam > 0.0))


def internal_energy(state: XState, omega: float) -> float:
    """``Tr[H rho]`` for ``H = (omega/2)(s3 x 1 + 1 x s3)``: ``omega (r11 - r44)``."""
    return omega * (state.r11 - state.r44)


def steady_energy(delta0: float, omega: float, temperature: float) -> float:
    """Closed form ``-omega gamma (3 + delta0) / (3 + gamma^2)``."""
    g = gamma_ratio(omega, temperature)
    return -omega * g * (3.0 + delta0) / (3.0 + g * g)


@dataclass(frozen=True)
class CycleSpec:
    omega_a: float
    omega_b: float
    t_hot: float
    t_cold: float
    delta0: float
    channel: Optional[DephasingChannel] = None
    time: Optional[float] = None

    def __post_init__(self):
        if not self.omega_a > 0 or not self.omega_b > 0:
            raise ValueError("omega_a and omega_b must be positive")
        if not self.t_cold > 0:
            raise ValueError(f"t_cold must be positive, got {self.t_cold!r}")
        if not self.t_hot > self.t_cold:
            raise ValueError(f"t_hot ({self.t_hot!r}) must exceed t_cold ({self.t_cold!r})")
        if (self.channel is None) != (self.time is None):
            raise ValueError("channel and time must be given together")
        if self.time is not None and self.time < 0:
            raise ValueError("time must be nonnegative")


@dataclass(frozen=True)
class CycleResult:
    q_ab: float
    q_bc: float
    q_cd: float
    q_da: float
    q_hot: float
    q_cold: float
    work: float
    efficiency: Optional[float]


def corner_state(spec: CycleSpec, omega: float, temperature: float) -> XState:
    state = steady_state(spec.delta0, gamma_ratio(omega, temperature))
    if spec.channel is not None:
        state = evolve(state, spec.time, spec.channel)
    return state


def stirling_cycle(spec: CycleSpec) -> CycleResult:
    """Heats, work and efficiency of the four-stroke Stirling cycle.

    Corners are A = (omega_a, T_h), B = (omega_b, T_h), C = (omega_b, T_c)
    and D = (omega_a, T_c). With a channel, all four corner states are
    dephased for the same ``spec.time``. ``efficiency`` is ``None`` when no
    heat is absorbed.
    """
    a = corner_state(spec, spec.omega_a, spec.t_hot)
    b = corner_state(spec, spec.omega_b, spec.t_hot)
    c = corner_state(spec, spec.omega_b, spec.t_cold)
    d = corner_state(spec, spec.omega_a, spec.t_cold)

    q_ab = spec.t_hot * (entropy(b) - entropy(a))
    q_bc = internal_energy(c, spec.omega_b) - internal_energy(b, spec.omega_b)
    q_cd = spec.t_cold * (entropy(d) - entropy(c))
    q_da = internal_energy(a, spec.omega_a) - internal_energy(d, spec.omega_a)

    q_hot = q_ab + q_da
    q_cold = q_bc + q_cd
    work = q_hot + q_cold  # closes the first law exactly, not just to rounding
    efficiency = work / q_hot if q_hot != 0.0 else None
    return CycleResult(q_ab, q_bc, q_cd, q_da, q_hot, q_cold, work, efficiency)
