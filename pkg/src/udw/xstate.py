"""X-shaped two-qubit states and the two-detector Unruh steady state.

Only five real numbers describe the states used throughout the package: the
four populations ``r11 .. r44`` in the computational basis ``|00>, |01>,
|10>, |11>`` and the single real coherence ``r23`` between ``|01>`` and
``|10>``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

TOL = 1e-12


@dataclass(frozen=True)
class XState:
    r11: float
    r22: float
    r33: float
    r44: float
    r23: float

    @property
    def diagonal(self) -> tuple[float, float, float, float]:
        return (self.r11, self.r22, self.r33, self.r44)

    def with_coherence(self, r23: float) -> "XState":
        return XState(self.r11, self.r22, self.r33, self.r44, r23)


MAXIMALLY_MIXED = XState(0.25, 0.25, 0.25, 0.25, 0.0)
SINGLET = XState(0.0, 0.5, 0.5, 0.0, -0.5)


def gamma_ratio(omega: float, temperature: float) -> float:
    """Unruh ratio ``tanh(omega / 2T)``.

    ``temperature=math.inf`` is accepted and gives 0. Vanishingly small
    temperatures saturate to 1 instead of overflowing.
    """
    if not omega > 0:
        raise ValueError(f"omega must be positive, got {omega!r}")
    if not temperature > 0:
        raise ValueError(f"temperature must be positive, got {temperature!r}")
    if math.isinf(temperature):
        return 0.0
    return math.tanh(omega / (2.0 * temperature))


@dataclass(frozen=True)
class SteadyStateParams:
    delta0: float
    omega: float
    temperature: float

    def __post_init__(self):
        _check_delta0(self.delta0)
        if not self.omega > 0:
            raise ValueError(f"omega must be positive, got {self.omega!r}")
        if not self.temperature > 0:
            raise ValueError(f"temperature must be positive, got {self.temperature!r}")

    @property
    def gamma(self) -> float:
        return gamma_ratio(self.omega, self.temperature)

    def state(self) -> XState:
        return steady_state(self.delta0, self.gamma)


def _check_delta0(delta0: float) -> None:
    if not -3.0 <= delta0 <= 1.0:
        raise ValueError(f"delta0 must lie in [-3, 1], got {delta0!r}")


def steady_state(delta0: float, gamma: float) -> XState:
    """Asymptotic two-detector state for initial correlator ``delta0``.

    The populations of ``|01>, |10>`` and ``|11>`` are assigned so that the
    trace is one and ``delta_of`` returns ``delta0`` for every ``gamma``.
    """
    _check_delta0(delta0)
    if not 0.0 <= gamma <= 1.0:
        raise ValueError(f"gamma must lie in [0, 1], got {gamma!r}")
    g2 = gamma * gamma
    den = 4.0 * (3.0 + g2)
    r11 = (3.0 + delta0) * (gamma - 1.0) ** 2 / den
    r22 = (3.0 - delta0 - (delta0 + 1.0) * g2) / den
    r44 = (3.0 + delta0) * (gamma + 1.0) ** 2 / den
    r23 = (delta0 - g2) / (2.0 * (3.0 + g2))
    return XState(r11, r22, r22, r44, r23)


def delta_of(state: XState) -> float:
    """Sum of the same-axis Pauli correlators ``<xx> + <yy> + <zz>``."""
    return 4.0 * state.r23 + (state.r11 - state.r22 - state.r33 + state.r44)


def fano_bloch(state: XState) -> tuple[float, float, float, float]:
    """Non-vanishing Fano-Bloch components ``(F11, F22, F33, F30)``.

    ``F30`` is the Bloch z-component of the first qubit.
    """
    f11 = 2.0 * state.r23
    f33 = 1.0 - 2.0 * (state.r22 + state.r33)
    f30 = 2.0 * (state.r11 + state.r22) - 1.0
    return f11, f11, f33, f30


def validate(state: XState, tol: float = TOL) -> list[str]:
    """Physicality diagnostics; an empty list means the state is valid."""
    problems = []
    trace = sum(state.diagonal)
    if abs(trace - 1.0) > tol:
        problems.append(f"trace: sum of populations is {trace!r} (residual {trace - 1.0:.3e})")
    for name, value in zip(("r11", "r22", "r33", "r44"), state.diagonal):
        if value < -tol:
            problems.append(f"nonnegativity: {name} = {value!r}")
    excess = state.r23**2 - state.r22 * state.r33
    if excess > tol:
        problems.append(f"psd: r23^2 exceeds r22*r33 by {excess:.3e}")
    return problems
