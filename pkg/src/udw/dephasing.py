"""Classically correlated dephasing driven by random telegraph noise."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .xstate import XState

SLACK = 1e-12


@dataclass(frozen=True)
class DephasingChannel:
    """Memory time ``tau`` of the telegraph noise and error correlation ``mu``."""

    tau: float
    mu: float

    def __post_init__(self):
        if not self.tau > 0:
            raise ValueError(f"tau must be positive, got {self.tau!r}")
        if not 0.0 <= self.mu <= 1.0:
            raise ValueError(f"mu must lie in [0, 1], got {self.mu!r}")

    @property
    def nu(self) -> float:
        return float(np.sqrt(abs(4.0 * self.tau**2 - 1.0)))

    @property
    def markovian(self) -> bool:
        return 4.0 * self.tau < 1.0


@dataclass(frozen=True)
class KrausProbTable:
    p00: float
    p03: float
    p30: float
    p33: float

    def as_dict(self) -> dict[tuple[int, int], float]:
        return {(0, 0): self.p00, (0, 3): self.p03, (3, 0): self.p30, (3, 3): self.p33}

    @property
    def coherence_factor(self) -> float:
        """Factor applied to the ``|01><10|`` element by the channel."""
        return self.p00 + self.p33 - self.p03 - self.p30


def rtn_kernel(t, tau: float):
    """Decoherence function ``h(t)`` of random telegraph noise.

    Oscillatory for ``4*tau > 1`` and monotone for ``4*tau < 1``; the
    boundary ``4*tau == 1`` is rejected. Accepts scalars or arrays.
    """
    if not tau > 0:
        raise ValueError(f"tau must be positive, got {tau!r}")
    if 4.0 * tau == 1.0:
        raise ValueError("rtn_kernel is singular at 4*tau == 1")
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr < 0):
        raise ValueError("t must be nonnegative")
    nu = np.sqrt(abs(4.0 * tau * tau - 1.0))
    a = t_arr / (2.0 * tau)
    b = nu * a
    if 4.0 * tau > 1.0:
        h = np.exp(-a) * (np.cos(b) + np.sin(b) / nu)
    else:
        # e^{-a}(cosh b + sinh b / nu) written without overflowing cosh
        h = 0.5 * ((1.0 + 1.0 / nu) * np.exp(b - a) + (1.0 - 1.0 / nu) * np.exp(-b - a))
    return float(h) if h.ndim == 0 else h


def dephasing_probability(t, tau: float):
    """Single-qubit phase-flip probability ``(1 - h(t)) / 2``."""
    p = (1.0 - np.asarray(rtn_kernel(t, tau))) / 2.0
    p = np.where((p < 0) & (p > -SLACK), 0.0, p)
    p = np.where((p > 1) & (p < 1 + SLACK), 1.0, p)
    return float(p) if p.ndim == 0 else p


def attenuation(t, channel: DephasingChannel):
    """Off-diagonal attenuation ``zeta(t) = (1 - mu) h(t)^2 + mu``."""
    h = np.asarray(rtn_kernel(t, channel.tau))
    zeta = (1.0 - channel.mu) * h * h + channel.mu
    return float(zeta) if zeta.ndim == 0 else zeta


def kraus_probabilities(p: float, mu: float) -> KrausProbTable:
    """Joint probabilities of the identity/phase-flip Kraus labels.

    Interpolates between independent flips (``mu=0``) and perfectly
    correlated flips (``mu=1``).
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p!r}")
    if not 0.0 <= mu <= 1.0:
        raise ValueError(f"mu must lie in [0, 1], got {mu!r}")
    q = 1.0 - p
    p00 = (1.0 - mu) * q * q + mu * q
    p03 = (1.0 - mu) * p * q
    p33 = (1.0 - mu) * p * p + mu * p
    return KrausProbTable(p00, p03, p03, p33)


def evolve(state: XState, t: float, channel: DephasingChannel) -> XState:
    """Apply the channel at time ``t``; only the coherence ``r23`` changes."""
    return state.with_coherence(attenuation(t, channel) * state.r23)
