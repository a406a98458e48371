"""Quantum resources and Stirling-cycle thermodynamics of two Unruh-DeWitt
detectors in their thermal steady state, with correlated dephasing dynamics."""

__version__ = "0.1.0"

from .dephasing import (
    DephasingChannel,
    KrausProbTable,
    attenuation,
    dephasing_probability,
    evolve,
    kraus_probabilities,
    rtn_kernel,
)
from .quantifiers import (
    SteeringResult,
    coherence_l1,
    concurrence,
    entanglement_of_formation,
    gqd_trace_norm,
    steering,
)
from .thermodynamics import (
    CycleResult,
    CycleSpec,
    entropy,
    internal_energy,
    spectrum,
    stirling_cycle,
)
from .xstate import (
    MAXIMALLY_MIXED,
    SINGLET,
    SteadyStateParams,
    XState,
    delta_of,
    fano_bloch,
    gamma_ratio,
    steady_state,
    validate,
)
