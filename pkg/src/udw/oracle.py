"""Generic dense-matrix routines used to cross-check the X-state closed forms.

Nothing here exploits the X structure: states are full 4x4 complex matrices
and every spectral quantity goes through a cyclic complex Jacobi eigensolver.
The solver works on stacks of matrices, so grids of measurement directions
are diagonalised in one call.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .xstate import XState

SIGMA_0 = np.eye(2, dtype=complex)
SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SIGMA_0, SIGMA_1, SIGMA_2, SIGMA_3)

HERMITIAN_TOL = 1e-14
TRACE_TOL = 1e-12
PSD_TOL = 1e-10

MAX_SWEEPS = 100
OFF_TOL = 1e-13
RESIDUAL_TOL = 1e-10
# square roots amplify rounding: sqrt(1e-17) ~ 3e-9
RANK_TOL = 64 * np.finfo(float).eps


class ConvergenceError(RuntimeError):
    """The Jacobi eigensolver exhausted its sweep budget."""


def check_hermitian4(m, density: bool = False) -> np.ndarray:
    """Return ``m`` as a complex array of 4x4 matrices, raising ``ValueError``
    if any is not Hermitian (or, with ``density=True``, not a density matrix).
    """
    m = np.asarray(m, dtype=complex)
    if m.shape[-2:] != (4, 4):
        raise ValueError(f"expected 4x4 matrices, got shape {m.shape}")
    if np.max(np.abs(m - np.swapaxes(m, -1, -2).conj())) > HERMITIAN_TOL:
        raise ValueError("matrix is not Hermitian")
    if density:
        tr = np.trace(m, axis1=-2, axis2=-1).real
        if np.max(np.abs(tr - 1.0)) > TRACE_TOL:
            raise ValueError(f"density matrix trace deviates from 1 by {np.max(np.abs(tr - 1.0)):.3e}")
        if np.min(dense_spectrum(m)[..., -1]) < -PSD_TOL:
            raise ValueError("density matrix has a negative eigenvalue")
    return m


def assemble(state: XState) -> np.ndarray:
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0], m[1, 1], m[2, 2], m[3, 3] = state.diagonal
    m[1, 2] = m[2, 1] = state.r23
    return m


# --- eigensolver -----------------------------------------------------------


def jacobi_eigh(a, max_sweeps: int = MAX_SWEEPS, tol: float = OFF_TOL):
    """Eigen-decomposition of Hermitian matrices by cyclic Jacobi sweeps.

    Each rotation first removes the phase of the pivot ``a[p, q]`` and then
    applies the real symmetric Jacobi rotation that zeroes it.

    Args:
        a: array of shape ``(..., n, n)``.
        max_sweeps: sweep budget before ``ConvergenceError`` is raised.
        tol: bound on the off-diagonal Frobenius norm, relative to the
            Frobenius norm of the input (floored at 1).

    Returns:
        ``(w, v)`` with real eigenvalues in ascending order and eigenvectors
        in the columns of ``v``.
    """
    a = np.array(a, dtype=complex)
    n = a.shape[-1]
    batch = a.shape[:-2]
    # batch-last layout keeps row and column slices contiguous
    a = np.ascontiguousarray(np.moveaxis(a.reshape((-1, n, n)), 0, -1))
    v = np.zeros_like(a)
    v[np.arange(n), np.arange(n)] = 1.0
    scale = np.maximum(1.0, np.sqrt(np.sum(np.abs(a) ** 2, axis=(0, 1))))
    off_mask = ~np.eye(n, dtype=bool)
    pairs = list(itertools.combinations(range(n), 2))

    def converged():
        off = np.sqrt(np.sum(np.abs(a[off_mask]) ** 2, axis=0))
        return np.all(off <= tol * scale)

    for _ in range(max_sweeps):
        if converged():
            break
        for p, q in pairs:
            mag = np.abs(a[p, q])
            active = mag != 0.0
            if not np.any(active):
                continue
            phase = np.where(active, a[p, q] / np.where(active, mag, 1.0), 1.0)
            with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
                theta = (a[q, q].real - a[p, p].real) / (2.0 * np.where(active, mag, 1.0))
                t = np.sign(theta) / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
            t = np.where(theta == 0.0, 1.0, t)
            t = np.where(active & np.isfinite(t), t, 0.0)
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            # column q picks up the conjugate phase, so a[p, q] becomes real
            col_p, col_q = a[:, p].copy(), a[:, q] * phase.conj()
            a[:, p] = c * col_p - s * col_q
            a[:, q] = s * col_p + c * col_q
            row_p, row_q = a[p].copy(), a[q] * phase
            a[p] = c * row_p - s * row_q
            a[q] = s * row_p + c * row_q
            vp, vq = v[:, p].copy(), v[:, q] * phase.conj()
            v[:, p] = c * vp - s * vq
            v[:, q] = s * vp + c * vq
    else:
        if not converged():
            raise ConvergenceError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")

    w = np.diagonal(a, axis1=0, axis2=1).real.copy()
    v = np.moveaxis(v, -1, 0)
    order = np.argsort(w, axis=-1)
    w = np.take_along_axis(w, order, axis=-1)
    v = np.take_along_axis(v, order[:, None, :], axis=-1)
    return w.reshape(batch + (n,)), v.reshape(batch + (n, n))


def _hermitian_eigh(m: np.ndarray):
    m = np.asarray(m, dtype=complex)
    w, v = jacobi_eigh(m)
    resid = m @ v - v * w[..., None, :]
    norm = np.maximum(1.0, np.max(np.abs(w), axis=-1))
    if np.max(np.linalg.norm(resid, axis=-2) / norm[..., None]) > RESIDUAL_TOL:
        raise ConvergenceError("eigenpair residual exceeds tolerance")
    return w, v


def dense_spectrum(m) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix (or stack), in descending order."""
    w, _ = _hermitian_eigh(m)
    return w[..., ::-1].copy()


def hermitian_function(m, f) -> np.ndarray:
    """Apply a scalar function to a Hermitian matrix through its spectrum."""
    w, v = _hermitian_eigh(m)
    return np.einsum("...ij,...j,...kj->...ik", v, f(w), v.conj())


def trace_norm(m) -> float | np.ndarray:
    """Sum of absolute eigenvalues of a Hermitian matrix (or stack)."""
    tn = np.sum(np.abs(dense_spectrum(m)), axis=-1)
    return float(tn) if np.ndim(tn) == 0 else tn


# --- concurrence -----------------------------------------------------------

_YY = np.kron(SIGMA_2, SIGMA_2)


def _clip_rank(w: np.ndarray) -> np.ndarray:
    """Zero out eigenvalues indistinguishable from zero at working precision."""
    cutoff = RANK_TOL * np.max(np.abs(w), axis=-1, keepdims=True)
    return np.where(w > cutoff, w, 0.0)


def wootters_concurrence(m):
    """Wootters concurrence from the spectrum of ``sqrt(rho) rho~ sqrt(rho)``.

    That Hermitian matrix has the same eigenvalues as the non-Hermitian
    ``rho rho~``. Accepts a single density matrix or a stack of them.
    """
    rho = check_hermitian4(m, density=True)
    root = hermitian_function(rho, lambda w: np.sqrt(_clip_rank(w)))
    r = root @ _YY @ rho.conj() @ _YY @ root
    r = 0.5 * (r + np.swapaxes(r, -1, -2).conj())
    nu = np.sqrt(_clip_rank(dense_spectrum(r)))
    c = np.maximum(0.0, nu[..., 0] - nu[..., 1] - nu[..., 2] - nu[..., 3])
    return float(c) if c.ndim == 0 else c


# --- channels --------------------------------------------------------------


def kraus_apply(m, table) -> np.ndarray:
    """Apply ``sum_ij p_ij (s_i x s_j) m (s_i x s_j)^dagger`` over i, j in {0, 3}."""
    m = np.asarray(m, dtype=complex)
    out = np.zeros_like(m)
    for (i, j), p in table.as_dict().items():
        op = math.sqrt(p) * np.kron(PAULI[i], PAULI[j])
        out += op @ m @ op.conj().T
    return out


# --- geometric discord -----------------------------------------------------


@dataclass(frozen=True)
class MeasurementDirection:
    """Bloch-sphere axis of a projective measurement on the first qubit."""

    polar: float
    azimuth: float

    def __post_init__(self):
        if not 0.0 <= self.polar <= math.pi:
            raise ValueError(f"polar angle out of range: {self.polar!r}")
        if not 0.0 <= self.azimuth < 2 * math.pi:
            raise ValueError(f"azimuth out of range: {self.azimuth!r}")

    @property
    def vector(self) -> np.ndarray:
        return _bloch_vectors(np.array(self.polar), np.array(self.azimuth))

    def projectors(self) -> tuple[np.ndarray, np.ndarray]:
        ns = np.einsum("k,kij->ij", self.vector, np.array(PAULI[1:]))
        return (SIGMA_0 + ns) / 2, (SIGMA_0 - ns) / 2


def _bloch_vectors(polar, azimuth) -> np.ndarray:
    return np.stack(
        [np.sin(polar) * np.cos(azimuth), np.sin(polar) * np.sin(azimuth), np.cos(polar)],
        axis=-1,
    )


def _dephasing_residual(m: np.ndarray, n) -> np.ndarray:
    """``m - sum_k (P_k x 1) m (P_k x 1)`` for each Bloch vector in ``n``."""
    n = np.asarray(n, dtype=float)
    single = n.ndim == 1
    n = np.atleast_2d(n)
    ns = np.einsum("...k,kij->...ij", n, np.array(PAULI[1:]))
    out = np.broadcast_to(m, n.shape[:-1] + (4, 4)).copy()
    for sign in (1.0, -1.0):
        proj = _kron_id((SIGMA_0 + sign * ns) / 2)
        out -= proj @ m @ proj
    return out[0] if single else out


def _kron_id(a: np.ndarray) -> np.ndarray:
    """Batched ``kron(a, I2)`` for ``a`` of shape ``(..., 2, 2)``."""
    out = np.zeros(a.shape[:-2] + (4, 4), dtype=complex)
    for i in range(2):
        for j in range(2):
            out[..., 2 * i, 2 * j] = a[..., i, j]
            out[..., 2 * i + 1, 2 * j + 1] = a[..., i, j]
    return out


def dephase(m, direction: MeasurementDirection) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    return m - _dephasing_residual(m, direction.vector)


def _discord_at(m: np.ndarray, polar: np.ndarray, azimuth: np.ndarray) -> np.ndarray:
    return 0.5 * trace_norm(_dephasing_residual(m, _bloch_vectors(polar, azimuth)))


def gqd_numerical(
    m,
    grid_polar: int = 65,
    grid_azimuth: int = 128,
    refine: bool = True,
    azimuth_offset: float = 0.0,
    refine_levels: int = 12,
) -> float:
    """Trace-distance discord by brute-force search over measurement axes.

    Minimises ``0.5 * ||m - Pi(m)||_1`` over projective measurements ``Pi``
    on the first qubit: first on a polar/azimuthal grid, then (optionally)
    by repeatedly re-centring a 9x9 stencil on the best point and shrinking
    it by a factor of three.
    """
    if grid_polar < 64 or grid_azimuth < 64:
        raise ValueError("grid counts must be at least 64")
    m = check_hermitian4(m, density=True)
    if m.ndim != 2:
        raise ValueError("gqd_numerical takes a single matrix")
    polar = np.linspace(0.0, math.pi, grid_polar)
    azimuth = azimuth_offset + np.linspace(0.0, 2 * math.pi, grid_azimuth, endpoint=False)
    th, ph = (x.ravel() for x in np.meshgrid(polar, azimuth, indexing="ij"))
    dist = _discord_at(m, th, ph)
    best = int(np.argmin(dist))
    value, th0, ph0 = float(dist[best]), th[best], ph[best]
    if refine:
        d_th, d_ph = math.pi / (grid_polar - 1), 2 * math.pi / grid_azimuth
        offsets = np.linspace(-1.0, 1.0, 9)
        for _ in range(refine_levels):
            th_try, ph_try = (
                x.ravel() for x in np.meshgrid(th0 + d_th * offsets, ph0 + d_ph * offsets, indexing="ij")
            )
            dist = _discord_at(m, th_try, ph_try)
            best = int(np.argmin(dist))
            if dist[best] < value:
                value, th0, ph0 = float(dist[best]), th_try[best], ph_try[best]
            d_th /= 3.0
            d_ph /= 3.0
    return max(0.0, value)


# --- steering --------------------------------------------------------------


def _shannon_bits(p: np.ndarray, axes) -> np.ndarray:
    logs = np.log2(np.where(p > 0, p, 1.0))
    return -np.sum(p * logs, axis=axes)


def entropic_steering_oracle(m):
    """Steering in both directions from Pauli-basis outcome statistics.

    For each axis the joint outcome distribution of ``s_k x s_k`` is built
    from projectors and the conditional Shannon entropies are summed. The sum
    ``H`` is mapped to ``max(0, (2 - H) / 2)``; the raw criterion is reported
    as ``6 - 2 H``. A stack of matrices yields a list of results.
    """
    from .quantifiers import SteeringResult

    rho = check_hermitian4(m, density=True)
    single = rho.ndim == 2
    rho = rho.reshape((-1, 4, 4))
    h_b_given_a = np.zeros(len(rho))
    h_a_given_b = np.zeros(len(rho))
    for sigma in PAULI[1:]:
        proj = [(SIGMA_0 + s * sigma) / 2 for s in (1, -1)]
        joint = np.stack(
            [
                np.stack([np.einsum("ij,nji->n", np.kron(pa, pb), rho).real for pb in proj], -1)
                for pa in proj
            ],
            -2,
        )
        joint = np.clip(joint, 0.0, None)
        h_joint = _shannon_bits(joint, (-2, -1))
        h_b_given_a += h_joint - _shannon_bits(joint.sum(axis=-1), -1)
        h_a_given_b += h_joint - _shannon_bits(joint.sum(axis=-2), -1)
    s_ab = np.maximum(0.0, (2.0 - h_b_given_a) / 2.0)
    s_ba = np.maximum(0.0, (2.0 - h_a_given_b) / 2.0)
    f_ab = 6.0 - 2.0 * h_b_given_a
    results = [
        SteeringResult(float(a), float(b), abs(float(a) - float(b)), float(f))
        for a, b, f in zip(s_ab, s_ba, f_ab)
    ]
    return results[0] if single else results
