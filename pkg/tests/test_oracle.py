import numpy as np
import pytest

from udw import SINGLET, XState, steady_state, steering
from udw import oracle
from udw.dephasing import kraus_probabilities


def random_hermitian(rng, n=4):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (a + a.conj().T) / 2


def test_jacobi_matches_lapack(rng):
    for _ in range(20):
        m = random_hermitian(rng)
        w, v = oracle.jacobi_eigh(m)
        assert np.allclose(w, np.linalg.eigvalsh(m), atol=1e-12)
        assert np.allclose(m @ v, v * w, atol=1e-11)
        assert np.allclose(v.conj().T @ v, np.eye(4), atol=1e-12)


def test_jacobi_batched(rng):
    stack = np.array([random_hermitian(rng) for _ in range(50)])
    w, _ = oracle.jacobi_eigh(stack)
    assert np.allclose(w, np.linalg.eigvalsh(stack), atol=1e-12)


def test_jacobi_degenerate_spectrum():
    w, _ = oracle.jacobi_eigh(np.eye(4) * 0.25)
    assert np.allclose(w, 0.25)


def test_check_hermitian_rejects():
    with pytest.raises(ValueError):
        oracle.check_hermitian4(np.arange(16.0).reshape(4, 4))
    with pytest.raises(ValueError):
        oracle.check_hermitian4(np.eye(3))
    with pytest.raises(ValueError):
        oracle.check_hermitian4(np.eye(4), density=True)  # trace 4


def test_assemble_layout():
    m = oracle.assemble(XState(0.1, 0.2, 0.3, 0.4, 0.05))
    assert m[1, 2] == m[2, 1] == 0.05
    assert np.allclose(np.diag(m).real, [0.1, 0.2, 0.3, 0.4])


def test_trace_norm_of_pauli():
    assert oracle.trace_norm(oracle.SIGMA_1) == pytest.approx(2.0)


def test_wootters_on_bell_and_product():
    assert oracle.wootters_concurrence(oracle.assemble(SINGLET)) == pytest.approx(1.0, abs=1e-12)
    product = np.diag([1.0, 0, 0, 0]).astype(complex)
    assert oracle.wootters_concurrence(product) == pytest.approx(0.0, abs=1e-12)


def test_kraus_apply_preserves_trace(rng):
    m = oracle.assemble(steady_state(-2.0, 0.5))
    out = oracle.kraus_apply(m, kraus_probabilities(0.3, 0.4))
    assert np.trace(out).real == pytest.approx(1.0, abs=1e-14)


def test_gqd_azimuth_invariance():
    m = oracle.assemble(steady_state(-2.2, 0.4))
    a = oracle.gqd_numerical(m)
    b = oracle.gqd_numerical(m, azimuth_offset=0.37)
    assert a == pytest.approx(b, abs=1e-6)


def test_gqd_rejects_coarse_grid():
    with pytest.raises(ValueError):
        oracle.gqd_numerical(oracle.assemble(SINGLET), grid_polar=8)


def test_dephase_is_classical_quantum():
    m = oracle.assemble(steady_state(-2.0, 0.5))
    d = oracle.dephase(m, oracle.MeasurementDirection(0.0, 0.0))
    assert abs(d[1, 2]) < 1e-15


def test_entropic_oracle_on_steady_state():
    state = steady_state(-2.5, 0.9)
    dense = oracle.entropic_steering_oracle(oracle.assemble(state))
    closed = steering(state)
    assert dense.s_ab == pytest.approx(closed.s_ab, abs=1e-12)
