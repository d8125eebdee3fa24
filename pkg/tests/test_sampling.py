import numpy as np
import pytest

from qubounds import (
    SampleConfig,
    bloch_state,
    haar_unitary,
    random_density,
    random_hermitian,
    random_pure_state,
    trial_rng,
)


def test_sample_config_validation():
    SampleConfig(dimension=4, rank=2, seed=0, count=1)
    with pytest.raises(ValueError):
        SampleConfig(dimension=4, rank=5, seed=0, count=1)
    with pytest.raises(ValueError):
        SampleConfig(dimension=4, rank=0, seed=0, count=1)
    with pytest.raises(ValueError):
        SampleConfig(dimension=4, rank=2, seed=0, count=0)


def test_random_hermitian_exact_and_deterministic():
    a = random_hermitian(4, 123)
    b = random_hermitian(4, 123)
    np.testing.assert_array_equal(a.matrix, b.matrix)
    np.testing.assert_array_equal(a.matrix, a.matrix.conj().T)
    scalar = random_hermitian(1, 5)
    assert scalar.matrix.shape == (1, 1)
    assert scalar.matrix[0, 0].imag == 0.0


def test_haar_unitary_properties():
    for n in (1, 2, 5):
        u = haar_unitary(n, 7)
        np.testing.assert_allclose(u.conj().T @ u, np.eye(n), atol=1e-12)
        np.testing.assert_allclose(np.linalg.norm(u, axis=0), np.ones(n), atol=1e-12)
    np.testing.assert_array_equal(haar_unitary(3, 9), haar_unitary(3, 9))
    assert abs(abs(haar_unitary(1, 11)[0, 0]) - 1.0) <= 1e-14


def test_haar_unitary_phase_correction_spreads_eigenphases():
    # Without the phase correction the eigenphase histogram is visibly skewed;
    # with it the mean eigenphase over many draws is near zero.
    phases = []
    for seed in range(200):
        u = haar_unitary(2, seed)
        phases.extend(np.angle(np.linalg.eigvals(u)))
    assert abs(np.mean(phases)) <= 0.2


def test_random_pure_state_unit_norm():
    for n in (1, 2, 6):
        psi = random_pure_state(n, 3)
        assert abs(np.linalg.norm(psi.amplitudes) - 1.0) <= 1e-12
    np.testing.assert_array_equal(
        random_pure_state(4, 8).amplitudes, random_pure_state(4, 8).amplitudes
    )


def test_random_density_trace_psd_rank():
    for n, rank in ((2, 1), (2, 2), (4, 2), (4, 4)):
        rho = random_density(n, rank, 17)
        assert np.trace(rho.matrix).real == pytest.approx(1.0, abs=1e-12)
        eigs = np.linalg.eigvalsh(rho.matrix)
        assert eigs.min() >= -1e-12
        assert int(np.sum(eigs > 1e-10)) == rank


def test_random_density_rank_one_is_projector():
    rho = random_density(3, 1, 21)
    eigs, vecs = np.linalg.eigh(rho.matrix)
    top = vecs[:, -1]
    np.testing.assert_allclose(rho.matrix, np.outer(top, top.conj()), atol=1e-12)


def test_bloch_state_golden_values():
    np.testing.assert_allclose(bloch_state(0.0, 0.9).amplitudes, [1.0, 0.0], atol=1e-15)
    np.testing.assert_allclose(
        bloch_state(np.pi, 0.0).amplitudes, [0.0, 1.0], atol=1e-15
    )
    np.testing.assert_allclose(
        bloch_state(np.pi / 2, 0.0).amplitudes,
        np.array([1.0, 1.0]) / np.sqrt(2),
        atol=1e-15,
    )


def test_random_density_rank_failure_raises(monkeypatch):
    import qubounds.sampling as sampling
    from qubounds import RankUnachieved

    # A constant draw has rank one, so a rank-2 request cannot be met.
    monkeypatch.setattr(
        sampling, "_complex_normal", lambda rng, rows, cols: np.ones((rows, cols), dtype=complex)
    )
    with pytest.raises(RankUnachieved):
        sampling.random_density(3, 2, 0)


def test_trial_rng_streams_are_independent_and_stable():
    first = trial_rng(5, 0).standard_normal(4)
    again = trial_rng(5, 0).standard_normal(4)
    other = trial_rng(5, 1).standard_normal(4)
    np.testing.assert_array_equal(first, again)
    assert not np.array_equal(first, other)
