import math

import numpy as np
import pytest

from qubounds import (
    CenteredObservable,
    DensityMatrix,
    DimensionMismatch,
    NonHermitianInput,
    NonRealExpectation,
    NotPositiveSemidefinite,
    Observable,
    PureState,
    bloch_state,
    center,
    expectation,
    gram_pair,
    pair_moments,
    random_density,
    random_hermitian,
    random_pure_state,
    stddev,
    trial_rng,
)
from helpers import SIGMA_X, SIGMA_Y, SIGMA_Z, hermitian_array

KET0 = PureState(np.array([1.0, 0.0]))
KET1 = PureState(np.array([0.0, 1.0]))
PLUS = PureState(np.array([1.0, 1.0]) / np.sqrt(2))
MIXED_QUBIT = DensityMatrix(np.eye(2) / 2)


def test_observable_validation():
    obs = Observable(SIGMA_X, label="x")
    assert obs.dimension == 2
    with pytest.raises(ValueError):
        obs.matrix[0, 0] = 5.0  # frozen backing array
    with pytest.raises(NonHermitianInput):
        Observable(np.array([[0.0, 1.0], [0.5, 0.0]]))


def test_pure_state_validation():
    with pytest.raises(ValueError):
        PureState(np.array([1.0, 1.0]))
    psi = PureState(np.array([1.0j, 0.0]))
    np.testing.assert_allclose(psi.projector(), [[1.0, 0.0], [0.0, 0.0]])


def test_density_matrix_validation():
    with pytest.raises(ValueError):
        DensityMatrix(np.eye(2))  # trace 2
    with pytest.raises(NotPositiveSemidefinite):
        DensityMatrix(np.diag([1.5, -0.5]))
    rho = DensityMatrix.from_pure(PLUS)
    assert rho.dimension == 2
    np.testing.assert_allclose(np.trace(rho.matrix), 1.0)


def test_expectation_golden_values():
    assert expectation(SIGMA_Z, KET0) == pytest.approx(1.0)
    assert expectation(SIGMA_Z, MIXED_QUBIT) == pytest.approx(0.0)


def test_expectation_bloch_family():
    for theta in np.linspace(0.0, math.pi, 7):
        for phi in np.linspace(0.0, 2 * math.pi, 9):
            psi = bloch_state(theta, phi)
            assert expectation(SIGMA_X, psi) == pytest.approx(
                math.sin(theta) * math.cos(phi), abs=1e-12
            )


def test_expectation_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        expectation(np.eye(3), KET0)


def test_expectation_rejects_imaginary_residue():
    skew = CenteredObservable(matrix=np.array([[0.0, 1.0j], [0.0, 0.0]]), mean=0.0)
    with pytest.raises(NonRealExpectation):
        expectation(skew, PLUS)


def test_stddev_golden_values():
    assert stddev(SIGMA_X, KET0) == pytest.approx(1.0)
    assert stddev(np.diag([3.0, 7.0]), KET0) == pytest.approx(0.0, abs=1e-12)


def test_stddev_mixed_matches_pure_on_projector():
    rng = trial_rng(100, 0)
    for n in (2, 3, 4):
        a = random_hermitian(n, rng)
        psi = random_pure_state(n, rng)
        pure = stddev(a, psi)
        mixed = stddev(a, DensityMatrix.from_pure(psi))
        assert abs(pure - mixed) <= 1e-12


def test_stddev_shift_invariance():
    rng = trial_rng(101, 0)
    for _ in range(10):
        a = hermitian_array(rng, 3)
        shift = rng.uniform(-5.0, 5.0)
        psi = random_pure_state(3, rng)
        rho = random_density(3, 3, rng)
        shifted = a + shift * np.eye(3)
        for state in (psi, rho):
            assert abs(stddev(a, state) - stddev(shifted, state)) <= 1e-10


def test_center_golden_values():
    centered = center(SIGMA_Z, KET0)
    assert centered.mean == pytest.approx(1.0)
    np.testing.assert_allclose(centered.matrix, SIGMA_Z - np.eye(2))

    a = np.diag([1.0, 2.0, 6.0])
    maximally_mixed = DensityMatrix(np.eye(3) / 3)
    centered = center(a, maximally_mixed)
    np.testing.assert_allclose(centered.matrix, a - 3.0 * np.eye(3))

    theta, phi = 1.1, 0.3
    centered = center(SIGMA_X, bloch_state(theta, phi))
    np.testing.assert_allclose(
        centered.matrix, SIGMA_X - math.sin(theta) * math.cos(phi) * np.eye(2), atol=1e-12
    )
    assert expectation(centered, bloch_state(theta, phi)) == pytest.approx(0.0, abs=1e-12)


def test_gram_pair_pauli_golden():
    pair = gram_pair(SIGMA_X, SIGMA_Y, KET0)
    expected = np.array([[1.0, 1.0j], [-1.0j, 1.0]])
    np.testing.assert_allclose(pair.c1, expected, atol=1e-14)
    np.testing.assert_allclose(pair.c2, expected, atol=1e-14)
    assert abs(np.linalg.det(pair.c1)) <= 1e-12
    assert abs(np.linalg.det(pair.c2)) <= 1e-12


def test_gram_pair_commuting_golden():
    a = np.diag([1.0, 2.0])
    b = np.diag([3.0, 4.0])
    pair = gram_pair(a, b, PLUS)
    np.testing.assert_allclose(pair.c1, [[0.25, 0.25], [0.25, 0.25]], atol=1e-14)
    np.testing.assert_allclose(pair.c2, [[0.25, -0.25], [-0.25, 0.25]], atol=1e-14)
    det = np.linalg.det(pair.c1 + pair.c2).real
    da, db = stddev(a, PLUS), stddev(b, PLUS)
    assert det == pytest.approx(4 * da**2 * db**2, abs=1e-12)


def _direct_gram_oracle(a, b, psi):
    # Straight matrix products, no centered-vector shortcuts.
    alpha = (psi.conj() @ a @ psi).real
    beta = (psi.conj() @ b @ psi).real
    at = a - alpha * np.eye(len(a))
    bt = b - beta * np.eye(len(b))
    return np.array(
        [
            [psi.conj() @ at @ at @ psi, psi.conj() @ at @ bt @ psi],
            [psi.conj() @ bt @ at @ psi, psi.conj() @ bt @ bt @ psi],
        ]
    )


def test_gram_pair_matches_direct_oracle_and_is_psd():
    rng = trial_rng(102, 0)
    for n in (2, 3, 4):
        for _ in range(25):
            a = hermitian_array(rng, n)
            b = hermitian_array(rng, n)
            psi = random_pure_state(n, rng)
            pair = gram_pair(a, b, psi)
            oracle = _direct_gram_oracle(a, b, psi.amplitudes)
            np.testing.assert_allclose(pair.c1, oracle, atol=1e-10)
            assert np.trace(pair.c1) == pytest.approx(np.trace(pair.c2).real)
            for g in (pair.c1, pair.c2, pair.c1 + pair.c2):
                floor = -1e-10 * np.trace(g).real
                assert np.linalg.eigvalsh(g).min() >= floor


def test_gram_pair_determinant_identity():
    rng = trial_rng(103, 0)
    for _ in range(25):
        a = hermitian_array(rng, 3)
        b = hermitian_array(rng, 3)
        psi = random_pure_state(3, rng)
        rho = random_density(3, 2, rng)
        for state in (psi, rho):
            pair = gram_pair(a, b, state)
            m = pair_moments(a, b, state)
            det = np.linalg.det(pair.c1 + pair.c2).real
            expected = 4 * m.dev_a**2 * m.dev_b**2 - abs(m.commutator_expectation) ** 2
            assert det == pytest.approx(expected, abs=1e-10)


def test_gram_c1_eigenvalues_closed_form():
    # Quadratic-formula roots of the characteristic polynomial of c1:
    # trace p + q, determinant pq - |z|^2, discriminant (p - q)^2 + 4 |z|^2.
    rng = trial_rng(104, 0)
    for _ in range(25):
        a = hermitian_array(rng, 4)
        b = hermitian_array(rng, 4)
        psi = random_pure_state(4, rng)
        pair = gram_pair(a, b, psi)
        m = pair_moments(a, b, psi)
        p, q = m.dev_a**2, m.dev_b**2
        root = math.sqrt((p - q) ** 2 + 4 * abs(m.cross) ** 2)
        expected = np.sort([0.5 * (p + q - root), 0.5 * (p + q + root)])
        np.testing.assert_allclose(np.linalg.eigvalsh(pair.c1), expected, atol=1e-10)
    # At the saturated Pauli golden the smaller root is exactly zero.
    pair = gram_pair(SIGMA_X, SIGMA_Y, KET0)
    np.testing.assert_allclose(np.linalg.eigvalsh(pair.c1), [0.0, 2.0], atol=1e-12)


def test_pair_moments_commutator_matches_matrix_oracle():
    rng = trial_rng(105, 0)
    for _ in range(10):
        a = hermitian_array(rng, 3)
        b = hermitian_array(rng, 3)
        psi = random_pure_state(3, rng)
        rho = random_density(3, 3, rng)
        comm = a @ b - b @ a
        m_pure = pair_moments(a, b, psi)
        oracle_pure = complex(psi.amplitudes.conj() @ comm @ psi.amplitudes)
        assert m_pure.commutator_expectation == pytest.approx(oracle_pure, abs=1e-12)
        m_mixed = pair_moments(a, b, rho)
        oracle_mixed = complex(np.trace(comm @ rho.matrix))
        assert m_mixed.commutator_expectation == pytest.approx(oracle_mixed, abs=1e-12)


def test_mixed_on_pure_reduction_everywhere():
    rng = trial_rng(106, 0)
    for n in (2, 3, 4):
        a = random_hermitian(n, rng)
        b = random_hermitian(n, rng)
        psi = random_pure_state(n, rng)
        rho = DensityMatrix.from_pure(psi)
        assert abs(expectation(a, psi) - expectation(a, rho)) <= 1e-12
        assert abs(stddev(a, psi) - stddev(a, rho)) <= 1e-12
        pure_pair = gram_pair(a, b, psi)
        mixed_pair = gram_pair(a, b, rho)
        np.testing.assert_allclose(pure_pair.c1, mixed_pair.c1, atol=1e-12)
        np.testing.assert_allclose(pure_pair.c2, mixed_pair.c2, atol=1e-12)
