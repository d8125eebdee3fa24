"""Observables, pure and mixed states, moments, and the 2x2 Gram pair.

The uncertainty machinery below only ever needs a handful of scalars per
(A, B, state) triple: the means, the centered deviations, and one cross
inner product.  :func:`pair_moments` computes them once, on the centered
data, so near-saturated instances do not suffer cancellation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NonRealExpectation, NotPositiveSemidefinite
from .linalg import frobenius_norm, psd_power, require_hermitian

# Unit-norm / unit-trace validation budget for states.
NORM_TOL = 1e-10
# Expectation values of Hermitian observables must be real up to this (relative).
IMAG_TOL = 1e-10


def _frozen_array(a: np.ndarray) -> np.ndarray:
    out = np.array(a, dtype=complex, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class Observable:
    """A Hermitian matrix standing for a measurable quantity."""

    matrix: np.ndarray
    label: str = ""

    def __post_init__(self) -> None:
        m = require_hermitian(self.matrix, self.label or "observable")
        object.__setattr__(self, "matrix", _frozen_array(m))

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class PureState:
    """A unit vector of amplitudes."""

    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        a = np.asarray(self.amplitudes, dtype=complex).ravel()
        if a.size < 1:
            raise DimensionMismatch("state vector must be nonempty")
        if not np.isfinite(a).all():
            raise ValueError("state vector contains non-finite entries")
        norm = float(np.linalg.norm(a))
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"state vector norm {norm!r} is not 1 within {NORM_TOL}")
        object.__setattr__(self, "amplitudes", _frozen_array(a))

    @property
    def dimension(self) -> int:
        return self.amplitudes.size

    def projector(self) -> np.ndarray:
        return np.outer(self.amplitudes, self.amplitudes.conj())


@dataclass(frozen=True)
class DensityMatrix:
    """A PSD, trace-one Hermitian matrix."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = require_hermitian(self.matrix, "density matrix")
        trace = float(np.trace(m).real)
        if abs(trace - 1.0) > NORM_TOL:
            raise ValueError(f"density matrix trace {trace!r} is not 1 within {NORM_TOL}")
        low = float(np.linalg.eigvalsh(m).min())
        if low < -1e-10 * max(1.0, frobenius_norm(m)):
            raise NotPositiveSemidefinite(f"density matrix has eigenvalue {low:.3e}")
        object.__setattr__(self, "matrix", _frozen_array(m))

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def from_pure(cls, psi: PureState) -> "DensityMatrix":
        return cls(psi.projector())


# Tagged union of the two state representations.
QuantumState = PureState | DensityMatrix


@dataclass(frozen=True)
class CenteredObservable:
    """A - mean * I for the state the mean was taken in."""

    matrix: np.ndarray
    mean: float


@dataclass(frozen=True)
class GramPair:
    """The two 2x2 PSD Gram matrices whose determinants drive every bound."""

    c1: np.ndarray
    c2: np.ndarray


def _matrix_of(observable) -> np.ndarray:
    if isinstance(observable, Observable):
        return observable.matrix
    if isinstance(observable, CenteredObservable):
        return observable.matrix
    return require_hermitian(observable, "observable")


def _check_dimensions(a: np.ndarray, state: QuantumState) -> None:
    if a.shape[0] != state.dimension:
        raise DimensionMismatch(
            f"observable dimension {a.shape[0]} vs state dimension {state.dimension}"
        )


def expectation(observable, state: QuantumState) -> float:
    """<psi|A|psi> for a pure state, tr(rho A) for a mixed one."""
    a = _matrix_of(observable)
    _check_dimensions(a, state)
    if isinstance(state, PureState):
        value = complex(state.amplitudes.conj() @ (a @ state.amplitudes))
    elif isinstance(state, DensityMatrix):
        value = complex(np.einsum("ij,ji->", a, state.matrix))
    else:
        raise TypeError(f"unsupported state type {type(state)!r}")
    if abs(value.imag) > IMAG_TOL * max(1.0, frobenius_norm(a)):
        raise NonRealExpectation(f"imaginary residue {value.imag:.3e} in expectation")
    return float(value.real)


def center(observable, state: QuantumState) -> CenteredObservable:
    """Shift the observable so its expectation in ``state`` is zero."""
    a = _matrix_of(observable)
    mean = expectation(a, state)
    return CenteredObservable(matrix=a - mean * np.eye(a.shape[0]), mean=mean)


@dataclass(frozen=True)
class PairMoments:
    """Centered second moments of two observables in one state.

    ``cross`` is <A_c psi, B_c psi> for a pure state and the Frobenius inner
    product <A_c rho^(1/2), B_c rho^(1/2)> for a mixed one; its imaginary part
    is half the commutator expectation, its real part the centered
    anticommutator half-sum.
    """

    alpha: float
    beta: float
    dev_a: float
    dev_b: float
    cross: complex

    @property
    def commutator_expectation(self) -> complex:
        return self.cross - self.cross.conjugate()


def pair_moments(observable_a, observable_b, state: QuantumState) -> PairMoments:
    a = _matrix_of(observable_a)
    b = _matrix_of(observable_b)
    _check_dimensions(a, state)
    _check_dimensions(b, state)
    alpha = expectation(a, state)
    beta = expectation(b, state)
    if isinstance(state, PureState):
        psi = state.amplitudes
        va = a @ psi - alpha * psi
        vb = b @ psi - beta * psi
        cross = complex(va.conj() @ vb)
    else:
        sqrt_rho = psd_power(state.matrix, 0.5)
        ma = a @ sqrt_rho - alpha * sqrt_rho
        mb = b @ sqrt_rho - beta * sqrt_rho
        va, vb = ma, mb
        cross = complex(np.sum(ma.conj() * mb))
    return PairMoments(
        alpha=alpha,
        beta=beta,
        dev_a=float(np.linalg.norm(va)),
        dev_b=float(np.linalg.norm(vb)),
        cross=cross,
    )


def stddev(observable, state: QuantumState) -> float:
    """Standard deviation of the observable in the given state.

    Computed from the centered observable (||A_c psi|| or ||A_c rho^(1/2)||_F),
    never as sqrt(<A^2> - <A>^2).
    """
    a = _matrix_of(observable)
    _check_dimensions(a, state)
    alpha = expectation(a, state)
    if isinstance(state, PureState):
        psi = state.amplitudes
        return float(np.linalg.norm(a @ psi - alpha * psi))
    sqrt_rho = psd_power(state.matrix, 0.5)
    return float(np.linalg.norm(a @ sqrt_rho - alpha * sqrt_rho))


def gram_pair(observable_a, observable_b, state: QuantumState) -> GramPair:
    """The pair of 2x2 Gram matrices for (A, B) in ``state``.

    Both are PSD with equal traces; det(c1 + c2) equals
    4 dev_a^2 dev_b^2 - |commutator expectation|^2.
    """
    m = pair_moments(observable_a, observable_b, state)
    va2 = m.dev_a**2
    vb2 = m.dev_b**2
    c1 = np.array([[va2, m.cross], [np.conj(m.cross), vb2]], dtype=complex)
    c2 = np.array([[va2, -np.conj(m.cross)], [-m.cross, vb2]], dtype=complex)
    return GramPair(c1=c1, c2=c2)
