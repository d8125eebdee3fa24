"""Dense complex-matrix primitives.

Hermitian eigendecomposition, PSD fractional powers, Frobenius inner
products, unitary completion of orthonormal columns, and the two
linear-dependence detectors used by the saturation checkers.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    NonHermitianInput,
    NotOrthonormal,
    NotPositiveSemidefinite,
)

# Relative Frobenius deviation allowed before a matrix stops counting as Hermitian.
HERMITICITY_TOL = 1e-10
# Eigenvalues above -PSD_TOL * ||P||_F count as rounding noise and are clipped.
PSD_TOL = 1e-10
# Budget for eigendecomposition reconstruction and completion unitarity.
RECON_TOL = 1e-12


@dataclass(frozen=True)
class Tolerance:
    """Absolute plus relative tolerance; the budget grows with the data scale."""

    absolute: float = 1e-12
    relative: float = 1e-9

    def __post_init__(self) -> None:
        if self.absolute < 0 or self.relative < 0:
            raise ValueError("tolerances must be nonnegative")

    def effective(self, scale: float) -> float:
        """Budget for a comparison whose natural magnitude is ``scale``."""
        return self.absolute + self.relative * float(scale)


DEFAULT_TOL = Tolerance()


def as_complex_matrix(m, name: str = "matrix") -> np.ndarray:
    """Coerce to a 2-D complex array with finite entries."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
        raise DimensionMismatch(f"{name} must be a nonempty 2-D array, got shape {a.shape}")
    if not np.isfinite(a).all():
        raise ValueError(f"{name} contains non-finite entries")
    return a


def frobenius_norm(x) -> float:
    return float(np.linalg.norm(x))


def require_hermitian(m, name: str = "matrix", tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Validate that ``m`` is square and Hermitian within ``tol`` (relative)."""
    a = as_complex_matrix(m, name)
    if a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"{name} must be square, got shape {a.shape}")
    deviation = float(np.linalg.norm(a - a.conj().T))
    if deviation > tol * max(1.0, float(np.linalg.norm(a))):
        raise NonHermitianInput(f"{name} deviates from Hermitian by {deviation:.3e}")
    return a


@dataclass(frozen=True)
class EigenSystem:
    """Eigenvalues in descending order with matching unitary eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def hermitian_eig(h) -> EigenSystem:
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending."""
    a = require_hermitian(h)
    w, vecs = np.linalg.eigh((a + a.conj().T) / 2.0)
    return EigenSystem(eigenvalues=w[::-1].copy(), eigenvectors=vecs[:, ::-1].copy())


def psd_power(p, r: float) -> np.ndarray:
    """``p`` raised to a positive power ``r`` through its spectral decomposition.

    Eigenvalues in ``[-PSD_TOL * ||p||_F, 0)`` are clipped to zero; anything
    more negative raises :class:`NotPositiveSemidefinite`.
    """
    if r <= 0:
        raise ValueError("power must be positive")
    es = hermitian_eig(p)
    scale = float(np.linalg.norm(np.asarray(p)))
    cutoff = PSD_TOL * scale
    if es.eigenvalues[-1] < -cutoff:
        raise NotPositiveSemidefinite(
            f"minimum eigenvalue {es.eigenvalues[-1]:.3e} below -{cutoff:.3e}"
        )
    # Eigenvalues inside the noise band are zeroed, not just negated ones:
    # fractional powers amplify +eps junk far above the reconstruction budget.
    powered = np.where(es.eigenvalues > cutoff, es.eigenvalues, 0.0) ** r
    x = (es.eigenvectors * powered) @ es.eigenvectors.conj().T
    return (x + x.conj().T) / 2.0


def frobenius_inner(x, y) -> complex:
    """tr(x^dagger y); conjugate-symmetric in its arguments."""
    a = as_complex_matrix(x, "x")
    b = as_complex_matrix(y, "y")
    if a.shape != b.shape:
        raise DimensionMismatch(f"shape mismatch {a.shape} vs {b.shape}")
    return complex(np.sum(a.conj() * b))


def unitary_completion(columns, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Extend orthonormal columns to a full unitary matrix.

    The given columns are kept exactly as the leading columns.  Remaining
    columns come from orthonormalizing the standard basis vectors e1, e2, ...
    in order, so the result is deterministic.
    """
    cols = [np.asarray(c, dtype=complex).ravel() for c in columns]
    if not cols:
        raise DimensionMismatch("need at least one column")
    n = cols[0].size
    if any(c.size != n for c in cols):
        raise DimensionMismatch("columns have mismatched lengths")
    if len(cols) > n:
        raise DimensionMismatch(f"{len(cols)} columns cannot be orthonormal in dimension {n}")
    basis = np.column_stack(cols)
    gram = basis.conj().T @ basis
    deviation = float(np.linalg.norm(gram - np.eye(len(cols))))
    if deviation > tol.effective(1.0):
        raise NotOrthonormal(f"input Gram deviates from identity by {deviation:.3e}")
    for j in range(n):
        if basis.shape[1] == n:
            break
        v = np.zeros(n, dtype=complex)
        v[j] = 1.0
        v = v - basis @ (basis.conj().T @ v)
        norm = np.linalg.norm(v)
        if norm < 1e-6:
            continue
        v = v / norm
        # Second pass keeps orthogonality at rounding level.
        v = v - basis @ (basis.conj().T @ v)
        v = v / np.linalg.norm(v)
        basis = np.column_stack([basis, v])
    if basis.shape[1] != n:
        raise NotOrthonormal("failed to complete the basis")
    return basis


def _canonical_real_pair(c: float, s: float) -> tuple[float, float]:
    # (c, s) and (-c, -s) encode the same dependence; pick cos >= 0,
    # and sin >= 0 on the cos = 0 boundary.
    if c < 0 or (abs(c) <= 1e-14 and s < 0):
        return -c, -s
    return c, s


def phase_dependence_detail(x, y, tol: Tolerance = DEFAULT_TOL) -> tuple[float | None, float]:
    """Like :func:`phase_dependence` but also returns the decision residual."""
    xv = np.asarray(x, dtype=complex).ravel()
    yv = np.asarray(y, dtype=complex).ravel()
    if xv.shape != yv.shape:
        raise DimensionMismatch(f"vector lengths differ: {xv.size} vs {yv.size}")
    nx = float(np.linalg.norm(xv))
    ny = float(np.linalg.norm(yv))
    if nx <= tol.absolute and ny <= tol.absolute:
        return 0.0, 0.0
    iy = 1j * yv
    stacked = np.column_stack(
        [
            np.concatenate([xv.real, xv.imag]),
            np.concatenate([iy.real, iy.imag]),
        ]
    )
    _, svals, vt = np.linalg.svd(stacked, full_matrices=False)
    smin = float(svals[-1])
    if smin > tol.effective(max(1.0, nx, ny)):
        return None, smin
    c, s = _canonical_real_pair(float(vt[-1, 0]), float(vt[-1, 1]))
    return math.atan2(s, c) % (2.0 * math.pi), smin


def phase_dependence(x, y, tol: Tolerance = DEFAULT_TOL) -> float | None:
    """Angle theta with cos(theta) x + i sin(theta) y = 0, if one exists.

    The two complex vectors are tested for real-linear dependence of x and
    i*y; the smallest singular value of the stacked real matrix is both the
    decision statistic and the achieved residual ||cos(theta) x + i sin(theta) y||.
    Returns None when the vectors are independent at the given tolerance.
    """
    theta, _ = phase_dependence_detail(x, y, tol)
    return theta


def complex_dependence_detail(
    x, y, tol: Tolerance = DEFAULT_TOL
) -> tuple[tuple[float, float] | None, float]:
    """Like :func:`complex_dependence` but also returns the decision residual."""
    a = as_complex_matrix(x, "x")
    b = as_complex_matrix(y, "y")
    if a.shape != b.shape:
        raise DimensionMismatch(f"shape mismatch {a.shape} vs {b.shape}")
    na = float(np.linalg.norm(a))
    nb = float(np.linalg.norm(b))
    if na <= tol.absolute and nb <= tol.absolute:
        return (0.0, 0.0), 0.0
    stacked = np.column_stack([a.ravel(), b.ravel()])
    _, svals, vh = np.linalg.svd(stacked, full_matrices=False)
    smin = float(svals[-1])
    if smin > tol.effective(max(1.0, na, nb)):
        return None, smin
    va, vb = vh[-1].conj()
    h = math.hypot(abs(va), abs(vb))
    if abs(va) <= 1e-14 * h:
        # x carries a negligible coefficient: cos(theta) = 0, phase free.
        return (math.pi / 2.0, 0.0), smin
    theta = math.atan2(abs(vb), abs(va))
    if abs(vb) <= 1e-14 * h:
        phi = 0.0
    else:
        phi = (cmath.phase(vb) - cmath.phase(va)) % (2.0 * math.pi)
    return (theta, phi), smin


def complex_dependence(x, y, tol: Tolerance = DEFAULT_TOL) -> tuple[float, float] | None:
    """Angles (theta, phi) with cos(theta) x + e^{i phi} sin(theta) y = 0.

    Complex-linear dependence of two equal-shaped matrices, detected through
    the smaller singular value of the two-column matrix [vec x | vec y].
    theta lies in [0, pi/2]; phi in [0, 2 pi).  Returns None when independent.
    """
    angles, _ = complex_dependence_detail(x, y, tol)
    return angles
