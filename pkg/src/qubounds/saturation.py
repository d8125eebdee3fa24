"""Equality certificates and explicit saturating constructions.

Saturation is always decided from the structural characterization (a
linear-dependence or scalar-equality test), then cross-checked against the
numeric slack of the corresponding bound report.  A disagreement beyond the
tolerance band is raised as an error rather than silently resolved, because
the two criteria are provably equivalent.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    CorollaryViolation,
    DimensionMismatch,
    HypothesisViolated,
    InconsistentCharacterization,
    InconsistentSaturation,
    RIndependenceViolation,
    ZeroDeviation,
)
from .linalg import (
    DEFAULT_TOL,
    PSD_TOL,
    Tolerance,
    complex_dependence_detail,
    frobenius_norm,
    hermitian_eig,
    phase_dependence_detail,
)
from .relations import BoundReport, mp3, mp6, mp_chain, robertson, schrodinger
from .states import (
    DensityMatrix,
    PureState,
    QuantumState,
    _matrix_of,
    expectation,
    pair_moments,
)

# Constructed pairs must close their target bound to this relative gap.
CONSTRUCTION_TOL = 1e-8

# Positive powers at which mixed-state equality conditions are re-verified.
DEFAULT_R_LIST = (0.5, 1.0, 2.0, 3.0)


class CertificateKind(str, enum.Enum):
    ROBERTSON_PURE = "robertson-pure"
    ROBERTSON_MIXED = "robertson-mixed"
    SCHRODINGER = "schrodinger"
    MP_CHAIN_ALL = "mp-chain-all"
    MP3 = "mp3"
    MP6 = "mp6"


@dataclass(frozen=True)
class SaturationCertificate:
    """Witness phases and the residual they achieve."""

    kind: CertificateKind
    theta: float | None
    phi: float | None
    mu: complex | None
    residual: float
    r_checked: tuple[float, ...] = ()
    r_residuals: tuple[float, ...] = ()


@dataclass(frozen=True)
class EqualityCheck:
    """Result of comparing the two scalars of an equality characterization."""

    saturated: bool
    lhs: float
    rhs: float
    residual: float


@dataclass(frozen=True)
class ChainSaturation:
    """Per-step equality flags for the sum-bound chain."""

    step_saturated: tuple[bool, bool, bool]
    step_residuals: tuple[float, float, float]
    all_equalities: SaturationCertificate | None


@dataclass(frozen=True)
class ConstructedPair:
    """An orthonormal pair built to close a target bound."""

    mu: complex
    psi: PureState
    phi: PureState
    target: str
    achieved_slack: float
    degenerate: bool = False


class ZeroWitness(enum.Enum):
    NONE = "none"
    A_ZERO = "a-zero"
    B_ZERO = "b-zero"
    BOTH = "both"


@dataclass(frozen=True)
class ZeroProductCheck:
    product_is_zero: bool
    witness: ZeroWitness
    residual_a: float
    residual_b: float


def _as_density(state: QuantumState) -> DensityMatrix:
    if isinstance(state, DensityMatrix):
        return state
    if isinstance(state, PureState):
        return DensityMatrix.from_pure(state)
    raise TypeError(f"unsupported state type {type(state)!r}")


def _cross_check(kind: str, present: bool, dependence_residual: float,
                 report: BoundReport, tol: Tolerance) -> None:
    """Certificate presence must match the report's saturated flag.

    Near the decision threshold both calls may legitimately land on opposite
    sides; only a disagreement where both statistics are decisive raises.
    """
    if present == report.saturated:
        return
    slack_budget = tol.effective(max(1.0, report.lhs, report.rhs))
    if present and abs(report.slack) <= 2.0 * slack_budget:
        return
    dep_scale = max(1.0, report.lhs, report.rhs)
    if not present and dependence_residual <= 2.0 * tol.effective(dep_scale):
        return
    raise InconsistentSaturation(
        f"{kind}: certificate presence {present} vs saturated {report.saturated} "
        f"(slack {report.slack:.3e}, dependence residual {dependence_residual:.3e})"
    )


def robertson_saturation_pure(observable_a, observable_b, psi: PureState,
                              tol: Tolerance = DEFAULT_TOL) -> SaturationCertificate | None:
    """Phase theta with cos(theta) A_c |psi> + i sin(theta) B_c |psi> = 0, if any."""
    a = _matrix_of(observable_a)
    b = _matrix_of(observable_b)
    alpha = expectation(a, psi)
    beta = expectation(b, psi)
    x = a @ psi.amplitudes - alpha * psi.amplitudes
    y = b @ psi.amplitudes - beta * psi.amplitudes
    theta, residual = phase_dependence_detail(x, y, tol)
    report = robertson(a, b, psi, tol)
    _cross_check("robertson pure", theta is not None, residual, report, tol)
    if theta is None:
        return None
    return SaturationCertificate(
        kind=CertificateKind.ROBERTSON_PURE, theta=theta, phi=None, mu=None, residual=residual
    )


def _rho_powers(rho: DensityMatrix, r_list) -> dict[float, np.ndarray]:
    # One eigendecomposition serves every power; eigenvalues in the PSD noise
    # band are zeroed so fractional powers cannot amplify kernel junk.
    es = hermitian_eig(rho.matrix)
    cutoff = PSD_TOL * float(np.linalg.norm(rho.matrix))
    w = np.where(es.eigenvalues > cutoff, es.eigenvalues, 0.0)
    v = es.eigenvectors
    return {float(r): (v * w**r) @ v.conj().T for r in r_list}


def _verify_r_family(a_c: np.ndarray, b_c: np.ndarray, coeff_a: complex, coeff_b: complex,
                     rho: DensityMatrix, r_list, tol: Tolerance) -> tuple[tuple[float, ...], tuple[float, ...]]:
    """Residuals of coeff_a * A_c rho^r + coeff_b * B_c rho^r over r_list."""
    powers = _rho_powers(rho, r_list)
    rs, residuals = [], []
    for r, rho_r in powers.items():
        ma = a_c @ rho_r
        mb = b_c @ rho_r
        res = float(np.linalg.norm(coeff_a * ma + coeff_b * mb))
        scale = max(1.0, frobenius_norm(ma), frobenius_norm(mb))
        if res > 10.0 * tol.effective(scale):
            raise RIndependenceViolation(
                f"dependence holds at r=1/2 but fails at r={r} (residual {res:.3e})"
            )
        rs.append(r)
        residuals.append(res)
    return tuple(rs), tuple(residuals)


def robertson_saturation_mixed(observable_a, observable_b, state: QuantumState,
                               tol: Tolerance = DEFAULT_TOL,
                               r_list=DEFAULT_R_LIST) -> SaturationCertificate | None:
    """Mixed-state equality witness, re-verified at every power in ``r_list``."""
    if not r_list:
        raise ValueError("r_list must be nonempty")
    if any(r <= 0 for r in r_list):
        raise ValueError("r_list entries must be positive")
    rho = _as_density(state)
    a = _matrix_of(observable_a)
    b = _matrix_of(observable_b)
    m = pair_moments(a, b, rho)
    eye = np.eye(rho.dimension)
    a_c = a - m.alpha * eye
    b_c = b - m.beta * eye
    half = _rho_powers(rho, (0.5,))[0.5]
    theta, residual = phase_dependence_detail(a_c @ half, b_c @ half, tol)
    report = robertson(a, b, rho, tol)
    _cross_check("robertson mixed", theta is not None, residual, report, tol)
    if theta is None:
        return None
    rs, r_residuals = _verify_r_family(
        a_c, b_c, math.cos(theta), 1j * math.sin(theta), rho, r_list, tol
    )
    return SaturationCertificate(
        kind=CertificateKind.ROBERTSON_MIXED,
        theta=theta,
        phi=None,
        mu=None,
        residual=residual,
        r_checked=rs,
        r_residuals=r_residuals,
    )


def schrodinger_saturation(observable_a, observable_b, state: QuantumState,
                           tol: Tolerance = DEFAULT_TOL,
                           r_list=DEFAULT_R_LIST) -> SaturationCertificate | None:
    """Witness (theta, phi) with cos(theta) A_c rho^r + e^{i phi} sin(theta) B_c rho^r = 0."""
    if not r_list or any(r <= 0 for r in r_list):
        raise ValueError("r_list must be nonempty with positive entries")
    rho = _as_density(state)
    a = _matrix_of(observable_a)
    b = _matrix_of(observable_b)
    m = pair_moments(a, b, rho)
    eye = np.eye(rho.dimension)
    a_c = a - m.alpha * eye
    b_c = b - m.beta * eye
    half = _rho_powers(rho, (0.5,))[0.5]
    angles, residual = complex_dependence_detail(a_c @ half, b_c @ half, tol)
    report = schrodinger(a, b, rho, tol)
    _cross_check("schrodinger", angles is not None, residual, report, tol)
    if angles is None:
        return None
    theta, phi = angles
    rs, r_residuals = _verify_r_family(
        a_c, b_c, math.cos(theta), cmath.exp(1j * phi) * math.sin(theta), rho, r_list, tol
    )
    return SaturationCertificate(
        kind=CertificateKind.SCHRODINGER,
        theta=theta,
        phi=phi,
        mu=None,
        residual=residual,
        r_checked=rs,
        r_residuals=r_residuals,
    )


def mp_chain_saturation(observable_a, observable_b, psi: PureState, phi: PureState,
                        mu: complex, tol: Tolerance = DEFAULT_TOL) -> ChainSaturation:
    """Check each chain step's equality condition and the all-equalities criterion.

    Step 1: the deviations equal the cross matrix-element moduli.
    Step 2: the two moduli agree.
    Step 3: c and mu*d are phase aligned.
    All three hold together exactly when psi is an eigenvector of
    A - conj(mu) B with eigenvalue alpha - conj(mu) beta.
    """
    mu = complex(mu)
    chain = mp_chain(observable_a, observable_b, psi, phi, mu, tol)
    a = _matrix_of(observable_a)
    b = _matrix_of(observable_b)
    m = pair_moments(a, b, psi)
    abs_c, abs_d = abs(chain.frame.c), abs(chain.frame.d)

    res1 = max(abs(m.dev_a - abs_c), abs(m.dev_b - abs_d))
    res2 = abs(abs_c - abs_d)
    res3 = (abs_c + abs_d) - abs(chain.frame.c + mu * chain.frame.d)
    scale = max(1.0, m.dev_a, m.dev_b, abs_c, abs_d)
    flags = (
        res1 <= tol.effective(scale),
        res2 <= tol.effective(scale),
        res3 <= tol.effective(scale),
    )

    shifted = (a - np.conj(mu) * b) @ psi.amplitudes - (
        m.alpha - np.conj(mu) * m.beta
    ) * psi.amplitudes
    eigen_residual = float(np.linalg.norm(shifted))
    certificate = None
    if eigen_residual <= tol.effective(max(1.0, frobenius_norm(a), frobenius_norm(b))):
        combo = chain.frame.c + mu * chain.frame.d
        theta = (-cmath.phase(combo)) % (2.0 * math.pi) if abs(combo) > 0 else 0.0
        certificate = SaturationCertificate(
            kind=CertificateKind.MP_CHAIN_ALL,
            theta=theta,
            phi=None,
            mu=mu,
            residual=eigen_residual,
        )
    return ChainSaturation(
        step_saturated=flags,
        step_residuals=(float(res1), float(res2), float(res3)),
        all_equalities=certificate,
    )


def _require_mu_hypothesis(observable_a, observable_b, psi: PureState,
                           mu: complex, tol: Tolerance) -> complex:
    mu = complex(mu)
    if abs(mu - 1j) > 1e-12 and abs(mu + 1j) > 1e-12:
        raise ValueError(f"mu must be i or -i, got {mu!r}")
    m = pair_moments(_matrix_of(observable_a), _matrix_of(observable_b), psi)
    signed = (mu * m.commutator_expectation).real
    scale = max(1.0, abs(m.commutator_expectation))
    if signed < -tol.effective(scale):
        raise HypothesisViolated(f"mu * <[A, B]> = {signed:.3e} is negative")
    return mu


def mp3_saturation(observable_a, observable_b, psi: PureState, phi: PureState,
                   mu: complex, tol: Tolerance = DEFAULT_TOL) -> EqualityCheck:
    """Equality test for the sum bound: ||(A_c - mu B_c)|psi>|| vs |<psi|A + mu B|phi>|."""
    a = _matrix_of(observable_a)
    b = _matrix_of(observable_b)
    mu = _require_mu_hypothesis(a, b, psi, mu, tol)
    chain = mp_chain(a, b, psi, phi, mu, tol)  # validates orthonormality, exposes c, d
    m = pair_moments(a, b, psi)
    shifted = (a - mu * b) @ psi.amplitudes - (m.alpha - mu * m.beta) * psi.amplitudes
    lhs = float(np.linalg.norm(shifted))
    rhs = abs(chain.frame.c + mu * chain.frame.d)
    residual = abs(lhs - rhs)
    return EqualityCheck(
        saturated=bool(residual <= tol.effective(max(1.0, lhs, rhs))),
        lhs=lhs,
        rhs=rhs,
        residual=residual,
    )


def mp6_saturation(observable_a, observable_b, psi: PureState, phi: PureState,
                   mu: complex, tol: Tolerance = DEFAULT_TOL) -> EqualityCheck:
    """Equality test for the product bound.

    Compares ||(A_c/dev(A) - mu B_c/dev(B))|psi>|| with |<psi|Q_mu|phi>|,
    the condition under which the division-free form closes.
    """
    a = _matrix_of(observable_a)
    b = _matrix_of(observable_b)
    mu = _require_mu_hypothesis(a, b, psi, mu, tol)
    m = pair_moments(a, b, psi)
    dev_budget = tol.effective(max(1.0, frobenius_norm(a), frobenius_norm(b)))
    if m.dev_a <= dev_budget or m.dev_b <= dev_budget:
        raise ZeroDeviation(
            f"deviations ({m.dev_a:.3e}, {m.dev_b:.3e}) too small for the product bound"
        )
    chain = mp_chain(a, b, psi, phi, mu, tol)
    eye = np.eye(a.shape[0])
    combo = (a - m.alpha * eye) / m.dev_a - mu * (b - m.beta * eye) / m.dev_b
    lhs = float(np.linalg.norm(combo @ psi.amplitudes))
    rhs = abs(chain.frame.c / m.dev_a + mu * chain.frame.d / m.dev_b)
    residual = abs(lhs - rhs)
    return EqualityCheck(
        saturated=bool(residual <= tol.effective(max(1.0, lhs, rhs))),
        lhs=lhs,
        rhs=rhs,
        residual=residual,
    )


def _entry_sign_mu(observable_a, observable_b, tol: Tolerance) -> tuple[complex, bool]:
    """mu in {i, -i} making the (1,1) entry of mu[A, B] nonnegative; ties to i."""
    a = _matrix_of(observable_a)
    b = _matrix_of(observable_b)
    entry = complex((a @ b - b @ a)[0, 0])
    scale = max(1.0, frobenius_norm(a) * frobenius_norm(b))
    if abs(entry) <= tol.effective(scale):
        return 1j, True
    return (-1j if entry.imag > 0 else 1j), False


def _basis_state(n: int, index: int) -> PureState:
    v = np.zeros(n, dtype=complex)
    v[index] = 1.0
    return PureState(v)


def _embed_tail(n: int, tail: np.ndarray) -> PureState:
    v = np.zeros(n, dtype=complex)
    v[1:] = tail
    return PureState(v)


def _relative_slack(report: BoundReport) -> float:
    return report.slack / max(1.0, abs(report.lhs), abs(report.rhs))


def construct_case1(observable_a, observable_b, tol: Tolerance = DEFAULT_TOL) -> ConstructedPair:
    """Saturating pair for the sum bound in dimension 2: psi = e1, phi = e2."""
    a = _matrix_of(observable_a)
    if a.shape[0] != 2:
        raise DimensionMismatch(f"construction requires dimension 2, got {a.shape[0]}")
    b = _matrix_of(observable_b)
    mu, _ = _entry_sign_mu(a, b, tol)
    psi = _basis_state(2, 0)
    phi = _basis_state(2, 1)
    report = mp3(a, b, psi, phi, tol).report
    return ConstructedPair(
        mu=mu, psi=psi, phi=phi, target="mp3", achieved_slack=_relative_slack(report)
    )


def construct_case2(observable_a, observable_b, tol: Tolerance = DEFAULT_TOL) -> ConstructedPair:
    """Saturating pair for the sum bound in dimension n > 2.

    With psi = e1, equality needs the remaining frame directions orthogonal
    to the first-column tail of A - mu B, so phi is that tail normalized
    (phase-fixed to make <psi|(A - mu B)|phi> real nonnegative).  A vanishing
    tail makes the equality hold for any phi; e2 is used then.
    """
    a = _matrix_of(observable_a)
    n = a.shape[0]
    if n <= 2:
        raise DimensionMismatch(f"construction requires dimension > 2, got {n}")
    b = _matrix_of(observable_b)
    mu, _ = _entry_sign_mu(a, b, tol)
    tail = (a - mu * b)[1:, 0]
    norm = float(np.linalg.norm(tail))
    degenerate = norm <= tol.effective(max(1.0, frobenius_norm(a), frobenius_norm(b)))
    if degenerate:
        phi = _basis_state(n, 1)
    else:
        direction = tail / norm
        # Fix the free phase so <e1|(A - mu B)|phi> comes out real nonnegative.
        entry = complex((a - mu * b)[0, 1:] @ direction)
        if abs(entry) > 1e-14:
            direction = direction * cmath.exp(-1j * cmath.phase(entry))
        phi = _embed_tail(n, direction)
    psi = _basis_state(n, 0)
    report = mp3(a, b, psi, phi, tol).report
    return ConstructedPair(
        mu=mu,
        psi=psi,
        phi=phi,
        target="mp3",
        achieved_slack=_relative_slack(report),
        degenerate=degenerate,
    )


def construct_w_mp6(observable_a, observable_b, tol: Tolerance = DEFAULT_TOL) -> ConstructedPair:
    """Saturating pair for the product bound.

    psi = e1, and phi embeds the normalized difference of the normalized
    first-column tails u/||u|| - mu v/||v|| (those norms are the deviations
    of A and B in e1).  When the difference vanishes both equality sides are
    zero for any phi; e2 is used then.
    """
    a = _matrix_of(observable_a)
    b = _matrix_of(observable_b)
    n = a.shape[0]
    if n < 2:
        raise DimensionMismatch("construction requires dimension >= 2")
    if b.shape[0] != n:
        raise DimensionMismatch("observables have different dimensions")
    mu, _ = _entry_sign_mu(a, b, tol)
    u = a[1:, 0]
    v = b[1:, 0]
    nu = float(np.linalg.norm(u))
    nv = float(np.linalg.norm(v))
    dev_budget = tol.effective(max(1.0, frobenius_norm(a), frobenius_norm(b)))
    if nu <= dev_budget or nv <= dev_budget:
        raise ZeroDeviation(f"first-column tails have norms ({nu:.3e}, {nv:.3e})")
    difference = u / nu - mu * v / nv
    norm = float(np.linalg.norm(difference))
    degenerate = norm <= tol.effective(1.0)
    if degenerate:
        phi = _basis_state(n, 1)
    else:
        phi = _embed_tail(n, difference / norm)
    psi = _basis_state(n, 0)
    reports = mp6(a, b, psi, phi, tol)
    return ConstructedPair(
        mu=mu,
        psi=psi,
        phi=phi,
        target="mp6",
        achieved_slack=_relative_slack(reports.reformulated),
        degenerate=degenerate,
    )


def _centered_products(observable_a, observable_b, rho: DensityMatrix):
    a = _matrix_of(observable_a)
    b = _matrix_of(observable_b)
    alpha = expectation(a, rho)
    beta = expectation(b, rho)
    eye = np.eye(rho.dimension)
    res_a = float(np.linalg.norm((a - alpha * eye) @ rho.matrix))
    res_b = float(np.linalg.norm((b - beta * eye) @ rho.matrix))
    return a, b, res_a, res_b


def zero_product_characterization(observable_a, observable_b, state: QuantumState,
                                  tol: Tolerance = DEFAULT_TOL) -> ZeroProductCheck:
    """dev(A) dev(B) = 0 exactly when A_c rho = 0 or B_c rho = 0.

    Both criteria are evaluated; a decisive disagreement raises
    :class:`InconsistentCharacterization`.
    """
    rho = _as_density(state)
    a, b, res_a, res_b = _centered_products(observable_a, observable_b, rho)
    m = pair_moments(a, b, rho)
    budget_a = tol.effective(max(1.0, frobenius_norm(a)))
    budget_b = tol.effective(max(1.0, frobenius_norm(b)))
    a_zero = res_a <= budget_a
    b_zero = res_b <= budget_b
    by_products = a_zero or b_zero
    by_deviation = m.dev_a <= budget_a or m.dev_b <= budget_b
    if by_products != by_deviation:
        # Re-test the disagreeing side with a 100x band before declaring a fault.
        decisive_products = (res_a > 100.0 * budget_a) and (res_b > 100.0 * budget_b)
        decisive_deviation = (m.dev_a > 100.0 * budget_a) and (m.dev_b > 100.0 * budget_b)
        if (by_products and decisive_deviation) or (by_deviation and decisive_products):
            raise InconsistentCharacterization(
                f"product test {by_products} vs deviation test {by_deviation} "
                f"(residuals {res_a:.3e}, {res_b:.3e}; deviations {m.dev_a:.3e}, {m.dev_b:.3e})"
            )
        by_products = by_products or by_deviation
        a_zero = a_zero or m.dev_a <= budget_a
        b_zero = b_zero or m.dev_b <= budget_b
    if a_zero and b_zero:
        witness = ZeroWitness.BOTH
    elif a_zero:
        witness = ZeroWitness.A_ZERO
    elif b_zero:
        witness = ZeroWitness.B_ZERO
    else:
        witness = ZeroWitness.NONE
    return ZeroProductCheck(
        product_is_zero=by_products, witness=witness, residual_a=res_a, residual_b=res_b
    )


def zero_sum_characterization(observable_a, observable_b, state: QuantumState,
                              tol: Tolerance = DEFAULT_TOL) -> bool:
    """dev(A)^2 + dev(B)^2 = 0 exactly when both A_c rho and B_c rho vanish."""
    rho = _as_density(state)
    a, b, res_a, res_b = _centered_products(observable_a, observable_b, rho)
    m = pair_moments(a, b, rho)
    budget_a = tol.effective(max(1.0, frobenius_norm(a)))
    budget_b = tol.effective(max(1.0, frobenius_norm(b)))
    by_products = res_a <= budget_a and res_b <= budget_b
    by_deviation = m.dev_a <= budget_a and m.dev_b <= budget_b
    if by_products != by_deviation:
        decisive_products = (res_a > 100.0 * budget_a) or (res_b > 100.0 * budget_b)
        decisive_deviation = (m.dev_a > 100.0 * budget_a) or (m.dev_b > 100.0 * budget_b)
        if (by_products and decisive_deviation) or (by_deviation and decisive_products):
            raise InconsistentCharacterization(
                f"sum product test {by_products} vs deviation test {by_deviation}"
            )
        by_products = by_products and by_deviation
    return by_products


def qubit_commutation_witness(observable_a, observable_b, state: QuantumState,
                              tol: Tolerance = DEFAULT_TOL) -> float | None:
    """For qubits, vanishing centered products force [A, B] = 0.

    Returns the commutator norm when both centered products vanish on the
    state (the witness), None when the precondition is unmet, and raises
    :class:`CorollaryViolation` if the commutator is large anyway.
    """
    rho = _as_density(state)
    if rho.dimension != 2:
        raise DimensionMismatch(f"qubit check requires dimension 2, got {rho.dimension}")
    a, b, res_a, res_b = _centered_products(observable_a, observable_b, rho)
    if res_a > tol.effective(max(1.0, frobenius_norm(a))):
        return None
    if res_b > tol.effective(max(1.0, frobenius_norm(b))):
        return None
    comm_norm = float(np.linalg.norm(a @ b - b @ a))
    scale = max(1.0, frobenius_norm(a) * frobenius_norm(b))
    if comm_norm > tol.effective(scale):
        raise CorollaryViolation(
            f"centered products vanish but ||[A, B]|| = {comm_norm:.3e}"
        )
    return comm_norm
