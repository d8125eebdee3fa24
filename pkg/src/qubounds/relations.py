"""Evaluation of the uncertainty bounds as auditable reports.

Every evaluator returns a :class:`BoundReport` (or a small bundle of them)
carrying both sides of the inequality, the slack, a saturation flag, the
tolerance used, and a digest of the inputs.  A negative slack beyond the
rounding budget raises :class:`~qubounds.errors.BoundViolation` instead of
being reported, since each inequality is a theorem.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .errors import (
    BoundViolation,
    DimensionMismatch,
    NonRealExpectation,
    NotOrthogonal,
    ZeroDeviation,
)
from .linalg import DEFAULT_TOL, Tolerance, frobenius_norm, unitary_completion
from .states import (
    IMAG_TOL,
    PureState,
    QuantumState,
    _matrix_of,
    pair_moments,
)


@dataclass(frozen=True)
class BoundReport:
    """One inequality instance: lhs >= rhs with slack = lhs - rhs."""

    lhs: float
    rhs: float
    slack: float
    saturated: bool
    tol_used: Tolerance
    inputs_digest: str


@dataclass(frozen=True)
class MuChoice:
    """The phase mu in {i, -i} making mu * <[A, B]> nonnegative."""

    mu: complex
    commutator_expectation: complex
    tie_broken: bool


@dataclass(frozen=True)
class MPFrame:
    """Audit quantities from the unitary frame with (psi, phi) as leading columns.

    ``u`` and ``v`` are the length n-1 first-row tails of the rotated
    observables; their norms equal the standard deviations, and their first
    entries are the cross matrix elements c = <psi|A|phi> and d = <psi|B|phi>.
    """

    alpha: float
    beta: float
    u: np.ndarray
    v: np.ndarray
    c: complex
    d: complex


@dataclass(frozen=True)
class ChainReport:
    """The three chained sum-bound inequalities plus the frame they came from."""

    steps: tuple[BoundReport, BoundReport, BoundReport]
    mu: complex
    frame: MPFrame


@dataclass(frozen=True)
class MP3Report:
    report: BoundReport
    mu: MuChoice


@dataclass(frozen=True)
class MP6Reports:
    """Product bound in both forms.

    The reformulated report is always present; the product-form report is
    None when its denominator is degenerate (flagged separately).
    """

    reformulated: BoundReport
    product: BoundReport | None
    denominator_degenerate: bool
    mu: MuChoice


def _digest(*parts) -> str:
    h = hashlib.sha256()
    for p in parts:
        if isinstance(p, np.ndarray):
            h.update(np.ascontiguousarray(p).tobytes())
        else:
            h.update(repr(p).encode())
    return h.hexdigest()[:16]


def _state_digest_part(state: QuantumState) -> np.ndarray:
    return state.amplitudes if isinstance(state, PureState) else state.matrix


def _make_report(name: str, lhs: float, rhs: float, tol: Tolerance, digest: str) -> BoundReport:
    scale = max(1.0, abs(lhs), abs(rhs))
    budget = tol.effective(scale)
    slack = lhs - rhs
    if slack < -budget:
        raise BoundViolation(f"{name}: slack {slack:.3e} below -{budget:.3e}")
    return BoundReport(
        lhs=float(lhs),
        rhs=float(rhs),
        slack=float(slack),
        saturated=bool(abs(slack) <= budget),
        tol_used=tol,
        inputs_digest=digest,
    )


def robertson(observable_a, observable_b, state: QuantumState, tol: Tolerance = DEFAULT_TOL) -> BoundReport:
    """dev(A) dev(B) >= |<[A, B]>| / 2, for pure or mixed states."""
    a = _matrix_of(observable_a)
    b = _matrix_of(observable_b)
    m = pair_moments(a, b, state)
    digest = _digest(a, b, _state_digest_part(state), "robertson")
    rhs = abs(m.commutator_expectation) / 2.0
    return _make_report("robertson", m.dev_a * m.dev_b, rhs, tol, digest)


def schrodinger(observable_a, observable_b, state: QuantumState, tol: Tolerance = DEFAULT_TOL) -> BoundReport:
    """dev(A)^2 dev(B)^2 >= |<{A,B}>/2 - alpha beta|^2 + |<[A,B]>/(2i)|^2.

    Both right-hand terms are read off the centered cross inner product, so
    the anticommutator piece never suffers the alpha*beta cancellation.
    """
    a = _matrix_of(observable_a)
    b = _matrix_of(observable_b)
    m = pair_moments(a, b, state)
    digest = _digest(a, b, _state_digest_part(state), "schrodinger")
    rhs = m.cross.real**2 + m.cross.imag**2
    return _make_report("schrodinger", (m.dev_a * m.dev_b) ** 2, rhs, tol, digest)


def choose_mu(observable_a, observable_b, psi: PureState, tol: Tolerance = DEFAULT_TOL) -> MuChoice:
    """Pick mu in {i, -i} with mu * <psi|[A, B]|psi> >= 0; ties go to i."""
    a = _matrix_of(observable_a)
    b = _matrix_of(observable_b)
    m = pair_moments(a, b, psi)
    comm = m.commutator_expectation
    scale = max(1.0, frobenius_norm(a) * frobenius_norm(b))
    if abs(comm) <= tol.effective(scale):
        return MuChoice(mu=1j, commutator_expectation=comm, tie_broken=True)
    mu = -1j if comm.imag > 0 else 1j
    return MuChoice(mu=mu, commutator_expectation=comm, tie_broken=False)


def _require_orthonormal_pair(psi: PureState, phi: PureState, tol: Tolerance) -> None:
    if psi.dimension != phi.dimension:
        raise DimensionMismatch(
            f"state dimensions differ: {psi.dimension} vs {phi.dimension}"
        )
    overlap = abs(complex(phi.amplitudes.conj() @ psi.amplitudes))
    if overlap > tol.effective(1.0):
        raise NotOrthogonal(f"|<phi|psi>| = {overlap:.3e}")


def _real_part(name: str, value: complex, scale: float) -> float:
    if abs(value.imag) > IMAG_TOL * max(1.0, scale):
        raise NonRealExpectation(f"{name}: imaginary residue {value.imag:.3e}")
    return float(value.real)


def mp_frame(observable_a, observable_b, psi: PureState, phi: PureState,
             tol: Tolerance = DEFAULT_TOL) -> MPFrame:
    """Rotate A and B into the frame whose leading columns are psi and phi."""
    a = _matrix_of(observable_a)
    b = _matrix_of(observable_b)
    if a.shape[0] != psi.dimension or b.shape[0] != psi.dimension:
        raise DimensionMismatch("observable and state dimensions differ")
    _require_orthonormal_pair(psi, phi, tol)
    basis = unitary_completion([psi.amplitudes, phi.amplitudes], tol)
    a_rot = basis.conj().T @ a @ basis
    b_rot = basis.conj().T @ b @ basis
    return MPFrame(
        alpha=float(a_rot[0, 0].real),
        beta=float(b_rot[0, 0].real),
        u=a_rot[0, 1:].copy(),
        v=b_rot[0, 1:].copy(),
        c=complex(a_rot[0, 1]),
        d=complex(b_rot[0, 1]),
    )


def mp_chain(observable_a, observable_b, psi: PureState, phi: PureState,
             mu: complex, tol: Tolerance = DEFAULT_TOL) -> ChainReport:
    """The three-step sum-bound chain for any unit-modulus mu.

    dev(A)^2 + dev(B)^2 >= |c|^2 + |d|^2 >= (|c| + |d|)^2 / 2
                        >= |<psi|(A + mu B)|phi>|^2 / 2,
    with c = <psi|A|phi> and d = <psi|B|phi>.
    """
    mu = complex(mu)
    if abs(abs(mu) - 1.0) > tol.effective(1.0):
        raise ValueError(f"|mu| must be 1, got {abs(mu)!r}")
    frame = mp_frame(observable_a, observable_b, psi, phi, tol)
    digest = _digest(
        _matrix_of(observable_a),
        _matrix_of(observable_b),
        psi.amplitudes,
        phi.amplitudes,
        mu,
        "mp-chain",
    )
    dev_sq_sum = float((frame.u.conj() @ frame.u).real) + float((frame.v.conj() @ frame.v).real)
    abs_c, abs_d = abs(frame.c), abs(frame.d)
    mixed = abs(frame.c + mu * frame.d) ** 2 / 2.0
    step1 = _make_report("mp-chain step 1", dev_sq_sum, abs_c**2 + abs_d**2, tol, digest)
    step2 = _make_report("mp-chain step 2", abs_c**2 + abs_d**2, (abs_c + abs_d) ** 2 / 2.0, tol, digest)
    step3 = _make_report("mp-chain step 3", (abs_c + abs_d) ** 2 / 2.0, mixed, tol, digest)
    return ChainReport(steps=(step1, step2, step3), mu=mu, frame=frame)


def mu_ratio(observable_a, observable_b, psi: PureState, phi: PureState) -> complex:
    """<psi|A|phi> / <psi|B|phi>: the mu that aligns the chain's last step."""
    a = _matrix_of(observable_a)
    b = _matrix_of(observable_b)
    c = complex(psi.amplitudes.conj() @ (a @ phi.amplitudes))
    d = complex(psi.amplitudes.conj() @ (b @ phi.amplitudes))
    if abs(d) <= 1e-14 * max(1.0, frobenius_norm(b)):
        raise ZeroDeviation("denominator matrix element <psi|B|phi> vanishes")
    return c / d


def mp3(observable_a, observable_b, psi: PureState, phi: PureState,
        tol: Tolerance = DEFAULT_TOL) -> MP3Report:
    """Sum bound: dev(A)^2 + dev(B)^2 >= mu <[A,B]> + |<psi|(A + mu B)|phi>|^2."""
    a = _matrix_of(observable_a)
    b = _matrix_of(observable_b)
    _require_orthonormal_pair(psi, phi, tol)
    choice = choose_mu(a, b, psi, tol)
    m = pair_moments(a, b, psi)
    cross_elem = complex(
        psi.amplitudes.conj() @ ((a + choice.mu * b) @ phi.amplitudes)
    )
    comm_term = _real_part("mp3 commutator term", choice.mu * m.commutator_expectation,
                           abs(m.commutator_expectation))
    digest = _digest(a, b, psi.amplitudes, phi.amplitudes, "mp3")
    lhs = m.dev_a**2 + m.dev_b**2
    rhs = comm_term + abs(cross_elem) ** 2
    return MP3Report(report=_make_report("mp3", lhs, rhs, tol, digest), mu=choice)


def mp6(observable_a, observable_b, psi: PureState, phi: PureState,
        tol: Tolerance = DEFAULT_TOL) -> MP6Reports:
    """Product bound via the normalized combination Q_mu = A/dev(A) + mu B/dev(B).

    The division-free reformulation
        1 - |<psi|Q_mu|phi>|^2 / 2 >= mu <[A,B]> / (2 dev(A) dev(B))
    is always evaluated; the product form
        dev(A) dev(B) >= (mu/2) <[A,B]> / (1 - |<psi|Q_mu|phi>|^2 / 2)
    only when the denominator stays clear of zero.
    """
    a = _matrix_of(observable_a)
    b = _matrix_of(observable_b)
    _require_orthonormal_pair(psi, phi, tol)
    choice = choose_mu(a, b, psi, tol)
    m = pair_moments(a, b, psi)
    dev_budget = tol.effective(max(1.0, frobenius_norm(a), frobenius_norm(b)))
    if m.dev_a <= dev_budget or m.dev_b <= dev_budget:
        raise ZeroDeviation(
            f"deviations ({m.dev_a:.3e}, {m.dev_b:.3e}) too small for the product bound"
        )
    q = a / m.dev_a + choice.mu * b / m.dev_b
    q_elem = complex(psi.amplitudes.conj() @ (q @ phi.amplitudes))
    denominator = 1.0 - abs(q_elem) ** 2 / 2.0
    comm_term = _real_part("mp6 commutator term", choice.mu * m.commutator_expectation,
                           abs(m.commutator_expectation))
    digest = _digest(a, b, psi.amplitudes, phi.amplitudes, "mp6")
    reformulated = _make_report(
        "mp6 reformulated", denominator, comm_term / (2.0 * m.dev_a * m.dev_b), tol, digest
    )
    degenerate = denominator <= tol.effective(1.0)
    product = None
    if not degenerate:
        product = _make_report(
            "mp6 product", m.dev_a * m.dev_b, comm_term / 2.0 / denominator, tol, digest
        )
    return MP6Reports(
        reformulated=reformulated,
        product=product,
        denominator_degenerate=degenerate,
        mu=choice,
    )
