"""Uncertainty bounds for finite-dimensional observables.

Evaluates the product and sum uncertainty relations for Hermitian
observables in pure or mixed states, decides when each bound is saturated
through exact structural characterizations, and constructs orthonormal
state pairs that provably close the sum and product bounds.
"""

from .errors import (
    BoundViolation,
    CorollaryViolation,
    DimensionMismatch,
    HypothesisViolated,
    InconsistentCharacterization,
    InconsistentSaturation,
    NonHermitianInput,
    NonRealExpectation,
    NotOrthogonal,
    NotOrthonormal,
    NotPositiveSemidefinite,
    QuboundsError,
    RankUnachieved,
    RIndependenceViolation,
    ZeroDeviation,
)
from .linalg import (
    DEFAULT_TOL,
    EigenSystem,
    Tolerance,
    complex_dependence,
    frobenius_inner,
    hermitian_eig,
    phase_dependence,
    psd_power,
    unitary_completion,
)
from .relations import (
    BoundReport,
    ChainReport,
    MP3Report,
    MP6Reports,
    MPFrame,
    MuChoice,
    choose_mu,
    mp3,
    mp6,
    mp_chain,
    mp_frame,
    mu_ratio,
    robertson,
    schrodinger,
)
from .reporting import ARTIFACT_VERSION, RunManifest, SuiteReport, run_verification_suite
from .sampling import (
    SampleConfig,
    bloch_state,
    haar_unitary,
    random_density,
    random_hermitian,
    random_pure_state,
    trial_rng,
)
from .saturation import (
    CONSTRUCTION_TOL,
    CertificateKind,
    ChainSaturation,
    ConstructedPair,
    EqualityCheck,
    SaturationCertificate,
    ZeroProductCheck,
    ZeroWitness,
    construct_case1,
    construct_case2,
    construct_w_mp6,
    mp3_saturation,
    mp6_saturation,
    mp_chain_saturation,
    qubit_commutation_witness,
    robertson_saturation_mixed,
    robertson_saturation_pure,
    schrodinger_saturation,
    zero_product_characterization,
    zero_sum_characterization,
)
from .states import (
    CenteredObservable,
    DensityMatrix,
    GramPair,
    Observable,
    PairMoments,
    PureState,
    QuantumState,
    center,
    expectation,
    gram_pair,
    pair_moments,
    stddev,
)

__version__ = ARTIFACT_VERSION

__all__ = [
    "ARTIFACT_VERSION",
    "BoundReport",
    "BoundViolation",
    "CONSTRUCTION_TOL",
    "CenteredObservable",
    "CertificateKind",
    "ChainReport",
    "ChainSaturation",
    "ConstructedPair",
    "CorollaryViolation",
    "DEFAULT_TOL",
    "DensityMatrix",
    "DimensionMismatch",
    "EigenSystem",
    "EqualityCheck",
    "GramPair",
    "HypothesisViolated",
    "InconsistentCharacterization",
    "InconsistentSaturation",
    "MP3Report",
    "MP6Reports",
    "MPFrame",
    "MuChoice",
    "NonHermitianInput",
    "NonRealExpectation",
    "NotOrthogonal",
    "NotOrthonormal",
    "NotPositiveSemidefinite",
    "Observable",
    "PairMoments",
    "PureState",
    "QuantumState",
    "QuboundsError",
    "RIndependenceViolation",
    "RankUnachieved",
    "RunManifest",
    "SampleConfig",
    "SaturationCertificate",
    "SuiteReport",
    "Tolerance",
    "ZeroDeviation",
    "ZeroProductCheck",
    "ZeroWitness",
    "bloch_state",
    "center",
    "choose_mu",
    "complex_dependence",
    "construct_case1",
    "construct_case2",
    "construct_w_mp6",
    "expectation",
    "frobenius_inner",
    "gram_pair",
    "haar_unitary",
    "hermitian_eig",
    "mp3",
    "mp3_saturation",
    "mp6",
    "mp6_saturation",
    "mp_chain",
    "mp_chain_saturation",
    "mp_frame",
    "mu_ratio",
    "pair_moments",
    "phase_dependence",
    "psd_power",
    "qubit_commutation_witness",
    "random_density",
    "random_hermitian",
    "random_pure_state",
    "robertson",
    "robertson_saturation_mixed",
    "robertson_saturation_pure",
    "run_verification_suite",
    "schrodinger",
    "schrodinger_saturation",
    "stddev",
    "trial_rng",
    "unitary_completion",
    "zero_product_characterization",
    "zero_sum_characterization",
]
