"""Exact integer group determinants on the rank-two order-16 bicyclic group.

The package evaluates the 16-coefficient group determinant three independent
ways, decides exactly which integers are attainable as such a determinant
(with a machine-checkable certificate either way), and synthesizes explicit
coefficient vectors realizing every attainable value.
"""

from .classifier import (
    Even15,
    Even16,
    NotInS,
    OddA,
    OddOne,
    Reason,
    SClassification,
    a_decompose,
    classify,
)
from .core import CoeffVec16, DerivedSpectra, GaussInt, derive
from .errors import (
    EnvelopeExceededError,
    InternalMismatchError,
    NotAttainableError,
    PreconditionError,
)
from .gdet import (
    BetaGammaNorms,
    beta_gamma_norms,
    beta_gamma_norms_alt,
    det2,
    det4,
    det4_gauss,
    det16_direct,
    det16_factored,
    det16_spectral,
)
from .numtheory import (
    ENVELOPE,
    Factorization,
    TwoSquaresRep,
    factorize,
    is_in_P,
    is_prime,
    signed_divisors_1mod8,
    two_squares_2p,
    two_squares_prime_5mod8,
)
from .verification import (
    ScanReport,
    SuiteReport,
    lemma_suites,
    scan_exhaustive,
    scan_random,
    window_roundtrip,
)
from .witness import WitnessCase, WitnessPlan, emit, plan, witness

__version__ = "0.1.0"

__all__ = [
    "BetaGammaNorms",
    "CoeffVec16",
    "DerivedSpectra",
    "ENVELOPE",
    "EnvelopeExceededError",
    "Even15",
    "Even16",
    "Factorization",
    "GaussInt",
    "InternalMismatchError",
    "NotAttainableError",
    "NotInS",
    "OddA",
    "OddOne",
    "PreconditionError",
    "Reason",
    "SClassification",
    "ScanReport",
    "SuiteReport",
    "TwoSquaresRep",
    "WitnessCase",
    "WitnessPlan",
    "a_decompose",
    "beta_gamma_norms",
    "beta_gamma_norms_alt",
    "classify",
    "derive",
    "det2",
    "det4",
    "det4_gauss",
    "det16_direct",
    "det16_factored",
    "det16_spectral",
    "emit",
    "factorize",
    "is_in_P",
    "is_prime",
    "lemma_suites",
    "plan",
    "scan_exhaustive",
    "scan_random",
    "signed_divisors_1mod8",
    "two_squares_2p",
    "two_squares_prime_5mod8",
    "window_roundtrip",
    "witness",
]
