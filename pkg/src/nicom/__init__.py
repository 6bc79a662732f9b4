"""Exact golden-ratio Beatty moment sums and mechanical identity verification."""

from .beatty_floor import epsilon, floor_phi, floor_phi2, isqrt
from .closed_forms import (
    DegenerateIndexError,
    case4l_sides,
    lemma2_a,
    lemma2_a_prime,
    lemma3_a3,
    lemma4_a_prime3,
    theorem1_rhs,
    theorem6_rhs,
)
from .fib_lucas import fib, fib_minus_one_factors, gcd, lcm, lucas
from .moment_sums import (
    BruteForceGuardError,
    MomentKey,
    MomentTable,
    a_brute,
    a_prime,
    a_prime_brute,
    a_recursive,
    order_bound,
)
from .qratio import nicomachus_check, q_diff, q_value
from .recurrence_prover import (
    Certificate,
    GoldenNumber,
    IntPolynomial,
    RootSetSpec,
    annihilates,
    certify_identity,
    char_poly,
    golden_power,
)
from .verify_suite import ClaimReport, prove_claim, verify_claim

__version__ = "0.1.0"
