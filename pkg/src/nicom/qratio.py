"""Exact rational values of the cube-sum / square-of-sum ratio Q(alpha, m).

Q(alpha, m) = (sum of floor(alpha*n)^3) / (sum of floor(alpha*n))^2 over
n = 1..m, for alpha in {phi, phi^2}.  Values are ``fractions.Fraction``
instances, so they are always reduced with a positive denominator.

For m of the form F_K - 1 the sums route through the recursive moment
engine (or closed forms on request), which keeps Q evaluable at K in the
hundreds; any other m falls back to guarded brute force.
"""

from __future__ import annotations

from fractions import Fraction

from . import closed_forms
from .beatty_floor import isqrt
from .fib_lucas import fib
from .moment_sums import BruteForceGuardError, MomentTable, a_prime, brute_guard

PHI = "phi"
PHI2 = "phi2"
_ALPHAS = (PHI, PHI2)

_table = MomentTable()


def _fib_index_of(m: int) -> int | None:
    """Return K >= 3 with F_K - 1 == m, or None."""
    k = 3
    while True:
        f = fib(k)
        if f - 1 == m:
            return k
        if f - 1 > m:
            return None
        k += 1


def _sums_at_fib_index(alpha: str, K: int, engine: str) -> tuple[int, int]:
    """(cube sum, plain sum) over n = 1..F_K-1 for the given alpha."""
    if engine == "closed":
        if alpha == PHI:
            return closed_forms.lemma3_a3(K), closed_forms.lemma2_a(K)
        return closed_forms.lemma4_a_prime3(K), closed_forms.lemma2_a_prime(K)
    if alpha == PHI:
        return _table.a(K, 3, 0), _table.a(K, 1, 0)
    return a_prime(K, 3, _table), a_prime(K, 1, _table)


def q_value(alpha: str, m: int, engine: str = "auto") -> Fraction:
    """Exact Q(alpha, m); alpha is "phi" or "phi2"."""
    if alpha not in _ALPHAS:
        raise ValueError(f"alpha must be one of {_ALPHAS}, got {alpha!r}")
    if m < 1:
        raise ValueError(f"Q undefined at m = {m}")
    if engine not in ("auto", "brute", "recursive", "closed"):
        raise ValueError(f"unknown engine {engine!r}")
    if engine != "brute":
        K = _fib_index_of(m)
        if K is not None:
            cubes, plain = _sums_at_fib_index(
                alpha, K, "closed" if engine == "closed" else "recursive"
            )
            return Fraction(cubes, plain * plain)
        if engine in ("recursive", "closed"):
            raise ValueError(
                f"engine {engine!r} needs m of the form F_K - 1, got m = {m}"
            )
    if m > brute_guard():
        raise BruteForceGuardError(
            f"Q({alpha}, {m}): m is not of the form F_K - 1 and exceeds the "
            f"brute-force guard {brute_guard()}"
        )
    if alpha == PHI:
        cubes = a_brute_range(m, 3)
        plain = a_brute_range(m, 1)
    else:
        cubes = a_prime_brute_range(m, 3)
        plain = a_prime_brute_range(m, 1)
    return Fraction(cubes, plain * plain)


def a_brute_range(m: int, s: int) -> int:
    """sum_{n=1}^{m} floor(phi*n)^s by literal summation."""
    from .beatty_floor import floor_phi

    return sum(floor_phi(n) ** s for n in range(1, m + 1))


def a_prime_brute_range(m: int, s: int) -> int:
    """sum_{n=1}^{m} floor(phi^2*n)^s by literal summation."""
    from .beatty_floor import floor_phi2

    return sum(floor_phi2(n) ** s for n in range(1, m + 1))


def q_diff(K: int, engine: str = "auto") -> Fraction:
    """Q(phi^2, F_K - 1) - Q(phi, F_K - 1), exact, for K >= 3."""
    if K < 3:
        raise ValueError(f"q_diff needs K >= 3 (so m = F_K - 1 >= 1), got {K}")
    m = fib(K) - 1
    if engine == "brute":
        return q_value(PHI2, m, engine="brute") - q_value(PHI, m, engine="brute")
    eng = "closed" if engine == "closed" else "recursive"
    c2, p2 = _sums_at_fib_index(PHI2, K, eng)
    c1, p1 = _sums_at_fib_index(PHI, K, eng)
    return Fraction(c2, p2 * p2) - Fraction(c1, p1 * p1)


def nicomachus_check(m: int) -> bool:
    """True iff the cube sum up to m equals the squared plain sum."""
    if m < 1:
        raise ValueError(f"index must be >= 1, got {m}")
    cubes = sum(n**3 for n in range(1, m + 1))
    plain = sum(range(1, m + 1))
    return cubes == plain * plain


def sqrt5_interval(digits: int) -> tuple[Fraction, Fraction]:
    """Rational bracket lo < sqrt(5) < hi, accurate to ~``digits`` decimals."""
    scale = 10**digits
    r = isqrt(5 * scale * scale)
    return Fraction(r, scale), Fraction(r + 1, scale)


def phi_interval(digits: int) -> tuple[Fraction, Fraction]:
    """Rational bracket lo < phi < hi, accurate to ~``digits`` decimals."""
    lo, hi = sqrt5_interval(digits)
    return (1 + lo) / 2, (1 + hi) / 2
