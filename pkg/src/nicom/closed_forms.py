"""Closed-form evaluators for the first and third Beatty moment sums.

Each evaluator expresses a moment sum (or a ratio built from moment sums)
as a product of Fibonacci and Lucas numbers, so it is usable at indices
far beyond brute-force range.  All divisions are exact and asserted; a
remainder would mean a transcription bug, not a rounding issue.
"""

from __future__ import annotations

from fractions import Fraction

from .fib_lucas import fib, lucas


class DegenerateIndexError(ValueError):
    """A formula was requested at an index where a denominator vanishes."""


def _exact_div(n: int, d: int) -> int:
    q, r = divmod(n, d)
    if r:
        raise ArithmeticError(f"expected {n} to be divisible by {d}")
    return q


def lemma2_a(k: int) -> int:
    """First moment A(k, 1) = (F_{k+1} - 1)(F_k - 1) / 2."""
    if k < 1:
        raise ValueError(f"index must be >= 1, got {k}")
    return _exact_div((fib(k + 1) - 1) * (fib(k) - 1), 2)


def lemma2_a_prime(k: int) -> int:
    """First moment A'(k, 1) = (F_{k+2} - 1)(F_k - 1) / 2."""
    if k < 1:
        raise ValueError(f"index must be >= 1, got {k}")
    return _exact_div((fib(k + 2) - 1) * (fib(k) - 1), 2)


def lemma3_a3(k: int) -> int:
    """Third moment A(k, 3), split on the parity of the index k.

    Even k:  (F_{k-1} - 1)(F_{k+1} - 1)^2 (F_{k+2} - 1) / 4
    Odd k:   (F_k - 1)(F_{k+1} - 1)(L_{2k+2} - 3 L_{k+2} - L_{k+1} + 3) / 20
    """
    if k < 1:
        raise ValueError(f"index must be >= 1, got {k}")
    if k % 2 == 0:
        num = (fib(k - 1) - 1) * (fib(k + 1) - 1) ** 2 * (fib(k + 2) - 1)
        return _exact_div(num, 4)
    num = (fib(k) - 1) * (fib(k + 1) - 1)
    num *= lucas(2 * k + 2) - 3 * lucas(k + 2) - lucas(k + 1) + 3
    return _exact_div(num, 20)


def lemma4_a_prime3(k: int) -> int:
    """Third moment A'(k, 3), split on the parity of the index k.

    Both branches share the shape
    (F_k - 1)(F_{k+2} - 1)(L_{2k+4} - 5 L_{k+3} + c) / 20
    with c = 13 for even k and c = 7 for odd k.
    """
    if k < 1:
        raise ValueError(f"index must be >= 1, got {k}")
    c = 13 if k % 2 == 0 else 7
    num = (fib(k) - 1) * (fib(k + 2) - 1) * (lucas(2 * k + 4) - 5 * lucas(k + 3) + c)
    return _exact_div(num, 20)


def theorem1_num_den(K: int) -> tuple[int, int]:
    """Numerator and denominator of the defect 1 - Q-difference at m = F_K - 1.

    The branch depends on K mod 4 (write K = 2k or K = 2k - 1 and split on
    the parity of k):

        K = 2k,   k even:  (1,       F_{k+1}^2 L_{k+2} L_{k-1})
        K = 2k,   k odd:   (1,       L_{k+1}^2 F_{k+2} F_{k-1})
        K = 2k-1, k even:  (F_{k-2}, F_{k+1} F_k^2 L_{k-1}^2)
        K = 2k-1, k odd:   (L_{k-2}, L_{k+1} L_k^2 F_{k-1}^2)
    """
    if K < 3:
        raise DegenerateIndexError(
            f"Q-difference closed form needs K >= 3 (m = F_K - 1 >= 1), got {K}"
        )
    if K % 2 == 0:
        k = K // 2
        if k % 2 == 0:
            num, den = 1, fib(k + 1) ** 2 * lucas(k + 2) * lucas(k - 1)
        else:
            num, den = 1, lucas(k + 1) ** 2 * fib(k + 2) * fib(k - 1)
    else:
        k = (K + 1) // 2
        if k % 2 == 0:
            num, den = fib(k - 2), fib(k + 1) * fib(k) ** 2 * lucas(k - 1) ** 2
        else:
            num, den = lucas(k - 2), lucas(k + 1) * lucas(k) ** 2 * fib(k - 1) ** 2
    if den == 0:
        raise DegenerateIndexError(f"degenerate index K = {K}: zero denominator")
    return num, den


def theorem1_rhs(K: int) -> Fraction:
    """Exact value of Q(phi^2, F_K - 1) - Q(phi, F_K - 1) in closed form."""
    num, den = theorem1_num_den(K)
    return 1 - Fraction(num, den)


def theorem6_rhs(k: int) -> int:
    """Closed form for LCM(A(2k, 1), A'(2k, 1)).

    Even k: F_{k+1} F_k L_{k+2} L_{k+1} L_{k-1} / 2
    Odd k:  F_{k+2} F_{k+1} F_{k-1} L_{k+1} L_k / 2
    """
    if k < 1:
        raise ValueError(f"index must be >= 1, got {k}")
    if k % 2 == 0:
        num = fib(k + 1) * fib(k) * lucas(k + 2) * lucas(k + 1) * lucas(k - 1)
    else:
        num = fib(k + 2) * fib(k + 1) * fib(k - 1) * lucas(k + 1) * lucas(k)
    return _exact_div(num, 2)


def theorem1_identity_sides(K: int) -> tuple[int, int]:
    """Both sides of the cross-multiplied, denominator-free Q-difference identity.

    With num/den = theorem1_num_den(K), A1 = A(K,1), A3 = A(K,3) and the
    primed analogues, the rational identity
    A'3/A'1^2 - A3/A1^2 = 1 - num/den cross-multiplies to

        den * (A'3 * A1^2 - A3 * A'1^2) = A1^2 * A'1^2 * (den - num).

    Returns (left side, right side) as exact integers; they are equal iff
    the closed-form Q-difference is correct at K.
    """
    num, den = theorem1_num_den(K)
    a1 = lemma2_a(K)
    a1p = lemma2_a_prime(K)
    a3 = lemma3_a3(K)
    a3p = lemma4_a_prime3(K)
    lhs = den * (a3p * a1 * a1 - a3 * a1p * a1p)
    rhs = a1 * a1 * a1p * a1p * (den - num)
    return lhs, rhs


def case4l_sides(l: int) -> tuple[int, int]:
    """The denominator-free identity at K = 4l (the index-divisible-by-4 family).

    Returns (left side, right side); here den = F_{2l+1}^2 L_{2l+2} L_{2l-1}
    and num = 1.
    """
    if l < 1:
        raise ValueError(f"index must be >= 1, got {l}")
    return theorem1_identity_sides(4 * l)
