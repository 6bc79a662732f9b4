"""The moment sums A(k, s, j) = sum_{n=1}^{F_k - 1} n^j * floor(phi*n)^s.

Two engines are provided:

* ``a_brute`` evaluates the defining sum term by term (guarded, since the
  range F_k - 1 grows exponentially in k);
* ``a_recursive`` uses the reduction of A(k+1, s, j) to values at k and
  k-1, which makes indices like k = 1000 (where the sum has ~10^208
  terms) computable in well under a second.

``a_prime`` gives A'(k, s) = sum floor(phi^2*n)^s through the binomial
expansion of (n + floor(phi*n))^s over the A(k, *, *) grid.
"""

from __future__ import annotations

import os
from math import comb
from typing import NamedTuple

from .beatty_floor import epsilon, floor_phi, floor_phi2
from .fib_lucas import fib

DEFAULT_BRUTE_GUARD = 10**6
GUARD_ENV_VAR = "NICOM_BRUTE_GUARD"


class BruteForceGuardError(Exception):
    """Raised when a literal summation would exceed the term guard."""


def brute_guard() -> int:
    """Current term guard for brute-force sums (env override allowed)."""
    raw = os.environ.get(GUARD_ENV_VAR)
    if raw is None:
        return DEFAULT_BRUTE_GUARD
    return int(raw)


class MomentKey(NamedTuple):
    k: int
    s: int
    j: int


def _validate(k: int, s: int, j: int) -> None:
    if k < 1:
        raise ValueError(f"moment index k must be >= 1, got {k}")
    if s < 0 or j < 0:
        raise ValueError(f"moment powers must be nonnegative, got s={s}, j={j}")


class MomentTable:
    """Memoized recursive engine for A(k, s, j).

    The table fills iteratively in k; a target (K, S, J) materializes every
    cell with k <= K and s + j <= S + J, so the cache stays polynomial in
    the target indices.  Not internally synchronized: confine an instance
    to one thread.
    """

    def __init__(self) -> None:
        self._cache: dict[tuple[int, int, int], int] = {}

    def __len__(self) -> int:
        return len(self._cache)

    def a(self, k: int, s: int, j: int) -> int:
        _validate(k, s, j)
        if k <= 2:
            return 0  # empty sums: F_1 - 1 = F_2 - 1 = 0
        key = (k, s, j)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        self._fill(k, s + j)
        return self._cache[key]

    def _fill(self, k_max: int, total_max: int) -> None:
        cache = self._cache
        pairs = [
            (s, j)
            for total in range(total_max + 1)
            for s in range(total + 1)
            for j in (total - s,)
        ]
        f_prev, f_cur = 1, 2  # F_2, F_3
        for k in range(3, k_max + 1):
            # step from k-1: A(k,s,j) uses F_{k-1}, F_k and eps_{k-1}
            fm1, fk = f_prev, f_cur
            eps = epsilon(k - 1)
            fm1_pow = [1]
            fk_pow = [1]
            for _ in range(total_max):
                fm1_pow.append(fm1_pow[-1] * fm1)
                fk_pow.append(fk_pow[-1] * fk)
            for s, j in pairs:
                if (k, s, j) in cache:
                    continue
                prev = cache.get((k - 1, s, j), 0)
                boundary = 0
                for i in range(s + 1):
                    # (-eps)^(s-i), with 0^0 = 1 when i = s
                    if eps == 0:
                        coef = 1 if i == s else 0
                    else:
                        coef = -1 if (s - i) & 1 else 1
                    if coef:
                        boundary += coef * comb(s, i) * fm1_pow[j] * fk_pow[i]
                tail = 0
                if k >= 4:
                    for l in range(j + 1):
                        cjl = comb(j, l) * fm1_pow[l]
                        for i in range(s + 1):
                            sub = cache.get((k - 2, s - i, j - l), 0)
                            if sub:
                                tail += cjl * comb(s, i) * fk_pow[i] * sub
                cache[(k, s, j)] = prev + boundary + tail
            f_prev, f_cur = f_cur, f_prev + f_cur


def a_brute(key: MomentKey, guard: int | None = None) -> int:
    """A(k, s, j) by literal summation over n = 1 .. F_k - 1."""
    k, s, j = key
    _validate(k, s, j)
    limit = brute_guard() if guard is None else guard
    terms = fib(k) - 1
    if terms > limit:
        raise BruteForceGuardError(
            f"A({k},{s},{j}) has {terms} terms, too large for brute force "
            f"(guard {limit}; raise {GUARD_ENV_VAR} to override)"
        )
    return sum(n**j * floor_phi(n) ** s for n in range(1, terms + 1))


def a_prime_brute(k: int, s: int, guard: int | None = None) -> int:
    """A'(k, s) by literal summation of floor(phi^2 * n)^s."""
    _validate(k, s, 0)
    limit = brute_guard() if guard is None else guard
    terms = fib(k) - 1
    if terms > limit:
        raise BruteForceGuardError(
            f"A'({k},{s}) has {terms} terms, too large for brute force "
            f"(guard {limit}; raise {GUARD_ENV_VAR} to override)"
        )
    return sum(floor_phi2(n) ** s for n in range(1, terms + 1))


def a_recursive(key: MomentKey, table: MomentTable) -> int:
    """A(k, s, j) by the two-step reduction, memoized into ``table``."""
    return table.a(*key)


def a_prime(k: int, s: int, table: MomentTable) -> int:
    """A'(k, s) = sum_i binom(s, i) * A(k, s - i, i)."""
    _validate(k, s, 0)
    return sum(comb(s, i) * table.a(k, s - i, i) for i in range(s + 1))


def order_bound(s: int, j: int) -> int:
    """Upper bound 4(s + j) + 6 on the linear-recurrence order of A(., s, j)."""
    if s < 0 or j < 0:
        raise ValueError(f"moment powers must be nonnegative, got s={s}, j={j}")
    return 4 * (s + j) + 6
