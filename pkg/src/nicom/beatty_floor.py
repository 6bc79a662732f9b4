"""Exact evaluation of the Beatty floors |_ phi*n _| and |_ phi^2*n _|.

No floating point is used anywhere: phi*n = (n + n*sqrt(5))/2, and since
phi*n is irrational for n >= 1,

    floor(phi * n) = (n + isqrt(5 * n^2)) // 2

is exact at every size.  floor(phi^2 * n) follows from phi^2 = phi + 1,
which gives floor(phi^2 * n) = n + floor(phi * n).
"""

from __future__ import annotations

import math


def isqrt(n: int) -> int:
    """Integer square root: the unique r with r^2 <= n < (r+1)^2."""
    if n < 0:
        raise ValueError(f"isqrt: input must be nonnegative, got {n}")
    return math.isqrt(n)


def floor_phi(n: int) -> int:
    """floor(phi * n) for n >= 1, where phi = (1 + sqrt(5)) / 2."""
    if n < 1:
        raise ValueError(f"floor_phi: index must be positive, got {n}")
    return (n + isqrt(5 * n * n)) // 2


def floor_phi2(n: int) -> int:
    """floor(phi^2 * n) for n >= 1, via floor(phi^2*n) = n + floor(phi*n)."""
    if n < 1:
        raise ValueError(f"floor_phi2: index must be positive, got {n}")
    return n + floor_phi(n)


def epsilon(k: int) -> int:
    """The parity indicator (1 + (-1)^k) / 2: 1 for even k, 0 for odd k."""
    return 1 - (k & 1)
