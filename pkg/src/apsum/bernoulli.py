"""Bernoulli numbers and polynomials (B_1 = -1/2), plus von Staudt-Clausen denominators."""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, isqrt

from apsum.exactcore import PolyQ, Scalar

__all__ = [
    "BernoulliCache",
    "bernoulli_number",
    "bernoulli_polynomial",
    "bernoulli_poly_at",
    "von_staudt_denominator",
    "von_staudt_primes",
    "is_prime",
    "prime_divisors",
    "rad",
]


class BernoulliCache:
    """Grows B_0, B_1, ... from ``sum_{j<=k} C(k+1, j) B_j = 0``.

    Readers always see a complete prefix; extension happens under a lock.
    """

    def __init__(self) -> None:
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    def get(self, k: int) -> Fraction:
        if k < 0:
            raise ValueError(f"index must be nonnegative, got {k}")
        if k >= len(self._values):
            with self._lock:
                vals = self._values
                while len(vals) <= k:
                    i = len(vals)
                    s = sum(comb(i + 1, j) * vals[j] for j in range(i))
                    vals.append(-s / (i + 1))
        return self._values[k]

    def prefix(self, k: int) -> list[Fraction]:
        self.get(k)
        return self._values[: k + 1]


_BERNOULLI = BernoulliCache()


def bernoulli_number(k: int) -> Fraction:
    return _BERNOULLI.get(k)


def bernoulli_polynomial(k: int) -> PolyQ:
    """``B_k(x) = sum_j C(k, j) B_j x**(k-j)``, returned lowest degree first."""
    bs = _BERNOULLI.prefix(k)
    return PolyQ(comb(k, j) * bs[j] for j in range(k, -1, -1))


def bernoulli_poly_at(k: int, x: Scalar) -> Fraction:
    return bernoulli_polynomial(k)(Fraction(x))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def rad(n: int) -> int:
    """Product of the distinct primes dividing ``n``; ``rad(1) == 1``."""
    out = 1
    for p in prime_divisors(n):
        out *= p
    return out


def von_staudt_primes(k: int) -> list[int]:
    if k < 2 or k % 2:
        raise ValueError(f"k must be a positive even integer, got {k}")
    # (p - 1) | k forces p <= k + 1
    return [d + 1 for d in range(1, k + 1) if k % d == 0 and is_prime(d + 1)]


def von_staudt_denominator(k: int) -> int:
    """Denominator of B_k for even k >= 2, as the product of primes p with (p-1) | k."""
    out = 1
    for p in von_staudt_primes(k):
        out *= p
    return out
