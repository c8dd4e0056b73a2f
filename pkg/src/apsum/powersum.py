"""Coefficients of ``S(l) = r**n + (m + r)**n + ... + ((l - 1)*m + r)**n`` as a polynomial in ``l``.

Three independent routes are provided:

* :func:`coeffs_theorem1` -- r-Whitney numbers times signed Stirling-1 numbers,
* :func:`coeffs_bernoulli` -- ``m**n/(n+1) * sum_k C(n+1, k) B_k(r/m) l**(n+1-k)``,
* :func:`classical_coeffs` -- the ``m = 1, r = 0`` case through Stirling-2 numbers,

and :func:`brute_force_sum` is the direct summation every route is checked against.
With ``m = 0`` the sum degenerates to ``r**n * l``; the routes here reject it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from apsum.bernoulli import bernoulli_poly_at
from apsum.exactcore import PolyQ
from apsum.triangles import stirling1_row, stirling2_row, whitney_row

__all__ = [
    "ProgressionParams",
    "brute_force_sum",
    "falling_factorial_poly",
    "falling_factorial_sum_poly",
    "coeffs_theorem1",
    "coeffs_bernoulli",
    "classical_coeffs",
    "sufficient_condition",
]


@dataclass(frozen=True, order=True)
class ProgressionParams:
    m: int
    r: int
    n: int

    def __post_init__(self):
        for name in ("m", "r", "n"):
            if not isinstance(getattr(self, name), int):
                raise TypeError(f"{name} must be an int")
        if self.n < 1:
            raise ValueError(f"exponent n must be >= 1, got {self.n}")

    @property
    def coprime(self) -> bool:
        return gcd(self.m, self.r) == 1

    def check_whitney_range(self) -> None:
        if self.m < 1 or self.r < 0:
            raise ValueError(f"need m >= 1 and r >= 0, got m={self.m}, r={self.r}")


def _params(p, r=None, n=None) -> ProgressionParams:
    if isinstance(p, ProgressionParams):
        return p
    if r is None and n is None:
        return ProgressionParams(*p)
    return ProgressionParams(p, r, n)


def brute_force_sum(p: ProgressionParams, ell: int) -> int:
    p = _params(p)
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    return sum((p.m * x + p.r) ** p.n for x in range(ell))


def falling_factorial_poly(k: int) -> PolyQ:
    """``l (l - 1) ... (l - k + 1)`` expanded through signed Stirling-1 numbers."""
    return PolyQ(stirling1_row(k))


def falling_factorial_sum_poly(k: int) -> PolyQ:
    """``sum_{x=0}^{l-1} x_(k)`` as a polynomial in ``l``, equal to ``l_(k+1)/(k+1)``.

    No extra Kronecker-delta term at ``k = 0``: ``l_(1)/1 = l`` already counts
    the ``l`` ones.
    """
    return falling_factorial_poly(k + 1) / (k + 1)


def coeffs_theorem1(p, r=None, n=None) -> PolyQ:
    """Coefficient of ``l**i`` is ``sum_k m**k W_{m,r}(n, k) s(k+1, i) / (k+1)``."""
    p = _params(p, r, n)
    p.check_whitney_range()
    m, n = p.m, p.n
    w = whitney_row(m, p.r, n)
    out = [Fraction(0)] * (n + 2)
    for k in range(n + 1):
        if w[k] == 0:
            continue
        weight = Fraction(m**k * w[k], k + 1)
        for i, s in enumerate(stirling1_row(k + 1)):
            if s:
                out[i] += weight * s
    return PolyQ(out)


def coeffs_bernoulli(p, r=None, n=None) -> PolyQ:
    """Bernoulli-polynomial route, evaluated at the exact point ``r/m``."""
    p = _params(p, r, n)
    if p.m == 0:
        raise ValueError("m must be nonzero")
    if p.m < 0:
        raise ValueError(f"need m >= 1, got m={p.m}")
    m, n = p.m, p.n
    x = Fraction(p.r, m)
    scale = Fraction(m**n, n + 1)
    out = [Fraction(0)] * (n + 2)
    for k in range(n + 1):
        out[n + 1 - k] = scale * comb(n + 1, k) * bernoulli_poly_at(k, x)
    return PolyQ(out)


def classical_coeffs(n: int) -> PolyQ:
    """``0**n + 1**n + ... + (l - 1)**n`` via ``sum_k S2(n, k) s(k+1, i) / (k+1)``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    s2 = stirling2_row(n)
    out = [Fraction(0)] * (n + 2)
    for k in range(n + 1):
        for i, s in enumerate(stirling1_row(k + 1)):
            out[i] += Fraction(s2[k] * s, k + 1)
    return PolyQ(out)


def sufficient_condition(p, r=None, n=None) -> bool:
    """True when ``(k+1) | m**k W_{m,r}(n, k)`` for every ``k = 1..n``."""
    p = _params(p, r, n)
    p.check_whitney_range()
    w = whitney_row(p.m, p.r, p.n)
    return all((p.m**k * w[k]) % (k + 1) == 0 for k in range(1, p.n + 1))
