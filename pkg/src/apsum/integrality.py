"""When does the power-sum polynomial have integer coefficients?

Two sides are computed by separate code paths: :func:`is_integral_poly`
inspects the actual coefficients, :func:`theorem2_predicate` only tests
``F(n) | m``. :func:`verify_theorem2_grid` compares them over a box of
parameters.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Sequence

from apsum.bernoulli import rad, von_staudt_denominator
from apsum.exactcore import PolyQ
from apsum.powersum import ProgressionParams, coeffs_theorem1
from apsum.triangles import binomial

__all__ = [
    "IntegralityReport",
    "f_val",
    "F_val",
    "is_integral_poly",
    "theorem2_predicate",
    "make_report",
    "verify_theorem2_grid",
    "disagreements",
    "REPORT_FIELDS",
    "reports_to_csv",
    "reports_to_json",
]

REPORT_FIELDS = ("m", "r", "n", "coefficients", "is_integral", "F", "predicate", "agrees")


def f_val(n: int, j: int) -> int:
    """lcm over ``i = j..n`` of ``L_j / gcd(L_j, C(n+1, i) C(i, j))``, L_j the denominator of B_j."""
    if j < 2 or j % 2 or j > n:
        raise ValueError(f"need even j with 2 <= j <= n, got n={n}, j={j}")
    lam = von_staudt_denominator(j)
    return lcm(*(lam // gcd(lam, binomial(n + 1, i) * binomial(i, j)) for i in range(j, n + 1)))


@lru_cache(maxsize=None)
def F_val(n: int) -> int:
    """``lcm(rad(n+1), f(n, 2), f(n, 4), ...)`` over even ``j <= n``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    # range stops at n for even n and at n-1 for odd n; empty for n = 1
    return lcm(rad(n + 1), *(f_val(n, j) for j in range(2, n + 1, 2)))


def is_integral_poly(p, r=None, n=None) -> bool:
    if not isinstance(p, ProgressionParams):
        p = ProgressionParams(p, r, n)
    return coeffs_theorem1(p).is_integral()


def theorem2_predicate(m: int, n: int) -> bool:
    if m < 1 or n < 1:
        raise ValueError(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    return m % F_val(n) == 0


@dataclass(frozen=True)
class IntegralityReport:
    params: ProgressionParams
    coeffs: PolyQ
    is_integral: bool
    F_of_n: int
    predicate: bool

    @property
    def agrees(self) -> bool:
        return self.is_integral == self.predicate

    @property
    def coprime(self) -> bool:
        return self.params.coprime

    def as_record(self) -> dict:
        """Exact string encoding: numbers are never emitted as native JSON numbers."""
        p = self.params
        return {
            "m": str(p.m),
            "r": str(p.r),
            "n": str(p.n),
            "coefficients": self.coeffs.coeff_strings(),
            "is_integral": self.is_integral,
            "F": str(self.F_of_n),
            "predicate": self.predicate,
            "agrees": self.agrees,
        }


def make_report(p: ProgressionParams) -> IntegralityReport:
    coeffs = coeffs_theorem1(p)
    return IntegralityReport(
        params=p,
        coeffs=coeffs,
        is_integral=coeffs.is_integral(),
        F_of_n=F_val(p.n),
        predicate=theorem2_predicate(p.m, p.n),
    )


def _grid(max_m: int, max_r: int, max_n: int, coprime_only: bool) -> list[ProgressionParams]:
    return [
        ProgressionParams(m, r, n)
        for n in range(1, max_n + 1)
        for m in range(1, max_m + 1)
        for r in range(0, max_r + 1)
        if not coprime_only or gcd(m, r) == 1
    ]


def verify_theorem2_grid(
    max_m: int,
    max_r: int,
    max_n: int,
    coprime_only: bool = True,
    workers: int = 1,
) -> list[IntegralityReport]:
    """One report per grid point, ordered lexicographically by ``(n, m, r)``.

    Disagreeing points are kept in the output; see :func:`disagreements`.
    """
    if max_m < 1 or max_n < 1 or max_r < 0:
        raise ValueError("grid bounds must satisfy max_m >= 1, max_r >= 0, max_n >= 1")
    grid = _grid(max_m, max_r, max_n, coprime_only)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(make_report, grid, chunksize=16))
    else:
        reports = [make_report(p) for p in grid]
    return sorted(reports, key=lambda rep: (rep.params.n, rep.params.m, rep.params.r))


def disagreements(reports: Iterable[IntegralityReport], coprime_only: bool = True) -> list[IntegralityReport]:
    return [rep for rep in reports if not rep.agrees and (rep.coprime or not coprime_only)]


def reports_to_csv(reports: Sequence[IntegralityReport]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=REPORT_FIELDS, lineterminator="\n")
    writer.writeheader()
    for rep in reports:
        rec = rep.as_record()
        rec["coefficients"] = " ".join(rec["coefficients"])
        rec = {k: str(v).lower() if isinstance(v, bool) else v for k, v in rec.items()}
        writer.writerow(rec)
    return buf.getvalue()


def reports_to_json(reports: Sequence[IntegralityReport]) -> str:
    return json.dumps([rep.as_record() for rep in reports], indent=2)
