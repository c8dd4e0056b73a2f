"""Integer number triangles: signed Stirling-1, Stirling-2 and r-Whitney rows.

Rows are built on demand from their recurrences and memoized per
``(kind, m, r)`` key. Whitney triangles accept any integer ``m``, ``r``; the
power-sum formulas only use ``m >= 1, r >= 0`` but the recurrence and the
connection formula ``(m*x + r)**n == sum_k m**k W(n, k) x_(k)`` hold for all.
"""

from __future__ import annotations

import enum
import math
import threading
from typing import Callable

__all__ = [
    "Kind",
    "Triangle",
    "get_triangle",
    "stirling1_row",
    "stirling2_row",
    "whitney_row",
    "falling_factorial",
    "binomial",
    "format_rows",
]


class Kind(enum.Enum):
    STIRLING1_SIGNED = "stirling1"
    STIRLING2 = "stirling2"
    WHITNEY = "whitney"


Row = tuple[int, ...]


class Triangle:
    """Lower-triangular table ``rows[n][k]``, ``0 <= k <= n``, grown lazily."""

    def __init__(self, kind: Kind, m: int = 1, r: int = 0):
        self.kind = kind
        self.m = m
        self.r = r
        self._rows: list[Row] = [(1,)]
        self._lock = threading.Lock()
        self._step = self._stepper()

    def _stepper(self) -> Callable[[Row, int], Row]:
        # each stepper maps row n-1 to row n
        if self.kind is Kind.STIRLING1_SIGNED:
            # s(n, k) = s(n-1, k-1) - (n-1) s(n-1, k)
            def step(prev: Row, n: int) -> Row:
                return tuple(
                    (prev[k - 1] if k > 0 else 0) - (n - 1) * (prev[k] if k < n else 0)
                    for k in range(n + 1)
                )
        else:
            m, r = (1, 0) if self.kind is Kind.STIRLING2 else (self.m, self.r)

            # W(n, k) = W(n-1, k-1) + (k*m + r) W(n-1, k)
            def step(prev: Row, n: int) -> Row:
                return tuple(
                    (prev[k - 1] if k > 0 else 0) + (k * m + r) * (prev[k] if k < n else 0)
                    for k in range(n + 1)
                )
        return step

    def row(self, n: int) -> Row:
        if n < 0:
            raise ValueError(f"row index must be nonnegative, got {n}")
        if n < len(self._rows):
            return self._rows[n]
        with self._lock:
            while len(self._rows) <= n:
                k = len(self._rows)
                self._rows.append(self._step(self._rows[-1], k))
        return self._rows[n]

    def rows(self, n: int) -> list[Row]:
        self.row(n)
        return self._rows[: n + 1]

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        if k < 0 or k > n:
            return 0
        return self.row(n)[k]

    def __repr__(self) -> str:
        extra = f", m={self.m}, r={self.r}" if self.kind is Kind.WHITNEY else ""
        return f"Triangle({self.kind.name}{extra}, rows={len(self._rows)})"


_cache: dict[tuple[Kind, int, int], Triangle] = {}
_cache_lock = threading.Lock()


def get_triangle(kind: Kind, m: int = 1, r: int = 0) -> Triangle:
    key = (kind, m, r) if kind is Kind.WHITNEY else (kind, 1, 0)
    tri = _cache.get(key)
    if tri is None:
        with _cache_lock:
            tri = _cache.setdefault(key, Triangle(kind, *key[1:]))
    return tri


def stirling1_row(n: int) -> list[int]:
    """Signed Stirling numbers of the first kind: ``x_(n) = sum_i s(n, i) x**i``."""
    return list(get_triangle(Kind.STIRLING1_SIGNED).row(n))


def stirling2_row(n: int) -> list[int]:
    return list(get_triangle(Kind.STIRLING2).row(n))


def whitney_row(m: int, r: int, n: int) -> list[int]:
    """r-Whitney numbers of the second kind ``W_{m,r}(n, 0..n)``."""
    return list(get_triangle(Kind.WHITNEY, m, r).row(n))


def falling_factorial(x: int, k: int) -> int:
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = 1
    for i in range(k):
        out *= x - i
    return out


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def format_rows(rows) -> str:
    """One row per line, entries space-separated."""
    return "\n".join(" ".join(str(v) for v in row) for row in rows)
