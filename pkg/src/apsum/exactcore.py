"""Exact rationals and dense univariate polynomials over them.

Rationals are :class:`fractions.Fraction`, which already keeps the sign in the
numerator and the pair reduced. :class:`PolyQ` stores coefficients lowest
degree first; the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rat = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "Rat",
    "PolyQ",
    "rat_denominator",
    "render_rat",
    "parse_rat",
    "poly_eval",
    "poly_is_integral",
]


def rat_denominator(q: Scalar) -> int:
    """Smallest positive d such that d*q is an integer."""
    return Fraction(q).denominator


def render_rat(q: Scalar) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rat(text: str) -> Fraction:
    text = text.strip()
    if any(c in text for c in ".eE"):
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text)


def _strip(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class PolyQ:
    """Polynomial in one variable with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of ``l**i``. Trailing zeros are stripped
    on construction, so two polynomials are equal iff their tuples are.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1) -> "PolyQ":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "PolyQ | Scalar") -> "PolyQ":
        other = _as_poly(other)
        n = max(len(self), len(other))
        return PolyQ(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "PolyQ":
        return PolyQ(-c for c in self.coeffs)

    def __sub__(self, other: "PolyQ | Scalar") -> "PolyQ":
        return self + (-_as_poly(other))

    def __rsub__(self, other: Scalar) -> "PolyQ":
        return _as_poly(other) - self

    def __mul__(self, other: "PolyQ | Scalar") -> "PolyQ":
        if isinstance(other, (int, Fraction)):
            return PolyQ(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return PolyQ()
        out = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "PolyQ":
        return self * (1 / Fraction(other))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def coeff_strings(self) -> list[str]:
        """Coefficients as exact strings, lowest degree first."""
        return [render_rat(c) for c in self.coeffs]

    def render(self, var: str = "l") -> str:
        """Human-readable form, highest degree first, e.g. ``2*l^4 - l^2``."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = render_rat(mag)
            else:
                power = var if i == 1 else f"{var}^{i}"
                body = power if mag == 1 else f"{render_rat(mag)}*{power}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()


def _as_poly(x: "PolyQ | Scalar") -> PolyQ:
    return x if isinstance(x, PolyQ) else PolyQ([x])


def poly_eval(p: PolyQ | Sequence[Scalar], x: Scalar) -> Fraction:
    if not isinstance(p, PolyQ):
        p = PolyQ(p)
    return p(x)


def poly_is_integral(p: PolyQ | Sequence[Scalar]) -> bool:
    if not isinstance(p, PolyQ):
        p = PolyQ(p)
    return p.is_integral()
