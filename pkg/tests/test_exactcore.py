from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from apsum.exactcore import PolyQ, parse_rat, poly_eval, poly_is_integral, rat_denominator, render_rat

rats = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)
polys = st.lists(rats, max_size=6).map(PolyQ)


@pytest.mark.parametrize(
    "q, expected",
    [(Fraction(1, 6), 6), (Fraction(-691, 2730), 2730), (5, 1), (Fraction(4, -6), 3)],
)
def test_rat_denominator(q, expected):
    assert rat_denominator(q) == expected


@given(rats)
def test_denominator_is_minimal(q):
    d = rat_denominator(q)
    assert (d * q).denominator == 1
    assert all((e * q).denominator != 1 for e in range(1, d))


@given(rats, rats)
def test_rat_arithmetic_exact(a, b):
    assert (a + b) - b == a
    if b:
        assert (a * b) / b == a
    s = a + b
    assert s.denominator >= 1


def test_poly_eval_examples():
    assert poly_eval([0, 0, -1, 0, 2], 2) == 28
    assert poly_eval([0, Fraction(-1, 2), Fraction(1, 2)], 3) == 3
    assert poly_eval([Fraction(7, 3), 1, 1], 0) == Fraction(7, 3)
    assert poly_eval([], 5) == 0


@given(polys, polys, st.integers(-20, 20))
def test_eval_is_ring_homomorphism(p, q, x):
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)
    assert (p - q)(x) == p(x) - q(x)


def test_poly_is_integral():
    assert poly_is_integral([0, 0, -1, 0, 2])
    assert not poly_is_integral([0, Fraction(47, 3), 8, Fraction(4, 3)])
    assert poly_is_integral([])


def test_zero_polynomial_is_empty():
    z = PolyQ([0, 0, 0])
    assert z.coeffs == ()
    assert z.degree == -1
    assert z == PolyQ()
    assert PolyQ([1, 2, 0]) == PolyQ([1, 2])


@pytest.mark.parametrize(
    "coeffs, text",
    [
        ([0, 0, -1, 0, 2], "2*l^4 - l^2"),
        ([0, Fraction(-1, 2), Fraction(1, 2)], "1/2*l^2 - 1/2*l"),
        ([Fraction(-3, 4), 1], "l - 3/4"),
        ([5, 0, -1], "-l^2 + 5"),
        ([], "0"),
    ],
)
def test_render(coeffs, text):
    assert PolyQ(coeffs).render() == text


def test_render_rat_and_parse():
    assert render_rat(Fraction(-691, 2730)) == "-691/2730"
    assert render_rat(Fraction(6, 3)) == "2"
    assert parse_rat("-691/2730") == Fraction(-691, 2730)
    with pytest.raises(ValueError):
        parse_rat("0.5")


@given(rats)
def test_render_roundtrip(q):
    assert parse_rat(render_rat(q)) == q
