import random
from fractions import Fraction

import pytest

from charvar.scalars import DualScalar, Scalar, format_scalar, parse_scalar

from conftest import random_scalar

S = Scalar.of


def test_basic_arithmetic():
    a = S(Fraction(1, 2), Fraction(1, 3))
    b = S(Fraction(-1, 4), 2)
    assert a + b == S(Fraction(1, 4), Fraction(7, 3))
    assert a - b == S(Fraction(3, 4), Fraction(-5, 3))
    assert -a == S(Fraction(-1, 2), Fraction(-1, 3))
    assert a * S(1) == a
    assert S(0, 1) * S(0, 1) == S(-1)


def test_division_and_conjugate():
    a = S(3, 4)
    assert a * a.conjugate() == S(25)
    assert (a / a) == S(1)
    assert (S(1) / S(0, 1)) == S(0, -1)
    with pytest.raises(ZeroDivisionError):
        S(1) / S(0)


def test_exactness_against_integer_arithmetic():
    # (a/b + c/d) recomputed with raw integer arithmetic must agree.
    rng = random.Random(7)
    for _ in range(200):
        a, c = rng.randint(-50, 50), rng.randint(-50, 50)
        b, d = rng.randint(1, 30), rng.randint(1, 30)
        got = S(Fraction(a, b)) + S(Fraction(c, d))
        assert got == S(Fraction(a * d + c * b, b * d))


def test_product_matches_textbook_formula():
    rng = random.Random(11)
    for _ in range(100):
        x, y = random_scalar(rng), random_scalar(rng)
        prod = x * y
        assert prod.re == x.re * y.re - x.im * y.im
        assert prod.im == x.re * y.im + x.im * y.re


@pytest.mark.parametrize("text,expected", [
    ("3", S(3)),
    ("-7/2", S(Fraction(-7, 2))),
    ("2*i", S(0, 2)),
    ("-3/4*i", S(0, Fraction(-3, 4))),
    ("1/2+3/4*i", S(Fraction(1, 2), Fraction(3, 4))),
    ("1/2-3/4*i", S(Fraction(1, 2), Fraction(-3, 4))),
    ("-2+1*i", S(-2, 1)),
])
def test_parse_scalar(text, expected):
    assert parse_scalar(text) == expected


@pytest.mark.parametrize("bad", ["", "i", "1+i", "2x", "1/2+", "1//2", "3/0*iq"])
def test_parse_scalar_rejects(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


def test_format_round_trip():
    rng = random.Random(13)
    for _ in range(150):
        x = random_scalar(rng)
        assert parse_scalar(format_scalar(x)) == x


def test_dual_scalar_kills_eps_squared():
    rng = random.Random(17)
    for _ in range(100):
        a, b = random_scalar(rng), random_scalar(rng)
        c, d = random_scalar(rng), random_scalar(rng)
        prod = DualScalar(a, b) * DualScalar(c, d)
        assert prod.value == a * c
        assert prod.eps == a * d + b * c
