from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from witt_postlie.errors import MissingParameterError, ParseError
from witt_postlie.exact_arith import ONE, ZERO, Poly, add, evaluate, format_rational, is_zero, mul, parse_rational

a, b, mu = Poly.var("a"), Poly.var("b"), Poly.var("mu")

rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 12))


@st.composite
def polys(draw):
    out = Poly()
    for _ in range(draw(st.integers(0, 4))):
        c = draw(rationals)
        term = Poly.const(c)
        for v in draw(st.lists(st.sampled_from([a, b, mu]), max_size=3)):
            term = term * v
        out = out + term
    return out


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + ZERO == p and p * ONE == p
    assert (p - p).is_zero()


@given(polys(), rationals, rationals, rationals)
def test_evaluate_is_a_ring_map(p, x, y, z):
    env = {"a": x, "b": y, "mu": z}
    q = p * p + p
    assert q.evaluate(env) == p.evaluate(env) ** 2 + p.evaluate(env)


@given(polys())
def test_text_round_trip(p):
    assert Poly.parse(str(p)) == p
    assert str(Poly.parse(str(p))) == str(p)


def test_canonical_text():
    assert str(a * b - 3 * a * a + Fraction(1, 2)) == "-3*a^2 + a*b + 1/2"
    assert str(ZERO) == "0"
    assert str(-2 * b) == "-2*b"
    assert str(Poly.parse("2*a^2 - 1/3*b + 1")) == "2*a^2 - 1/3*b + 1"


def test_coefficients_stay_fractions():
    p = Poly.const(3) * Fraction(1, 3)
    assert p.constant_value() == 1
    assert isinstance(p.constant_value(), Fraction)
    assert (a * 0).is_zero()


def test_subs_and_evaluate():
    p = a * a - 2 * b
    assert p.subs({"a": 3}) == 9 - 2 * b
    assert p.evaluate({"a": 1, "b": Fraction(1, 2)}) == 0
    with pytest.raises(MissingParameterError):
        p.evaluate({"a": 1})


def test_functional_forms():
    assert add(a, 1) == a + 1
    assert mul(a, b) == a * b
    assert evaluate(a * 2, {"a": 3}) == 6
    assert is_zero(a - a)


@pytest.mark.parametrize("text", ["1/0", "x", "a^", "", "2 3", "1 +"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        Poly.parse(text)


def test_parse_rational():
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(4, 2)) == "2"
    for bad in ("1/0", "abc", "1.5"):
        with pytest.raises(ParseError):
            parse_rational(bad)
