from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import laurents, ratfuncs
from phk.exactalg import (TAU, LaurentT, NotTauExpressible, RatFuncT, TauPoly, as_ratfunc, t_number,
                          tau_express, y_value)

t = LaurentT.monomial(1)


@pytest.mark.parametrize("u,text", [(0, "0"), (1, "1"), (2, "t^-1 + t"), (3, "t^-2 + 1 + t^2"), (-2, "-t^-1 - t")])
def test_t_number(u, text):
    assert str(t_number(u)) == text


@given(st.integers(1, 20), st.fractions(min_value=Fraction(1, 7), max_value=Fraction(9, 2), max_denominator=9)
       .filter(lambda x: x not in (0, 1, -1)))
def test_t_number_matches_closed_form(u, x):
    direct = (x ** u - x ** -u) / (x - 1 / x)
    assert t_number(u).evaluate(x) == direct


def test_y_value():
    assert y_value(0).is_zero()
    assert y_value(1) == as_ratfunc(TAU).inverse()
    assert y_value(2) == RatFuncT(-t_number(2), t_number(3))
    with pytest.raises(ZeroDivisionError):
        y_value(-1)


def test_ratfunc_examples():
    one = as_ratfunc(1)
    assert str(one + one) == "2"
    assert as_ratfunc(TAU).inverse() * as_ratfunc(TAU) == one
    s = RatFuncT(t_number(3), t_number(2)) + RatFuncT(t_number(1), t_number(2))
    assert s == RatFuncT(LaurentT({2: 1, 0: 2, -2: 1}), t_number(2))
    assert s.evaluate(Fraction(2)) == Fraction(4 + 2 + Fraction(1, 4)) / Fraction(5, 2)
    with pytest.raises(ZeroDivisionError):
        one / as_ratfunc(0)


def test_canonical_form():
    r = RatFuncT(t ** 3 + t, t ** 2 * (1 + t ** 2))
    assert r == as_ratfunc(t ** -1)
    assert r.den == LaurentT.const(1)
    q = RatFuncT(LaurentT.const(2), LaurentT({1: 4, 3: 2}))
    assert q.den.coeff(0) == 1 and q.den.min_exp == 0


def test_text_round_trip():
    for text in ["t^-1 + 2 + t^3", "-t", "1/2*t^-2 - 3"]:
        assert str(LaurentT.parse(text)) == text
    r = RatFuncT(t + 1, t ** 2 + 3)
    assert RatFuncT.parse(str(r)) == r
    assert str(RatFuncT.parse(str(r))) == str(r)


@settings(max_examples=300)
@given(ratfuncs(), ratfuncs(), ratfuncs())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    if not a.is_zero():
        assert a * a.inverse() == as_ratfunc(1)


@given(laurents(), laurents())
def test_laurent_ring(a, b):
    assert a * b == b * a
    assert (a + b) - b == a


@pytest.mark.parametrize("p,expected", [
    (LaurentT.const(1), "1"),
    (t + t ** -1, "-T"),
    (t ** 3 + 3 * t + 3 * t ** -1 + t ** -3, "-T^3"),
])
def test_tau_express(p, expected):
    assert str(tau_express(p)) == expected


def test_tau_express_rejects_asymmetric():
    with pytest.raises(NotTauExpressible):
        tau_express(t)


@given(st.dictionaries(st.integers(-4, 10), st.integers(-5, 5), max_size=5))
def test_tau_round_trip(coeffs):
    tp = TauPoly(coeffs)
    assert tau_express(tp.to_ratfunc()) == tp


def test_tau_text():
    tp = TauPoly({-1: 3, 1: 3, 3: 1})
    assert str(tp) == "3*T^-1 + 3*T + T^3"
    assert TauPoly.parse(str(tp)) == tp
