import pytest
from hypothesis import given
from hypothesis import strategies as st

from phk.symbolic import SymPoly, natural_key, sym
from phk.textfmt import ParseError

names = st.sampled_from(["t0", "t1", "t2", "t10", "T", "y1", "x2"])


@st.composite
def sympolys(draw):
    terms = {}
    for _ in range(draw(st.integers(0, 4))):
        mono = tuple(draw(st.dictionaries(names, st.integers(-2, 3), max_size=3)).items())
        terms[mono] = draw(st.integers(-4, 4))
    return SymPoly(terms)


def test_natural_order():
    assert sorted(["t10", "t2", "t1"], key=natural_key) == ["t1", "t2", "t10"]


def test_render():
    p = sym("t0") + sym("t1") + sym("t0") ** 2 * sym("t1")
    assert str(p) == "t0 + t1 + t0^2*t1"
    assert str(SymPoly()) == "0"
    assert str(3 * sym("T") ** -1 - 1) == "3*T^-1 - 1"


@given(sympolys())
def test_parse_round_trip(p):
    assert SymPoly.parse(str(p)) == p
    assert str(SymPoly.parse(str(p))) == str(p)


@given(sympolys(), sympolys(), sympolys())
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a


def test_subs_and_evaluate():
    p = SymPoly.parse("t0^2*t1 + t2")
    assert p.subs({"t0": 1}) == SymPoly.parse("t1 + t2")
    assert p.evaluate({"t0": 2, "t1": 3, "t2": 5}) == 17


def test_parse_errors():
    with pytest.raises(ParseError):
        SymPoly.parse("t0 +")
    with pytest.raises(ParseError):
        SymPoly.parse("(t0")
