import pytest
from fractions import Fraction

from hypothesis import strategies as st

from phk.exactalg import LaurentT, RatFuncT
from phk.polyring import MultiPoly

small_int = st.integers(min_value=-4, max_value=4)


@st.composite
def laurents(draw, max_terms=4, lo=-3, hi=3):
    terms = draw(st.dictionaries(st.integers(lo, hi), small_int, max_size=max_terms))
    return LaurentT(terms)


@st.composite
def ratfuncs(draw):
    num = draw(laurents())
    den = draw(laurents().filter(lambda d: not d.is_zero()))
    return RatFuncT(num, den)


@st.composite
def multipolys(draw, n=None, max_terms=4, max_deg=3):
    if n is None:
        n = draw(st.integers(2, 5))
    exps = st.tuples(*[st.integers(0, max_deg)] * n)
    coeff = st.builds(lambda k, c: LaurentT({k: c}), st.integers(-1, 1), st.integers(-3, 3).filter(bool))
    return MultiPoly(n, draw(st.dictionaries(exps, coeff, max_size=max_terms)))


def rationals():
    return st.fractions(min_value=Fraction(-5), max_value=Fraction(5), max_denominator=7)


# acceptance reporting: one PASS/FAIL line per criterion in the terminal summary

_CRITERIA: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): an acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    title = getattr(report, "criterion", None)
    if title is not None:
        _CRITERIA[title] = (report.outcome.upper() if report.outcome != "passed" else "PASS", report.duration)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        rep.criterion = mark.args


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), (outcome, secs) in sorted(_CRITERIA.items()):
        word = "PASS" if outcome == "PASS" else "FAIL"
        terminalreporter.write_line(f"{word}  criterion {number:2d}  {title} ({secs:.1f}s)")
    passed = sum(o == "PASS" for o, _ in _CRITERIA.values())
    terminalreporter.write_line(f"{passed}/{len(_CRITERIA)} acceptance criteria passed")
