import pytest

from phk.bases import (BasisElement, delta_delta, kl_decompose, kl_element, kl_polynomial,
                       macdonald_element, macdonald_polynomial, vanishing_point, vanishing_report)
from phk.exactalg import LaurentT, as_ratfunc
from phk.polyring import MultiPoly, OperatorError, act_sequence, evaluate, t_vandermonde
from phk.shapes import Partition, parse_word, partition_from_word, staircase, sub_partitions

t = LaurentT.monomial(1)


def P(*parts):
    return Partition(parts)


def test_delta_delta_small():
    assert delta_delta(1) == MultiPoly.const(1, 2)
    assert delta_delta(2) == t_vandermonde([1, 2], 4) * t_vandermonde([3, 4], 4)


@pytest.mark.parametrize("word,product", [
    ("111000", []),
    ("110100", [(3, 1)]),
    ("101100", [(2, 1), (3, 2)]),
    ("110010", [(4, 1), (3, 2)]),
    ("101010", [(2, 1), (4, 1), (3, 2)]),
])
def test_kl_n3_products(word, product):
    assert kl_polynomial(parse_word(word), 3) == act_sequence(product, delta_delta(3))


def test_kl_accepts_shapes_and_words():
    assert kl_polynomial(P(1, 1), 3) == kl_polynomial("101100", 3)


@pytest.mark.parametrize("u", [(1, 1), (2, 3), (0, 2)])
def test_macdonald_products(u):
    u1, u2 = u
    dd = delta_delta(3)
    assert macdonald_polynomial(P(2, 1), 3, u) == act_sequence([(2, u1 + 1), (4, u2 + 1), (3, u2 + 2)], dd)
    assert macdonald_polynomial(P(1, 1), 3, u) == act_sequence([(2, u1 + 1), (3, u2 + 2)], dd)


def test_undeformed_macdonald_n3():
    dd = delta_delta(3)
    expected = {
        P(): [],
        P(1): [(3, 3)],
        P(1, 1): [(2, 2), (3, 3)],
        P(2): [(4, 2), (3, 3)],
        P(2, 1): [(2, 2), (4, 2), (3, 3)],
    }
    for lam, prod in expected.items():
        assert macdonald_polynomial(lam, 3) == act_sequence(prod, dd)


def _strict(lam):
    return all(lam.row(i) > lam.row(i + 1) for i in range(1, len(lam)))


@pytest.mark.parametrize("n", [3, 4])
def test_macdonald_reduces_to_kl_for_strict_shapes(n):
    checked = 0
    for lam in sub_partitions(staircase(n)):
        if not _strict(lam):
            continue
        # lambda_k is the length of row n-k
        u = tuple(lam.row(n - k) - k for k in range(1, n))
        assert macdonald_polynomial(lam, n, u) == kl_polynomial(lam, n)
        checked += 1
    assert checked >= 4


def test_zero_argument_rejected():
    with pytest.raises(OperatorError):
        macdonald_polynomial(P(1), 3, (1, -2))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_homogeneous_degree(n):
    for lam in sub_partitions(staircase(n)):
        f = kl_polynomial(lam, n)
        assert f.is_homogeneous() and f.degrees() == {n * (n - 1)}


@pytest.mark.parametrize("n", [2, 3])
def test_vanishing(n):
    rep = vanishing_report(n)
    assert rep.ok
    for a, w in enumerate(rep.words):
        for b, w2 in enumerate(rep.words):
            assert rep.values[a][b].is_zero() == (a != b)


def test_vanishing_point_convention():
    pt = vanishing_point(parse_word("1100"))
    assert not evaluate(delta_delta(2), pt).is_zero()


def test_kl_decompose_recovers_combination():
    f = kl_polynomial(P(2), 3) + kl_polynomial(P(), 3).scale(t)
    dec = kl_decompose(f, 3)
    assert dec == {P(2): as_ratfunc(1), P(): as_ratfunc(t)}


def test_basis_element_json():
    el = kl_element(P(1), 3)
    data = el.to_json()
    assert data["kind"] == "KL" and data["n"] == 3 and data["shape"] == "1"
    assert MultiPoly.from_json(data["poly"]) == el.poly
    m = macdonald_element(P(1), 3, (2, 2))
    assert m.to_json()["u"] == [2, 2]
    assert isinstance(m, BasisElement)
