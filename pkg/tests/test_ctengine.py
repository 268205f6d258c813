import pytest

from phk.ctengine import (CapExhausted, a_to_ratfunc, ct_A, ct_N, ct_N_punctured, homogeneous_M,
                          homogeneous_M_ct, macdonald_ct_params)
from phk.bases import homogeneous_prefactor
from phk.exactalg import TauPoly, as_ratfunc, tau_express, y_value
from phk.schubert import schubert_sum_N
from phk.shapes import Partition, staircase, sub_partitions
from phk.symbolic import SymPoly, sym
from phk.tableaux import specialize_weights

T, t = sym("T"), sym("t")
EXSCHU = SymPoly.parse("t0 + t1 + t0^2*t1 + t0^2*t2 + t0*t1^2 + t0*t1*t2 + t1^2*t2")


def brute_A(a, y):
    """Expand the CT1 integrand with plain SymPoly arithmetic and read off the constant term."""
    n = len(a)
    x = [sym(f"x{i + 1}") for i in range(n)]
    ys = [0] + list(y)
    f = SymPoly.const(1)
    for i in range(n):
        f = f * (1 + ys[i] * x[i]) * x[i] ** (1 - a[i])
    for i in range(n):
        for j in range(i + 1, n):
            f = f * (x[j] - x[i]) * (1 + x[i] * x[j] + T * x[j])
    return _ct(f, n)


def _ct(f, n):
    out = SymPoly()
    xs = {f"x{i + 1}" for i in range(n)}
    for mono, c in f.items():
        if not any(name in xs for name, _ in mono):
            out = out + SymPoly({mono: c})
    return out


def test_ct_A_trivial():
    assert ct_A((1,), []) == SymPoly.const(1)


def test_ct_A_evaluation_example():
    assert ct_A((1, 3, 5), [T ** -1, T ** -1]) == SymPoly.parse("3*T^-1 + 3*T + T^3")


@pytest.mark.parametrize("a,y", [
    ((1, 3, 5, 7), (1, 1, 1)),
    ((1, 2, 4), (T, 2)),
    ((1, 3, 5), (sym("y1"), sym("y2"))),
])
def test_ct_A_matches_brute_force(a, y):
    assert ct_A(a, list(y)) == brute_A(a, y)


def test_ct_A_symbolic_default():
    sym_a = ct_A((1, 3, 5))
    assert sym_a.subs({"y1": T ** -1, "y2": T ** -1}) == ct_A((1, 3, 5), [T ** -1, T ** -1])


def test_macdonald_params():
    a, v = macdonald_ct_params(Partition((2, 1)), 3, (1, 1))
    assert a == [1, 3, 5] and v == [1, 1]
    a, v = macdonald_ct_params(Partition((1,)), 3, (1, 1))
    assert a == [1, 2, 4]


def test_homogeneous_M_examples():
    value = homogeneous_M(Partition((2, 1)), 3, (1, 1), normalized=False)
    assert value == homogeneous_prefactor(3) * TauPoly({-1: 3, 1: 3, 3: 1}).to_ratfunc()
    assert homogeneous_M(Partition(), 3, (1, 1), normalized=False) == homogeneous_prefactor(3)
    assert homogeneous_M(Partition(), 3, (1, 1)) == as_ratfunc(1)


@pytest.mark.parametrize("u", [(1, 1), (2, 2), (1, 3)])
@pytest.mark.parametrize("lam", sub_partitions(staircase(3)), ids=str)
def test_prop_homogeneous_limit(lam, u):
    assert homogeneous_M(lam, 3, u) == homogeneous_M_ct(lam, 3, u)


def test_ct_route_spelled_out():
    lam, u = Partition((1,)), (2, 2)
    a, v = macdonald_ct_params(lam, 3, u)
    direct = a_to_ratfunc(ct_A(a), [y_value(k) for k in v])
    assert homogeneous_M(lam, 3, u) == direct


def test_ct_N_small():
    assert ct_N(1) == SymPoly.const(1)
    assert ct_N(3) == EXSCHU


@pytest.mark.parametrize("n", [2, 3, 4])
def test_ct_N_equals_schubert(n):
    assert ct_N(n) == schubert_sum_N(n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_tsscpp_identity(n):
    assert ct_N(n, specialize_weights(n, t, T)) == ct_A(tuple(range(1, 2 * n, 2)), [t] * (n - 1))


def test_cap_handling():
    assert ct_N(3, cap=3) == ct_N(3, cap=24)
    with pytest.raises(CapExhausted):
        ct_N(3, cap=1, max_cap=1)


def test_punctured():
    assert ct_N_punctured(3, 2) == SymPoly.parse("1 + 7*T + 12*T^2 + 14*T^3")


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_punctured_r0_is_N_at_one_tau(n):
    assert ct_N_punctured(n, 0) == ct_N(n, specialize_weights(n, 1, T))


def test_A_12357_at_ones():
    assert ct_A((1, 2, 3, 5, 7), [1, 1, 1, 1]) == ct_N_punctured(3, 2)


def test_tau_expression_of_A():
    assert tau_express(a_to_ratfunc(ct_A((1, 3, 5), [T ** -1, T ** -1]), [])) == TauPoly({-1: 3, 1: 3, 3: 1})
