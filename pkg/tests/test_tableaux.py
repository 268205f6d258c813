import pytest

from phk.ctengine import ct_N
from phk.schubert import flag_schur_det, schubert_sum_N, ytilde
from phk.shapes import Partition, ShapeError, staircase
from phk.symbolic import SymPoly, sym
from phk.tableaux import (
    AugmentedFilling,
    Filling,
    FlaggedTableau,
    augment_filling,
    enumerate_fillings,
    enumerate_nilp,
    even_column_shapes,
    filling_to_nilp,
    filling_to_skew_tableau,
    filling_weight,
    flagged_gen,
    flagged_tableaux,
    nilp_generating_function,
    nilp_to_filling,
    nilp_weight,
    specialize_weights,
    tableau_to_filling,
)

t0, t1, t2, t3 = (sym(f"t{k}") for k in range(4))
T, t = sym("T"), sym("t")

WORKED = Filling(5, ((1, 1, 1, 0), (2, 2, 1), (3, 3), (3,)))


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 7), (4, 42), (5, 429)])
def test_counts(n, count):
    assert len(enumerate_fillings(n)) == count


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_nilp_counts_match_fillings(n):
    assert len(enumerate_nilp(n)) == len(enumerate_fillings(n))


def test_rank3_generating_function():
    expected = (t0 + t1 + t0 ** 2 * t1 + t0 ** 2 * t2 + t0 * t1 ** 2
                + t0 * t1 * t2 + t1 ** 2 * t2)
    assert nilp_generating_function(3) == expected


def test_rank3_specialisations():
    assert nilp_generating_function(3, specialize_weights(3, t, T)) == T + t + T ** 3 + 2 * T ** 2 * t + 2 * T * t ** 2
    assert nilp_generating_function(3, specialize_weights(3, 1, T)) == 1 + 3 * T + 2 * T ** 2 + T ** 3
    assert nilp_generating_function(3, specialize_weights(3, 1, 1)) == SymPoly.const(7)


def test_specialize_weights_keys():
    assert specialize_weights(3, "a", "b") == {"t0": "a", "t1": "b", "t2": "b"}


def test_worked_example_augment():
    af = augment_filling(WORKED)
    assert af.column0 == (2, 2, 4, 4)
    assert str(af) == "2 1110(0) / 2 221(1) / 4 33(2) / 4 3(3)"


def test_worked_example_tableau():
    af = augment_filling(WORKED)
    tab = filling_to_skew_tableau(af)
    assert str(tab) == "[. . 1 1 | . . 3 | 1 3 | 4]"
    assert tab.inner == Partition((2, 2))
    assert tab.outer == staircase(5)
    assert tab.weight() == t0 ** 3 * t2 ** 2 * t3
    assert tab.weight() == filling_weight(af) == nilp_weight(filling_to_nilp(af))
    assert tab.is_valid()


def test_single_row_augment():
    f = Filling(2, ((0,),))
    af = augment_filling(f)
    assert af.column0 == (1,)
    assert filling_weight(af) == t0


def test_all_zero_row_paths_are_diagonal():
    f = Filling(3, ((0, 0), (1,)))
    cfg = filling_to_nilp(f)
    first = cfg.paths[1]  # path from the top row
    assert all(x1 == x0 + 1 and y1 == y0 + 1 for (x0, y0), (x1, y1) in zip(first, first[1:]))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_endpoints_are_odd_spaced(n):
    for cfg, _ in enumerate_nilp(n):
        ends = cfg.endpoints()
        assert ends[0] == 2 or n == 1
        assert all((b - a) % 2 == 1 for a, b in zip(ends, ends[1:]))
        assert all(p[-1][1] == 1 for p in cfg.paths)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_paths_do_not_intersect(n):
    assert all(cfg.is_non_intersecting() for cfg, _ in enumerate_nilp(n))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_round_trips(n):
    for f in enumerate_fillings(n):
        af = augment_filling(f)
        cfg = filling_to_nilp(af)
        assert nilp_to_filling(cfg) == af
        tab = filling_to_skew_tableau(af)
        assert tab.is_valid()
        assert tableau_to_filling(tab) == af
        assert FlaggedTableau.parse(str(tab), n) == tab
        assert nilp_weight(cfg) == filling_weight(af) == tab.weight()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_three_routes(n):
    gf = nilp_generating_function(n)
    assert gf == ct_N(n)
    assert gf == schubert_sum_N(n)
    assert gf == schubert_sum_N(n, method="det")


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_flagged_sum_over_even_columns(n):
    rho = staircase(n)
    total = SymPoly()
    for mu in even_column_shapes(n):
        g = flagged_gen(rho, mu, n)
        assert g == flag_schur_det(rho, mu.conjugate(), ytilde(n), list(range(2, n + 1)))
        total = total + g
    assert total == nilp_generating_function(n)


def test_inner_shapes_have_even_columns():
    for f in enumerate_fillings(5):
        inner = filling_to_skew_tableau(augment_filling(f)).inner
        assert inner.conjugate().is_even()


def test_flagged_gen_trivial_and_empty():
    rho = staircase(4)
    assert flagged_gen(rho, rho, 4) == SymPoly.const(1)
    assert list(flagged_tableaux(Partition((1,)), Partition((2,)), 3)) == []


def test_flagged_tableaux_respect_flags():
    for tab in flagged_tableaux(staircase(4), Partition(), 4):
        assert tab.is_valid()
        assert all(v <= r + 1 for (r, _), v in tab.entries)


@pytest.mark.parametrize("rows", [
    ((0, 1), (1,)),        # increases along a row
    ((0, 0), (3,)),        # jumps by 2 onto the border
    ((1, 0),),             # wrong number of rows
    ((1, 1), (2, 1)),      # second row too long
])
def test_invalid_filling(rows):
    with pytest.raises(ShapeError):
        Filling(3, rows)


def test_column_rule():
    with pytest.raises(ShapeError):
        Filling(4, ((2, 1, 0), (1, 1), (2,)))


def test_bad_tableau_rejected():
    tab = FlaggedTableau.parse("[. 3 | .]", 3)
    assert not tab.is_valid()
    with pytest.raises(ShapeError):
        tableau_to_filling(FlaggedTableau.parse("[. 1 1 | .]", 3))


def test_str_formats():
    f = Filling(3, ((1, 0), (1,)))
    assert str(f) == "10(0) / 1(1)"
    af = AugmentedFilling(f, (2, 2))
    assert af.full_row(1) == [2, 1, 0, 0]
