import pytest
from hypothesis import given
from hypothesis import strategies as st

from phk.shapes import (Partition, ShapeError, dyck_ribbons, format_word, is_yamanouchi, kl_labels,
                        macdonald_labels, n_lambda, parse_word, partition_from_word, schedule, staircase,
                        sub_partitions, word_from_partition, yamanouchi_dual)


def P(*parts):
    return Partition(parts)


def dyck_words(length):
    out = []

    def rec(prefix, ones, zeros):
        if len(prefix) == length:
            out.append(tuple(prefix))
            return
        if ones < length // 2:
            rec(prefix + [1], ones + 1, zeros)
        if zeros < ones:
            rec(prefix + [0], ones, zeros + 1)

    rec([], 0, 0)
    return out


def test_partition_basics():
    lam = Partition.parse("3,1")
    assert lam == P(3, 1) and str(lam) == "3,1"
    assert Partition.parse("()") == Partition() == Partition.parse("")
    assert lam.conjugate() == P(2, 1, 1)
    assert staircase(4) == P(3, 2, 1)
    assert len(sub_partitions(staircase(4))) == 14
    with pytest.raises(ShapeError):
        Partition((1, 2))


@pytest.mark.parametrize("word,dual", [("11011000", "32310210"), ("1010", "1100"), ("10", "00")])
def test_yamanouchi_dual(word, dual):
    assert format_word(yamanouchi_dual(parse_word(word))) == dual


def test_dual_rejects_non_yamanouchi():
    with pytest.raises(ShapeError):
        yamanouchi_dual(parse_word("0110"))


@pytest.mark.parametrize("length", [2, 4, 6, 8, 10, 12])
def test_dual_is_involution_on_dyck_words(length):
    for w in dyck_words(length):
        assert is_yamanouchi(w)
        assert yamanouchi_dual(yamanouchi_dual(w)) == w


@pytest.mark.parametrize("word,shape", [("11011000", P(1, 1)), ("111000", P()), ("101010", P(2, 1)),
                                        ("1101101000", P(2, 1, 1))])
def test_partition_from_word(word, shape):
    assert partition_from_word(parse_word(word)) == shape


@pytest.mark.parametrize("n", range(1, 8))
def test_word_bijection(n):
    for lam in sub_partitions(staircase(n)):
        w = word_from_partition(lam, n)
        assert len(w) == 2 * n and is_yamanouchi(w)
        assert partition_from_word(w) == lam


def test_kl_labels():
    d = kl_labels(P(2, 1), 3)
    assert d.rows() == [[2, 1], [1]]
    single = kl_labels(P(1), 3)
    assert single.label((1, 1)) == 1 and single.op_index((1, 1)) == 3
    big = kl_labels(P(3, 2, 1, 1), 5)
    assert [row[0] for row in big.rows()] == [4, 3, 2, 1]
    with pytest.raises(ShapeError):
        kl_labels(P(3), 3)


def test_macdonald_labels():
    u1, u2 = 5, 7
    d = macdonald_labels(P(2, 1), 3, (u1, u2))
    assert d.rows() == [[u2 + 2, u2 + 1], [u1 + 1]]
    assert macdonald_labels(P(1), 3, (1, 1)).rows() == [[3]]
    assert macdonald_labels(P(1, 1), 3, (1, 1)).rows() == [[3], [2]]


def test_schedules():
    lam = partition_from_word(parse_word("1101101000"))
    assert sorted(schedule(kl_labels(lam, 5))) == sorted([(6, 1), (3, 1), (4, 2), (5, 3)])
    assert schedule(kl_labels(P(1), 3)) == [(3, 1)]
    assert schedule(macdonald_labels(P(2, 1), 3, (1, 1))) == [(2, 2), (4, 2), (3, 3)]


@pytest.mark.parametrize("order", ["antidiagonal", "rows", "columns"])
def test_schedule_respects_cell_order(order):
    d = kl_labels(P(3, 2, 1), 4)
    sched = schedule(d, order)
    cells = [c for c, _ in d.labels]
    pos = {}
    assert len(set(sched)) == len(cells)  # (index, label) pins the cell here
    for c in cells:
        pos[c] = sched.index((d.op_index(c), d.label(c)))
    for (i, j) in cells:
        for nb in ((i + 1, j), (i, j + 1)):
            if nb in pos:
                assert pos[(i, j)] > pos[nb]


@pytest.mark.parametrize("shape,n,value", [(P(3, 1), 6, 3), (P(2, 1), 3, 0), (P(), 3, 1), (P(), 2, 1)])
def test_n_lambda(shape, n, value):
    assert n_lambda(shape, n) == value


def test_dyck_ribbons():
    assert dyck_ribbons(Partition(), 3) == []
    ribbons = dyck_ribbons(P(2, 1), 3, start=(2, 1))
    removed = sorted(str(Partition(_rest(P(2, 1), r))) for r in ribbons)
    assert removed == sorted([str(P(2)), str(P())])


def _rest(lam, cells):
    rows = [lam.row(i) - sum(1 for a, _ in cells if a == i) for i in range(1, len(lam) + 1)]
    return [r for r in rows if r]


@given(st.lists(st.integers(0, 6), max_size=6))
def test_conjugate_involution(parts):
    lam = Partition(sorted(parts, reverse=True))
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size
