"""Partitions, Dyck words, labelled diagrams and ribbons.

Cells are (i, j) with 1-based row i from the top and column j from the left
(English convention).  The "height" of a cell is i + j; cells of equal height
form a diagonal parallel to the staircase boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Partition",
    "staircase",
    "sub_partitions",
    "is_yamanouchi",
    "yamanouchi_dual",
    "word_from_partition",
    "partition_from_word",
    "parse_word",
    "format_word",
    "LabeledDiagram",
    "kl_labels",
    "macdonald_labels",
    "schedule",
    "n_lambda",
    "rim",
    "is_removable",
    "dyck_ribbons",
    "ShapeError",
]


class ShapeError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        ps = [int(p) for p in parts]
        if any(p < 0 for p in ps):
            raise ShapeError(f"negative part in {ps}")
        if any(ps[k] < ps[k + 1] for k in range(len(ps) - 1)):
            raise ShapeError(f"parts must be weakly decreasing: {ps}")
        while ps and ps[-1] == 0:
            ps.pop()
        object.__setattr__(self, "parts", tuple(ps))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def row(self, i: int) -> int:
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i, p in enumerate(self.parts, 1) for j in range(1, p + 1)]

    def __contains__(self, cell) -> bool:
        i, j = cell
        return i >= 1 and j >= 1 and j <= self.row(i)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1))

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(other.row(i) <= self.row(i) for i in range(1, len(other) + 1))

    def add_column(self, k: int) -> "Partition":
        """Add 1 to each of the first k rows (k >= number of rows)."""
        if k < len(self):
            raise ShapeError(f"cannot add a column of height {k} to {self}")
        return Partition([self.row(i) + 1 for i in range(1, k + 1)])

    def remove_first_column(self) -> "Partition":
        return Partition([p - 1 for p in self.parts])

    def is_even(self) -> bool:
        return all(p % 2 == 0 for p in self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __repr__(self) -> str:
        return f"Partition({self.parts})"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        s = text.strip().strip("()[]").strip()
        if not s:
            return cls()
        try:
            return cls(int(x) for x in s.split(","))
        except ValueError as exc:
            raise ShapeError(f"bad partition text {text!r}") from exc


def staircase(n: int) -> Partition:
    """The staircase (n-1, n-2, ..., 1)."""
    return Partition(range(n - 1, 0, -1))


def sub_partitions(outer: Partition) -> list[Partition]:
    """All partitions contained in ``outer``, in a fixed order."""
    out: list[Partition] = []

    def rec(prefix: list[int], i: int, cap: int) -> None:
        if i > len(outer):
            out.append(Partition(prefix))
            return
        for p in range(min(cap, outer.row(i)), -1, -1):
            rec(prefix + [p], i + 1, p)

    rec([], 1, outer.row(1))
    return sorted(set(out), key=lambda p: (p.size, p.parts))


# ---------------------------------------------------------------------------
# words

def parse_word(text: str) -> tuple[int, ...]:
    s = text.strip()
    if not s.isdigit():
        raise ShapeError(f"word must be a string of digits: {text!r}")
    return tuple(int(c) for c in s)


def format_word(w: Sequence[int]) -> str:
    return "".join(map(str, w))


def is_yamanouchi(w: Sequence[int]) -> bool:
    """Every suffix contains at least as many letters i as letters i+1."""
    counts: dict[int, int] = {}
    for a in reversed(w):
        counts[a] = counts.get(a, 0) + 1
        if a > 0 and counts[a] > counts.get(a - 1, 0):
            return False
    return True


def yamanouchi_dual(w: Sequence[int]) -> tuple[int, ...]:
    """Number the occurrences of each letter from the right, starting at 0."""
    if not is_yamanouchi(w):
        raise ShapeError(f"not a Yamanouchi word: {format_word(w)}")
    seen: dict[int, int] = {}
    out = [0] * len(w)
    for k in range(len(w) - 1, -1, -1):
        a = w[k]
        out[k] = seen.get(a, 0)
        seen[a] = out[k] + 1
    return tuple(out)


def word_from_partition(lam: Partition, n: int) -> tuple[int, ...]:
    """Dyck word (1 = vertical, 0 = horizontal) of a partition inside the staircase."""
    if not staircase(n).contains(lam):
        raise ShapeError(f"{lam} is not contained in the staircase for n={n}")
    word: list[int] = []
    zeros = 0
    for k in range(1, n + 1):
        z = lam.row(n - k + 1)
        word.extend([0] * (z - zeros))
        zeros = z
        word.append(1)
    word.extend([0] * (n - zeros))
    return tuple(word)


def partition_from_word(w: Sequence[int]) -> Partition:
    if len(w) % 2 or set(w) - {0, 1} or sum(w) * 2 != len(w):
        raise ShapeError(f"not a balanced 0/1 word: {format_word(w)}")
    if not is_yamanouchi(w):
        raise ShapeError(f"not a Yamanouchi word: {format_word(w)}")
    n = len(w) // 2
    zeros_before = []
    zeros = 0
    for a in w:
        if a == 1:
            zeros_before.append(zeros)
        else:
            zeros += 1
    # row r from the top sits at the (n - r + 1)-th vertical step
    return Partition(zeros_before[n - r] for r in range(1, n + 1))


# ---------------------------------------------------------------------------
# labelled diagrams

@dataclass(frozen=True)
class LabeledDiagram:
    n: int
    shape: Partition
    labels: tuple  # ((cell, spectral argument), ...)

    def label(self, cell: tuple[int, int]) -> int:
        return dict(self.labels)[cell]

    def op_index(self, cell: tuple[int, int]) -> int:
        i, j = cell
        return self.n - i + j

    def rows(self) -> list[list[int]]:
        d = dict(self.labels)
        return [[d[(i, j)] for j in range(1, self.shape.row(i) + 1)] for i in range(1, len(self.shape) + 1)]


def _check_in_staircase(lam: Partition, n: int) -> None:
    if n < 1:
        raise ShapeError("n must be positive")
    if not staircase(n).contains(lam):
        raise ShapeError(f"{lam} is not contained in the staircase for n={n}")


def kl_labels(lam: Partition, n: int) -> LabeledDiagram:
    """v_ij = max(v_{i+1,j}, v_{i,j+1}) + 1, with 0 outside the shape."""
    _check_in_staircase(lam, n)
    v: dict[tuple[int, int], int] = {}
    for i in range(len(lam), 0, -1):
        for j in range(lam.row(i), 0, -1):
            v[(i, j)] = max(v.get((i + 1, j), 0), v.get((i, j + 1), 0)) + 1
    return LabeledDiagram(n, lam, tuple(sorted(v.items())))


def macdonald_labels(lam: Partition, n: int, u: Sequence[int]) -> LabeledDiagram:
    """Cell (i, j) gets u_{n-i} + n - i - j + 1; ``u`` lists u_1..u_{n-1}."""
    _check_in_staircase(lam, n)
    if len(u) != n - 1:
        raise ShapeError(f"expected {n - 1} deformation parameters, got {len(u)}")
    labels = {}
    for i, j in lam.cells():
        labels[(i, j)] = u[n - i - 1] + n - i - j + 1
    return LabeledDiagram(n, lam, tuple(sorted(labels.items())))


def schedule(d: LabeledDiagram, order: str = "antidiagonal") -> list[tuple[int, int]]:
    """Operator product (leftmost factor first) for a labelled diagram.

    Every cell appears to the right of (so acts before) the cells below it
    and to its right.  Different ``order`` values give different linear
    extensions of that constraint.
    """
    cells = [c for c, _ in d.labels]
    if order == "antidiagonal":
        key = lambda c: (-(c[0] + c[1]), -c[0])
    elif order == "rows":
        key = lambda c: (-c[0], -c[1])
    elif order == "columns":
        key = lambda c: (-c[1], -c[0])
    else:
        raise ShapeError(f"unknown schedule order {order!r}")
    lab = dict(d.labels)
    return [(d.op_index(c), lab[c]) for c in sorted(cells, key=key)]


def n_lambda(lam: Partition, n: int) -> int:
    """Alternating count of the diagonal strips of staircase/lam.

    Strip k (k = 1 along the outer boundary) consists of the cells of height
    n + 1 - k and is counted with sign (-1)^(k+1).
    """
    _check_in_staircase(lam, n)
    total = 0
    for i, j in staircase(n).cells():
        if (i, j) in lam:
            continue
        k = n + 1 - (i + j)
        total += 1 if k % 2 == 1 else -1
    return total


# ---------------------------------------------------------------------------
# ribbons

def rim(lam: Partition) -> list[tuple[int, int]]:
    """Cells of the outer rim, from bottom-left to top-right."""
    cells = [(i, j) for i, j in lam.cells() if (i + 1, j + 1) not in lam]
    return sorted(cells, key=lambda c: c[1] - c[0])


def is_removable(lam: Partition, cells: Iterable[tuple[int, int]]) -> bool:
    cs = set(cells)
    if not cs <= set(lam.cells()):
        return False
    rows = [lam.row(i) - sum(1 for (a, _) in cs if a == i) for i in range(1, len(lam) + 1)]
    if any(rows[k] < rows[k + 1] for k in range(len(rows) - 1)):
        return False
    rest = Partition([r for r in rows if r] if all(r >= 0 for r in rows) else [])
    return set(rest.cells()) == set(lam.cells()) - cs


def dyck_ribbons(
    lam: Partition, diagonal: int, start: tuple[int, int] | None = None
) -> list[frozenset]:
    """Removable rim segments whose two end cells lie on the given diagonal
    (cells of height ``diagonal``) and which never go above it.

    With ``start`` given, only segments beginning at that cell are returned.
    """
    r = rim(lam)
    h = [i + j for i, j in r]
    out = []
    for a in range(len(r)):
        if h[a] != diagonal or (start is not None and r[a] != start):
            continue
        for b in range(a, len(r)):
            if h[b] > diagonal:
                break
            if h[b] == diagonal and is_removable(lam, r[a:b + 1]):
                out.append(frozenset(r[a:b + 1]))
    return out
