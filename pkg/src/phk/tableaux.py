"""Fillings, non-intersecting lattice paths and flagged skew tableaux.

Rank n objects (n >= 1) all encode the same TSSCPP-type data:

Filling
    Row r = 1..n-1 has n-r entries followed by a fixed border value r-1.
    Along a row the entries weakly decrease, by at most 1 per step (border
    included); down a column they weakly increase.
Paths
    Row r becomes the path starting at (n-r, r-n).  Reading the row from
    the border leftwards, an increase is a north step and a repeat is a
    north-east step; the last step ends on the x-axis.  The augmented
    column 0 adds one more step up to y = 1.  A north step leaving the line
    y = -k carries the weight t_k.
Tableau
    Row r of the augmented filling gives column r of a French skew tableau
    inside the staircase: the entries are the positions where the row
    drops, and the inner part of the column has n-1-f(r,0) cells.  An entry
    e carries the weight t_{e-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .shapes import Partition, ShapeError, staircase, sub_partitions
from .symbolic import SymPoly

__all__ = [
    "Filling",
    "AugmentedFilling",
    "NilpConfig",
    "FlaggedTableau",
    "enumerate_fillings",
    "augment_filling",
    "filling_to_nilp",
    "nilp_to_filling",
    "nilp_weight",
    "filling_weight",
    "enumerate_nilp",
    "nilp_generating_function",
    "filling_to_skew_tableau",
    "tableau_to_filling",
    "flagged_tableaux",
    "flagged_gen",
    "specialize_weights",
    "even_column_shapes",
]


def _t(k: int) -> SymPoly:
    return SymPoly.var(f"t{k}")


@dataclass(frozen=True)
class Filling:
    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.n
        if len(self.rows) != n - 1:
            raise ShapeError(f"a rank {n} filling has {n - 1} rows")
        for r, row in enumerate(self.rows, 1):
            if len(row) != n - r:
                raise ShapeError(f"row {r} must have {n - r} entries")
            seq = list(row) + [r - 1]
            if any(not 0 <= seq[k] - seq[k + 1] <= 1 for k in range(len(seq) - 1)):
                raise ShapeError(f"row {r} violates the step rule: {row}")
        for r in range(2, n):
            for c in range(n - r):
                if self.rows[r - 2][c] > self.rows[r - 1][c]:
                    raise ShapeError(f"column {c + 1} decreases between rows {r - 1} and {r}")

    def border(self, r: int) -> int:
        return r - 1

    def __str__(self) -> str:
        return " / ".join("".join(map(str, row)) + f"({r - 1})" for r, row in enumerate(self.rows, 1))


@dataclass(frozen=True)
class AugmentedFilling:
    filling: Filling
    column0: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.filling.n

    def full_row(self, r: int) -> list[int]:
        """Column 0, the row entries, then the border."""
        return [self.column0[r - 1], *self.filling.rows[r - 1], r - 1]

    def __str__(self) -> str:
        return " / ".join(
            f"{self.column0[r - 1]} " + "".join(map(str, row)) + f"({r - 1})"
            for r, row in enumerate(self.filling.rows, 1)
        )


def _rows_from_border(length: int, border: int, floor: Sequence[int] | None) -> Iterator[tuple[int, ...]]:
    """Rows of the given length above a border, respecting a column floor."""
    def rec(pos: int, right: int, acc: list[int]):
        if pos < 0:
            yield tuple(acc)
            return
        for v in (right, right + 1):
            if floor is not None and v < floor[pos]:
                continue
            acc[pos] = v
            yield from rec(pos - 1, v, acc)

    yield from rec(length - 1, border, [0] * length)


def enumerate_fillings(n: int) -> list[Filling]:
    if n < 1:
        raise ShapeError("n must be positive")
    out: list[Filling] = []

    def rec(r: int, prev: tuple[int, ...] | None, acc: list):
        if r == n:
            out.append(Filling(n, tuple(acc)))
            return
        for row in _rows_from_border(n - r, r - 1, prev):
            rec(r + 1, row, acc + [row])

    rec(1, None, [])
    return out


def augment_filling(f: Filling) -> AugmentedFilling:
    """Prepend the smallest number >= the first entry with the parity of the row count."""
    parity = (f.n - 1) % 2
    col0 = []
    for r, row in enumerate(f.rows, 1):
        first = row[0]
        col0.append(first if first % 2 == parity else first + 1)
    return AugmentedFilling(f, tuple(col0))


# ---------------------------------------------------------------------------
# paths

@dataclass(frozen=True)
class NilpConfig:
    n: int
    paths: tuple[tuple[tuple[int, int], ...], ...]  # path i = 1..n-1, including the augmented step

    def endpoints(self) -> list[int]:
        return [p[-1][0] for p in self.paths]

    def is_non_intersecting(self) -> bool:
        seen: set = set()
        for p in self.paths:
            if seen & set(p):
                return False
            seen |= set(p)
        return True

    def __str__(self) -> str:
        return "; ".join(" ".join(f"({x},{y})" for x, y in p) for p in self.paths)


def filling_to_nilp(af: "AugmentedFilling | Filling") -> NilpConfig:
    if isinstance(af, Filling):
        af = augment_filling(af)
    n = af.n
    paths = []
    for i in range(1, n):
        r = n - i
        row = af.full_row(r)  # [col0, f_1, ..., f_i, border]
        x, y = i, -i
        pts = [(x, y)]
        for c in range(len(row) - 1, 0, -1):
            if row[c - 1] == row[c] + 1:
                y += 1
            else:
                x += 1
                y += 1
            pts.append((x, y))
        paths.append(tuple(pts))
    return NilpConfig(n, tuple(paths))


def nilp_to_filling(cfg: NilpConfig) -> AugmentedFilling:
    n = cfg.n
    rows: list = [None] * (n - 1)
    col0: list = [None] * (n - 1)
    for i, pts in enumerate(cfg.paths, 1):
        r = n - i
        vals = [r - 1]
        for (x0, _), (x1, _) in zip(pts, pts[1:]):
            vals.append(vals[-1] + (1 if x1 == x0 else 0))
        vals.reverse()  # [col0, f_1, ..., f_i, border]
        col0[r - 1] = vals[0]
        rows[r - 1] = tuple(vals[1:-1])
    return AugmentedFilling(Filling(n, tuple(rows)), tuple(col0))


def nilp_weight(cfg: NilpConfig) -> SymPoly:
    """Product over north steps of t_k, k = -(height the step leaves)."""
    w = SymPoly.const(1)
    for pts in cfg.paths:
        for (x0, y0), (x1, _) in zip(pts, pts[1:]):
            if x0 == x1:
                w = w * _t(-y0)
    return w


def filling_weight(af: AugmentedFilling) -> SymPoly:
    """The same weight read off the filling: a rise into column c gives t_c."""
    w = SymPoly.const(1)
    for r in range(1, af.n):
        row = af.full_row(r)
        for c in range(len(row) - 1):
            if row[c] > row[c + 1]:
                w = w * _t(c)
    return w


def enumerate_nilp(n: int) -> list[tuple[NilpConfig, SymPoly]]:
    out = []
    for f in enumerate_fillings(n):
        cfg = filling_to_nilp(augment_filling(f))
        out.append((cfg, nilp_weight(cfg)))
    return out


def specialize_weights(n: int, t: object, rest: object) -> dict[str, object]:
    """t0 -> t and t1..t_{n-1} -> rest."""
    return {f"t{k}": (t if k == 0 else rest) for k in range(n)}


def nilp_generating_function(n: int, weights: dict | None = None) -> SymPoly:
    total = SymPoly()
    for _, w in enumerate_nilp(n):
        total = total + w
    return total.subs(weights) if weights else total


# ---------------------------------------------------------------------------
# flagged tableaux (French: row 1 at the bottom)

@dataclass(frozen=True)
class FlaggedTableau:
    n: int
    outer: Partition
    inner: Partition
    entries: tuple  # ((row, col), value) pairs for the skew cells

    def value(self, cell: tuple[int, int]) -> int | None:
        return dict(self.entries).get(cell)

    def weight(self) -> SymPoly:
        w = SymPoly.const(1)
        for _, v in self.entries:
            w = w * _t(v - 1)
        return w

    def is_valid(self) -> bool:
        d = dict(self.entries)
        for (r, c), v in d.items():
            if not 1 <= v <= r + 1:
                return False
            if (r, c + 1) in d and d[(r, c + 1)] < v:
                return False
            if (r + 1, c) in d and d[(r + 1, c)] <= v:
                return False
        return True

    def __str__(self) -> str:
        rows = []
        for r in range(1, len(self.outer) + 1):
            cells = []
            for c in range(1, self.outer.row(r) + 1):
                v = self.value((r, c))
                cells.append("." if v is None else str(v))
            rows.append(" ".join(cells))
        return "[" + " | ".join(rows) + "]"

    @classmethod
    def parse(cls, text: str, n: int) -> "FlaggedTableau":
        body = text.strip().strip("[]")
        rows = [r.split() for r in body.split("|")] if body.strip() else []
        outer = Partition(len(r) for r in rows)
        inner = Partition(sum(1 for x in r if x == ".") for r in rows)
        entries = []
        for ri, row in enumerate(rows, 1):
            for ci, x in enumerate(row, 1):
                if x != ".":
                    entries.append(((ri, ci), int(x)))
        return cls(n, outer, inner, tuple(sorted(entries)))


def filling_to_skew_tableau(af: AugmentedFilling) -> FlaggedTableau:
    n = af.n
    entries = []
    col_inner = []
    for r in range(1, n):
        row = af.full_row(r)
        drops = [c for c in range(1, len(row)) if row[c - 1] > row[c]]
        inner = n - 1 - row[0]
        col_inner.append(inner)
        for k, e in enumerate(drops):
            entries.append(((inner + 1 + k, r), e))
    inner_shape = Partition(col_inner).conjugate() if any(col_inner) else Partition()
    return FlaggedTableau(n, staircase(n), inner_shape, tuple(sorted(entries)))


def tableau_to_filling(tab: FlaggedTableau) -> AugmentedFilling:
    n = tab.n
    if tab.outer != staircase(n) or not tab.is_valid():
        raise ShapeError(f"{tab} is not a flagged tableau on the rank {n} staircase")
    inner_cols = tab.inner.conjugate()
    d = dict(tab.entries)
    rows, col0 = [], []
    for r in range(1, n):
        inner = inner_cols.row(r)
        drops = sorted(v for (row, col), v in d.items() if col == r)
        start = n - 1 - inner
        vals = [start]
        for c in range(1, n - r + 2):
            vals.append(vals[-1] - (1 if c in drops else 0))
        if vals[-1] != r - 1:
            raise ShapeError(f"column {r} of the tableau does not end on the border")
        col0.append(start)
        rows.append(tuple(vals[1:-1]))
    return AugmentedFilling(Filling(n, tuple(rows)), tuple(col0))


def flagged_tableaux(outer: Partition, inner: Partition, n: int) -> Iterator[FlaggedTableau]:
    """Fillings of outer/inner (French) with entries in row r from 1..r+1,
    weakly increasing along rows and strictly increasing up columns."""
    if not outer.contains(inner):
        return
    cells = [(r, c) for r in range(1, len(outer) + 1) for c in range(inner.row(r) + 1, outer.row(r) + 1)]
    vals: dict = {}

    def rec(k: int):
        if k == len(cells):
            yield FlaggedTableau(n, outer, inner, tuple(sorted(vals.items())))
            return
        r, c = cells[k]
        lo = 1
        if (r, c - 1) in vals:
            lo = max(lo, vals[(r, c - 1)])
        if (r - 1, c) in vals:
            lo = max(lo, vals[(r - 1, c)] + 1)
        for v in range(lo, r + 2):
            vals[(r, c)] = v
            yield from rec(k + 1)
        vals.pop((r, c), None)

    yield from rec(0)


def flagged_gen(outer: Partition, inner: Partition, n: int) -> SymPoly:
    total = SymPoly()
    for tab in flagged_tableaux(outer, inner, n):
        total = total + tab.weight()
    return total


def even_column_shapes(n: int) -> list[Partition]:
    """Inner shapes inside the staircase whose columns all have even length."""
    return [p for p in sub_partitions(staircase(n)) if p.conjugate().is_even()]
