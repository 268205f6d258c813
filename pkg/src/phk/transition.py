"""Transition from the top Macdonald element to the KL basis.

M_staircase(u) = sum over lambda of c_lambda KL_lambda, where each
c_lambda is a square-free monomial in y_1..y_{n-1}.  The coefficient of a
single shape is found by peeling off one column at a time:

* a full first column (n-1 rows) is simply deleted;
* a first column one cell short contributes a factor y (with the index
  shifted by the number of columns already deleted);
* otherwise the unique Dyck ribbon that can be added from the cell
  (n-2, 1) up to the diagonal of height n-1 is added first.

The same numbers come out of the formal recursion that applies
T_2(u_1+1) to a shifted expansion one rank lower; both routes are exposed
so they can be checked against each other and against the polynomials.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping, Sequence

from .bases import kl_polynomial, macdonald_polynomial
from .exactalg import LaurentT, RatFuncT, t_number, y_value
from .polyring import MultiPoly
from .shapes import Partition, ShapeError, dyck_ribbons, staircase, sub_partitions

__all__ = [
    "YMonomial",
    "YPoly",
    "ExpansionTable",
    "addable_ribbon",
    "coefficient",
    "expand_maximal",
    "hecke_on_kl",
    "shift_table",
    "apply_hecke_to_table",
    "ExpansionReport",
    "verify_expansion",
    "shift_consistency",
    "kl_combination_poly",
]


@dataclass(frozen=True, order=True)
class YMonomial:
    indices: tuple[int, ...] = ()

    def __init__(self, indices: Sequence[int] = ()):
        idx = tuple(sorted(int(k) for k in indices))
        if any(k < 1 for k in idx):
            raise ValueError("y indices start at 1")
        object.__setattr__(self, "indices", idx)

    def __mul__(self, other: "YMonomial") -> "YMonomial":
        return YMonomial(self.indices + other.indices)

    def shifted(self, by: int = 1) -> "YMonomial":
        return YMonomial(k + by for k in self.indices)

    @property
    def degree(self) -> int:
        return len(self.indices)

    def evaluate(self, y: Mapping[int, RatFuncT]) -> RatFuncT:
        out = RatFuncT(1)
        for k in self.indices:
            out = out * y[k]
        return out

    def __str__(self) -> str:
        if not self.indices:
            return "1"
        parts = []
        for k in sorted(set(self.indices)):
            e = self.indices.count(k)
            parts.append(f"y{k}" if e == 1 else f"y{k}^{e}")
        return "*".join(parts)

    @classmethod
    def parse(cls, text: str) -> "YMonomial":
        s = text.strip()
        if s == "1":
            return cls()
        idx: list[int] = []
        for factor in s.split("*"):
            factor = factor.strip()
            base, _, exp = factor.partition("^")
            if not base.startswith("y") or not base[1:].isdigit():
                raise ValueError(f"bad y-monomial {text!r}")
            idx.extend([int(base[1:])] * (int(exp) if exp else 1))
        return cls(idx)


class YPoly:
    """Finite sum of y-monomials with Laurent coefficients in t."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[YMonomial, LaurentT | int] | None = None):
        self._terms: dict[YMonomial, LaurentT] = {}
        for m, c in (terms or {}).items():
            c = c if isinstance(c, LaurentT) else LaurentT.const(c)
            if not c.is_zero():
                self._terms[m] = self._terms.get(m, LaurentT()) + c
                if self._terms[m].is_zero():
                    del self._terms[m]

    @classmethod
    def mono(cls, m: YMonomial, c: LaurentT | int = 1) -> "YPoly":
        return cls({m: c})

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def single_monomial(self) -> YMonomial | None:
        """The monomial if self is exactly one monomial with coefficient 1."""
        if len(self._terms) == 1:
            (m, c), = self._terms.items()
            if c == 1:
                return m
        return None

    def __add__(self, other: "YPoly") -> "YPoly":
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, LaurentT()) + c
        return YPoly(out)

    def __mul__(self, other: "YPoly") -> "YPoly":
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                out[m] = out.get(m, LaurentT()) + c1 * c2
        return YPoly(out)

    def shifted(self, by: int = 1) -> "YPoly":
        return YPoly({m.shifted(by): c for m, c in self._terms.items()})

    def evaluate(self, y: Mapping[int, RatFuncT]) -> RatFuncT:
        out = RatFuncT(0)
        for m, c in self._terms.items():
            out = out + m.evaluate(y) * c
        return out

    def __eq__(self, other):
        if isinstance(other, YMonomial):
            other = YPoly.mono(other)
        if not isinstance(other, YPoly):
            return NotImplemented
        return self._terms == other._terms

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m in sorted(self._terms):
            c = self._terms[m]
            if c == 1:
                parts.append(str(m))
            elif m.degree == 0:
                parts.append(f"({c})")
            else:
                parts.append(f"({c})*{m}")
        return " + ".join(parts)

    __repr__ = __str__


def _shape_key(p: Partition):
    return (p.size, p.parts)


def _fmt_shape(p: Partition) -> str:
    return f"({p})"


@dataclass
class ExpansionTable:
    n: int
    entries: dict[Partition, YMonomial] = field(default_factory=dict)

    def __str__(self) -> str:
        return "\n".join(f"{_fmt_shape(p)}: {self.entries[p]}" for p in sorted(self.entries, key=_shape_key))

    @classmethod
    def parse(cls, text: str, n: int) -> "ExpansionTable":
        entries = {}
        for line in text.strip().splitlines():
            if not line.strip():
                continue
            shape, _, mono = line.partition(":")
            entries[Partition.parse(shape)] = YMonomial.parse(mono)
        return cls(n, entries)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "entries": [
                {"shape": str(p), "y_monomial": list(self.entries[p].indices), "text": str(self.entries[p])}
                for p in sorted(self.entries, key=_shape_key)
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "ExpansionTable":
        return cls(data["n"], {Partition.parse(e["shape"]): YMonomial(e["y_monomial"]) for e in data["entries"]})

    def specialize(self, u: Sequence[int]) -> dict[Partition, RatFuncT]:
        """Coefficients at y_k = -[u_k]/[u_k + 1]."""
        y = {k: y_value(u[k - 1]) for k in range(1, self.n)}
        return {p: m.evaluate(y) for p, m in self.entries.items()}


# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def addable_ribbon(lam: Partition, m: int) -> Partition:
    """The shape nu obtained by adding the maximal Dyck ribbon to lam at rank m.

    nu has m-2 rows ending in a single cell, and nu/lam is a Dyck ribbon for
    the diagonal of height m-1 that starts at (m-2, 1).
    """
    if len(lam) >= m - 2:
        raise ShapeError(f"{lam} already reaches row {m - 2}")
    best = None
    for nu in sub_partitions(staircase(m)):
        if len(nu) != m - 2 or nu.row(m - 2) != 1 or not nu.contains(lam):
            continue
        skew = frozenset(set(nu.cells()) - set(lam.cells()))
        if skew in dyck_ribbons(nu, m - 1, start=(m - 2, 1)):
            if best is None or nu.size > best.size:
                best = nu
    if best is None:
        raise ShapeError(f"no Dyck ribbon can be added to {lam} at rank {m}")
    return best


def coefficient(lam: Partition, n: int) -> YMonomial:
    """c_lambda in the expansion of the top Macdonald element."""
    if not staircase(n).contains(lam):
        raise ShapeError(f"{lam} is not contained in the staircase for n={n}")
    factors = []
    for step in range(n - 1):
        m = n - step
        rows = len(lam)
        if rows == m - 1:
            lam = Partition(p - 1 for p in lam.parts[:-1])
        elif rows == m - 2:
            factors.append(step + 1)
            lam = lam.remove_first_column()
        else:
            lam = addable_ribbon(lam, m).remove_first_column()
    return YMonomial(factors)


@lru_cache(maxsize=None)
def _expand(n: int) -> tuple:
    return tuple((lam, coefficient(lam, n)) for lam in sub_partitions(staircase(n)))


def expand_maximal(n: int) -> ExpansionTable:
    if n < 1:
        raise ShapeError("n must be positive")
    return ExpansionTable(n, dict(_expand(n)))


# ---------------------------------------------------------------------------
# the formal recursion

def hecke_on_kl(lam: Partition, n: int) -> dict[Partition, YPoly]:
    """T_2(u_1 + 1) KL_lambda written in the KL basis.

    y1 stands for -[u_1]/[u_1+1].
    """
    if n < 2:
        raise ShapeError("the operator T_2 needs n >= 2")
    if not staircase(n).contains(lam):
        raise ShapeError(f"{lam} is not contained in the staircase for n={n}")
    y1 = YPoly.mono(YMonomial([1]))
    if len(lam) != n - 2:
        return {lam: YPoly.mono(YMonomial(), t_number(2)) + y1}
    out = {Partition(lam.parts + (1,)): YPoly.mono(YMonomial()), lam: y1}
    if n >= 3 and lam.row(n - 2) == 1:
        for r in dyck_ribbons(lam, n - 1, start=(n - 2, 1)):
            rest = Partition(
                lam.row(i) - sum(1 for (a, _) in r if a == i) for i in range(1, len(lam) + 1)
            )
            out[rest] = out.get(rest, YPoly()) + YPoly.mono(YMonomial())
    return out


def shift_table(table: ExpansionTable) -> dict[Partition, YPoly]:
    """Rank n-1 expansion moved to rank n: add a first column of height n-2
    (with n the new rank) and shift y_k to y_{k+1}."""
    n = table.n + 1
    return {lam.add_column(n - 2): YPoly.mono(c.shifted(1)) for lam, c in table.entries.items()}


def apply_hecke_to_table(shifted: Mapping[Partition, YPoly], n: int) -> dict[Partition, YPoly]:
    out: dict[Partition, YPoly] = {}
    for lam, c in shifted.items():
        for mu, d in hecke_on_kl(lam, n).items():
            out[mu] = out.get(mu, YPoly()) + c * d
    return {k: v for k, v in out.items() if not v.is_zero()}


# ---------------------------------------------------------------------------
# polynomial checks

@dataclass
class ExpansionReport:
    n: int
    u: tuple
    ok: bool
    first_difference: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def kl_combination_poly(coeffs: Mapping[Partition, RatFuncT], n: int) -> MultiPoly:
    total = MultiPoly.zero(2 * n)
    for lam, c in coeffs.items():
        if not c.is_zero():
            total = total + kl_polynomial(lam, n) * c
    return total


def verify_expansion(n: int, u: Sequence[int]) -> ExpansionReport:
    """Check M_staircase(u) == sum c_lambda(y(u)) KL_lambda as polynomials."""
    u = tuple(u)
    lhs = macdonald_polynomial(staircase(n), n, u)
    rhs = kl_combination_poly(expand_maximal(n).specialize(u), n)
    diff = lhs.first_difference(rhs)
    return ExpansionReport(n, u, diff is None, diff)


def shift_consistency(n: int, u: Sequence[int]) -> ExpansionReport:
    """M for (n-1, ..., 2) at rank n against the shifted rank n-1 expansion.

    ``u`` = (u_1..u_{n-1}); u_1 does not enter either side.
    """
    u = tuple(u)
    if n < 2:
        raise ShapeError("need n >= 2")
    lhs = macdonald_polynomial(Partition(range(n - 1, 1, -1)), n, u)
    prev = expand_maximal(n - 1)
    y = {k: y_value(u[k]) for k in range(1, n - 1)}
    coeffs = {lam.add_column(n - 2): c.evaluate(y) for lam, c in prev.entries.items()}
    rhs = kl_combination_poly(coeffs, n)
    diff = lhs.first_difference(rhs)
    return ExpansionReport(n, u, diff is None, diff)
