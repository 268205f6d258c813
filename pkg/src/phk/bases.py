"""Kazhdan-Lusztig and non-symmetric Macdonald basis elements.

Both families are built the same way: take the product of two
t-Vandermonde factors and act on it with baxterised operators read off a
labelled diagram.  Results are cached, since the same elements are reused
across expansions and evaluations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .exactalg import LaurentT, RatFuncT
from .polyring import EvalPoint, MultiPoly, act_sequence, evaluate, t_vandermonde
from .shapes import (
    Partition,
    ShapeError,
    format_word,
    is_yamanouchi,
    kl_labels,
    macdonald_labels,
    partition_from_word,
    schedule,
    staircase,
    sub_partitions,
    word_from_partition,
)

__all__ = [
    "BasisElement",
    "delta_delta",
    "kl_polynomial",
    "macdonald_polynomial",
    "kl_element",
    "macdonald_element",
    "vanishing_point",
    "VanishingReport",
    "vanishing_report",
    "kl_decompose",
    "homogeneous_prefactor",
]


@lru_cache(maxsize=None)
def delta_delta(n: int) -> MultiPoly:
    """Delta_t(z_1..z_n) * Delta_t(z_{n+1}..z_{2n})."""
    if n < 1:
        raise ShapeError("n must be positive")
    return t_vandermonde(range(1, n + 1), 2 * n) * t_vandermonde(range(n + 1, 2 * n + 1), 2 * n)


def _as_partition(shape, n: int) -> Partition:
    if isinstance(shape, Partition):
        return shape
    if isinstance(shape, str):
        return partition_from_word(tuple(int(c) for c in shape))
    shape = tuple(shape)
    if len(shape) == 2 * n and set(shape) <= {0, 1} and sum(shape) == n and is_yamanouchi(shape):
        return partition_from_word(shape)
    return Partition(shape)


@lru_cache(maxsize=None)
def _kl(lam: Partition, n: int) -> MultiPoly:
    return act_sequence(schedule(kl_labels(lam, n)), delta_delta(n))


def kl_polynomial(shape, n: int) -> MultiPoly:
    """KL basis element for a partition inside the staircase (or its Dyck word)."""
    return _kl(_as_partition(shape, n), n)


@lru_cache(maxsize=None)
def _mac(lam: Partition, n: int, u: tuple) -> MultiPoly:
    return act_sequence(schedule(macdonald_labels(lam, n, u)), delta_delta(n))


def macdonald_polynomial(shape, n: int, u: Sequence[int] | None = None) -> MultiPoly:
    """Macdonald element M_lambda(u); ``u`` = (u_1..u_{n-1}), default all 1."""
    u = tuple(u) if u is not None else (1,) * (n - 1)
    return _mac(_as_partition(shape, n), n, u)


@dataclass(frozen=True)
class BasisElement:
    kind: str  # "KL" or "M"
    n: int
    shape: Partition
    u: tuple | None
    poly: MultiPoly

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "shape": str(self.shape),
            "word": format_word(word_from_partition(self.shape, self.n)),
            "u": list(self.u) if self.u is not None else None,
            "poly": self.poly.to_json(),
        }


def kl_element(shape, n: int) -> BasisElement:
    lam = _as_partition(shape, n)
    return BasisElement("KL", n, lam, None, kl_polynomial(lam, n))


def macdonald_element(shape, n: int, u: Sequence[int] | None = None) -> BasisElement:
    lam = _as_partition(shape, n)
    u = tuple(u) if u is not None else (1,) * (n - 1)
    return BasisElement("M", n, lam, u, macdonald_polynomial(lam, n, u))


# ---------------------------------------------------------------------------
# vanishing property and the evaluation oracle

def vanishing_point(word: Sequence[int]) -> EvalPoint:
    """z_i = t^(-2 w_i)."""
    return EvalPoint.t_powers(-2 * a for a in word)


@dataclass
class VanishingReport:
    n: int
    words: list[str]
    # values[a][b] = KL_{words[a]} evaluated at the point of words[b]
    values: list[list[RatFuncT]]

    @property
    def ok(self) -> bool:
        m = len(self.words)
        return all((self.values[a][b].is_zero()) == (a != b) for a in range(m) for b in range(m))


def vanishing_report(n: int) -> VanishingReport:
    shapes = sub_partitions(staircase(n))
    words = [word_from_partition(s, n) for s in shapes]
    vals = []
    for s in shapes:
        f = kl_polynomial(s, n)
        vals.append([evaluate(f, vanishing_point(w)) for w in words])
    return VanishingReport(n, [format_word(w) for w in words], vals)


@lru_cache(maxsize=None)
def _diag_values(n: int) -> dict:
    out = {}
    for s in sub_partitions(staircase(n)):
        out[s] = evaluate(kl_polynomial(s, n), vanishing_point(word_from_partition(s, n)))
    return out


def kl_decompose(f: MultiPoly, n: int) -> dict[Partition, RatFuncT]:
    """Coordinates of f in the KL basis, read off at the vanishing points.

    Only meaningful for f in the span of the KL elements; callers should
    check the reconstruction when that is not known in advance.
    """
    out = {}
    for s, d in _diag_values(n).items():
        c = evaluate(f, vanishing_point(word_from_partition(s, n))) / d
        if not c.is_zero():
            out[s] = c
    return out


def homogeneous_prefactor(n: int) -> RatFuncT:
    """Delta Delta at z = 1, i.e. (t - 1/t)^(n(n-1))."""
    return RatFuncT(LaurentT({1: 1, -1: -1})) ** (n * (n - 1))
