"""Constant-term evaluations of the homogeneous limit.

Every integrand handled here is (a monomial shift of) a power series in
the x variables with nonnegative exponents, so the constant term is the
coefficient of one target monomial.  Terms whose x-exponent exceeds the
target in some variable can never come back down and are dropped as soon
as they appear.  Weight symbols (tau, y_k, t_k) ride along in the same
exponent tuples, which keeps the inner loop to plain tuple arithmetic.
"""

from __future__ import annotations

from math import comb
from typing import Mapping, Sequence

from .bases import homogeneous_prefactor, macdonald_polynomial
from .exactalg import TAU, RatFuncT, y_value
from .polyring import EvalPoint, evaluate
from .shapes import Partition, ShapeError
from .symbolic import SymPoly

__all__ = [
    "ct_A",
    "ct_N",
    "ct_N_punctured",
    "homogeneous_M",
    "homogeneous_M_ct",
    "macdonald_ct_params",
    "a_to_ratfunc",
    "CapExhausted",
    "DEFAULT_MAX_CAP_FACTOR",
]

DEFAULT_MAX_CAP_FACTOR = 16


class CapExhausted(RuntimeError):
    pass


class _Engine:
    """Truncated products in x_1..x_n times a fixed list of weight symbols."""

    def __init__(self, n: int, symbols: Sequence[str], target: Sequence[int]):
        self.n = n
        self.symbols = list(symbols)
        self.width = n + len(self.symbols)
        self.target = tuple(target)
        self.state: dict = {(0,) * self.width: 1}

    def key(self, x: Mapping[int, int] = {}, s: Mapping[str, int] = {}) -> tuple:
        k = [0] * self.width
        for i, e in x.items():
            k[i] += e
        for name, e in s.items():
            k[self.n + self.symbols.index(name)] += e
        return tuple(k)

    def multiply(self, factor: Mapping[tuple, int]) -> None:
        n, target = self.n, self.target
        fac = [(k, c) for k, c in factor.items() if c and all(k[i] <= target[i] for i in range(n))]
        out: dict = {}
        get = out.get
        for k1, c1 in self.state.items():
            for k2, c2 in fac:
                k = tuple(a + b for a, b in zip(k1, k2))
                if any(k[i] > target[i] for i in range(n)):
                    continue
                out[k] = get(k, 0) + c1 * c2
        self.state = {k: v for k, v in out.items() if v}

    def extract(self) -> SymPoly:
        terms = {}
        n = self.n
        for k, c in self.state.items():
            if k[:n] == self.target:
                mono = tuple((self.symbols[j], e) for j, e in enumerate(k[n:]) if e)
                terms[mono] = c
        return SymPoly(terms)


def ct_A(a: Sequence[int], y: Sequence | None = None) -> SymPoly:
    """CT of prod_i (1 + y_i x_{i+1}) x_{i+1}^(1-a_i) prod_{i<j} (x_j - x_i)(1 + x_i x_j + T x_j).

    ``a`` = (a_0..a_{n-1}); y_0 = 0.  With ``y`` omitted the result is a
    polynomial in T and the symbols y1..y_{n-1}; otherwise the given values
    (numbers or SymPoly) are substituted.
    """
    n = len(a)
    if n < 1:
        raise ValueError("need at least one exponent")
    target = [ak - 1 for ak in a]
    if any(e < 0 for e in target):
        return SymPoly()
    ysyms = [f"y{k}" for k in range(1, n)]
    eng = _Engine(n, ["T"] + ysyms, target)
    for k in range(1, n):
        eng.multiply({eng.key(): 1, eng.key({k: 1}, {f"y{k}": 1}): 1})
    for i in range(n):
        for j in range(i + 1, n):
            f: dict = {}
            for dx, sign in (({j: 1}, 1), ({i: 1}, -1)):
                for extra, s in (({}, {}), ({i: 1, j: 1}, {}), ({j: 1}, {"T": 1})):
                    x = dict(dx)
                    for v, e in extra.items():
                        x[v] = x.get(v, 0) + e
                    kk = eng.key(x, s)
                    f[kk] = f.get(kk, 0) + sign
            eng.multiply(f)
    res = eng.extract()
    if y is None:
        return res
    if len(y) != n - 1:
        raise ValueError(f"expected {n - 1} y values, got {len(y)}")
    return res.subs({f"y{k}": y[k - 1] for k in range(1, n)})


def _geometric(eng: _Engine, x: Mapping[int, int], cap: int) -> dict:
    """1 / (1 - x^m) truncated after ``cap`` powers."""
    out = {}
    for p in range(cap + 1):
        out[eng.key({i: e * p for i, e in x.items()})] = 1
    return out


def _ct_N_raw(n: int, cap: int, punctured_r: int | None) -> SymPoly:
    target = [2 * i for i in range(n)]
    if punctured_r is None:
        syms = [f"t{k}" for k in range(n)]
    else:
        syms = ["T"]
    eng = _Engine(n, syms, target)
    for i in range(n):
        if punctured_r is None:
            eng.multiply({eng.key(): 1, eng.key({i: 1}, {"t0": 1}): 1})
        else:
            eng.multiply({eng.key(): 1, eng.key({i: 1}): 1})
            eng.multiply({eng.key({i: b}, {"T": b}): comb(punctured_r, b) for b in range(punctured_r + 1)})
        eng.multiply(_geometric(eng, {i: 2}, cap))
    for i in range(n):
        for j in range(i + 1, n):
            wsym = f"t{i + 1}" if punctured_r is None else "T"
            eng.multiply({eng.key({j: 1}): 1, eng.key({i: 1}): -1})
            eng.multiply({eng.key(): 1, eng.key({j: 1}, {wsym: 1}): 1})
            eng.multiply(_geometric(eng, {i: 1, j: 1}, cap))
    return eng.extract()


def _stable(n: int, punctured_r: int | None, cap: int | None, max_cap: int | None) -> SymPoly:
    cap = cap or 2 * n
    max_cap = max_cap or DEFAULT_MAX_CAP_FACTOR * n
    prev = _ct_N_raw(n, cap, punctured_r)
    while cap * 2 <= max_cap:
        cap *= 2
        cur = _ct_N_raw(n, cap, punctured_r)
        if cur == prev:
            return cur
        prev = cur
    raise CapExhausted(f"constant term not stable up to cap {max_cap}")


def ct_N(n: int, weights: Mapping[str, object] | None = None, cap: int | None = None,
         max_cap: int | None = None) -> SymPoly:
    """Weighted TSSCPP generating function N(t_0..t_{n-1}) as a constant term.

    The geometric factors are truncated at ``cap`` powers; the cap is doubled
    until two successive results agree.
    """
    if n < 1:
        raise ValueError("n must be positive")
    res = _stable(n, None, cap, max_cap)
    return res.subs(weights) if weights else res


def ct_N_punctured(n: int, r: int, cap: int | None = None, max_cap: int | None = None) -> SymPoly:
    """Punctured generating function N_{n,r}(T) as a constant term."""
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    return _stable(n, r, cap, max_cap)


# ---------------------------------------------------------------------------

def macdonald_ct_params(lam: Partition, n: int, u: Sequence[int]) -> tuple[list[int], list[int]]:
    """Exponents a_0..a_{n-1} and shifts v_1..v_{n-1} for M_lambda(u).

    With rows counted from the top, lambda_k is the length of row n-k, so
    a_k = lambda_k + k + 1 and v_k = u_k + k - lambda_k.
    """
    if len(u) != n - 1:
        raise ShapeError(f"expected {n - 1} deformation parameters")
    lam_k = [0] + [lam.row(n - k) for k in range(1, n)]
    a = [lam_k[k] + k + 1 for k in range(n)]
    v = [u[k - 1] + k - lam_k[k] for k in range(1, n)]
    return a, v


def a_to_ratfunc(A: SymPoly, y: Sequence[RatFuncT]) -> RatFuncT:
    """Specialise a symbolic ct_A result at T = tau(t) and y_k = y[k-1]."""
    vals = {"T": RatFuncT(TAU)}
    vals.update({f"y{k}": y[k - 1] for k in range(1, len(y) + 1)})
    return A.evaluate(vals, RatFuncT(1))


def homogeneous_M(lam: Partition, n: int, u: Sequence[int], normalized: bool = True) -> RatFuncT:
    """M_lambda(u) at z = 1, by default divided by (t - 1/t)^(n(n-1))."""
    val = evaluate(macdonald_polynomial(lam, n, u), EvalPoint.ones(2 * n))
    return val / homogeneous_prefactor(n) if normalized else val


def homogeneous_M_ct(lam: Partition, n: int, u: Sequence[int]) -> RatFuncT:
    """The same normalised evaluation computed from the constant term."""
    a, v = macdonald_ct_params(lam, n, u)
    return a_to_ratfunc(ct_A(a), [y_value(vk) for vk in v])
