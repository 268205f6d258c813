"""Double Schubert polynomials indexed by codes, and flagged determinants.

Y_v(x, y) is computed from its dominant lift
prod_i prod_{j <= lambda_i} (x_i - y_j) by divided differences in x.
Everything happens on exponent tuples over the formal letters
x_1..x_m, y_1..y_M; the requested alphabets are substituted at the end.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence, Union

from ._sparse import divided_difference_dict
from .shapes import Partition, ShapeError, staircase, sub_partitions
from .symbolic import SymPoly

__all__ = [
    "parse_code",
    "format_code",
    "dominant_lift",
    "schubert_dominant",
    "schubert",
    "x_divided_difference",
    "ybar",
    "ytilde",
    "complete_h",
    "determinant",
    "flag_schur_det",
    "rho_over_lambda_code",
    "even_partitions",
    "schubert_sum_N",
]

Letter = Union[SymPoly, int]


def parse_code(text: str) -> tuple[int, ...]:
    s = text.strip().strip("[]").strip()
    if not s:
        return ()
    try:
        code = tuple(int(x) for x in s.split(","))
    except ValueError as exc:
        raise ShapeError(f"bad code {text!r}") from exc
    if any(c < 0 for c in code):
        raise ShapeError(f"codes have nonnegative entries: {text!r}")
    return code


def format_code(code: Sequence[int]) -> str:
    return "[" + ",".join(map(str, code)) + "]"


def dominant_lift(code: Sequence[int], strategy: str = "first") -> tuple[tuple[int, ...], list[int]]:
    """Return (dominant code, [i_1, ..., i_k]) with Y_code = d_{i_1} ... d_{i_k} Y_dominant."""
    w = list(code)
    chain = []
    while True:
        ascents = [i for i in range(len(w) - 1) if w[i] < w[i + 1]]
        if not ascents:
            return tuple(w), chain
        i = ascents[0] if strategy == "first" else ascents[-1]
        w[i], w[i + 1] = w[i + 1] + 1, w[i]
        chain.append(i + 1)


def schubert_dominant(lam: Partition, x=None, y=None) -> SymPoly:
    """prod_i prod_{j <= lam_i} (x_i - y_j)."""
    xs = _letters(x, len(lam), "x")
    ys = _letters(y, lam.row(1), "y")
    out = SymPoly.const(1)
    for i in range(1, len(lam) + 1):
        for j in range(1, lam.row(i) + 1):
            out = out * (SymPoly.const(0) + xs[i - 1] - ys[j - 1])
    return out


def x_divided_difference(i: int, p: SymPoly, name: str = "x") -> SymPoly:
    """(p - s_i p) / (x_i - x_{i+1}) on a SymPoly in the letters x1, x2, ..."""
    a, b = f"{name}{i}", f"{name}{i + 1}"
    split: dict = {}
    for mono, c in p.items():
        d = dict(mono)
        key = (d.pop(a, 0), d.pop(b, 0), tuple(sorted(d.items())))
        split[key] = split.get(key, 0) + c
    out = {}
    for (ea, eb, rest), c in divided_difference_dict(split, 0, 1).items():
        out[rest + ((a, ea), (b, eb))] = c
    return SymPoly(out)


@lru_cache(maxsize=None)
def _schubert_formal(code: tuple, with_y: bool, strategy: str) -> tuple[int, int, dict]:
    dom, chain = dominant_lift(code, strategy)
    m = len(code)
    ny = max(dom, default=0) if with_y else 0
    width = m + ny
    poly = {(0,) * width: 1}
    for i, lam_i in enumerate(dom):
        for j in range(lam_i):
            out: dict = {}
            for k, c in poly.items():
                kx = list(k)
                kx[i] += 1
                kx = tuple(kx)
                out[kx] = out.get(kx, 0) + c
                if with_y:
                    ky = list(k)
                    ky[m + j] += 1
                    ky = tuple(ky)
                    out[ky] = out.get(ky, 0) - c
            poly = {k: v for k, v in out.items() if v}
    for i in reversed(chain):
        poly = divided_difference_dict(poly, i - 1, i)
    return m, ny, poly


def _letters(alpha, count: int, name: str) -> list:
    if alpha is None:
        return [SymPoly.var(f"{name}{k}") for k in range(1, count + 1)]
    if isinstance(alpha, int):
        return [alpha] * count
    alpha = list(alpha)
    if len(alpha) < count:
        raise ShapeError(f"alphabet {name} needs at least {count} letters, got {len(alpha)}")
    return alpha[:count]


def schubert(code: Sequence[int], x=None, y=None, strategy: str = "first") -> SymPoly:
    """Y_code(x, y).

    ``x``/``y`` are sequences of letters (SymPoly or integers); ``None`` means
    the formal letters x1, x2, ... / y1, y2, ...; the integer 0 means the
    zero alphabet.
    """
    code = tuple(code)
    with_y = not (isinstance(y, int) and y == 0) and not (y is not None and not isinstance(y, int) and all(
        isinstance(v, int) and v == 0 for v in y))
    m, ny, poly = _schubert_formal(code, with_y, strategy)
    xs = _letters(x, m, "x")
    ys = _letters(y, ny, "y") if with_y else []
    letters = xs + ys
    total = SymPoly()
    cache: dict = {}
    for k, c in poly.items():
        term = SymPoly.const(c)
        for pos, e in enumerate(k):
            if e:
                key = (pos, e)
                if key not in cache:
                    v = letters[pos]
                    cache[key] = (SymPoly.const(v) if isinstance(v, int) else v) ** e
                term = term * cache[key]
                if term.is_zero():
                    break
        total = total + term
    return total


# ---------------------------------------------------------------------------

def ybar(length: int) -> list[Letter]:
    """(t0, t1, 0, t2, 0, t3, ...): t_k sits at position 2k, zeros at odd positions > 1."""
    out: list[Letter] = []
    for pos in range(1, length + 1):
        if pos == 1:
            out.append(SymPoly.var("t0"))
        elif pos % 2 == 0:
            out.append(SymPoly.var(f"t{pos // 2}"))
        else:
            out.append(0)
    return out


def ytilde(length: int) -> list[Letter]:
    """(t0, t1, t2, ...)."""
    return [SymPoly.var(f"t{k}") for k in range(length)]


def complete_h(k: int, prefix: int, alphabet: Sequence[Letter]) -> SymPoly:
    """Complete symmetric function of degree k in the first ``prefix`` letters."""
    if k < 0:
        return SymPoly()
    if prefix > len(alphabet):
        raise ShapeError(f"alphabet has only {len(alphabet)} letters, {prefix} requested")
    letters = [a for a in alphabet[:prefix] if not (isinstance(a, int) and a == 0)]
    # h_k over letters[0..r): row-by-row dynamic programme
    row = [SymPoly.const(1)] + [SymPoly() for _ in range(k)]
    for a in letters:
        a = SymPoly.const(a) if isinstance(a, int) else a
        for d in range(1, k + 1):
            row[d] = row[d] + a * row[d - 1]
    return row[k]


def determinant(mat: Sequence[Sequence[SymPoly]]) -> SymPoly:
    size = len(mat)
    if size == 0:
        return SymPoly.const(1)

    @lru_cache(maxsize=None)
    def minor(row: int, cols: tuple) -> SymPoly:
        if row == size:
            return SymPoly.const(1)
        total = SymPoly()
        for pos, c in enumerate(cols):
            entry = mat[row][c]
            if isinstance(entry, int):
                entry = SymPoly.const(entry)
            if entry.is_zero():
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            term = entry * sub
            total = total + (term if pos % 2 == 0 else -term)
        return total

    return minor(0, tuple(range(size)))


def flag_schur_det(rho: Partition, lam: Partition, alphabet: Sequence[Letter], flag: Sequence[int]) -> SymPoly:
    """det( h_{rho_i - mu_j - i + j}(flag_i) ) with mu the conjugate of lam."""
    size = len(flag)
    mu = lam.conjugate()
    mat = [
        [complete_h(rho.row(i) - mu.row(j) - i + j, flag[i - 1], alphabet) for j in range(1, size + 1)]
        for i in range(1, size + 1)
    ]
    return determinant(mat)


def rho_over_lambda_code(n: int, lam: Partition) -> tuple[int, ...]:
    """[0, n-1-mu_1, 0, n-2-mu_2, 0, ..., 0] of length 2n-1, mu = conjugate of lam."""
    if not staircase(n).contains(lam):
        raise ShapeError(f"{lam} is not contained in the staircase for n={n}")
    mu = lam.conjugate()
    code = [0] * (2 * n - 1)
    for k in range(1, n):
        code[2 * k - 1] = n - k - mu.row(k)
    return tuple(code)


def even_partitions(n: int) -> list[Partition]:
    return [p for p in sub_partitions(staircase(n)) if p.is_even()]


def schubert_sum_N(n: int, method: str = "schubert") -> SymPoly:
    """N(t_0..t_{n-1}) as a sum over even partitions inside the staircase.

    ``method="schubert"`` sums Y_{rho/lambda}(ybar, 0); ``method="det"``
    sums the flagged determinants over (t0, t1, ...) with flag (2, ..., n).
    """
    if n < 1:
        raise ValueError("n must be positive")
    total = SymPoly()
    rho = staircase(n)
    for lam in even_partitions(n):
        if method == "schubert":
            total = total + schubert(rho_over_lambda_code(n, lam), ybar(2 * n - 1), 0)
        elif method == "det":
            total = total + flag_schur_det(rho, lam, ytilde(n), list(range(2, n + 1)))
        else:
            raise ValueError(f"unknown method {method!r}")
    return total
