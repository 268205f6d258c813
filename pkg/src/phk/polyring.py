"""Polynomials in z_1..z_N over Q(t) and the Hecke-type operators on them.

A ``MultiPoly`` is stored as a numerator with integer (or rational)
coefficients in the variables z_1..z_N *and* t, together with one common
denominator in t.  Operators only ever multiply the common denominator by
t-numbers, so all the heavy lifting is plain dictionary arithmetic on
exponent tuples whose last slot is the power of t.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from ._sparse import divided_difference_dict
from .exactalg import LaurentT, RatFuncT, as_ratfunc, laurent_gcd, t_number
from .textfmt import ParseError, parse_expression

__all__ = [
    "MultiPoly",
    "EvalPoint",
    "divided_difference",
    "nabla",
    "hecke_T",
    "baxterized_T",
    "t_vandermonde",
    "evaluate",
    "act_sequence",
    "OperatorError",
]

Coeff = Union[RatFuncT, LaurentT, int, Fraction]


class OperatorError(ValueError):
    pass


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _scale_num(num: dict, lt: LaurentT) -> dict:
    items = list(lt.items())
    if len(items) == 1 and items[0][0] == 0:
        c0 = items[0][1]
        if c0 == 1:
            return dict(num)
        return {k: _norm(c * c0) for k, c in num.items()}
    out: dict = {}
    get = out.get
    for key, c in num.items():
        head, te = key[:-1], key[-1]
        for k, cc in items:
            m = head + (te + k,)
            out[m] = get(m, 0) + c * cc
    return {k: _norm(v) for k, v in out.items() if v}


def _add_into(out: dict, num: dict, sign: int = 1) -> None:
    get = out.get
    for k, c in num.items():
        v = get(k, 0) + sign * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)


class MultiPoly:
    """Immutable polynomial in z_1..z_n with coefficients in Q(t)."""

    __slots__ = ("n", "_num", "_den", "_terms")

    def __init__(self, n: int, terms: Mapping[Sequence[int], Coeff] | None = None):
        if n < 0:
            raise ValueError("number of variables must be nonnegative")
        self.n = n
        self._terms = None
        coeffs = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {n} variables")
            c = as_ratfunc(c)
            if not c.is_zero():
                coeffs[exps] = coeffs.get(exps, RatFuncT(0)) + c
        den = LaurentT.const(1)
        for c in coeffs.values():
            if c.den != den:
                g = laurent_gcd(den, c.den)
                den = den * c.den.exact_div(g)
        num: dict = {}
        for exps, c in coeffs.items():
            lt = c.num * den.exact_div(c.den)
            for k, v in lt.items():
                num[exps + (k,)] = v
        self._num, self._den = num, den

    @classmethod
    def _raw(cls, n: int, num: dict, den: LaurentT) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj.n, obj._num, obj._den, obj._terms = n, num, den, None
        return obj

    @classmethod
    def zero(cls, n: int) -> "MultiPoly":
        return cls._raw(n, {}, LaurentT.const(1))

    @classmethod
    def const(cls, c: Coeff, n: int) -> "MultiPoly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def variable(cls, k: int, n: int) -> "MultiPoly":
        if not 1 <= k <= n:
            raise ValueError(f"variable index {k} out of range 1..{n}")
        e = [0] * (n + 1)
        e[k - 1] = 1
        return cls._raw(n, {tuple(e): 1}, LaurentT.const(1))

    # inspection -------------------------------------------------------
    @property
    def terms(self) -> dict[tuple[int, ...], RatFuncT]:
        """Map from z-exponent vector to canonical RatFuncT coefficient."""
        if self._terms is None:
            grouped: dict = {}
            for key, c in self._num.items():
                grouped.setdefault(key[:-1], {})[key[-1]] = c
            out = {}
            for exps, lt in grouped.items():
                r = RatFuncT(LaurentT(lt), self._den)
                if not r.is_zero():
                    out[exps] = r
            self._terms = out
        return dict(self._terms)

    def coeff(self, exps: Sequence[int]) -> RatFuncT:
        return self.terms.get(tuple(exps), RatFuncT(0))

    def is_zero(self) -> bool:
        return not self._num

    def num_terms(self) -> int:
        return len({k[:-1] for k in self._num})

    def degrees(self) -> set[int]:
        return {sum(k[:-1]) for k in self._num}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def common_denominator(self) -> LaurentT:
        return self._den

    # arithmetic -------------------------------------------------------
    def _check(self, other: "MultiPoly") -> None:
        if other.n != self.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def _lift(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (RatFuncT, LaurentT, int, Fraction)):
            return MultiPoly.const(other, self.n)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self._den == o._den:
            out = dict(self._num)
            _add_into(out, o._num)
            return MultiPoly._raw(self.n, out, self._den)
        g = laurent_gcd(self._den, o._den)
        m1 = o._den.exact_div(g)
        m2 = self._den.exact_div(g)
        out = _scale_num(self._num, m1)
        _add_into(out, _scale_num(o._num, m2))
        return MultiPoly._raw(self.n, out, self._den * m1)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.n, {k: -c for k, c in self._num.items()}, self._den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c: Coeff) -> "MultiPoly":
        c = as_ratfunc(c)
        if c.is_zero():
            return MultiPoly.zero(self.n)
        return MultiPoly._raw(self.n, _scale_num(self._num, c.num), self._den * c.den)

    def __mul__(self, other):
        if isinstance(other, (RatFuncT, LaurentT, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out: dict = {}
        get = out.get
        for k1, c1 in self._num.items():
            for k2, c2 in other._num.items():
                m = tuple(a + b for a, b in zip(k1, k2))
                out[m] = get(m, 0) + c1 * c2
        return MultiPoly._raw(self.n, {k: _norm(v) for k, v in out.items() if v}, self._den * other._den)

    __rmul__ = __mul__

    def _as_scalar(self) -> RatFuncT:
        zero = (0,) * self.n
        if any(k[:-1] != zero for k in self._num):
            raise ParseError("division by a non-constant polynomial")
        return RatFuncT(LaurentT({k[-1]: c for k, c in self._num.items()}), self._den)

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            other = other._as_scalar()
        if isinstance(other, (RatFuncT, LaurentT, int, Fraction)):
            return self.scale(as_ratfunc(other).inverse())
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            return MultiPoly.const(self._as_scalar() ** e, self.n)
        result = MultiPoly.const(1, self.n)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (RatFuncT, LaurentT, int, Fraction)):
            other = MultiPoly.const(other, self.n)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if other.n != self.n:
            return False
        if self._den == other._den:
            return self._num == other._num
        return _scale_num(self._num, other._den) == _scale_num(other._num, self._den)

    __hash__ = None  # type: ignore[assignment]

    def first_difference(self, other: "MultiPoly") -> tuple[int, ...] | None:
        """An exponent vector where self and other differ, or None."""
        diff = (self - other).terms
        if not diff:
            return None
        return max(diff, key=lambda e: (sum(e), e))

    def swap(self, i: int) -> "MultiPoly":
        """The simple transposition s_i acting on variables."""
        a, b = i - 1, i
        out = {}
        for k, c in self._num.items():
            lst = list(k)
            lst[a], lst[b] = lst[b], lst[a]
            out[tuple(lst)] = c
        return MultiPoly._raw(self.n, out, self._den)

    def __str__(self) -> str:
        terms = self.terms
        if not terms:
            return "0"
        pieces = []
        for exps in sorted(terms, key=lambda e: (sum(e), e), reverse=True):
            c = terms[exps]
            neg = c.sign() < 0
            if neg:
                c = -c
            mono = "*".join(f"z{k + 1}" if e == 1 else f"z{k + 1}^{e}" for k, e in enumerate(exps) if e)
            if not mono:
                body = f"({c})"
            elif c == 1:
                body = mono
            else:
                body = f"({c})*{mono}"
            pieces.append((neg, body))
        out = []
        for k, (neg, body) in enumerate(pieces):
            if k == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"MultiPoly({self.n}, {str(self)!r})"

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "MultiPoly":
        import re

        if n is None:
            idx = [int(m) for m in re.findall(r"z(\d+)", text)]
            n = max(idx) if idx else 0

        def name(s: str) -> MultiPoly:
            if s == "t":
                return MultiPoly.const(LaurentT.monomial(1), n)
            if s.startswith("z") and s[1:].isdigit():
                return MultiPoly.variable(int(s[1:]), n)
            raise ParseError(f"unknown symbol {s!r}")

        val = parse_expression(text, lambda k: MultiPoly.const(k, n), name)
        return val

    def to_json(self) -> dict:
        terms = self.terms
        return {
            "variables": [f"z{k}" for k in range(1, self.n + 1)],
            "terms": [
                {"exponents": list(e), "coeff_num": str(terms[e].num), "coeff_den": str(terms[e].den)}
                for e in sorted(terms, key=lambda e: (sum(e), e), reverse=True)
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "MultiPoly":
        n = len(data["variables"])
        terms = {}
        for item in data["terms"]:
            terms[tuple(item["exponents"])] = RatFuncT(
                LaurentT.parse(item["coeff_num"]), LaurentT.parse(item["coeff_den"])
            )
        return cls(n, terms)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


# ---------------------------------------------------------------------------
# operators

def _check_index(i: int, f: MultiPoly) -> None:
    if not 1 <= i < f.n:
        raise OperatorError(f"operator index {i} out of range 1..{f.n - 1}")


def divided_difference(i: int, f: MultiPoly) -> MultiPoly:
    """(f - s_i f) / (z_i - z_{i+1})."""
    _check_index(i, f)
    return MultiPoly._raw(f.n, divided_difference_dict(f._num, i - 1, i), f._den)


def _nabla_num(i: int, f: MultiPoly) -> dict:
    a, b = i - 1, i
    tpos = f.n
    out: dict = {}
    get = out.get
    for key, c in f._num.items():
        p, q = key[a], key[b]
        if p == q:
            continue
        if p > q:
            lo, hi, s = q, p, c
        else:
            lo, hi, s = p, q, -c
        base = list(key)
        total = p + q - 1
        te = key[tpos]
        for k in range(lo, hi):
            # (t z_a - t^-1 z_b) * z_a^k z_b^(total-k)
            base[a] = k + 1
            base[b] = total - k
            base[tpos] = te + 1
            m = tuple(base)
            v = get(m, 0) + s
            if v:
                out[m] = v
            else:
                del out[m]
            base[a] = k
            base[b] = total - k + 1
            base[tpos] = te - 1
            m = tuple(base)
            v = get(m, 0) - s
            if v:
                out[m] = v
            else:
                del out[m]
    return out


def nabla(i: int, f: MultiPoly) -> MultiPoly:
    """(t z_i - t^-1 z_{i+1}) times the divided difference; equals T_i + t^-1."""
    _check_index(i, f)
    return MultiPoly._raw(f.n, _nabla_num(i, f), f._den)


def hecke_T(i: int, f: MultiPoly) -> MultiPoly:
    """T_i = nabla_i - t^-1."""
    _check_index(i, f)
    out = _nabla_num(i, f)
    _add_into(out, _scale_num(f._num, LaurentT.monomial(-1)), -1)
    return MultiPoly._raw(f.n, out, f._den)


def baxterized_T(i: int, u: int, f: MultiPoly) -> MultiPoly:
    """T_i(u) = T_i + t^-u/[u]; the argument u must be nonzero."""
    if u == 0:
        raise OperatorError("baxterised operator with spectral argument 0 is undefined")
    _check_index(i, f)
    if u == 1:
        return MultiPoly._raw(f.n, _nabla_num(i, f), f._den)
    # T_i(u) f = ([u] nabla_i f - [u-1] f) / [u]
    tu = t_number(u)
    out = _scale_num(_nabla_num(i, f), tu)
    _add_into(out, _scale_num(f._num, t_number(u - 1)), -1)
    return MultiPoly._raw(f.n, out, f._den * tu)


def act_sequence(schedule: Sequence[tuple[int, int]], f: MultiPoly) -> MultiPoly:
    """Apply a product T_{i1}(u1) T_{i2}(u2) ... to f; the last factor acts first."""
    for i, u in reversed(list(schedule)):
        f = baxterized_T(i, u, f)
    return f


def t_vandermonde(indices: Sequence[int], n: int) -> MultiPoly:
    """prod_{a<b} (t z_{i_a} - t^-1 z_{i_b}) over the given variable indices."""
    result = {(0,) * (n + 1): 1}
    idx = list(indices)
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            ia, ib = idx[a] - 1, idx[b] - 1
            out: dict = {}
            get = out.get
            for key, c in result.items():
                k1 = list(key)
                k1[ia] += 1
                k1[n] += 1
                m1 = tuple(k1)
                out[m1] = get(m1, 0) + c
                k2 = list(key)
                k2[ib] += 1
                k2[n] -= 1
                m2 = tuple(k2)
                out[m2] = get(m2, 0) - c
            result = {k: v for k, v in out.items() if v}
    return MultiPoly._raw(n, result, LaurentT.const(1))


# ---------------------------------------------------------------------------
# evaluation

@dataclass(frozen=True)
class EvalPoint:
    """A point in Q(t)^N."""

    values: tuple

    def __init__(self, values: Iterable[Coeff]):
        object.__setattr__(self, "values", tuple(as_ratfunc(v) for v in values))

    @classmethod
    def ones(cls, n: int) -> "EvalPoint":
        return cls([1] * n)

    @classmethod
    def t_powers(cls, exps: Iterable[int]) -> "EvalPoint":
        return cls([LaurentT.monomial(e) for e in exps])

    def __len__(self) -> int:
        return len(self.values)


def evaluate(f: MultiPoly, point: "EvalPoint | Sequence[Coeff]") -> RatFuncT:
    if not isinstance(point, EvalPoint):
        point = EvalPoint(point)
    if len(point) != f.n:
        raise ValueError(f"point has {len(point)} coordinates, polynomial has {f.n} variables")
    vals = point.values
    if all(v.is_laurent() and v.num.is_monomial() for v in vals):
        shifts = []
        scal = []
        for v in vals:
            (k, c), = v.num.items()
            shifts.append(k)
            scal.append(c)
        trivial = all(c == 1 for c in scal)
        acc: dict[int, object] = {}
        for key, c in f._num.items():
            e = key[-1]
            for j in range(f.n):
                if key[j]:
                    e += shifts[j] * key[j]
                    if not trivial:
                        c = c * scal[j] ** key[j]
            acc[e] = acc.get(e, 0) + c
        return RatFuncT(LaurentT(acc), f._den)
    total = RatFuncT(0)
    powers: dict = {}
    t = RatFuncT(LaurentT.monomial(1))
    for key, c in f._num.items():
        term = RatFuncT(c)
        for j in range(f.n):
            if key[j]:
                pk = (j, key[j])
                if pk not in powers:
                    powers[pk] = vals[j] ** key[j]
                term = term * powers[pk]
        total = total + term * t ** key[-1]
    return total / RatFuncT(f._den)
