"""Sparse Laurent polynomials in named symbols with rational coefficients.

Used for weight polynomials (t0, t1, ...), tau-polynomials (``T``), the
y-symbols of the transition coefficients, and Schubert polynomials in the
x/y alphabets.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Mapping, Union

from .textfmt import ParseError, format_coeff_term, join_signed, parse_expression

Number = Union[int, Fraction]
Mono = tuple  # sorted tuple of (name, exponent) pairs, exponents nonzero

__all__ = ["SymPoly", "sym", "natural_key"]


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def natural_key(name: str) -> tuple:
    """Sort symbols so that t2 < t10 and T < t."""
    head = name.rstrip("0123456789")
    tail = name[len(head):]
    return (head, int(tail) if tail else -1)


def _mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        s = d.get(v, 0) + e
        if s:
            d[v] = s
        else:
            del d[v]
    return tuple(sorted(d.items(), key=lambda ve: natural_key(ve[0])))


class SymPoly:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Mono, Number] | None = None):
        self._terms = {}
        for m, c in (terms or {}).items():
            if c:
                key = tuple(sorted(((v, e) for v, e in m if e), key=lambda ve: natural_key(ve[0])))
                self._terms[key] = _norm(self._terms.get(key, 0) + c)
                if not self._terms[key]:
                    del self._terms[key]

    @classmethod
    def _wrap(cls, terms: dict) -> "SymPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def var(cls, name: str) -> "SymPoly":
        return cls._wrap({((name, 1),): 1})

    @classmethod
    def const(cls, c: Number) -> "SymPoly":
        return cls._wrap({(): _norm(c)} if c else {})

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {()}

    def constant_value(self) -> Number:
        return self._terms.get((), 0)

    def variables(self) -> list[str]:
        names = {v for m in self._terms for v, _ in m}
        return sorted(names, key=natural_key)

    def coefficient(self, mono: Mapping[str, int]) -> Number:
        key = tuple(sorted(((v, e) for v, e in mono.items() if e), key=lambda ve: natural_key(ve[0])))
        return self._terms.get(key, 0)

    def num_terms(self) -> int:
        return len(self._terms)

    def coefficient_sum(self) -> Number:
        return sum(self._terms.values())

    # arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(o) -> "SymPoly | None":
        if isinstance(o, SymPoly):
            return o
        if isinstance(o, (int, Fraction)):
            return SymPoly.const(o)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in o._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = _norm(v)
            else:
                out.pop(m, None)
        return SymPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return SymPoly._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in o._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return SymPoly._wrap({m: _norm(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymPoly._wrap({m: _norm(Fraction(c) / other) for m, c in self._terms.items()})
        if isinstance(other, SymPoly) and len(other._terms) == 1:
            (m, c), = other._terms.items()
            inv = tuple((v, -e) for v, e in m)
            return SymPoly._wrap({_mono_mul(k, inv): _norm(Fraction(v) / c) for k, v in self._terms.items()})
        raise ZeroDivisionError("SymPoly division only by numbers or monomials")

    def __pow__(self, e: int):
        if e < 0:
            if len(self._terms) != 1:
                raise ValueError("negative power of a non-monomial")
            (m, c), = self._terms.items()
            return SymPoly._wrap({tuple((v, k * e) for v, k in m): _norm(Fraction(c) ** e)})
        result = SymPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    # substitution -----------------------------------------------------
    def evaluate(self, values: Mapping[str, Any], one: Any = 1) -> Any:
        """Substitute every symbol and sum with the values' own arithmetic."""
        total = None
        cache: dict = {}
        for m, c in self._terms.items():
            term = one * c
            for v, e in m:
                key = (v, e)
                if key not in cache:
                    if v not in values:
                        raise KeyError(f"no value for symbol {v!r}")
                    cache[key] = values[v] ** e
                term = term * cache[key]
            total = term if total is None else total + term
        return one * 0 if total is None else total

    def subs(self, values: Mapping[str, Any]) -> "SymPoly":
        """Partial substitution; missing symbols stay symbolic."""
        full = {v: values.get(v, SymPoly.var(v)) for v in self.variables()}
        full = {v: (SymPoly.const(x) if isinstance(x, (int, Fraction)) else x) for v, x in full.items()}
        return self.evaluate(full, SymPoly.const(1))

    # text -------------------------------------------------------------
    def _sort_key(self, m: Mono):
        deg = sum(e for _, e in m)
        return (deg, tuple((natural_key(v), -e) for v, e in m))

    def __str__(self) -> str:
        parts = []
        for m in sorted(self._terms, key=self._sort_key):
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            parts.append(format_coeff_term(self._terms[m], mono))
        return join_signed(parts)

    def __repr__(self) -> str:
        return f"SymPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "SymPoly":
        return parse_expression(text, lambda k: cls.const(k), cls.var)


def sym(name: str) -> SymPoly:
    return SymPoly.var(name)
