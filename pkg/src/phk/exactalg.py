"""Exact coefficient arithmetic in the deformation parameter t.

Three value types live here:

* ``LaurentT``: Laurent polynomials in t with rational coefficients.
* ``RatFuncT``: quotients of Laurent polynomials, always stored in a
  canonical reduced form so that equality is structural.
* ``TauPoly``: Laurent polynomials in tau = -(t + 1/t), used to present
  results that are symmetric under t -> 1/t.

Everything is exact; there is no floating point anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .textfmt import ParseError, format_coeff_term, join_signed, parse_expression

__all__ = [
    "LaurentT",
    "RatFuncT",
    "TauPoly",
    "t_number",
    "y_value",
    "tau_express",
    "TAU",
    "as_ratfunc",
    "NotTauExpressible",
]

Number = Union[int, Fraction]


def _norm(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


# ---------------------------------------------------------------------------
# dense univariate helpers (coefficient lists, lowest degree first)

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _pdivmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    lead = Fraction(b[-1])
    q = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db]
        if c == 0:
            continue
        c = _norm(Fraction(c) / lead)
        q[k] = c
        for m in range(db + 1):
            a[k + m] -= c * b[m]
    return _trim(q), _trim(a[:db] if db > 0 else [])


def _pgcd(a: list, b: list) -> list:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    if not a:
        return []
    lead = Fraction(a[-1])
    return [_norm(Fraction(c) / lead) for c in a]


# ---------------------------------------------------------------------------

class LaurentT:
    """Laurent polynomial in t with rational coefficients (immutable)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Number] | None = None):
        clean = {}
        if terms:
            for k, c in terms.items():
                if c:
                    clean[int(k)] = _norm(c if isinstance(c, (int, Fraction)) else Fraction(c))
        self._terms = clean
        self._hash = None

    # construction -----------------------------------------------------
    @classmethod
    def monomial(cls, exp: int, coeff: Number = 1) -> "LaurentT":
        return cls({exp: coeff})

    @classmethod
    def const(cls, c: Number) -> "LaurentT":
        return cls({0: c})

    @classmethod
    def _wrap(cls, terms: dict) -> "LaurentT":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def from_poly(cls, coeffs: list, shift: int = 0) -> "LaurentT":
        return cls._wrap({k + shift: _norm(c) for k, c in enumerate(coeffs) if c})

    # inspection -------------------------------------------------------
    @property
    def terms(self) -> dict[int, Number]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, k: int) -> Number:
        return self._terms.get(k, 0)

    @property
    def min_exp(self) -> int:
        return min(self._terms) if self._terms else 0

    @property
    def max_exp(self) -> int:
        return max(self._terms) if self._terms else 0

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def to_poly(self) -> tuple[int, list]:
        """Return ``(s, coeffs)`` with self = t^s * sum coeffs[k] t^k and coeffs[0] != 0."""
        if not self._terms:
            return 0, []
        lo, hi = self.min_exp, self.max_exp
        out = [0] * (hi - lo + 1)
        for k, c in self._terms.items():
            out[k - lo] = c
        return lo, out

    def mirror(self) -> "LaurentT":
        """Substitute t -> 1/t."""
        return LaurentT._wrap({-k: c for k, c in self._terms.items()})

    def is_symmetric(self) -> bool:
        return self._terms == {-k: c for k, c in self._terms.items()}

    def shift(self, s: int) -> "LaurentT":
        return LaurentT._wrap({k + s: c for k, c in self._terms.items()})

    def evaluate(self, x: Number) -> Fraction:
        x = Fraction(x)
        return sum((c * x**k for k, c in self._terms.items()), Fraction(0))

    # arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "LaurentT | None":
        if isinstance(other, LaurentT):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentT.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in o._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = _norm(v)
            else:
                out.pop(k, None)
        return LaurentT._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentT._wrap({k: -c for k, c in self._terms.items()})

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
        out: dict[int, Number] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in o._terms.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentT._wrap({k: _norm(c) for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial Laurent polynomial")
            (k, c), = self._terms.items()
            return LaurentT({k * e: Fraction(c) ** e})
        result = LaurentT.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentT({k: Fraction(c) / other for k, c in self._terms.items()})
        if isinstance(other, LaurentT) and other.is_monomial():
            (k, c), = other._terms.items()
            return LaurentT({e - k: Fraction(v) / c for e, v in self._terms.items()})
        if isinstance(other, (LaurentT, RatFuncT)):
            return RatFuncT(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFuncT(o) / self

    def exact_div(self, other: "LaurentT") -> "LaurentT":
        """Divide, raising if the division leaves a remainder."""
        s1, p1 = self.to_poly()
        s2, p2 = other.to_poly()
        if not p2:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        q, r = _pdivmod(p1, p2)
        if r:
            raise ArithmeticError("inexact Laurent division")
        return LaurentT.from_poly(q, s1 - s2)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, RatFuncT):
                return other == self
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # text -------------------------------------------------------------
    def __str__(self) -> str:
        return _format_laurent(self._terms, "t")

    def __repr__(self) -> str:
        return f"LaurentT({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "LaurentT":
        val = as_ratfunc(_parse_t(text))
        if not val.is_laurent():
            raise ParseError(f"not a Laurent polynomial: {text!r}")
        return val.num


def _format_laurent(terms: Mapping[int, Number], var: str) -> str:
    parts = []
    for k in sorted(terms):
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        parts.append(format_coeff_term(terms[k], mono))
    return join_signed(parts)


def laurent_gcd(a: LaurentT, b: LaurentT) -> LaurentT:
    """Monic gcd of the polynomial parts (powers of t are units)."""
    _, pa = a.to_poly()
    _, pb = b.to_poly()
    return LaurentT.from_poly(_pgcd(pa, pb))


# ---------------------------------------------------------------------------

class RatFuncT:
    """Rational function in t in canonical form.

    The denominator is an ordinary polynomial with constant term 1 and no
    factor in common with the numerator; all powers of t sit in the
    numerator.  Two equal rational functions therefore have identical
    ``num`` and ``den``.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: "LaurentT | Number" = 0, den: "LaurentT | Number" = 1):
        if not isinstance(num, LaurentT):
            num = LaurentT.const(num)
        if not isinstance(den, LaurentT):
            den = LaurentT.const(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self._hash = None
        if num.is_zero():
            self.num, self.den = LaurentT(), LaurentT.const(1)
            return
        sd, pd = den.to_poly()
        sn, pn = num.to_poly()
        if len(pd) > 1 and len(pn) > 1:
            g = _pgcd(pn, pd)
            if len(g) > 1:
                pn, _ = _pdivmod(pn, g)
                pd, _ = _pdivmod(pd, g)
        c0 = Fraction(pd[0])
        if c0 != 1:
            pn = [_norm(Fraction(c) / c0) for c in pn]
            pd = [_norm(Fraction(c) / c0) for c in pd]
        self.num = LaurentT.from_poly(pn, sn - sd)
        self.den = LaurentT.from_poly(pd)

    @classmethod
    def _raw(cls, num: LaurentT, den: LaurentT) -> "RatFuncT":
        obj = cls.__new__(cls)
        obj.num, obj.den, obj._hash = num, den, None
        return obj

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den == 1

    def to_laurent(self) -> LaurentT:
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def evaluate(self, x: Number) -> Fraction:
        return self.num.evaluate(x) / self.den.evaluate(x)

    @staticmethod
    def _coerce(other) -> "RatFuncT | None":
        if isinstance(other, RatFuncT):
            return other
        if isinstance(other, LaurentT):
            return RatFuncT._raw(other, LaurentT.const(1))
        if isinstance(other, (int, Fraction)):
            return RatFuncT._raw(LaurentT.const(other), LaurentT.const(1))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFuncT(self.num + o.num, self.den)
        return RatFuncT(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFuncT._raw(-self.num, self.den)

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
        return RatFuncT(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFuncT":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFuncT(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFuncT._raw(self.num ** e, self.den ** e)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def sign(self) -> int:
        """Sign of the top coefficient of the numerator (0 for zero)."""
        if self.is_zero():
            return 0
        return 1 if self.num.coeff(self.num.max_exp) > 0 else -1

    def __str__(self) -> str:
        if self.is_laurent():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFuncT({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "RatFuncT":
        return as_ratfunc(_parse_t(text))


def as_ratfunc(x) -> RatFuncT:
    if isinstance(x, RatFuncT):
        return x
    if isinstance(x, LaurentT):
        return RatFuncT(x)
    if isinstance(x, (int, Fraction)):
        return RatFuncT(LaurentT.const(x))
    raise TypeError(f"cannot convert {type(x).__name__} to RatFuncT")


def _parse_t(text: str):
    def name(s: str):
        if s != "t":
            raise ParseError(f"unknown symbol {s!r}; only 't' is allowed")
        return RatFuncT._raw(LaurentT.monomial(1), LaurentT.const(1))

    return parse_expression(text, lambda k: RatFuncT(k), name)


# ---------------------------------------------------------------------------

def t_number(u: int) -> LaurentT:
    """[u] = (t^u - t^-u)/(t - t^-1); odd in u, [0] = 0."""
    if u == 0:
        return LaurentT()
    if u < 0:
        return -t_number(-u)
    return LaurentT._wrap({u - 1 - 2 * k: 1 for k in range(u)})


TAU = LaurentT({1: -1, -1: -1})


def y_value(v: int) -> RatFuncT:
    """-[v]/[v+1]; y_value(0) = 0 and y_value(1) = 1/tau."""
    if v == -1:
        raise ZeroDivisionError("y_value(-1) has a zero denominator")
    return RatFuncT(-t_number(v), t_number(v + 1))


# ---------------------------------------------------------------------------

class NotTauExpressible(ValueError):
    pass


class TauPoly:
    """Laurent polynomial in tau = -(t + 1/t)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Number] | None = None):
        self._terms = {int(k): _norm(c) for k, c in (terms or {}).items() if c}

    @property
    def terms(self) -> dict[int, Number]:
        return dict(self._terms)

    def to_ratfunc(self) -> RatFuncT:
        tau = RatFuncT(TAU)
        out = RatFuncT(0)
        for k, c in self._terms.items():
            out = out + tau ** k * c
        return out

    def __eq__(self, other):
        if isinstance(other, TauPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        return _format_laurent(self._terms, "T")

    def __repr__(self) -> str:
        return f"TauPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "TauPoly":
        from .symbolic import SymPoly

        p = SymPoly.parse(text)
        if not set(p.variables()) <= {"T"}:
            raise ParseError(f"only 'T' allowed in a tau polynomial: {text!r}")
        return cls({dict(k).get("T", 0): c for k, c in p.items()})


def _tau_from_symmetric(p: LaurentT) -> dict[int, Number]:
    out: dict[int, Number] = {}
    rest = p
    while not rest.is_zero():
        d = rest.max_exp
        if d < 0 or rest.min_exp != -d:
            raise NotTauExpressible(f"{p} is not symmetric under t -> 1/t")
        c = rest.coeff(d)
        # tau^d has top term (-1)^d t^d
        coeff = c if d % 2 == 0 else -c
        out[d] = coeff
        rest = rest - TAU ** d * coeff
    return out


def tau_express(p: "LaurentT | RatFuncT") -> TauPoly:
    """Rewrite a t -> 1/t symmetric value as a Laurent polynomial in tau.

    Negative powers of tau are allowed, so ``p`` may be a rational function
    whose denominator is a power of (t + 1/t) up to a monomial factor.
    """
    val = as_ratfunc(p)
    if val.is_zero():
        return TauPoly()
    tau = RatFuncT(TAU)
    span = val.den.max_exp
    for k in range(span + 1):
        q = val * tau ** k
        if q.is_laurent():
            if not q.num.is_symmetric():
                raise NotTauExpressible(f"{p} is not symmetric under t -> 1/t")
            return TauPoly({e - k: c for e, c in _tau_from_symmetric(q.num).items()})
    raise NotTauExpressible(f"denominator of {p} is not a power of tau")
