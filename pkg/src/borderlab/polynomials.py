"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from . import monomials as mon
from .monomials import Monomial


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to coefficients.

    Coefficients are ints where possible and ``Fraction`` otherwise.  Zero
    coefficients are never stored.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Monomial, Rational] | None = None):
        self.n = n
        clean = {}
        if terms:
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != n:
                    raise mon.DimensionError(f"monomial {m} is not over {n} variables")
                if c:
                    clean[m] = _norm(c)
        self.terms: dict[Monomial, Rational] = clean

    @classmethod
    def monomial(cls, m: Sequence[int], c: Rational = 1) -> "Polynomial":
        return cls(len(m), {tuple(m): c})

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n)

    @classmethod
    def constant(cls, n: int, c: Rational) -> "Polynomial":
        return cls(n, {mon.one(n): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.n, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def _combine(self, other: "Polynomial", sign: int) -> "Polynomial":
        if self.n != other.n:
            raise mon.DimensionError("polynomials over different numbers of variables")
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + sign * c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.n, out)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.n, other)
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.n, other)
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Polynomial(self.n, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(self.n, {m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.n != other.n:
            raise mon.DimensionError("polynomials over different numbers of variables")
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mon.mul(m1, m2)
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Polynomial(self.n, out)

    __rmul__ = __mul__

    def mul_monomial(self, m: Sequence[int], c: Rational = 1) -> "Polynomial":
        return Polynomial(self.n, {mon.mul(t, m): c * v for t, v in self.terms.items()})

    def times_var(self, alpha: int) -> "Polynomial":
        return Polynomial(self.n, {mon.times_var(t, alpha): v for t, v in self.terms.items()})

    def derivative(self, alpha: int) -> "Polynomial":
        """Formal partial derivative with respect to x_alpha (1-based)."""
        a = alpha - 1
        out = {}
        for m, c in self.terms.items():
            e = m[a]
            if e:
                lowered = list(m)
                lowered[a] -= 1
                out[tuple(lowered)] = c * e
        return Polynomial(self.n, out)

    def support(self) -> list[Monomial]:
        return mon.canonical_sorted(self.terms)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def leading_monomial(self) -> Monomial:
        """Lex-greatest monomial in the support."""
        return max(self.terms)

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def coefficient(self, m: Sequence[int]):
        return self.terms.get(tuple(m), 0)

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_polynomial(self)


def format_polynomial(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    pieces = []
    for m in sorted(p.terms, reverse=True):
        c = p.terms[m]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        body = mon.format_monomial(m)
        if body == "1":
            text = str(a)
        elif a == 1:
            text = body
        else:
            text = f"{a}*{body}"
        pieces.append((sign, text))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, text in pieces[1:]:
        out += f" {sign} {text}"
    return out


_TERM = re.compile(r"([+-]?)([^+-]+)")


def parse_polynomial(text: str, n: int) -> Polynomial:
    """Parse sums like ``x1^2 - 3*x2*x3 + 1/2``; coefficients are int or p/q."""
    compact = text.replace(" ", "")
    if not compact:
        raise ValueError("empty polynomial")
    if compact == "0":
        return Polynomial.zero(n)
    terms: dict = {}
    pos = 0
    for match in _TERM.finditer(compact):
        if match.start() != pos:
            raise ValueError(f"cannot parse polynomial {text!r}")
        pos = match.end()
        sign = -1 if match.group(1) == "-" else 1
        coeff = Fraction(1)
        factors = []
        for factor in match.group(2).split("*"):
            if factor.startswith("x"):
                factors.append(factor)
            elif factor:
                coeff *= Fraction(factor)
            else:
                raise ValueError(f"empty factor in {text!r}")
        m = mon.parse_monomial("*".join(factors), n) if factors else mon.one(n)
        terms[m] = terms.get(m, 0) + sign * coeff
    if pos != len(compact):
        raise ValueError(f"cannot parse polynomial {text!r}")
    return Polynomial(n, terms)


def linear_combination(n: int, pairs: Iterable[tuple[Rational, Polynomial]]) -> Polynomial:
    out: dict = {}
    for c, p in pairs:
        if not c:
            continue
        for m, v in p.terms.items():
            out[m] = out.get(m, 0) + c * v
    return Polynomial(n, out)
