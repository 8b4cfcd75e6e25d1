"""Exact sparse polynomials in three variables over the rationals.

Coefficients are :class:`fractions.Fraction`; exponents are plain Python ints,
so nothing here ever rounds or overflows.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import prod
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from .errors import PolynomialSyntaxError

Exponent = tuple[int, int, int]
Coefficient = Union[int, Fraction]

VARIABLES = ("x", "y", "z")
_ALIASES = {"x": 0, "y": 1, "z": 2, "x1": 0, "x2": 1, "x3": 2}


def grlex_key(a: Exponent) -> tuple[int, int, int, int]:
    """Sort key for graded lex with x > y > z (larger key = larger monomial)."""
    return (sum(a), a[0], a[1], a[2])


def dot(a: Iterable[int], b: Iterable[int]) -> int:
    return sum(p * q for p, q in zip(a, b))


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; decimals are rejected."""
    if not re.fullmatch(r"\s*[+-]?\d+\s*(/\s*\d+\s*)?", text):
        raise ValueError(f"not a rational literal (use p/q or an integer): {text!r}")
    value = Fraction(text.replace(" ", ""))
    return value


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


class SparsePolynomial:
    """Immutable polynomial in x, y, z with exact rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, Coefficient] | None = None):
        clean: dict[Exponent, Fraction] = {}
        for a, c in (terms or {}).items():
            a = tuple(int(e) for e in a)
            if len(a) != 3 or min(a) < 0:
                raise ValueError(f"bad exponent vector {a}")
            c = Fraction(c)
            if c:
                clean[a] = clean.get(a, Fraction(0)) + c
                if not clean[a]:
                    del clean[a]
        self._terms = MappingProxyType(clean)
        self._hash = None

    # construction helpers
    @classmethod
    def monomial(cls, a: Exponent, coeff: Coefficient = 1) -> "SparsePolynomial":
        return cls({tuple(a): coeff})

    @classmethod
    def constant(cls, c: Coefficient) -> "SparsePolynomial":
        return cls({(0, 0, 0): c})

    @classmethod
    def binomial(cls, u: Exponent, v: Exponent) -> "SparsePolynomial":
        return cls({tuple(u): 1, tuple(v): -1})

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def support(self) -> list[Exponent]:
        return sorted(self._terms, key=grlex_key, reverse=True)

    def coefficient(self, a: Exponent) -> Fraction:
        return self._terms.get(tuple(a), Fraction(0))

    def total_degree(self) -> int:
        return max((sum(a) for a in self._terms), default=-1)

    # ring operations
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for a, c in other._terms.items():
            out[a] = out.get(a, Fraction(0)) + c
        return SparsePolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePolynomial({a: -c for a, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = SparsePolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return dict(self._terms) == dict(other._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"SparsePolynomial({str(self)!r})"

    def __str__(self):
        return display(self)

    def to_json(self) -> dict[str, str]:
        """Map ``"a1,a2,a3"`` -> ``"p/q"``, in display order."""
        return {",".join(map(str, a)): format_rational(self._terms[a]) for a in self.support()}


def _coerce(value):
    if isinstance(value, SparsePolynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return SparsePolynomial.constant(value)
    return NotImplemented


def multiply(f: SparsePolynomial, g: SparsePolynomial) -> SparsePolynomial:
    out: dict[Exponent, Fraction] = {}
    for a, c in f.terms.items():
        for b, d in g.terms.items():
            e = (a[0] + b[0], a[1] + b[1], a[2] + b[2])
            out[e] = out.get(e, Fraction(0)) + c * d
    return SparsePolynomial(out)


def partial_derivative(f: SparsePolynomial, axis: int) -> SparsePolynomial:
    """Formal derivative with respect to x_axis, axis in {1, 2, 3}."""
    if axis not in (1, 2, 3):
        raise ValueError("axis must be 1, 2 or 3")
    i = axis - 1
    out = {}
    for a, c in f.terms.items():
        if a[i]:
            b = list(a)
            b[i] -= 1
            out[tuple(b)] = c * a[i]
    return SparsePolynomial(out)


def substitute_parametrization(f: SparsePolynomial, n: Iterable[int]) -> dict[int, Fraction]:
    """f(t^n1, t^n2, t^n3) as a sparse map ``power -> coefficient`` (empty means 0)."""
    n = tuple(n)
    if len(n) != 3 or min(n) <= 0:
        raise ValueError("weights must be three positive integers")
    out: dict[int, Fraction] = {}
    for a, c in f.terms.items():
        p = dot(n, a)
        out[p] = out.get(p, Fraction(0)) + c
    return {p: c for p, c in sorted(out.items()) if c}


def falling(a: Exponent, alpha: Exponent) -> int:
    """Coefficient picked up by x^a under d^alpha (0 when alpha exceeds a)."""
    if any(q > p for p, q in zip(a, alpha)):
        return 0
    return prod(prod(range(p - q + 1, p + 1)) for p, q in zip(a, alpha))


# ---------------------------------------------------------------- display / parse

def _monomial_text(a: Exponent) -> str:
    parts = []
    for var, e in zip(VARIABLES, a):
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f"{var}^{e}")
    return "*".join(parts)


def monomial_text(a: Exponent) -> str:
    return _monomial_text(a) or "1"


def display(f: SparsePolynomial) -> str:
    """Canonical text: terms in grlex-descending order, e.g. ``y^2 - x*z``."""
    if f.is_zero():
        return "0"
    pieces = []
    for k, a in enumerate(f.support()):
        c = f.terms[a]
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        mono = _monomial_text(a)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if k == 0:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolynomialSyntaxError(f"unexpected character {text[col]!r}", col)
        start = m.start(m.lastgroup)
        tokens.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    # expr   := ['+'|'-'] term (('+'|'-') term)*
    # term   := factor (('*'|'/') factor)*      '/' only by a rational constant
    # factor := atom ('^' integer)?
    # atom   := integer | variable | '(' expr ')'

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise PolynomialSyntaxError(f"expected {op!r}", pos)

    def parse(self) -> SparsePolynomial:
        kind, _, pos = self.peek()
        if kind == "end":
            raise PolynomialSyntaxError("empty expression", pos)
        f = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise PolynomialSyntaxError(f"unexpected {val!r}", pos)
        return f

    def expr(self):
        kind, val, _ = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.take()
            negate = val == "-"
        f = self.term()
        if negate:
            f = -f
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                g = self.term()
                f = f + g if val == "+" else f - g
            else:
                return f

    def term(self):
        f = self.factor()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                self.take()
                f = f * self.factor()
            elif kind == "op" and val == "/":
                self.take()
                g = self.factor()
                if g.is_zero():
                    raise PolynomialSyntaxError("division by zero", pos)
                if set(g.terms) != {(0, 0, 0)}:
                    raise PolynomialSyntaxError("can only divide by a constant", pos)
                f = f * SparsePolynomial.constant(1 / g.terms[(0, 0, 0)])
            else:
                return f

    def factor(self):
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, pos = self.take()
            if kind == "op" and val == "-":
                raise PolynomialSyntaxError("negative exponent", pos)
            if kind != "num":
                raise PolynomialSyntaxError("exponent must be a nonnegative integer", pos)
            return base ** int(val)
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return SparsePolynomial.constant(int(val))
        if kind == "name":
            if val not in _ALIASES:
                raise PolynomialSyntaxError(f"unknown identifier {val!r}", pos)
            e = [0, 0, 0]
            e[_ALIASES[val]] = 1
            return SparsePolynomial.monomial(tuple(e))
        if kind == "op" and val == "(":
            f = self.expr()
            self.expect_op(")")
            return f
        raise PolynomialSyntaxError("unexpected end of input" if kind == "end" else f"unexpected {val!r}", pos)


def parse_polynomial(text: str) -> SparsePolynomial:
    """Parse text such as ``"y^2 - x*z"`` or ``"3/2*x1*x3 + (x+y)^2"``."""
    return _Parser(text).parse()
