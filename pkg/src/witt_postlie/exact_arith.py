"""Exact scalars: rationals and polynomials in a fixed set of formal parameters.

Rationals are :class:`fractions.Fraction` (integral values are kept as plain
``int`` internally for speed).  :class:`Poly` is a canonical sparse polynomial
over Q in the declared parameters, so equality and zero testing are decidable.

Text form used on every external surface::

    >>> str(Poly.parse("a^2 - a + 1/2"))
    'a^2 - a + 1/2'
    >>> str(-2 * Poly.var("b"))
    '-2*b'
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Union

from .errors import MissingParameterError, ParseError, UnknownParameterError

PARAMS = ("a", "b", "c", "alpha", "epsilon", "mu", "t_param")
_PARAM_INDEX = {name: i for i, name in enumerate(PARAMS)}

Rational = Fraction
Number = Union[int, Fraction]


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def parse_rational(text: str) -> Fraction:
    """Parse ``"3/2"``, ``"-1"`` or ``"0"`` exactly; decimals are rejected."""
    s = text.strip()
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", s):
        raise ParseError(f"not an exact rational literal: {text!r}")
    num, _, den = s.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(q: Number) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@lru_cache(maxsize=4096)
def _mono_mul(k1: tuple, k2: tuple) -> tuple:
    if not k1:
        return k2
    if not k2:
        return k1
    exps = dict(k1)
    for v, e in k2:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def _mono_sort_key(mono: tuple):
    vec = [0] * len(PARAMS)
    for v, e in mono:
        vec[v] = e
    return (sum(vec), vec)


class Poly:
    """Immutable polynomial over Q in the parameters of :data:`PARAMS`.

    Internally a dict from monomial (a sorted tuple of ``(param_index,
    exponent)`` pairs, ``()`` for the constant monomial) to a nonzero
    rational coefficient.
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[tuple, Number] | None = None):
        t = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    t[mono] = _norm(c)
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t: dict) -> "Poly":
        p = cls.__new__(cls)
        p._t = t
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Number) -> "Poly":
        if isinstance(c, float):
            raise TypeError("floating-point scalars are not supported")
        return cls._raw({(): _norm(c)} if c else {})

    @classmethod
    def var(cls, name: str) -> "Poly":
        if name not in _PARAM_INDEX:
            raise UnknownParameterError(f"unknown parameter {name!r}; expected one of {PARAMS}")
        return cls._raw({((_PARAM_INDEX[name], 1),): 1})

    @classmethod
    def from_exponents(cls, terms: Mapping[tuple, Number]) -> "Poly":
        """Build from full exponent vectors (length ``len(PARAMS)``)."""
        t = {}
        for vec, c in terms.items():
            if len(vec) != len(PARAMS) or any(e < 0 for e in vec):
                raise ValueError(f"bad exponent vector {vec!r}")
            mono = tuple((i, e) for i, e in enumerate(vec) if e)
            t[mono] = t.get(mono, 0) + c
        return cls(t)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict:
        """Map full exponent vector -> coefficient (no zero coefficients)."""
        out = {}
        for mono, c in self._t.items():
            vec = [0] * len(PARAMS)
            for v, e in mono:
                vec[v] = e
            out[tuple(vec)] = Fraction(c)
        return out

    def is_zero(self) -> bool:
        return not self._t

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and () in self._t)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return Fraction(self._t.get((), 0))

    def degree(self) -> int:
        if not self._t:
            return -1
        return max(sum(e for _, e in mono) for mono in self._t)

    def params(self) -> frozenset:
        return frozenset(PARAMS[v] for mono in self._t for v, _ in mono)

    def items(self):
        return self._t.items()

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def coerce(x) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction)):
            return Poly.const(x)
        if isinstance(x, str):
            return Poly.parse(x)
        raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")

    def __add__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)):
                other = Poly.const(other)
            else:
                return NotImplemented
        if not other._t:
            return self
        if not self._t:
            return other
        t = dict(self._t)
        for mono, c in other._t.items():
            s = t.get(mono, 0) + c
            if s:
                t[mono] = _norm(s)
            else:
                del t[mono]
        return Poly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self._t.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)):
                other = Poly.const(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)):
                if not other:
                    return ZERO
                return Poly._raw({m: _norm(c * other) for m, c in self._t.items()})
            return NotImplemented
        if not self._t or not other._t:
            return ZERO
        t = {}
        for m1, c1 in self._t.items():
            for m2, c2 in other._t.items():
                m = _mono_mul(m1, m2)
                s = t.get(m, 0) + c1 * c2
                if s:
                    t[m] = s
                else:
                    del t[m]
        return Poly._raw({m: _norm(c) for m, c in t.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._t == other._t
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self._t
            return self._t == {(): other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __bool__(self):
        return bool(self._t)

    # -- substitution -------------------------------------------------------

    def subs(self, assignment: Mapping[str, Number]) -> "Poly":
        """Substitute rationals for some parameters; others stay formal."""
        idx = {}
        for name, val in assignment.items():
            if name not in _PARAM_INDEX:
                raise UnknownParameterError(f"unknown parameter {name!r}")
            idx[_PARAM_INDEX[name]] = Fraction(val)
        if not idx:
            return self
        t = {}
        for mono, c in self._t.items():
            coeff = Fraction(c)
            rest = []
            for v, e in mono:
                if v in idx:
                    coeff *= idx[v] ** e
                else:
                    rest.append((v, e))
            key = tuple(rest)
            t[key] = t.get(key, 0) + coeff
        return Poly(t)

    def evaluate(self, assignment: Mapping[str, Number]) -> Fraction:
        """Exact value under ``assignment``; every occurring parameter must be bound."""
        for name in sorted(self.params(), key=_PARAM_INDEX.get):
            if name not in assignment:
                raise MissingParameterError(name)
        return Fraction(self.subs({k: v for k, v in assignment.items() if k in self.params()}).constant_value())

    # -- text form ----------------------------------------------------------

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for mono in sorted(self._t, key=_mono_sort_key, reverse=True):
            c = Fraction(self._t[mono])
            factors = "*".join(PARAMS[v] if e == 1 else f"{PARAMS[v]}^{e}" for v, e in mono)
            if not factors:
                s = format_rational(c)
            elif c == 1:
                s = factors
            elif c == -1:
                s = "-" + factors
            else:
                s = f"{format_rational(c)}*{factors}"
            parts.append(s)
        out = parts[0]
        for s in parts[1:]:
            out += " - " + s[1:] if s.startswith("-") else " + " + s
        return out

    def __repr__(self):
        return f"Poly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Poly":
        return _Parser(text).parse()


ZERO = Poly()
ONE = Poly.const(1)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = []
        pos = 0
        while pos < len(text):
            mt = _TOKEN.match(text, pos)
            if mt.group(0).strip() == "":
                break
            col = mt.start(mt.lastindex) + 1
            if mt.group(1) is not None:
                self.toks.append(("num", int(mt.group(1)), col))
            elif mt.group(2) is not None:
                self.toks.append(("name", mt.group(2), col))
            else:
                self.toks.append(("op", mt.group(3), col))
            pos = mt.end()
        self.i = 0

    def _err(self, msg, col=None):
        if col is None:
            col = self.toks[self.i][2] if self.i < len(self.toks) else len(self.text) + 1
        raise ParseError(f"{msg} at column {col} in {self.text!r}")

    def _peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, None)

    def _next(self):
        tok = self._peek()
        self.i += 1
        return tok

    def parse(self):
        if not self.toks:
            self._err("empty expression", 1)
        sign = 1
        if self._peek()[:2] == ("op", "-"):
            self._next()
            sign = -1
        out = self._term() * sign
        while self.i < len(self.toks):
            kind, val, col = self._next()
            if kind != "op" or val not in "+-":
                self._err(f"unexpected {val!r}", col)
            t = self._term()
            out = out + t if val == "+" else out - t
        return out

    def _term(self):
        out = self._factor()
        while self._peek()[:2] == ("op", "*"):
            self._next()
            out = out * self._factor()
        return out

    def _factor(self):
        kind, val, col = self._next()
        if kind == "num":
            if self._peek()[:2] == ("op", "/"):
                self._next()
                k2, den, c2 = self._next()
                if k2 != "num" or den == 0:
                    self._err("bad denominator", c2)
                return Poly.const(Fraction(val, den))
            return Poly.const(val)
        if kind == "name":
            if val not in _PARAM_INDEX:
                self._err(f"unknown parameter {val!r}", col)
            p = Poly.var(val)
            if self._peek()[:2] == ("op", "^"):
                self._next()
                k2, e, c2 = self._next()
                if k2 != "num":
                    self._err("bad exponent", c2)
                p = p ** e
            return p
        self._err("expected a number or parameter", col)


# Functional surface mirroring the operation list.

def add(x, y) -> Poly:
    return Poly.coerce(x) + Poly.coerce(y)


def mul(x, y) -> Poly:
    return Poly.coerce(x) * Poly.coerce(y)


def evaluate(x, assignment: Mapping[str, Number]) -> Fraction:
    return Poly.coerce(x).evaluate(assignment)


def is_zero(x) -> bool:
    return Poly.coerce(x).is_zero()
