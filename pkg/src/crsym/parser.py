"""Expression grammar for model polynomials.

::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary | unary)*      # juxtaposition multiplies
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := RATIONAL | 'i' | z<k> | zb<k> | w
            | ('conj' | 'Re' | 'Im' | 'abs2') '(' expr ')' | '(' expr ')'

Rational literals are ``p`` or ``p/q`` written without spaces.  Division is
only allowed by constants.  ``w`` may appear only outside conjugation.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .arith import GaussRat
from .ring import HoloPoly, MixedPoly, NotRealError

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^(),]))"
)
_FUNCS = {"conj", "Re", "Im", "abs2"}
_VAR = re.compile(r"(zb|z)([1-9]\d*)$")


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        where = f" at position {pos}"
        if text:
            where += f": {text[:pos]}<HERE>{text[pos:]}"
        super().__init__(message + where)


@dataclass
class _Tok:
    kind: str
    value: str
    pos: int


def _tokenize(s: str) -> list:
    toks = []
    pos = 0
    s = s.rstrip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {s[pos]!r}", pos, s)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append(_Tok(kind, m.group(kind), start))
        pos = m.end()
    toks.append(_Tok("end", "", len(s)))
    return toks


class _Parser:
    def __init__(self, text: str, n: int):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.n = n
        self.w_slot = 2 * n  # MixedPoly's trailing slot doubles as the w exponent here

    # -- helpers ------------------------------------------------------------
    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value: str) -> _Tok:
        t = self.take()
        if t.value != value:
            raise ParseError(f"expected {value!r}, found {t.value or 'end of input'!r}", t.pos, self.text)
        return t

    def const(self, c) -> MixedPoly:
        return MixedPoly.constant(self.n, c)

    def _starts_atom(self, t: _Tok) -> bool:
        return t.kind in ("num", "name") or t.value == "("

    # -- grammar ------------------------------------------------------------
    def parse(self) -> MixedPoly:
        out = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ParseError(f"unexpected token {t.value!r}", t.pos, self.text)
        return out

    def expr(self) -> MixedPoly:
        left = self.term()
        while self.peek().value in ("+", "-"):
            op = self.take().value
            right = self.term()
            left = left + right if op == "+" else left - right
        return left

    def term(self) -> MixedPoly:
        left = self.unary()
        while True:
            t = self.peek()
            if t.value == "*":
                self.take()
                left = left * self.unary()
            elif t.value == "/":
                self.take()
                right = self.unary()
                c = _as_constant(right)
                if c is None:
                    raise ParseError("division is only allowed by nonzero constants", t.pos, self.text)
                left = left.scale(c.inverse())
            elif self._starts_atom(t):
                left = left * self.power()
            else:
                return left

    def unary(self) -> MixedPoly:
        t = self.peek()
        if t.value == "-":
            self.take()
            return -self.unary()
        if t.value == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> MixedPoly:
        base = self.atom()
        if self.peek().value == "^":
            self.take()
            t = self.take()
            if t.kind != "num" or "/" in t.value:
                raise ParseError("exponent must be a nonnegative integer", t.pos, self.text)
            base = base ** int(t.value)
        return base

    def atom(self) -> MixedPoly:
        t = self.take()
        if t.kind == "num":
            return self.const(Fraction(t.value))
        if t.value == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if t.kind == "name":
            if t.value == "i":
                return self.const(GaussRat(0, 1))
            if t.value == "w":
                key = [0] * (2 * self.n + 1)
                key[self.w_slot] = 1
                return MixedPoly(self.n, {tuple(key): 1})
            m = _VAR.match(t.value)
            if m:
                j = int(m.group(2)) - 1
                key = [0] * (2 * self.n + 1)
                key[j + (self.n if m.group(1) == "zb" else 0)] = 1
                return MixedPoly(self.n, {tuple(key): 1})
            if t.value in _FUNCS:
                return self.call(t)
            raise ParseError(f"unknown identifier {t.value!r}", t.pos, self.text)
        raise ParseError(f"unexpected token {t.value or 'end of input'!r}", t.pos, self.text)

    def call(self, fn: _Tok) -> MixedPoly:
        self.expect("(")
        if self.peek().value == ")":
            raise ParseError(f"{fn.value}() takes exactly one argument, got 0", fn.pos, self.text)
        arg = self.expr()
        if self.peek().value == ",":
            raise ParseError(f"{fn.value}() takes exactly one argument", self.peek().pos, self.text)
        self.expect(")")
        if any(k[self.w_slot] for k, _ in arg.items()):
            raise ParseError(f"{fn.value}() of an expression involving w is not supported", fn.pos, self.text)
        c = arg.conj()
        if fn.value == "conj":
            return c
        if fn.value == "Re":
            return (arg + c).scale(Fraction(1, 2))
        if fn.value == "Im":
            return (arg - c).scale(GaussRat(0, Fraction(-1, 2)))
        return arg * c


def _as_constant(p: MixedPoly):
    if p.is_zero():
        return None
    if len(p) == 1:
        (k, c), = p.items()
        if not any(k):
            return c
    return None


def _max_index(text: str) -> int:
    best = 0
    for t in _tokenize(text):
        if t.kind == "name":
            m = _VAR.match(t.value)
            if m:
                best = max(best, int(m.group(2)))
    return best


def parse_expression(s: str, n: int | None = None, kind: str = "auto"):
    """Parse ``s`` into an exact polynomial.

    ``kind`` selects the result type: ``"real"`` (RealPoly), ``"holo"``
    (HoloPoly), ``"mixed"`` (MixedPoly in z, zb; any u-slot holds powers
    of w) or ``"auto"``: HoloPoly when no conjugates occur, RealPoly when the
    result is real, MixedPoly otherwise.
    """
    top = _max_index(s)
    if n is None:
        n = max(top, 1)
    elif top > n:
        raise ParseError(f"variable index {top} exceeds n={n}", 0, s)
    raw = _Parser(s, n).parse()
    if kind == "mixed":
        return raw
    has_w = any(k[2 * n] for k, _ in raw.items())
    has_conj = any(any(k[n:2 * n]) for k, _ in raw.items())
    if kind == "holo" or (kind == "auto" and not has_conj):
        if has_conj:
            raise ParseError("expression is not holomorphic (contains conjugates)", 0, s)
        return HoloPoly(n, {k[:n] + (k[2 * n],): c for k, c in raw.items()})
    if has_w:
        raise ParseError("w may only appear in holomorphic expressions", 0, s)
    if kind == "real":
        try:
            return raw.to_real()
        except NotRealError as exc:
            raise ParseError(f"expression is not real-valued ({exc})", 0, s) from None
    if kind == "auto":
        if raw.is_real():
            return raw.to_real()
        return raw
    raise ValueError(f"unknown kind {kind!r}")
