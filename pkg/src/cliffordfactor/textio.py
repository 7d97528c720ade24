"""Parser for the polynomial text grammar.

Examples of accepted input::

    t^2 - (2i+j+2)t + (2i+j+2k+1)        # H
    t^2 + 2is                            # S
    t^2 + 1 - eps*(j t - i)              # DH, also 'ε' for eps
    (t - k + eps*(j))(t + k)             # products are expanded

Sums, differences, products (explicit ``*`` or juxtaposition), integer powers
``^`` and division by rational constants are supported. ``t`` commutes with
everything; all other products keep their order. Rational literals like
``3/4`` written without spaces bind tighter than juxtaposition, so ``3/4j`` is
``(3/4)*j``.
"""
from __future__ import annotations

import re

from .algebra import H, Algebra, Clifford, algebra_from_name
from .errors import ParseError, UnknownSymbol
from .polynomial import AlgebraPolynomial
from .rational import rat

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d+)?(?:/\d+)?)|(?P<ident>[^\W\d]\w*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        out.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str, algebra: Algebra):
        self.text = text
        self.alg = algebra
        self.tokens = _tokenize(text)
        self.i = 0
        self.symbols = dict(algebra.symbols())
        if "eps" in self.symbols:
            self.symbols["ε"] = self.symbols["eps"]
        self.t = AlgebraPolynomial.t(algebra)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, value):
        kind, val, pos = self.take()
        if val != value:
            raise ParseError(f"expected {value!r}", pos)

    def parse(self) -> AlgebraPolynomial:
        if not self.tokens:
            raise ParseError("empty input", 0)
        out = self.expr()
        kind, val, pos = self.peek()
        if kind is not None:
            raise ParseError(f"unexpected {val!r}", pos)
        return out

    def expr(self):
        kind, val, pos = self.peek()
        neg = False
        if val in ("+", "-"):
            self.take()
            neg = val == "-"
        acc = self.term()
        if neg:
            acc = -acc
        while True:
            kind, val, pos = self.peek()
            if val not in ("+", "-"):
                return acc
            self.take()
            rhs = self.term()
            acc = acc + rhs if val == "+" else acc - rhs

    def _starts_factor(self, tok) -> bool:
        kind, val, _ = tok
        return kind in ("num", "ident") or val == "("

    def term(self):
        acc = self.factor()
        while True:
            tok = self.peek()
            kind, val, pos = tok
            if val == "*":
                self.take()
                acc = acc * self.factor()
            elif val == "/":
                self.take()
                d = self.factor()
                if d.degree != 0 or not d.coeffs[0].is_scalar():
                    raise ParseError("only division by nonzero rational constants is supported", pos)
                acc = acc * (1 / d.coeffs[0].scalar_part)
            elif self._starts_factor(tok):
                acc = acc * self.factor()
            else:
                return acc

    def factor(self):
        kind, val, pos = self.peek()
        if val in ("+", "-"):
            self.take()
            f = self.factor()
            return -f if val == "-" else f
        base = self.atom()
        kind, val, pos = self.peek()
        if val == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "num" or not val.isdigit():
                raise ParseError("exponent must be a non-negative integer", pos)
            base = base ** int(val)
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return AlgebraPolynomial([self.alg.scalar(rat(val))], self.alg)
        if kind == "ident":
            return self.identifier(val, pos)
        if val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind is None:
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {val!r}", pos)

    def identifier(self, name: str, pos: int):
        # a run like 'jt' or 'e12t' splits into the longest known symbols
        out = None
        k = 0
        while k < len(name):
            piece, value = self._longest(name, k)
            if piece is None:
                raise UnknownSymbol(f"unit symbol {name[k:]!r} is not part of {self.alg}", pos + k)
            out = value if out is None else out * value
            k += len(piece)
        return out

    def _longest(self, name: str, k: int):
        if isinstance(self.alg, Clifford):
            m = re.match(r"e(\d+)", name[k:])
            if m:
                digits = [int(ch) for ch in m.group(1)]
                if all(1 <= d <= self.alg.signature.n for d in digits) and len(set(digits)) == len(digits):
                    return m.group(0), AlgebraPolynomial([self.alg.blade(digits)], self.alg)
        best = None
        for sym in list(self.symbols) + ["t"]:
            if name.startswith(sym, k) and (best is None or len(sym) > len(best)):
                best = sym
        if best is None:
            return None, None
        if best == "t":
            return best, self.t
        return best, AlgebraPolynomial([self.symbols[best]], self.alg)


def parse_polynomial(text: str, algebra) -> AlgebraPolynomial:
    """Parse ``text`` into a polynomial over ``algebra`` (an :class:`Algebra` or its name)."""
    if isinstance(algebra, str):
        algebra = algebra_from_name(algebra)
    return _Parser(text, algebra).parse()


def parse_element(text: str, algebra):
    """Parse a constant (degree <= 0) expression into an algebra element."""
    if isinstance(algebra, str):
        algebra = algebra_from_name(algebra)
    p = parse_polynomial(text, algebra)
    if p.degree > 0:
        raise ParseError(f"{text!r} depends on t", 0)
    return p.coefficient(0)


def format_polynomial(C: AlgebraPolynomial) -> str:
    return str(C)


def format_element(x) -> str:
    return str(x)


def parse_real_polynomial(text: str):
    p = parse_polynomial(text, H)
    if not p.is_real():
        raise ParseError(f"{text!r} is not a real polynomial", 0)
    return p.to_real()

