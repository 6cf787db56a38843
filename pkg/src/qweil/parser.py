"""Expression language for the command line.

    expr    := tensor (("+" | "-") tensor)*
    tensor  := product ("ox" product)*
    product := unary (("*" | "/") unary)*
    unary   := "-" unary | power
    power   := atom ("^" ["-"] INT)?
    atom    := INT | NAME | "(" expr ")"

Names: E F K Ki X Y Z C W (U_q), v2 v0 vm2 (Cl_q), e f h (classical
Clifford), q L c t r2 (scalars).  "ox" is the tensor sign of W_q.
Division is allowed by scalars only.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import cliffordq as clq
from . import uqsl2
from .cliffordq import ClElem, ClqElem
from .scalars import L, Scalar, as_scalar, c, q, r2, t
from .uqsl2 import UqElem
from .weil import WqElem, tensor


class ExprError(ValueError):
    """Base class for parse and elaboration errors."""


class ParseError(ExprError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"syntax error at line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class SortError(ExprError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|(ox)\b|([A-Za-z][A-Za-z0-9]*)|(.))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    line: int
    column: int


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    start = text.rfind("\n", 0, offset) + 1
    return line, offset - start + 1


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        num, ox, name, other = m.groups()
        start = m.start(m.lastindex)
        line, col = _position(text, start)
        if num is not None:
            tokens.append(Token("int", num, line, col))
        elif ox is not None:
            tokens.append(Token("op", "ox", line, col))
        elif name is not None:
            if name not in NAMES:
                raise ParseError(f"unknown name {name!r}", line, col)
            tokens.append(Token("name", name, line, col))
        elif other in "+-*/^()":
            tokens.append(Token("op", other, line, col))
        else:
            raise ParseError(f"unexpected character {other!r}", line, col)
        pos = m.end()
    line, col = _position(text, len(text))
    tokens.append(Token("end", "", line, col))
    return tokens


# --- syntax tree -----------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Name:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    line: int = 0
    column: int = 0


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.take()
        if tok.text != text or tok.kind != "op":
            raise ParseError(f"expected {text!r}, found {tok.text or 'end of input'!r}", tok.line, tok.column)
        return tok

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.line, tok.column)
        return node

    def _binary(self, ops: tuple, sub):
        node = sub()
        while self.peek().kind == "op" and self.peek().text in ops:
            tok = self.take()
            node = BinOp(tok.text, node, sub(), tok.line, tok.column)
        return node

    def expr(self):
        return self._binary(("+", "-"), self.tensor)

    def tensor(self):
        return self._binary(("ox",), self.product)

    def product(self):
        return self._binary(("*", "/"), self.unary)

    def unary(self):
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek().kind == "op" and self.peek().text == "^":
            self.take()
            sign = 1
            if self.peek().kind == "op" and self.peek().text == "-":
                self.take()
                sign = -1
            tok = self.take()
            if tok.kind != "int":
                raise ParseError("exponent must be an integer", tok.line, tok.column)
            base = Pow(base, sign * int(tok.text))
            if self.peek().kind == "op" and self.peek().text == "^":
                tok = self.peek()
                raise ParseError("chained exponents need parentheses", tok.line, tok.column)
        return base

    def atom(self):
        tok = self.take()
        if tok.kind == "int":
            return Num(int(tok.text))
        if tok.kind == "name":
            return Name(tok.text)
        if tok.kind == "op" and tok.text == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.line, tok.column)


def parse(text: str):
    """Syntax tree of ``text``; raises ParseError with line and column."""
    return _Parser(text).parse()


# --- elaboration ------------------------------------------------------------------------


NAMES = {
    "E": lambda: uqsl2.E,
    "F": lambda: uqsl2.F,
    "K": lambda: uqsl2.K,
    "Ki": lambda: uqsl2.Ki,
    "X": lambda: uqsl2.X,
    "Y": lambda: uqsl2.Y,
    "Z": lambda: uqsl2.Z,
    "C": uqsl2.casimir,
    "W": lambda: uqsl2.W,
    "v2": lambda: clq.v2,
    "v0": lambda: clq.v0,
    "vm2": lambda: clq.vm2,
    "e": lambda: clq.e,
    "f": lambda: clq.f,
    "h": lambda: clq.h,
    "q": lambda: q,
    "L": lambda: L,
    "c": lambda: c,
    "t": lambda: t,
    "r2": lambda: r2,
}


def sort_name(value) -> str:
    for cls in (Scalar, UqElem, ClqElem, ClElem, WqElem):
        if isinstance(value, cls):
            return cls.__name__
    raise TypeError(type(value).__name__)


def _mul(a, b):
    sa, sb = sort_name(a), sort_name(b)
    if sa == "Scalar" or sb == "Scalar" or sa == sb:
        return a * b
    raise SortError(f"cannot multiply {sa} by {sb} without ox")


def _add(a, b, sign: int):
    sa, sb = sort_name(a), sort_name(b)
    if sa != sb and "Scalar" not in (sa, sb):
        raise SortError(f"cannot add {sa} and {sb}")
    if sa == "Scalar" and sb != "Scalar":
        return b * sign + a
    return a + b * sign


def _ox(a, b):
    sa, sb = sort_name(a), sort_name(b)
    if sa not in ("Scalar", "UqElem") or sb not in ("Scalar", "ClqElem"):
        raise SortError(f"ox needs a U_q element on the left and a Cl_q element on the right, not {sa} ox {sb}")
    return tensor(a, b)


def _pow(a, n: int):
    if isinstance(a, Scalar):
        return a ** n
    if isinstance(a, UqElem):
        try:
            return a ** n
        except ValueError as exc:
            raise SortError(str(exc)) from None
    if n < 0:
        raise SortError(f"negative powers of {sort_name(a)} are not defined")
    out = a * 0 + 1
    for _ in range(n):
        out = out * a
    return out


def evaluate(node):
    if isinstance(node, Num):
        return as_scalar(node.value)
    if isinstance(node, Name):
        return NAMES[node.name]()
    if isinstance(node, Neg):
        return evaluate(node.operand) * -1
    if isinstance(node, Pow):
        return _pow(evaluate(node.base), node.exponent)
    a, b = evaluate(node.left), evaluate(node.right)
    if node.op == "+":
        return _add(a, b, 1)
    if node.op == "-":
        return _add(a, b, -1)
    if node.op == "*":
        return _mul(a, b)
    if node.op == "ox":
        return _ox(a, b)
    if node.op == "/":
        if not isinstance(b, Scalar):
            raise SortError(f"can only divide by a scalar, not by {sort_name(b)}")
        if b.is_zero():
            raise ExprError("zero divisor")
        return a * b.inverse()
    raise AssertionError(node.op)


def evaluate_text(text: str):
    return evaluate(parse(text))


def same_value(a, b) -> bool:
    """Equality up to the embedding of scalars into every sort."""
    if sort_name(a) == sort_name(b):
        return a == b
    if isinstance(a, Scalar):
        a, b = b, a
    if isinstance(b, Scalar):
        return (a - b).is_zero()
    return False
