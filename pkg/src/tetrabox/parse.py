"""Expression language for elements of A and of the loop algebra.

Grammar, loosest binding first::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/' | '⊗') unary)*
    unary   := '-' unary | power
    power   := postfix ['^' ['-'] INT]
    postfix := primary "'"{0,2}
    primary := NUMBER | NAME | '(' expr ')' | '[' expr ',' expr ']'

``x``, ``y``, ``z`` are the loop atoms ``x⊗1`` etc.  Named constants are
``x12 .. x02`` (any ordered pair), ``a<n>``, ``b<n>`` and ``X<n>``, ``Y<n>``,
``Z<n>`` for the like-element basis.  ``**`` is accepted for ``^``, and the
typographic minus and prime are accepted too.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ExprSyntaxError, LinearityError
from .loop import LoopElem, bracket, loop_prime, std_gen
from .onsager import seq_ab, seq_xyz
from .ring import T, RingElem, ring_prime

__all__ = ["Expr", "Num", "Name", "Neg", "BinOp", "Pow", "Prime", "Bracket", "parse", "evaluate", "parse_value"]


@dataclass(frozen=True)
class Expr:
    pos: int


@dataclass(frozen=True)
class Num(Expr):
    value: Fraction


@dataclass(frozen=True)
class Name(Expr):
    name: str


@dataclass(frozen=True)
class Neg(Expr):
    operand: Expr


@dataclass(frozen=True)
class BinOp(Expr):
    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exponent: int


@dataclass(frozen=True)
class Prime(Expr):
    operand: Expr
    times: int


@dataclass(frozen=True)
class Bracket(Expr):
    left: Expr
    right: Expr


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\.\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<pow>\*\*|\^)
  | (?P<op>[-+*/⊗(),\[\]'])
    """,
    re.VERBOSE,
)

_TRANSLATE = str.maketrans({"−": "-", "′": "'", "·": "*"})


def _tokenize(text: str):
    text = text.translate(_TRANSLATE)
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            value = m.group()
            if kind == "op":
                kind = value
            elif kind == "pow":
                kind = "^"
            tokens.append((kind, value, pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            shown = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ExprSyntaxError(f"expected {kind!r}, found {shown}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> Expr:
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ExprSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op, _, pos = self.take()
            node = BinOp(pos, op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek()[0] in ("*", "/", "⊗"):
            op, _, pos = self.take()
            node = BinOp(pos, "/" if op == "/" else "*", node, self.unary())
        return node

    def unary(self):
        if self.peek()[0] == "-":
            pos = self.take()[2]
            return Neg(pos, self.unary())
        if self.peek()[0] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        node = self.postfix()
        if self.peek()[0] == "^":
            pos = self.take()[2]
            sign = 1
            if self.peek()[0] == "-":
                self.take()
                sign = -1
            tok = self.peek()
            if tok[0] != "num" or "." in tok[1]:
                raise ExprSyntaxError("exponent must be an integer", tok[2])
            self.take()
            node = Pow(pos, node, sign * int(tok[1]))
            if self.peek()[0] == "^":
                raise ExprSyntaxError("chained exponents need parentheses", self.peek()[2])
        return node

    def postfix(self):
        node = self.primary()
        count = 0
        while self.peek()[0] == "'":
            tok = self.take()
            count += 1
            if count > 2:
                raise ExprSyntaxError("at most two primes may follow an expression", tok[2])
        return Prime(node.pos, node, count) if count else node

    def primary(self):
        kind, value, pos = self.peek()
        if kind == "num":
            self.take()
            return Num(pos, Fraction(value))
        if kind == "name":
            self.take()
            return Name(pos, value)
        if kind == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        if kind == "[":
            self.take()
            left = self.expr()
            self.take(",")
            right = self.expr()
            self.take("]")
            return Bracket(pos, left, right)
        shown = "end of input" if kind == "end" else repr(value)
        raise ExprSyntaxError(f"unexpected {shown}", pos)


def parse(text: str) -> Expr:
    """Parse ``text`` into an expression tree."""
    return _Parser(text).parse()


_GEN = re.compile(r"x([0-3])([0-3])$")
_SEQ = re.compile(r"([abXYZ])(\d+)$")


def _resolve(name: str, pos: int):
    if name == "t":
        return T
    if name in ("x", "y", "z"):
        return getattr(LoopElem, name)()
    m = _GEN.match(name)
    if m and m.group(1) != m.group(2):
        return std_gen((int(m.group(1)), int(m.group(2))))
    m = _SEQ.match(name)
    if m:
        letter, n = m.group(1), int(m.group(2))
        if letter in "ab":
            return seq_ab(letter, n)
        return seq_xyz(letter.lower(), n)
    raise ExprSyntaxError(f"unknown name {name!r}", pos)


def _is_loop(v):
    return isinstance(v, LoopElem)


def evaluate(node: Expr):
    """Evaluate a tree to a RingElem or LoopElem."""
    if isinstance(node, Num):
        return RingElem.const(node.value)
    if isinstance(node, Name):
        return _resolve(node.name, node.pos)
    if isinstance(node, Neg):
        return -evaluate(node.operand)
    if isinstance(node, Prime):
        v = evaluate(node.operand)
        return loop_prime(v, node.times) if _is_loop(v) else ring_prime(v, node.times)
    if isinstance(node, Pow):
        v = evaluate(node.base)
        if _is_loop(v):
            raise LinearityError(f"cannot raise a loop element to a power (position {node.pos})")
        return v ** node.exponent
    if isinstance(node, Bracket):
        u, v = evaluate(node.left), evaluate(node.right)
        if not (_is_loop(u) and _is_loop(v)):
            raise LinearityError(f"bracket needs two loop elements (position {node.pos})")
        return bracket(u, v)
    if isinstance(node, BinOp):
        u, v = evaluate(node.left), evaluate(node.right)
        if node.op in ("+", "-"):
            if _is_loop(u) != _is_loop(v):
                # a zero scalar is harmless, anything else mixes degrees
                zero, other = (u, v) if not _is_loop(u) else (v, u)
                if zero:
                    raise LinearityError(f"cannot add a scalar to a loop element (position {node.pos})")
                return other if node.op == "+" or other is u else -other
            return u + v if node.op == "+" else u - v
        if node.op == "*":
            if _is_loop(u) and _is_loop(v):
                raise LinearityError(f"product of two loop elements (position {node.pos})")
            return u * v if _is_loop(u) or not _is_loop(v) else v * u
        if _is_loop(v):
            raise LinearityError(f"cannot divide by a loop element (position {node.pos})")
        if _is_loop(u):
            return LoopElem(u.f / v, u.g / v, u.h / v)
        return u / v
    raise TypeError(f"unknown node {node!r}")


def parse_value(text: str):
    """Parse and evaluate in one step."""
    return evaluate(parse(text))
