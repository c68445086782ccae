"""Text grammar for series and differential polynomials.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ['^' INT]
    atom   := INT | tK | t | u | v | omega | '(' expr ')'
            | (xI | x | y) '[' '(' INT, ... ')' ']'

``t1..tm`` (aliases ``t,u,v`` when m <= 3) are the series variables and
``x1..xn`` (aliases ``x,y`` when n <= 2) the differential indeterminates.
``omega`` is the boolean series with full support.  Expressions are read into
a small syntax tree and then evaluated over the rational, fraction or boolean
coefficient domain.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .diffpoly import DiffMonomial, DiffPoly
from .lattice import DimensionError
from .series import ALIASES, BSeries, KFraction, KPoly, unit


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int = 0):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.column = col


_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.)")


@dataclass
class Tok:
    kind: str  # "int", "name", "op", "end"
    value: str
    pos: int


def tokenize(text: str) -> list[Tok]:
    toks = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        mt = _TOKEN.match(text, pos)
        if mt.group(1):
            toks.append(Tok("int", mt.group(1), mt.start(1)))
        elif mt.group(2):
            toks.append(Tok("name", mt.group(2), mt.start(2)))
        else:
            ch = mt.group(3)
            if ch not in "+-*/^()[],":
                raise ParseError(f"unexpected character {ch!r}", text, mt.start(3))
            toks.append(Tok("op", ch, mt.start(3)))
        pos = mt.end()
    toks.append(Tok("end", "", len(text)))
    return toks


# syntax tree -----------------------------------------------------------------

@dataclass
class Num:
    value: int


@dataclass
class TVar:
    index: int  # 0-based


@dataclass
class Omega:
    pass


@dataclass
class XVar:
    index: int  # 1-based
    J: tuple[int, ...]


@dataclass
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass
class Neg:
    arg: "Node"


@dataclass
class Pow:
    base: "Node"
    exp: int


Node = Union[Num, TVar, Omega, XVar, BinOp, Neg, Pow]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.max_t = 0
        self.max_x = 0
        self.orders: set[int] = set()

    def peek(self) -> Tok:
        return self.toks[self.i]

    def next(self) -> Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg: str, tok: Optional[Tok] = None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok.pos)

    def expect(self, value: str) -> Tok:
        tok = self.next()
        if tok.value != value or tok.kind not in ("op",):
            self.error(f"expected {value!r}", tok)
        return tok

    def parse(self) -> Node:
        if self.peek().kind == "end":
            self.error("empty expression")
        node = self.expr()
        if self.peek().kind != "end":
            self.error(f"unexpected {self.peek().value!r}")
        return node

    def expr(self) -> Node:
        tok = self.peek()
        if tok.kind == "op" and tok.value in "+-":
            self.next()
            node = self.term()
            if tok.value == "-":
                node = Neg(node)
        else:
            node = self.term()
        while self.peek().kind == "op" and self.peek().value in "+-":
            op = self.next().value
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.peek().kind == "op" and self.peek().value in "*/":
            op = self.next().value
            node = BinOp(op, node, self.factor())
        return node

    def factor(self) -> Node:
        node = self.atom()
        if self.peek().kind == "op" and self.peek().value == "^":
            self.next()
            tok = self.next()
            if tok.kind != "int":
                self.error("exponent must be a nonnegative integer", tok)
            node = Pow(node, int(tok.value))
        return node

    def atom(self) -> Node:
        tok = self.next()
        if tok.kind == "int":
            return Num(int(tok.value))
        if tok.kind == "op" and tok.value == "(":
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind == "name":
            name = tok.value
            if name == "omega":
                return Omega()
            mt = re.fullmatch(r"t(\d+)", name)
            if mt or name in ALIASES:
                k = int(mt.group(1)) - 1 if mt else ALIASES.index(name)
                if k < 0:
                    self.error("series variables are numbered from 1", tok)
                self.max_t = max(self.max_t, k + 1)
                return TVar(k)
            mt = re.fullmatch(r"x(\d+)", name)
            if mt or name in ("x", "y"):
                i = int(mt.group(1)) if mt else ("x", "y").index(name) + 1
                if i < 1:
                    self.error("indeterminates are numbered from 1", tok)
                self.max_x = max(self.max_x, i)
                J = self.derivative_index()
                self.orders.add(len(J))
                return XVar(i, J)
            self.error(f"unknown name {name!r}", tok)
        self.error(f"unexpected {tok.value or 'end of input'!r}", tok)

    def derivative_index(self) -> tuple[int, ...]:
        self.expect("[")
        self.expect("(")
        entries = []
        while True:
            tok = self.next()
            if tok.kind != "int":
                self.error("derivative index entries must be nonnegative integers", tok)
            entries.append(int(tok.value))
            sep = self.next()
            if sep.value == ")":
                break
            if sep.value != ",":
                self.error("expected ',' or ')'", sep)
        self.expect("]")
        return tuple(entries)


@dataclass
class Parsed:
    tree: Node
    max_t: int
    max_x: int
    x_index_len: Optional[int]


def parse_tree(text: str) -> Parsed:
    p = _Parser(text)
    tree = p.parse()
    if len(p.orders) > 1:
        raise DimensionError(f"derivative indices of different lengths: {sorted(p.orders)}")
    xlen = next(iter(p.orders)) if p.orders else None
    return Parsed(tree, p.max_t, p.max_x, xlen)


def _resolve_dims(parsed: Parsed, m: Optional[int], n: Optional[int]) -> tuple[int, int]:
    if m is None:
        m = parsed.x_index_len or parsed.max_t or 1
    if parsed.max_t > m:
        raise DimensionError(f"series variable t{parsed.max_t} exceeds m={m}")
    if parsed.x_index_len is not None and parsed.x_index_len != m:
        raise DimensionError(f"derivative index of length {parsed.x_index_len} but m={m}")
    if n is None:
        n = max(parsed.max_x, 1)
    if parsed.max_x > n:
        raise DimensionError(f"indeterminate x{parsed.max_x} exceeds n={n}")
    return m, n


# evaluation ------------------------------------------------------------------

def _evaluate(node: Node, m: int, n: int, domain: type, text: str) -> DiffPoly:
    def const(c) -> DiffPoly:
        if domain is BSeries:
            coeff = BSeries.one(m) if c else BSeries.zero(m)
        elif domain is KPoly:
            coeff = KPoly.constant(m, c)
        else:
            coeff = KFraction(KPoly.constant(m, c))
        return DiffPoly.constant(coeff, n)

    def series(kp_index: int) -> DiffPoly:
        I = unit(m, kp_index)
        if domain is BSeries:
            return DiffPoly.constant(BSeries.of(m, [I]), n)
        poly = KPoly.monomial(m, I)
        return DiffPoly.constant(poly if domain is KPoly else KFraction(poly), n)

    def go(node: Node) -> DiffPoly:
        if isinstance(node, Num):
            return const(node.value)
        if isinstance(node, TVar):
            return series(node.index)
        if isinstance(node, Omega):
            if domain is not BSeries:
                raise ParseError("omega is only meaningful for boolean series", text)
            return DiffPoly.constant(BSeries.omega(m), n)
        if isinstance(node, XVar):
            one = const(1)
            return DiffPoly(m, n, domain, [(DiffMonomial.var(node.index, node.J), c)
                                           for c in one.terms.values()])
        if isinstance(node, Neg):
            if domain is BSeries:
                raise ParseError("subtraction is not defined over the boolean semiring", text)
            return -go(node.arg)
        if isinstance(node, Pow):
            base = go(node.base)
            out = const(1)
            for _ in range(node.exp):
                out = out * base
            return out
        left, right = go(node.left), go(node.right)
        if node.op == "+":
            return left + right
        if node.op == "-":
            if domain is BSeries:
                raise ParseError("subtraction is not defined over the boolean semiring", text)
            return left - right
        if node.op == "*":
            return left * right
        return _divide(left, right, domain, text)

    return go(node)


def _divide(left: DiffPoly, right: DiffPoly, domain: type, text: str) -> DiffPoly:
    if domain is BSeries:
        raise ParseError("division is not defined over the boolean semiring", text)
    if len(right) != 1 or not next(iter(right.terms)).is_one():
        raise ParseError("can only divide by a nonzero series", text)
    den = next(iter(right.terms.values()))
    if domain is KPoly:
        c = den.constant_value()
        if c is None:
            raise ParseError("division by a non-constant series needs fraction coefficients",
                             text)
        return left.map_coeffs(lambda a: a * (1 / c))
    return left.map_coeffs(lambda a: a / den)


def parse_diffpoly(text: str, m: Optional[int] = None, n: Optional[int] = None,
                   domain: type = KPoly) -> DiffPoly:
    parsed = parse_tree(text)
    m, n = _resolve_dims(parsed, m, n)
    if domain is KPoly:
        # fall back to fraction coefficients when a genuine quotient appears
        try:
            return _evaluate(parsed.tree, m, n, KPoly, text)
        except ParseError as exc:
            if "fraction coefficients" not in str(exc):
                raise
            domain = KFraction
    return _evaluate(parsed.tree, m, n, domain, text)


def parse_series(text: str, m: Optional[int] = None, boolean: bool = False):
    """Parse a series; returns ``BSeries`` in boolean mode, else ``KPoly`` or ``KFraction``."""
    parsed = parse_tree(text)
    if parsed.max_x:
        raise ParseError("a series may not contain differential indeterminates", text)
    m, _ = _resolve_dims(parsed, m, 1)
    P = parse_diffpoly(text, m, 1, BSeries if boolean else KPoly)
    if P.is_zero():
        return P.domain.zero(m)
    return next(iter(P.terms.values()))


def parse_series_list(text: str, m: Optional[int] = None, boolean: bool = True) -> list:
    """Semicolon-separated series, e.g. a weight vector ``t+u; omega``."""
    parts = [p for p in text.split(";")]
    if any(not p.strip() for p in parts):
        raise ParseError("empty entry in series list", text)
    return [parse_series(p, m, boolean) for p in parts]


def parse_rational(text: str) -> Fraction:
    return Fraction(text)
