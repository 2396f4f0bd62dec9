"""Polynomial expression syntax: recursive-descent parser and printer.

    germ   := expr ('/' expr)?
    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | base ('^' uint)?
    base   := uint ('/' uint)? | var | '(' expr ')'

Variables are x1, x2, ... or x, y, z, w (the first four). Implicit
multiplication is rejected. Inside a factor ``a/b`` between two integer
literals is a rational literal; a top-level '/' between expressions splits a
germ into numerator and denominator.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .series import MultiSeries, format_rational

LETTERS = "xyzw"


class ParseError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line, self.col = line, col


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    index: int  # 0-based


@dataclass(frozen=True)
class Add:
    left: "Node"
    op: str  # '+' or '-'
    right: "Node"


@dataclass(frozen=True)
class Mul:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exp: int


Node = Union[Num, Var, Add, Mul, Neg, Pow]


@dataclass(frozen=True)
class Germ:
    num: Node
    den: Optional[Node] = None


_TOKEN = re.compile(r"\s*(?:(\d+)|(x\d+|[a-zA-Z_]\w*)|(.))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks: List[Tuple[str, str, int]] = []
        for mt in _TOKEN.finditer(text):
            if mt.group(1):
                self.toks.append(("num", mt.group(1), mt.start(1)))
            elif mt.group(2):
                self.toks.append(("name", mt.group(2), mt.start(2)))
            elif mt.group(3):
                self.toks.append(("op", mt.group(3), mt.start(3)))
        self.toks.append(("end", "", len(text.rstrip())))
        self.i = 0

    def peek(self, k: int = 0):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, msg: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op: str):
        tok = self.take()
        if tok[:2] != ("op", op):
            self.error(f"expected '{op}'", tok)

    def at(self, op: str) -> bool:
        return self.peek()[:2] == ("op", op)

    def germ(self) -> Germ:
        num = self.expr()
        den = None
        if self.at("/"):
            self.take()
            den = self.expr()
        self.finish()
        return Germ(num, den)

    def finish(self):
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("num", "name") or tok[1] == "(":
                self.error("implicit multiplication is not allowed, use '*'")
            self.error(f"unexpected '{tok[1]}'")

    def expr(self) -> Node:
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.take()[1]
            node = Add(node, op, self.term())
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.at("*"):
            self.take()
            node = Mul(node, self.factor())
        return node

    def factor(self) -> Node:
        if self.at("-"):
            self.take()
            arg = self.factor()
            return Num(-arg.value) if isinstance(arg, Num) else Neg(arg)
        base = self.base()
        if self.at("^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.error("exponent must be a nonnegative integer", tok)
            if self.at("/") and self.peek(1)[0] == "num":
                self.error("exponent must be a nonnegative integer")
            return Pow(base, int(tok[1]))
        return base

    def base(self) -> Node:
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            q = Fraction(int(val))
            if self.at("/") and self.peek(1)[0] == "num":
                self.take()
                den = int(self.take()[1])
                if den == 0:
                    self.error("zero denominator in rational literal", tok)
                q /= den
            return Num(q)
        if kind == "name":
            return Var(var_index(val, self, tok))
        if (kind, val) == ("op", "("):
            node = self.expr()
            self.expect(")")
            return node
        if kind == "end":
            self.error("unexpected end of input", tok)
        self.error(f"unexpected '{val}'", tok)


def var_index(name: str, parser: Optional[_Parser] = None, tok=None) -> int:
    if name in LETTERS:
        return LETTERS.index(name)
    mt = re.fullmatch(r"x([1-9]\d*)", name)
    if mt:
        return int(mt.group(1)) - 1
    msg = f"unknown variable '{name}' (use x1, x2, ... or x, y, z, w)"
    if parser is not None:
        parser.error(msg, tok)
    raise ValueError(msg)


def parse_expr(text: str) -> Node:
    p = _Parser(text)
    node = p.expr()
    p.finish()
    return node


def parse_germ(text: str) -> Germ:
    return _Parser(text).germ()


def parse_list(text: str, sep: str) -> List[Node]:
    parts = text.split(sep)
    if any(not s.strip() for s in parts):
        raise ParseError("empty expression in list", text, 0)
    return [parse_expr(s) for s in parts]


# ---------------------------------------------------------------------------


def max_var(node: Node) -> int:
    """Number of variables needed: 1 + the highest index used, 0 if none."""
    if isinstance(node, Var):
        return node.index + 1
    if isinstance(node, Num):
        return 0
    if isinstance(node, (Add, Mul)):
        return max(max_var(node.left), max_var(node.right))
    if isinstance(node, Neg):
        return max_var(node.arg)
    return max_var(node.base)


def to_series(node: Node, n: int) -> MultiSeries:
    if isinstance(node, Num):
        return MultiSeries.constant(n, node.value)
    if isinstance(node, Var):
        if node.index >= n:
            raise ValueError(f"variable x{node.index + 1} exceeds n={n}")
        return MultiSeries.variable(n, node.index)
    if isinstance(node, Add):
        a, b = to_series(node.left, n), to_series(node.right, n)
        return a + b if node.op == "+" else a - b
    if isinstance(node, Mul):
        return to_series(node.left, n) * to_series(node.right, n)
    if isinstance(node, Neg):
        return -to_series(node.arg, n)
    return to_series(node.base, n) ** node.exp


def germ_from_text(text: str, n: Optional[int] = None):
    """Parse "g/h" (or just "g") into a MeromorphicGerm with exact polynomials."""
    from .analyticity import MeromorphicGerm

    G = parse_germ(text)
    need = max(max_var(G.num), max_var(G.den) if G.den is not None else 0, 1)
    n = need if n is None else n
    if n < need:
        raise ValueError(f"expression uses {need} variables but n={n}")
    g = to_series(G.num, n)
    h = to_series(G.den, n) if G.den is not None else MultiSeries.constant(n, 1)
    if h.is_zero():
        raise ValueError("denominator is the zero polynomial")
    return MeromorphicGerm(g, h)


# ---------------------------------------------------------------------------

_PREC = {Add: 1, Mul: 2, Neg: 3, Pow: 4, Var: 5}


def _prec(node: Node) -> int:
    if isinstance(node, Num):
        if node.value < 0:
            return 3
        return 2 if node.value.denominator != 1 else 5
    return _PREC[type(node)]


def _wrap(node: Node, need: int) -> str:
    s = to_text(node)
    return f"({s})" if _prec(node) < need else s


def to_text(node: Node, names: str = "x") -> str:
    """Printer; parse_expr(to_text(e)) == e for every AST."""
    if isinstance(node, Num):
        return format_rational(node.value)
    if isinstance(node, Var):
        return f"x{node.index + 1}"
    if isinstance(node, Add):
        # the right operand of '-' (or '+', to keep the tree shape) binds tighter
        return f"{_wrap(node.left, 1)} {node.op} {_wrap(node.right, 2)}"
    if isinstance(node, Mul):
        return f"{_wrap(node.left, 2)}*{_wrap(node.right, 4)}"
    if isinstance(node, Neg):
        # "-" followed by a literal folds into the literal, so keep it wrapped
        inner = _wrap(node.arg, 3)
        if isinstance(node.arg, Num) and not inner.startswith("("):
            inner = f"({inner})"
        return f"-{inner}"
    return f"{_wrap(node.base, 5)}^{node.exp}"


def germ_to_text(G: Germ) -> str:
    if G.den is None:
        return to_text(G.num)
    return f"{_wrap(G.num, 2)}/({to_text(G.den)})"
