"""Polynomial expression parser and canonical printer.

Grammar (whitespace is insignificant, ``*`` is never implied)::

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := '-' factor | base ('^' UINT)?
    base    := literal | VAR | '(' expr ')'
    literal := UINT ('/' UINT)? | 'i' | 'sqrt' '(' '-'? UINT ')'

Unary minus binds looser than ``^`` so ``-x^2`` means ``-(x^2)``.
``format_poly`` produces text that parses back to the same polynomial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

from .errors import ExprSyntaxError, RingMismatch, VariableArity
from .poly import Poly, PolyTower
from .rings import Quad, RingKind, RingSpec

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        if m.group(1) is not None:
            out.append(Token("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            out.append(Token("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*^()/":
                raise ExprSyntaxError(f"unexpected character {ch!r}", m.start(3))
            out.append(Token("op", ch, m.start(3)))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


# -- AST -------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction
    pos: int


@dataclass(frozen=True)
class Sqrt:
    d: int
    pos: int


@dataclass(frozen=True)
class Var:
    name: str
    pos: int


@dataclass(frozen=True)
class Neg:
    operand: ExprAst
    pos: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: ExprAst
    right: ExprAst
    pos: int


@dataclass(frozen=True)
class Pow:
    base: ExprAst
    exponent: int
    pos: int


ExprAst = Union[Num, Sqrt, Var, Neg, BinOp, Pow]

VARIABLES = ("x", "y")


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind == "end":
            raise ExprSyntaxError(f"found {self.tok.text or 'end of input'!r}", self.tok.pos, (repr(text),))
        return self.advance()

    def parse(self) -> ExprAst:
        node = self.expr()
        if self.tok.kind != "end":
            raise ExprSyntaxError(f"unexpected {self.tok.text!r}", self.tok.pos, ("'+'", "'-'", "'*'", "end of input"))
        return node

    def expr(self) -> ExprAst:
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance()
            node = BinOp(op.text, node, self.term(), op.pos)
        return node

    def term(self) -> ExprAst:
        node = self.factor()
        while self.tok.kind == "op" and self.tok.text == "*":
            op = self.advance()
            node = BinOp("*", node, self.factor(), op.pos)
        return node

    def factor(self) -> ExprAst:
        if self.tok.kind == "op" and self.tok.text == "-":
            op = self.advance()
            return Neg(self.factor(), op.pos)
        node = self.base()
        if self.tok.kind == "op" and self.tok.text == "^":
            op = self.advance()
            if self.tok.kind != "int":
                raise ExprSyntaxError("exponent must be a nonnegative integer literal", self.tok.pos, ("integer",))
            node = Pow(node, int(self.advance().text), op.pos)
        return node

    def base(self) -> ExprAst:
        t = self.tok
        if t.kind == "int":
            self.advance()
            if self.tok.kind == "op" and self.tok.text == "/":
                self.advance()
                if self.tok.kind != "int":
                    raise ExprSyntaxError("rational literal needs an integer denominator", self.tok.pos, ("integer",))
                den = self.advance()
                if int(den.text) == 0:
                    raise ExprSyntaxError("zero denominator", den.pos)
                return Num(Fraction(int(t.text), int(den.text)), t.pos)
            return Num(Fraction(int(t.text)), t.pos)
        if t.kind == "name":
            self.advance()
            if t.text == "i":
                return Sqrt(-1, t.pos)
            if t.text == "sqrt":
                self.expect("(")
                sign = 1
                if self.tok.text == "-":
                    self.advance()
                    sign = -1
                if self.tok.kind != "int":
                    raise ExprSyntaxError("sqrt takes an integer literal", self.tok.pos, ("integer",))
                d = sign * int(self.advance().text)
                self.expect(")")
                return Sqrt(d, t.pos)
            if t.text in VARIABLES:
                return Var(t.text, t.pos)
            raise ExprSyntaxError(f"unknown name {t.text!r}", t.pos, ("x", "y", "i", "sqrt"))
        if t.kind == "op" and t.text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        raise ExprSyntaxError(
            f"found {t.text or 'end of input'!r}", t.pos, ("number", "variable", "'('", "'-'")
        )


def parse_expr(text: str) -> ExprAst:
    if not text.strip():
        raise ExprSyntaxError("empty expression", 0, ("expression",))
    return _Parser(text).parse()


def _variables(node: ExprAst) -> set[str]:
    if isinstance(node, Var):
        return {node.name}
    if isinstance(node, Neg):
        return _variables(node.operand)
    if isinstance(node, Pow):
        return _variables(node.base)
    if isinstance(node, BinOp):
        return _variables(node.left) | _variables(node.right)
    return set()


def _coefficient_ring(ring: RingSpec) -> RingSpec:
    return ring.base if isinstance(ring, PolyTower) else ring


def ast_to_poly(node: ExprAst, ring: RingSpec) -> Poly:
    """Expand an AST into a normalized polynomial over ``ring``.

    Over a :class:`PolyTower` the result is a polynomial in ``y`` with
    coefficients in ``base[x]``; otherwise only ``x`` may appear.
    """
    tower = isinstance(ring, PolyTower)
    outer = "y" if tower else "x"
    if not tower and "y" in _variables(node):
        raise VariableArity("'y' needs a bivariate ring (e.g. --ring zxy)")
    coeff_ring = _coefficient_ring(ring)

    def scalar(value: Any, pos: int) -> Poly:
        try:
            c = coeff_ring.coerce(value)
        except RingMismatch as exc:
            raise RingMismatch(f"{exc} (offset {pos})") from None
        if tower:
            c = Poly((c,), coeff_ring, ring.var)
        return Poly((c,), ring, outer)

    def walk(n: ExprAst) -> Poly:
        if isinstance(n, Num):
            return scalar(n.value, n.pos)
        if isinstance(n, Sqrt):
            if coeff_ring.kind is not RingKind.QUADRATIC or coeff_ring.d != n.d:
                raise RingMismatch(f"sqrt({n.d}) is not in {ring.describe()} (offset {n.pos})")
            return scalar(Quad(0, 1, n.d), n.pos)
        if isinstance(n, Var):
            if n.name == outer:
                return Poly.gen(ring, outer)
            inner = Poly.gen(coeff_ring, ring.var)
            return Poly((inner,), ring, outer)
        if isinstance(n, Neg):
            return -walk(n.operand)
        if isinstance(n, Pow):
            return walk(n.base) ** n.exponent
        left, right = walk(n.left), walk(n.right)
        if n.op == "+":
            return left + right
        if n.op == "-":
            return left - right
        return left * right

    return walk(node)


def parse_poly(text: str, ring: RingSpec) -> Poly:
    return ast_to_poly(parse_expr(text), ring)


# -- printing ----------------------------------------------------------------


def _unit_name(d: int) -> str:
    return "i" if d == -1 else f"sqrt({d})"


def _times(coeff: str, rest: str) -> str:
    if not rest:
        return coeff
    if coeff == "1":
        return rest
    return f"{coeff}*{rest}"


def _rational(v: Any) -> str:
    return str(Fraction(v))


def _coeff_text(c: Any) -> tuple[bool, str]:
    """(is_negative, magnitude text usable as a factor)."""
    if isinstance(c, Poly):
        if len([a for a in c.coeffs if a]) == 1:
            e = len(c.coeffs) - 1
            neg, text = _coeff_text(c.coeffs[e])
            return neg, _times(text, _power(c.var, e))
        return False, f"({format_poly(c)})"
    if isinstance(c, Quad):
        if c.y == 0:
            return _coeff_text(c.x)
        unit = _unit_name(c.d)
        if c.x == 0:
            return c.y < 0, _times(_rational(abs(c.y)), unit)
        sign = "-" if c.y < 0 else "+"
        return False, f"({_rational(c.x)} {sign} {_times(_rational(abs(c.y)), unit)})"
    return c < 0, _rational(abs(c))


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


def format_poly(f: Poly) -> str:
    """Canonical text: descending exponents, explicit ``*``, ``x^1`` as ``x``."""
    if not f:
        return "0"
    parts: list[str] = []
    for e in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[e]
        if not c:
            continue
        neg, text = _coeff_text(c)
        term = _times(text, _power(f.var, e))
        if not parts:
            parts.append(f"-{term}" if neg else term)
        else:
            parts.append(f"- {term}" if neg else f"+ {term}")
    return " ".join(parts)


def format_element(c: Any) -> str:
    """Ring element as text (same conventions as polynomial coefficients)."""
    if isinstance(c, Poly):
        return format_poly(c)
    neg, text = _coeff_text(c)
    return f"-{text}" if neg else text
