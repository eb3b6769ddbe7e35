"""A small expression language over multivectors.

Grammar (``*`` is mandatory, juxtaposition is an error)::

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := '-' factor | atom '~'*
    atom    := number [blade] | blade | glyph | '(' expr ')'
             | 'rev(' expr ')' | 'grade(' expr ',' int ')' | 'scalar(' expr ')'

The only juxtaposition allowed is a number directly before a blade literal
(``3 e{1,2}``), so that the canonical text form of a multivector parses back.

Blades are written ``1``, ``e12``, ``e{1,2,5}`` or ``eb110010``. The glyphs
name the eight signed blades of the plane and need ``dim == 2``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

from .blades import BladeIndex, blade_indices_from_text
from .multivector import Multivector, format_coeff

GLYPHS: dict[str, tuple[int, int]] = {
    # name: (coefficient, mask) in dim 2
    "WDOT": (1, 0b00),
    "BDOT": (-1, 0b00),
    "RIGHT": (1, 0b01),
    "LEFT": (-1, 0b01),
    "UP": (1, 0b10),
    "DOWN": (-1, 0b10),
    "WSQ": (1, 0b11),
    "BSQ": (-1, 0b11),
}

UNICODE_GLYPHS = {
    "∘": "WDOT",
    "•": "BDOT",
    "→": "RIGHT",
    "←": "LEFT",
    "↑": "UP",
    "↓": "DOWN",
    "□": "WSQ",
    "■": "BSQ",
}
GLYPH_CHARS = {name: ch for ch, name in UNICODE_GLYPHS.items()}


class ExprError(ValueError):
    """Error tied to a position in the source text."""

    kind = "error"

    def __init__(self, message: str, offset: int, source: str = ""):
        super().__init__(message)
        self.message = message
        self.offset = offset
        self.source = source

    @property
    def line(self) -> int:
        return self.source.count("\n", 0, self.offset) + 1

    @property
    def col(self) -> int:
        return self.offset - (self.source.rfind("\n", 0, self.offset) + 1) + 1

    def __str__(self):
        return f"{self.line}:{self.col}: {self.kind}: {self.message}"


class LexError(ExprError):
    kind = "lexical error"


class ParseError(ExprError):
    kind = "syntax error"


class UnknownGlyphError(ExprError):
    kind = "unknown glyph"


class EvalError(ExprError):
    kind = "evaluation error"


# -- AST ----------------------------------------------------------------------


@dataclass(frozen=True)
class ScalarLit:
    value: float
    pos: int = 0


@dataclass(frozen=True)
class BladeLit:
    indices: tuple[int, ...]
    width: int | None = None  # bit count of an ``eb...`` literal
    pos: int = 0


@dataclass(frozen=True)
class GlyphLit:
    name: str
    pos: int = 0


@dataclass(frozen=True)
class Neg:
    child: "ExprNode"
    pos: int = 0


@dataclass(frozen=True)
class Add:
    left: "ExprNode"
    right: "ExprNode"
    pos: int = 0


@dataclass(frozen=True)
class Sub:
    left: "ExprNode"
    right: "ExprNode"
    pos: int = 0


@dataclass(frozen=True)
class Mul:
    left: "ExprNode"
    right: "ExprNode"
    pos: int = 0


@dataclass(frozen=True)
class Reverse:
    child: "ExprNode"
    pos: int = 0


@dataclass(frozen=True)
class GradeSel:
    child: "ExprNode"
    k: int
    pos: int = 0


@dataclass(frozen=True)
class ScalarSel:
    child: "ExprNode"
    pos: int = 0


ExprNode = Union[ScalarLit, BladeLit, GlyphLit, Neg, Add, Sub, Mul, Reverse, GradeSel, ScalarSel]


# -- lexer --------------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str  # NUM, BLADE, GLYPH, FUNC, OP, EOF
    text: str
    pos: int


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)
  | (?P<braced>e\{[^}]*\})
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*~(),−])
  | (?P<glyph>[∘•←↑→↓□■])
    """,
    re.VERBOSE | re.ASCII,
)

_FUNCS = ("rev", "grade", "scalar")


def tokenize(src: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            raise LexError(f"unexpected character {src[pos]!r}", pos, src)
        kind = m.lastgroup
        text = m.group()
        if kind == "num":
            tokens.append(Token("NUM", text, pos))
        elif kind == "braced":
            tokens.append(Token("BLADE", text, pos))
        elif kind == "ident":
            if text in _FUNCS:
                tokens.append(Token("FUNC", text, pos))
            elif text in GLYPHS:
                tokens.append(Token("GLYPH", text, pos))
            elif re.fullmatch(r"e\d+|eb[01]+", text):
                tokens.append(Token("BLADE", text, pos))
            elif re.fullmatch(r"e(b\w*|\d\w*)?", text, re.ASCII):
                raise LexError(f"malformed blade literal {text!r}", pos, src)
            else:
                raise UnknownGlyphError(f"unknown name {text!r}", pos, src)
        elif kind == "op":
            tokens.append(Token("OP", "-" if text == "−" else text, pos))
        elif kind == "glyph":
            tokens.append(Token("GLYPH", UNICODE_GLYPHS[text], pos))
        pos = m.end()
    tokens.append(Token("EOF", "", len(src)))
    return tokens


# -- parser -------------------------------------------------------------------


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = tokenize(src)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def error(self, message: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(message, tok.pos, self.src)

    def describe(self, tok: Token) -> str:
        return "end of input" if tok.kind == "EOF" else repr(tok.text)

    def expect(self, text: str) -> Token:
        if self.tok.kind == "OP" and self.tok.text == text:
            return self.advance()
        raise self.error(f"expected {text!r}, found {self.describe(self.tok)}")

    def at_op(self, *texts: str) -> bool:
        return self.tok.kind == "OP" and self.tok.text in texts

    def parse(self) -> ExprNode:
        node = self.expr()
        if self.tok.kind != "EOF":
            if self.tok.kind in ("NUM", "BLADE", "GLYPH", "FUNC") or self.at_op("("):
                raise self.error(f"expected an operator before {self.describe(self.tok)} ('*' is required for products)")
            raise self.error(f"unexpected {self.describe(self.tok)}")
        return node

    def expr(self) -> ExprNode:
        node = self.term()
        while self.at_op("+", "-"):
            op = self.advance()
            right = self.term()
            node = Add(node, right, op.pos) if op.text == "+" else Sub(node, right, op.pos)
        return node

    def term(self) -> ExprNode:
        node = self.factor()
        while self.at_op("*"):
            op = self.advance()
            node = Mul(node, self.factor(), op.pos)
        return node

    def factor(self) -> ExprNode:
        if self.at_op("-"):
            op = self.advance()
            return Neg(self.factor(), op.pos)
        node = self.atom()
        while self.at_op("~"):
            op = self.advance()
            node = Reverse(node, op.pos)
        return node

    def atom(self) -> ExprNode:
        tok = self.tok
        if tok.kind == "NUM":
            self.advance()
            value = float(tok.text)
            if not math.isfinite(value):
                raise LexError(f"number {tok.text!r} out of range", tok.pos, self.src)
            lit = ScalarLit(value, tok.pos)
            if self.tok.kind == "BLADE":
                # coefficient term of the canonical text form, e.g. ``3 e{1,2}``
                return Mul(lit, self.atom(), self.tok.pos)
            return lit
        if tok.kind == "BLADE":
            self.advance()
            try:
                indices, width = blade_indices_from_text(tok.text)
            except ValueError as exc:
                raise LexError(str(exc), tok.pos, self.src) from None
            return BladeLit(indices, width, tok.pos)
        if tok.kind == "GLYPH":
            self.advance()
            return GlyphLit(tok.text, tok.pos)
        if tok.kind == "FUNC":
            self.advance()
            self.expect("(")
            inner = self.expr()
            if tok.text == "grade":
                self.expect(",")
                k_tok = self.tok
                if k_tok.kind != "NUM" or not k_tok.text.isdigit():
                    raise self.error(f"grade needs a nonnegative integer, found {self.describe(k_tok)}")
                self.advance()
                self.expect(")")
                return GradeSel(inner, int(k_tok.text), tok.pos)
            self.expect(")")
            return Reverse(inner, tok.pos) if tok.text == "rev" else ScalarSel(inner, tok.pos)
        if self.at_op("("):
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        raise self.error(f"expected a number, blade, glyph or '(', found {self.describe(tok)}")


def parse(src: str) -> ExprNode:
    """Parse ``src`` into an expression tree; raises :class:`ExprError`."""
    try:
        return _Parser(src).parse()
    except RecursionError:
        raise ParseError("expression nested too deeply", 0, src) from None


# -- evaluation ---------------------------------------------------------------


def evaluate(node: ExprNode, dim: int, source: str = "") -> Multivector:
    """Evaluate a tree in the algebra of dimension ``dim``."""

    def finite(x: Multivector, n: ExprNode) -> Multivector:
        if not all(math.isfinite(c) for c in x.masks().values()):
            raise EvalError("coefficient overflow", n.pos, source)
        return x

    def ev(n: ExprNode) -> Multivector:
        if isinstance(n, ScalarLit):
            return Multivector.scalar(n.value, dim)
        if isinstance(n, BladeLit):
            if n.width is not None and n.width != dim:
                raise EvalError(f"binary blade has {n.width} bits but dim is {dim}", n.pos, source)
            if n.indices and n.indices[-1] > dim:
                raise EvalError(f"blade index {n.indices[-1]} exceeds dim {dim}", n.pos, source)
            return Multivector.from_blade(BladeIndex.from_indices(n.indices, dim))
        if isinstance(n, GlyphLit):
            if dim != 2:
                raise EvalError(f"glyph {n.name} needs dim 2, got dim {dim}", n.pos, source)
            coeff, mask = GLYPHS[n.name]
            return Multivector(2, [(mask, coeff)])
        if isinstance(n, Neg):
            return -ev(n.child)
        if isinstance(n, Add):
            return finite(ev(n.left) + ev(n.right), n)
        if isinstance(n, Sub):
            return finite(ev(n.left) - ev(n.right), n)
        if isinstance(n, Mul):
            return finite(ev(n.left) * ev(n.right), n)
        if isinstance(n, Reverse):
            return ev(n.child).reverse()
        if isinstance(n, GradeSel):
            if n.k > dim:
                raise EvalError(f"grade {n.k} exceeds dim {dim}", n.pos, source)
            return ev(n.child).grade_project(n.k)
        if isinstance(n, ScalarSel):
            return ev(n.child).grade_project(0)
        raise TypeError(f"not an expression node: {n!r}")

    try:
        return ev(node)
    except RecursionError:
        raise EvalError("expression nested too deeply", 0, source) from None


def evaluate_text(src: str, dim: int) -> Multivector:
    return evaluate(parse(src), dim, src)


# -- formatting ---------------------------------------------------------------


def format_multivector(x: Multivector, style: str = "algebraic") -> str:
    """``algebraic`` canonical text, or ``glyph``: one glyph per unit of coefficient."""
    if style == "algebraic":
        return x.to_text()
    if style != "glyph":
        raise ValueError(f"unknown style {style!r}")
    if x.dim != 2:
        raise ValueError(f"glyph style needs dim 2, got dim {x.dim}")
    if not x.is_integral():
        raise ValueError("glyph style needs integer coefficients")
    if not x:
        return "(empty bag)"
    by_value = {(c, mask): name for name, (c, mask) in GLYPHS.items()}
    out = []
    for blade, c in x.terms():
        ch = GLYPH_CHARS[by_value[(1 if c > 0 else -1, blade.mask)]]
        out.extend([ch] * int(abs(c)))
    return " ".join(out)


__all__ = [
    "ExprError", "LexError", "ParseError", "UnknownGlyphError", "EvalError",
    "ScalarLit", "BladeLit", "GlyphLit", "Neg", "Add", "Sub", "Mul", "Reverse",
    "GradeSel", "ScalarSel", "ExprNode", "Token", "tokenize", "parse", "evaluate",
    "evaluate_text", "format_multivector", "format_coeff", "GLYPHS", "UNICODE_GLYPHS",
]
