"""Line-oriented ASCII grammars for algebras, multisets, and MV terms.

Algebras: "L2 * L3" (labels auto-assigned x1, x2, ...) or the labelled
form "[a: L2, b: Linf]"; "[]" is the one-element algebra.
Multisets: "{a:2, b:inf}".
Terms: constants 0 and 1, identifiers, "~" for negation, "(+)" truncated
sum, "(.)" the dual product, "/\\" meet, "\\/" join, "->" implication;
precedence from tightest to loosest is ~, (.), (+), /\\, \\/, ->, all
binaries left-associative.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .algebra import (
    AlgebraError,
    Element,
    ProductAlgebra,
    make_algebra,
    pointwise_op,
    unit,
    zero,
)
from .chain import ChainError, ChainSize, LINF
from .multiset import EMultiset, INF, MultisetError, Mult


class ParseError(ValueError):
    """Syntax or well-formedness error, with a character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnboundVariableError(ValueError):
    pass


_TOKEN_RE = re.compile(
    r"""\(\+\)|\(\.\)|/\\|\\/|->|[~()\[\]{}:,*]|[A-Za-z_][A-Za-z_0-9]*|\d+|\S"""
)


@dataclass(frozen=True)
class _Token:
    text: str
    position: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        t = m.group()
        if len(t) == 1 and not (t.isalnum() or t in "~()[]{}:,*_"):
            raise ParseError(f"unexpected character {t!r}", m.start())
        tokens.append(_Token(t, m.start()))
    return tokens


class _Cursor:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.length = len(text)

    def peek(self) -> str | None:
        return self.tokens[self.pos].text if self.pos < len(self.tokens) else None

    def here(self) -> int:
        return (
            self.tokens[self.pos].position if self.pos < len(self.tokens) else self.length
        )

    def next(self) -> _Token:
        if self.pos >= len(self.tokens):
            raise ParseError("unexpected end of input", self.length)
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, text: str) -> _Token:
        tok = self.next()
        if tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text!r}", tok.position)
        return tok

    def done(self) -> None:
        if self.pos < len(self.tokens):
            tok = self.tokens[self.pos]
            raise ParseError(f"trailing input {tok.text!r}", tok.position)


_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")
_CHAIN_RE = re.compile(r"L(\d+)\Z")


def _parse_chain_size(tok: _Token) -> ChainSize:
    if tok.text == "Linf":
        return LINF
    m = _CHAIN_RE.match(tok.text)
    if not m:
        raise ParseError(f"expected a chain like L3 or Linf, found {tok.text!r}", tok.position)
    try:
        return ChainSize(int(m.group(1)))
    except ChainError as exc:
        raise ParseError(str(exc), tok.position) from None


def parse_algebra(text: str) -> ProductAlgebra:
    cur = _Cursor(text)
    if cur.peek() == "[":
        cur.next()
        factors = []
        if cur.peek() != "]":
            while True:
                label = cur.next()
                if not _IDENT_RE.match(label.text):
                    raise ParseError(f"expected a label, found {label.text!r}", label.position)
                cur.expect(":")
                factors.append((label.text, _parse_chain_size(cur.next())))
                if cur.peek() != ",":
                    break
                cur.next()
        cur.expect("]")
        cur.done()
        try:
            return make_algebra(factors)
        except AlgebraError as exc:
            raise ParseError(str(exc), 0) from None
    chains = [_parse_chain_size(cur.next())]
    while cur.peek() == "*":
        cur.next()
        chains.append(_parse_chain_size(cur.next()))
    cur.done()
    return make_algebra((f"x{i + 1}", c) for i, c in enumerate(chains))


def parse_multiset(text: str) -> EMultiset:
    cur = _Cursor(text)
    cur.expect("{")
    points: list[tuple[str, Mult]] = []
    if cur.peek() != "}":
        while True:
            label = cur.next()
            if not _IDENT_RE.match(label.text):
                raise ParseError(f"expected a label, found {label.text!r}", label.position)
            cur.expect(":")
            tok = cur.next()
            if tok.text == "inf":
                mult: Mult = INF
            elif tok.text.isdigit():
                mult = int(tok.text)
                if mult < 1:
                    raise ParseError("multiplicity must be at least 1", tok.position)
            else:
                raise ParseError(
                    f"expected a multiplicity or 'inf', found {tok.text!r}", tok.position
                )
            points.append((label.text, mult))
            if cur.peek() != ",":
                break
            cur.next()
    cur.expect("}")
    cur.done()
    try:
        return EMultiset(tuple(points))
    except MultisetError as exc:
        raise ParseError(str(exc), 0) from None


# --- terms ------------------------------------------------------------------

class Term:
    """Abstract syntax of an MV term."""


@dataclass(frozen=True)
class Const(Term):
    value: int  # 0 or 1


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class Neg(Term):
    arg: Term


@dataclass(frozen=True)
class BinOp(Term):
    op: str  # oplus, odot, meet, join, implies
    left: Term
    right: Term


_BINARY_LEVELS = [("implies", "->"), ("join", "\\/"), ("meet", "/\\"),
                  ("oplus", "(+)"), ("odot", "(.)")]
_SYMBOL_OF = dict(_BINARY_LEVELS)


def parse_term(text: str) -> Term:
    cur = _Cursor(text)
    term = _parse_level(cur, 0)
    cur.done()
    return term


def _parse_level(cur: _Cursor, level: int) -> Term:
    if level == len(_BINARY_LEVELS):
        return _parse_unary(cur)
    op, symbol = _BINARY_LEVELS[level]
    left = _parse_level(cur, level + 1)
    while cur.peek() == symbol:
        cur.next()
        left = BinOp(op, left, _parse_level(cur, level + 1))
    return left


def _parse_unary(cur: _Cursor) -> Term:
    if cur.peek() == "~":
        cur.next()
        return Neg(_parse_unary(cur))
    return _parse_atom(cur)


def _parse_atom(cur: _Cursor) -> Term:
    tok = cur.next()
    if tok.text == "(":
        inner = _parse_level(cur, 0)
        cur.expect(")")
        return inner
    if tok.text in ("0", "1"):
        return Const(int(tok.text))
    if _IDENT_RE.match(tok.text):
        return Var(tok.text)
    raise ParseError(f"expected a term, found {tok.text!r}", tok.position)


def eval_term(t: Term, env: dict[str, Element], A: ProductAlgebra) -> Element:
    """Evaluate by structural recursion; implication runs as ~a (+) b."""
    if isinstance(t, Const):
        return unit(A) if t.value else zero(A)
    if isinstance(t, Var):
        if t.name not in env:
            raise UnboundVariableError(f"variable {t.name!r} is not bound")
        value = env[t.name]
        if value.algebra != A:
            raise AlgebraError(f"binding for {t.name!r} lives in a different algebra")
        return value
    if isinstance(t, Neg):
        return pointwise_op("neg", eval_term(t.arg, env, A))
    if isinstance(t, BinOp):
        left = eval_term(t.left, env, A)
        right = eval_term(t.right, env, A)
        if t.op == "implies":
            return pointwise_op("oplus", pointwise_op("neg", left), right)
        return pointwise_op(t.op, left, right)
    raise TypeError(f"not a term: {t!r}")


# --- rendering ----------------------------------------------------------------

def render(value) -> str:
    """Canonical text for a parsed object; parse(render(v)) == v."""
    if isinstance(value, ProductAlgebra):
        return _render_algebra(value)
    if isinstance(value, EMultiset):
        return _render_multiset(value)
    if isinstance(value, Term):
        return _render_term(value)
    raise TypeError(f"cannot render {type(value).__name__}")


def _render_algebra(A: ProductAlgebra) -> str:
    auto = tuple(f"x{i + 1}" for i in range(len(A.factors)))
    if A.labels == auto and A.factors:
        return " * ".join(str(c) for _, c in A.factors)
    return "[" + ", ".join(f"{lbl}: {c}" for lbl, c in A.factors) + "]"


def _render_multiset(X: EMultiset) -> str:
    body = ", ".join(
        f"{lbl}:{'inf' if m == INF else m}" for lbl, m in X.points
    )
    return "{" + body + "}"


_PREC = {"implies": 0, "join": 1, "meet": 2, "oplus": 3, "odot": 4}


def _render_term(t: Term, parent: int = -1, right_side: bool = False) -> str:
    if isinstance(t, Const):
        return str(t.value)
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Neg):
        return f"~{_render_term(t.arg, parent=5)}"
    if isinstance(t, BinOp):
        prec = _PREC[t.op]
        text = (
            f"{_render_term(t.left, prec, False)} {_SYMBOL_OF[t.op]} "
            f"{_render_term(t.right, prec, True)}"
        )
        if parent > prec or (parent == prec and right_side):
            return f"({text})"
        return text
    raise TypeError(f"not a term: {t!r}")
