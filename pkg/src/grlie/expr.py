"""Parser for Lie expressions such as ``2*[A[1,2], A[1,3]] - [A[2,3], A[1,2]]``.

Grammar::

    expr  := term (("+" | "-") term)*
    term  := unary ("*" unary)*
    unary := "-" unary | atom
    atom  := INT | GENERATOR | "[" expr "," expr "]" | "(" expr ")"

A generator token is an identifier optionally followed by an index list
``[i,j,...]`` with no space before the ``[``, e.g. ``A[1,2]`` or ``u[1]``.
"""

from __future__ import annotations

import re
from typing import List, NamedTuple, Union

from .lyndon import InhomogeneousExpression, LieElement, bracket
from .presentation import GradedPresentation


class ExpressionSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} at offset {offset}")


class UnknownGenerator(ValueError):
    def __init__(self, name: str, offset: int):
        self.name = name
        self.offset = offset
        super().__init__(f"unknown generator {name!r} at offset {offset}")


class _Tok(NamedTuple):
    kind: str
    text: str
    pos: int


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<gen>[A-Za-z_][A-Za-z_0-9]*(?:\[\s*\d+(?:\s*,\s*\d+)*\s*\])?)
  | (?P<int>\d+)
  | (?P<op>[-+*\[\](),])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> List[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExpressionSyntaxError(f"unexpected character {text[pos]!r}", _offset(text, pos))
        if m.lastgroup != "ws":
            toks.append(_Tok(m.lastgroup, m.group(), pos))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


def _offset(text: str, pos: int) -> int:
    # byte offset of character position ``pos``
    return len(text[:pos].encode("utf-8"))


Value = Union[int, LieElement]


class _Parser:
    def __init__(self, text: str, p: GradedPresentation):
        self.text = text
        self.p = p
        self.toks = _tokenize(text)
        self.i = 0

    def error(self, msg: str, tok: _Tok = None):
        tok = tok or self.peek()
        return ExpressionSyntaxError(msg, _offset(self.text, tok.pos))

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def next(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, text: str) -> _Tok:
        tok = self.next()
        if tok.text != text:
            what = repr(tok.text) if tok.text else "end of input"
            raise self.error(f"expected {text!r}, found {what}", tok)
        return tok

    def parse(self) -> LieElement:
        v = self.expr()
        if self.peek().kind != "end":
            raise self.error(f"unexpected {self.peek().text!r}")
        if isinstance(v, int):
            raise self.error("expression is a bare integer, not a Lie element", self.toks[0])
        return v

    def expr(self) -> Value:
        v = self.term()
        while self.peek().text in ("+", "-"):
            op = self.next()
            w = self.term()
            v = self.combine(v, w if op.text == "+" else self.negate(w), op)
        return v

    def combine(self, v: Value, w: Value, op: _Tok) -> Value:
        if isinstance(v, int) and isinstance(w, int):
            return v + w
        if isinstance(v, int) or isinstance(w, int):
            raise self.error("cannot add an integer to a Lie element", op)
        if v.degree != w.degree:
            raise InhomogeneousExpression(
                f"terms of degrees {v.degree} and {w.degree} combined at offset "
                f"{_offset(self.text, op.pos)}"
            )
        return v + w

    @staticmethod
    def negate(v: Value) -> Value:
        return -v

    def term(self) -> Value:
        v = self.unary()
        while self.peek().text == "*":
            op = self.next()
            w = self.unary()
            if isinstance(v, LieElement) and isinstance(w, LieElement):
                raise self.error("cannot multiply two Lie elements; use [x, y]", op)
            v = v * w
        return v

    def unary(self) -> Value:
        if self.peek().text == "-":
            self.next()
            return -self.unary()
        return self.atom()

    def atom(self) -> Value:
        tok = self.next()
        if tok.kind == "int":
            return int(tok.text)
        if tok.kind == "gen":
            name = re.sub(r"\s+", "", tok.text)
            if name not in self.p.alphabet.index:
                raise UnknownGenerator(name, _offset(self.text, tok.pos))
            return LieElement.generator(self.p.alphabet, name)
        if tok.text == "[":
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect("]")
            if isinstance(left, int) or isinstance(right, int):
                raise self.error("bracket arguments must be Lie elements", tok)
            return bracket(left, right)
        if tok.text == "(":
            v = self.expr()
            self.expect(")")
            return v
        what = repr(tok.text) if tok.text else "end of input"
        raise self.error(f"unexpected {what}", tok)


def parse_lie_expr(text: str, presentation: GradedPresentation) -> LieElement:
    """Parse ``text`` into a homogeneous element over the presentation's alphabet."""
    return _Parser(text, presentation).parse()
