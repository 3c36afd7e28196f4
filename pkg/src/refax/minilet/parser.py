"""Recursive-descent parser for minilet source text.

``*`` binds tighter than ``+``, both left-associative; a ``let`` extends
as far right as possible, so a let used as an operand must be
parenthesised. Spans are recorded as in the JOOS parser.
"""

from __future__ import annotations

from dataclasses import replace

from ..lexing import IDENT, INT, SYMBOL, TokenStream, tokenize
from . import ast

_KEYWORDS = frozenset(["let", "in"])
_SYMBOLS = ("(", ")", ",", ";", "=", "+", "*")

BINOP_PRECEDENCE = {"+": 1, "*": 2}


def parse_program(source: str) -> ast.Program:
    p = _Parser(source)
    body = p.expression()
    p.ts.expect_eof()
    return ast.Program(body, span=body.span)


def parse_fundef(source: str) -> ast.FunDef:
    """Parse a single function definition (used for introduction decl files)."""
    p = _Parser(source)
    fd = p.fundef()
    p.ts.expect_eof()
    return fd


class _Parser:
    def __init__(self, source: str) -> None:
        self.ts = TokenStream(tokenize(source, _KEYWORDS, _SYMBOLS))

    def _span(self, start: int):
        return self.ts.span_from(start)

    def expression(self, min_prec: int = 1) -> ast.Expression:
        start = self.ts.pos
        left = self.primary()
        while True:
            tok = self.ts.peek()
            prec = BINOP_PRECEDENCE.get(tok.text) if tok.kind == SYMBOL else None
            if prec is None or prec < min_prec:
                return left
            self.ts.advance()
            right = self.expression(prec + 1)
            left = ast.BinOp(tok.text, left, right, span=self._span(start))

    def primary(self) -> ast.Expression:
        start = self.ts.pos
        tok = self.ts.peek()
        if self.ts.at("let"):
            self.ts.advance()
            defs_start = self.ts.pos
            defs = [self.fundef()]
            while not self.ts.at("in"):
                defs.append(self.fundef())
            def_list = ast.FunDefList(tuple(defs), span=self.ts.span_from(defs_start))
            self.ts.expect("in")
            body = self.expression()
            return ast.Let(def_list, body, span=self._span(start))
        if tok.kind == INT:
            self.ts.advance()
            return ast.IntLit(int(tok.text), span=self._span(start))
        if self.ts.at("("):
            self.ts.advance()
            inner = self.expression()
            self.ts.expect(")")
            return replace(inner, span=self._span(start))
        if tok.kind == IDENT:
            if self.ts.at("(", 1):
                self.ts.advance()
                self.ts.advance()
                args = []
                if not self.ts.at(")"):
                    args.append(self.expression())
                    while self.ts.accept(","):
                        args.append(self.expression())
                self.ts.expect(")")
                return ast.Call(tok.text, tuple(args), span=self._span(start))
            self.ts.advance()
            return ast.Var(tok.text, span=self._span(start))
        self.ts.fail("an expression")
        raise AssertionError("unreachable")

    def fundef(self) -> ast.FunDef:
        start = self.ts.pos
        name = self.ts.expect_kind(IDENT, "function name").text
        self.ts.expect("(")
        params = []
        if not self.ts.at(")"):
            params.append(self.ts.expect_kind(IDENT, "parameter name").text)
            while self.ts.accept(","):
                params.append(self.ts.expect_kind(IDENT, "parameter name").text)
        self.ts.expect(")")
        self.ts.expect("=")
        body = self.expression()
        self.ts.expect(";")
        return ast.FunDef(name, tuple(params), body, span=self._span(start))
