"""Recursive-descent parser for JOOS source text.

Standard precedence (unary ! binds tightest, then * /, + -, <, ==, &&,
||), all binary operators left-associative. Every node records its source
span (1-based line:col, end-exclusive) so a focus can later be placed by
span; parenthesised expressions keep the parentheses inside their span.
"""

from __future__ import annotations

from dataclasses import replace

from ..lexing import IDENT, INT, SYMBOL, TokenStream, tokenize
from . import ast

_KEYWORDS = frozenset(
    ["class", "void", "int", "boolean", "if", "else", "while", "return", "true", "false", "this"]
)
_SYMBOLS = ("==", "&&", "||", "{", "}", "(", ")", ",", ";", "=", "+", "-", "*", "/", "<", "!", ".")

BINOP_PRECEDENCE = {"||": 1, "&&": 2, "==": 3, "<": 4, "+": 5, "-": 5, "*": 6, "/": 6}


def parse_program(source: str) -> ast.Program:
    p = _Parser(source)
    program = p.program()
    p.ts.expect_eof()
    return program


def parse_method(source: str) -> ast.MethodDecl:
    """Parse a single method declaration (used for introduction decl files)."""
    p = _Parser(source)
    method = p.method()
    p.ts.expect_eof()
    return method


class _Parser:
    def __init__(self, source: str) -> None:
        self.ts = TokenStream(tokenize(source, _KEYWORDS, _SYMBOLS))

    def _span(self, start: int):
        return self.ts.span_from(start)

    def program(self) -> ast.Program:
        start = self.ts.pos
        classes = [self.class_decl()]
        while self.ts.at("class"):
            classes.append(self.class_decl())
        return ast.Program(tuple(classes), span=self._span(start))

    def class_decl(self) -> ast.ClassDecl:
        start = self.ts.pos
        self.ts.expect("class")
        name = self.ts.expect_kind(IDENT, "class name").text
        self.ts.expect("{")
        fields = []
        while self._at_etype() and self.ts.at(";", 2):
            fields.append(self.field_decl())
        methods_start = self.ts.pos
        methods = []
        while not self.ts.at("}"):
            methods.append(self.method())
        if methods:
            list_span = self.ts.span_from(methods_start)
        else:
            brace = self.ts.peek()
            list_span = ast.Span(brace.line, brace.col, brace.line, brace.col)
        method_list = ast.MethodList(tuple(methods), span=list_span)
        self.ts.expect("}")
        return ast.ClassDecl(name, tuple(fields), method_list, span=self._span(start))

    def field_decl(self) -> ast.FieldDecl:
        start = self.ts.pos
        type_name = self._etype()
        name = self.ts.expect_kind(IDENT, "field name").text
        self.ts.expect(";")
        return ast.FieldDecl(type_name, name, span=self._span(start))

    def method(self) -> ast.MethodDecl:
        start = self.ts.pos
        if self.ts.accept("void"):
            return_type = "void"
        else:
            return_type = self._etype()
        name = self.ts.expect_kind(IDENT, "method name").text
        self.ts.expect("(")
        formals = []
        if not self.ts.at(")"):
            formals.append(self.formal())
            while self.ts.accept(","):
                formals.append(self.formal())
        self.ts.expect(")")
        body = self.block()
        return ast.MethodDecl(return_type, name, tuple(formals), body, span=self._span(start))

    def formal(self) -> ast.Formal:
        start = self.ts.pos
        type_name = self._etype()
        name = self.ts.expect_kind(IDENT, "parameter name").text
        return ast.Formal(type_name, name, span=self._span(start))

    def _at_etype(self) -> bool:
        return self.ts.at("int") or self.ts.at("boolean")

    def _etype(self) -> str:
        if self.ts.at("int") or self.ts.at("boolean"):
            return self.ts.advance().text
        self.ts.fail("'int' or 'boolean'")
        raise AssertionError("unreachable")

    def block(self) -> ast.Block:
        start = self.ts.pos
        self.ts.expect("{")
        statements = []
        while not self.ts.at("}"):
            statements.append(self.statement())
        self.ts.expect("}")
        return ast.Block(tuple(statements), span=self._span(start))

    def statement(self) -> ast.Statement:
        start = self.ts.pos
        if self.ts.at("{"):
            return self.block()
        if self._at_etype():
            type_name = self._etype()
            name = self.ts.expect_kind(IDENT, "variable name").text
            init = None
            if self.ts.accept("="):
                init = self.expression()
            self.ts.expect(";")
            return ast.LocalVarDecl(type_name, name, init, span=self._span(start))
        if self.ts.at("if"):
            self.ts.advance()
            self.ts.expect("(")
            condition = self.expression()
            self.ts.expect(")")
            then_branch = self.statement()
            else_branch = None
            if self.ts.accept("else"):
                else_branch = self.statement()
            return ast.If(condition, then_branch, else_branch, span=self._span(start))
        if self.ts.at("while"):
            self.ts.advance()
            self.ts.expect("(")
            condition = self.expression()
            self.ts.expect(")")
            body = self.statement()
            return ast.While(condition, body, span=self._span(start))
        if self.ts.at("return"):
            self.ts.advance()
            value = None
            if not self.ts.at(";"):
                value = self.expression()
            self.ts.expect(";")
            return ast.Return(value, span=self._span(start))
        if self.ts.at("this"):
            call = self.call()
            self.ts.expect(";")
            return ast.CallStmt(call, span=self._span(start))
        if self.ts.at_kind(IDENT):
            if self.ts.at("=", 1):
                name = self.ts.advance().text
                self.ts.advance()
                value = self.expression()
                self.ts.expect(";")
                return ast.Assign(name, value, span=self._span(start))
            if self.ts.at("(", 1):
                call = self.call()
                self.ts.expect(";")
                return ast.CallStmt(call, span=self._span(start))
        self.ts.fail("a statement")
        raise AssertionError("unreachable")

    def call(self) -> ast.Call:
        start = self.ts.pos
        this_qualified = False
        if self.ts.accept("this"):
            self.ts.expect(".")
            this_qualified = True
        name = self.ts.expect_kind(IDENT, "method name").text
        self.ts.expect("(")
        args = []
        if not self.ts.at(")"):
            args.append(self.expression())
            while self.ts.accept(","):
                args.append(self.expression())
        self.ts.expect(")")
        return ast.Call(this_qualified, name, tuple(args), span=self._span(start))

    def expression(self, min_prec: int = 1) -> ast.Expression:
        start = self.ts.pos
        left = self.unary()
        while True:
            tok = self.ts.peek()
            prec = BINOP_PRECEDENCE.get(tok.text) if tok.kind == SYMBOL else None
            if prec is None or prec < min_prec:
                return left
            self.ts.advance()
            right = self.expression(prec + 1)
            left = ast.BinOp(tok.text, left, right, span=self._span(start))

    def unary(self) -> ast.Expression:
        start = self.ts.pos
        if self.ts.accept("!"):
            operand = self.unary()
            return ast.Not(operand, span=self._span(start))
        return self.primary()

    def primary(self) -> ast.Expression:
        start = self.ts.pos
        tok = self.ts.peek()
        if tok.kind == INT:
            self.ts.advance()
            return ast.IntLit(int(tok.text), span=self._span(start))
        if self.ts.at("true") or self.ts.at("false"):
            self.ts.advance()
            return ast.BoolLit(tok.text == "true", span=self._span(start))
        if self.ts.at("("):
            self.ts.advance()
            inner = self.expression()
            self.ts.expect(")")
            return replace(inner, span=self._span(start))
        if self.ts.at("this"):
            return self.call()
        if tok.kind == IDENT:
            if self.ts.at("(", 1):
                return self.call()
            self.ts.advance()
            return ast.VarRef(tok.text, span=self._span(start))
        self.ts.fail("an expression")
        raise AssertionError("unreachable")
