"""Minilet instantiation of the generic refactorings.

The host of a focused expression is the definition list of the innermost
enclosing let, found by marking let nodes whose subtree contains the
focus; a focus in the let body and a focus inside one of its definitions
both belong to that let's list. Extraction needs no language-specific
precondition: pure expressions contain no returns or assignments.
"""

from __future__ import annotations

import dataclasses

from .. import framework
from ..framework import AbstractionSignature, ConstructorRejected
from ..lexing import Span, SpanMismatch
from ..strategy import SortCase, StrategyFailure, apply_tp, mono_tp, oncetd_tp
from . import ast
from .analysis import declared_pairs, referenced_names
from .parser import parse_program


def _unwrap_expr_focus(t: ast.Expression) -> ast.Expression:
    if isinstance(t, ast.ExprFocus):
        return t.expr
    raise StrategyFailure("no expression focus here")


def _wrap_let_defs(t: ast.Expression) -> ast.Expression:
    if isinstance(t, ast.Let) and isinstance(t.defs, ast.FunDefList):
        return dataclasses.replace(t, defs=ast.FunDefListFocus(t.defs))
    raise StrategyFailure("not a let with a plain definition list")


def _unwrap_list_focus(t: ast.FunDefSection) -> ast.FunDefList:
    if isinstance(t, ast.FunDefListFocus):
        return t.inner
    raise StrategyFailure("no definition list focus here")


expr_focus = SortCase(ast.EXPRESSION, _unwrap_expr_focus)
let_defs_host = SortCase(ast.EXPRESSION, _wrap_let_defs)
fundef_list_focus = SortCase(ast.FUNDEF_LIST, _unwrap_list_focus)


def _make_formals(pairs) -> tuple[str, ...]:
    for p in pairs:
        if p.tpe != ast.VAL:
            raise ConstructorRejected(f"formal {p.name!r} has unexpected type {p.tpe}")
    return tuple(p.name for p in pairs)


def _make_abstraction(name: str, formals, body) -> ast.FunDef:
    if not isinstance(body, ast.Expression):
        raise ConstructorRejected(f"function body must be an expression, got {body.tag}")
    return ast.FunDef(name, tuple(formals), body)


def _get_abs_name(fd) -> str:
    if isinstance(fd, ast.FunDef):
        return fd.name
    raise ConstructorRejected(f"not a function definition: {fd.tag}")


function_signature = AbstractionSignature(
    get_abs_name=_get_abs_name,
    get_abs_formals=lambda fd: fd.params,
    get_abs_body=lambda fd: fd.body,
    make_abstraction=_make_abstraction,
    make_formals=_make_formals,
    get_apply_name=lambda c: c.name,
    get_apply_actuals=lambda c: c.args,
    make_application=lambda name, actuals: ast.Call(name, tuple(actuals)),
    make_actuals=lambda pairs: tuple(ast.Var(p.name) for p in pairs),
    body_from_fragment=lambda fragment: fragment,
    fragment_from_application=lambda call: call,
)


def check_extractable(fragment: ast.Expression) -> None:
    """Pure expressions carry no extraction conditions."""


def extract_function(new_name: str, program: ast.Program) -> ast.Program:
    """Extract the focused expression into a new function of the innermost
    enclosing let, replacing the focus with a call."""
    return framework.extract(
        declared_pairs,
        referenced_names,
        expr_focus,
        let_defs_host,
        fundef_list_focus,
        check_extractable,
        function_signature,
        new_name,
        program,
    )


def introduce_function(fundef: ast.FunDef, program: ast.Program) -> ast.Program:
    """Append ``fundef`` to the focused definition list, rejecting clashes."""
    return framework.introduce(
        declared_pairs,
        referenced_names,
        fundef_list_focus,
        function_signature,
        fundef,
        program,
    )


_KINDS = {"expr": ast.EXPRESSION, "fundeflist": ast.FUNDEF_LIST}


def place_focus_by_span(source: str, kind: str, span: Span) -> ast.Program:
    """Parse ``source`` and wrap the unique node of the requested kind whose
    span matches exactly. ``kind`` is ``expr`` or ``fundeflist``."""
    if kind not in _KINDS:
        raise ValueError(f"unknown focus kind {kind!r}")
    program = parse_program(source)
    target = _find_by_span(program, _KINDS[kind], span, kind)
    if kind == "expr":
        wrap = SortCase(ast.EXPRESSION, lambda t: _wrap_if_is(t, target, ast.ExprFocus))
    else:
        wrap = SortCase(ast.FUNDEF_LIST, lambda t: _wrap_if_is(t, target, ast.FunDefListFocus))
    return apply_tp(oncetd_tp(mono_tp(wrap)), program)


def _wrap_if_is(t, target, wrapper):
    if t is target:
        return wrapper(t)
    raise StrategyFailure("not the selected node")


def _find_by_span(program, sort, span: Span, kind: str):
    candidates = []

    def collect(t):
        if t.sort == sort and t.span is not None:
            candidates.append(t)
        for c in t.children():
            collect(c)

    collect(program)
    for t in candidates:
        if t.span == span:
            return t
    nearest = sorted(
        candidates,
        key=lambda t: (abs(t.span.line - span.line), abs(t.span.col - span.col),
                       abs(t.span.end_line - span.end_line), abs(t.span.end_col - span.end_col)),
    )[:3]
    shown = ", ".join(str(t.span) for t in nearest) or "none"
    raise SpanMismatch(
        f"no {kind} node covers exactly {span}; nearest candidate spans: {shown}"
    )
