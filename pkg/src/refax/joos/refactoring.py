"""JOOS instantiation of the generic refactorings.

Extract-method wires the generic extraction with the JOOS name analyses,
the statement focus, the method-list host and the method signature below.
Extracted methods always have result void: the fragment is a statement,
returns inside it are rejected, and assignments to free variables are
rejected, so no value flows back. Generated calls are this-qualified.
"""

from __future__ import annotations


from .. import framework
from ..framework import AbstractionSignature, CheckFailed, ConstructorRejected
from ..lexing import Span, SpanMismatch
from ..strategy import (
    SortCase,
    StrategyFailure,
    apply_tp,
    apply_tu,
    mono_tp,
    mono_tu,
    oncetd_tp,
    oncetd_tu,
)
from . import ast
from .analysis import ExprType, declared_pairs, defined_names, referenced_names
from .parser import parse_program


def _unwrap_statement_focus(t: ast.Statement) -> ast.Statement:
    if isinstance(t, ast.StatementFocus):
        return t.statement
    raise StrategyFailure("no statement focus here")


def _wrap_method_list(t: ast.MethodSection) -> ast.MethodSection:
    if isinstance(t, ast.MethodList):
        return ast.MethodDeclarationFocus(t)
    raise StrategyFailure("not a plain method list")


def _unwrap_method_list_focus(t: ast.MethodSection) -> ast.MethodList:
    if isinstance(t, ast.MethodDeclarationFocus):
        return t.inner
    raise StrategyFailure("no method list focus here")


statement_focus = SortCase(ast.STATEMENT, _unwrap_statement_focus)
method_list_host = SortCase(ast.METHOD_LIST, _wrap_method_list)
method_list_focus = SortCase(ast.METHOD_LIST, _unwrap_method_list_focus)


# -- the Abstraction instance for JOOS method declarations ------------------


def _get_abs_name(m) -> str:
    if isinstance(m, ast.MethodDecl):
        return m.name
    raise ConstructorRejected(f"not a method declaration: {m.tag}")


def _make_formals(pairs) -> tuple[ast.Formal, ...]:
    formals = []
    for p in pairs:
        if not isinstance(p.tpe, ExprType):
            raise ConstructorRejected(f"formal {p.name!r} has a non-expression type {p.tpe}")
        formals.append(ast.Formal(p.tpe.name, p.name))
    return tuple(formals)


def _make_actuals(pairs) -> tuple[ast.VarRef, ...]:
    for p in pairs:
        if not isinstance(p.tpe, ExprType):
            raise ConstructorRejected(f"actual {p.name!r} has a non-expression type {p.tpe}")
    return tuple(ast.VarRef(p.name) for p in pairs)


def _make_abstraction(name: str, formals, body) -> ast.MethodDecl:
    if not isinstance(body, ast.Block):
        raise ConstructorRejected(f"method body must be a block, got {body.tag}")
    return ast.MethodDecl("void", name, tuple(formals), body)


def _body_from_fragment(fragment) -> ast.Block:
    if isinstance(fragment, ast.Block):
        return fragment
    return ast.Block((fragment,))


method_signature = AbstractionSignature(
    get_abs_name=_get_abs_name,
    get_abs_formals=lambda m: m.formals,
    get_abs_body=lambda m: m.body,
    make_abstraction=_make_abstraction,
    make_formals=_make_formals,
    get_apply_name=lambda c: c.name,
    get_apply_actuals=lambda c: c.args,
    make_application=lambda name, actuals: ast.Call(True, name, tuple(actuals)),
    make_actuals=_make_actuals,
    body_from_fragment=_body_from_fragment,
    fragment_from_application=lambda call: ast.CallStmt(call),
)


# -- extraction preconditions ------------------------------------------------


def _contains_return(fragment: ast.Statement) -> bool:
    def is_return(t: ast.Statement) -> bool:
        if isinstance(t, ast.Return):
            return True
        raise StrategyFailure("not a return")

    try:
        apply_tu(oncetd_tu(mono_tu(SortCase(ast.STATEMENT, is_return))), fragment)
        return True
    except StrategyFailure:
        return False


def check_extractable(fragment: ast.Statement) -> None:
    """A fragment is extractable when it contains no return statement,
    assigns only variables it declares itself, and is not a bare local
    declaration (whose variable would go out of scope at the old site)."""
    if _contains_return(fragment):
        raise CheckFailed("HasReturn")
    declared = framework.declared_names(declared_pairs)
    frees = framework.free_names(declared, defined_names, fragment)
    if frees:
        raise CheckFailed(f"AssignsFreeVariable({frees[0]})")
    if isinstance(fragment, ast.LocalVarDecl):
        raise CheckFailed("ExtractsDeclaration")


def extract_method(new_name: str, program: ast.Program) -> ast.Program:
    """Extract the focused statement into a fresh void method of the
    enclosing class, replacing the focus with ``this.new_name(...)``."""
    return framework.extract(
        declared_pairs,
        referenced_names,
        statement_focus,
        method_list_host,
        method_list_focus,
        check_extractable,
        method_signature,
        new_name,
        program,
    )


def introduce_method(method: ast.MethodDecl, program: ast.Program) -> ast.Program:
    """Append ``method`` to the focused method list, rejecting name clashes."""
    return framework.introduce(
        declared_pairs,
        referenced_names,
        method_list_focus,
        method_signature,
        method,
        program,
    )


# -- placing a focus by source span -------------------------------------------

_KINDS = {"statement": ast.STATEMENT, "methodlist": ast.METHOD_LIST}


def place_focus_by_span(source: str, kind: str, span: Span) -> ast.Program:
    """Parse ``source`` and wrap the unique node of the requested kind whose
    span matches exactly. ``kind`` is ``statement`` or ``methodlist``."""
    if kind not in _KINDS:
        raise ValueError(f"unknown focus kind {kind!r}")
    program = parse_program(source)
    sort = _KINDS[kind]
    target = _find_by_span(program, sort, span, kind)
    if kind == "statement":
        wrap = SortCase(ast.STATEMENT, lambda t: _wrap_if_is(t, target, ast.StatementFocus))
    else:
        wrap = SortCase(ast.METHOD_LIST, lambda t: _wrap_if_is(t, target, ast.MethodDeclarationFocus))
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
