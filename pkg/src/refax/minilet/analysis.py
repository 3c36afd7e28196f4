"""Name analyses for minilet.

A function definition binds its own name and its formal parameters, all
with the universal type ``"val"``; identifier expressions are the
referencing occurrences. As in the JOOS instantiation, call names are
references to functions that stay in scope across an extraction, so they
are not part of the free-name currency.

``resolution_check`` backs the CLI's check command: unbound variables,
calls to undefined functions, call-arity mismatches and duplicate names
within one definition list. Definitions in a list are mutually visible
(letrec scoping).
"""

from __future__ import annotations

from ..framework import FocusPresent, NameTypePair
from ..strategy import QueryTU, SortCase, StrategyFailure, mono_tu
from . import ast


def _declared_fundef(t: ast.FunDef) -> tuple[NameTypePair, ...]:
    return (NameTypePair(t.name, ast.VAL),) + tuple(
        NameTypePair(p, ast.VAL) for p in t.params
    )


def _identifier_use(t: ast.Expression) -> tuple[str, ...]:
    if isinstance(t, ast.Var):
        return (t.name,)
    raise StrategyFailure("not an identifier expression")


declared_pairs: QueryTU = mono_tu(SortCase(ast.FUNDEF, _declared_fundef))
referenced_names: QueryTU = mono_tu(SortCase(ast.EXPRESSION, _identifier_use))


def resolution_check(program: ast.Program) -> list[str]:
    """Diagnostics for unbound variables, undefined or misapplied
    functions, and duplicate definitions. Empty means clean."""
    if _wrapped(program):
        raise FocusPresent("resolution check requires a wrapper-free program")
    diags: list[str] = []
    _check_expr(program.body, {}, frozenset(), diags)
    return diags


def _wrapped(t) -> bool:
    if isinstance(t, (ast.ExprFocus, ast.FunDefListFocus)):
        return True
    return any(_wrapped(c) for c in t.children())


def _check_expr(e, funcs: dict[str, int], vars_: frozenset[str], diags: list[str]) -> None:
    if isinstance(e, ast.Var):
        if e.name not in vars_:
            diags.append(f"unbound variable '{e.name}'")
    elif isinstance(e, ast.Call):
        if e.name not in funcs:
            diags.append(f"call of undefined function '{e.name}'")
        elif funcs[e.name] != len(e.args):
            diags.append(
                f"call arity mismatch for '{e.name}' (expected {funcs[e.name]}, got {len(e.args)})"
            )
        for a in e.args:
            _check_expr(a, funcs, vars_, diags)
    elif isinstance(e, ast.BinOp):
        _check_expr(e.left, funcs, vars_, diags)
        _check_expr(e.right, funcs, vars_, diags)
    elif isinstance(e, ast.Let):
        defs = e.defs.defs if isinstance(e.defs, ast.FunDefList) else ()
        seen = set()
        for fd in defs:
            if fd.name in seen:
                diags.append(f"duplicate definition of '{fd.name}' in one let")
            seen.add(fd.name)
        inner = dict(funcs)
        inner.update({fd.name: len(fd.params) for fd in defs})
        for fd in defs:
            dup = [p for p in fd.params if fd.params.count(p) > 1]
            if dup:
                diags.append(f"duplicate parameter '{dup[0]}' of '{fd.name}'")
            _check_expr(fd.body, inner, vars_ | frozenset(fd.params), diags)
        _check_expr(e.body, inner, vars_, diags)
