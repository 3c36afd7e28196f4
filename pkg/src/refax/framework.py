"""Language-independent refactoring layer.

Built on the strategy combinators: operations to select, replace and mark
a focus; the name analyses (free names, bound typed names along the path
to a focus, typed free names); the abstraction-signature interface a
language instance fills in; and the two refactorings composed from them,
extraction and introduction.

A language participates by providing a handful of ``SortCase`` values
(recognisers for its focus wrappers, a host marker) and ``QueryTU``
analyses for declared and referenced names, plus an
``AbstractionSignature`` bundling observers and constructors for its
abstraction form (methods, functions, ...). Everything here manipulates
terms only through the uniform protocol.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .strategy import (
    MonoidSpec,
    QueryTU,
    SortCase,
    StrategyFailure,
    above_tp,
    all_tu,
    apply_tp,
    apply_tu,
    choice_tu,
    comb_tu,
    const_tu,
    map_tu,
    mono_tp,
    mono_tu,
    oncetd_tp,
    oncetd_tu,
    propagate_tu,
)
from .terms import Term, append_child


class RefactoringError(Exception):
    """A refactoring precondition failed; the input program is unchanged."""


class NoFocus(RefactoringError):
    def __init__(self, detail: str = "no focus wrapper present") -> None:
        super().__init__(detail)


class NoHost(RefactoringError):
    def __init__(self, detail: str = "no enclosing host for the focus") -> None:
        super().__init__(detail)


class NameClash(RefactoringError):
    def __init__(self, name: str) -> None:
        super().__init__(f"name {name!r} is already defined or free in the target scope")
        self.name = name


class CheckFailed(RefactoringError):
    def __init__(self, reason: str) -> None:
        super().__init__(reason)
        self.reason = reason


class UntypedFreeName(RefactoringError):
    def __init__(self, name: str) -> None:
        super().__init__(f"free name {name!r} has no binding in the environment")
        self.name = name


class ReplacementRejected(RefactoringError):
    def __init__(self, detail: str = "focus replacement was rejected") -> None:
        super().__init__(detail)


class ConstructorRejected(RefactoringError):
    def __init__(self, detail: str) -> None:
        super().__init__(detail)


class FocusPresent(Exception):
    """An operation that requires a wrapper-free program saw a focus wrapper."""


@dataclass(frozen=True)
class NameTypePair:
    name: str
    tpe: Any


# Bindings visible at a point, outermost first; the innermost binding of a
# name is the last occurrence.
Environment = tuple[NameTypePair, ...]


def env_lookup(env: Environment, name: str) -> NameTypePair | None:
    for pair in reversed(env):
        if pair.name == name:
            return pair
    return None


@dataclass(frozen=True)
class AbstractionSignature:
    """Observers and constructors for one language's abstraction form.

    Constructors are partial: they raise ``ConstructorRejected`` for
    arguments outside the form they support. The two fragment converters
    mediate between the focused-fragment kind and the abstraction body /
    application kinds where a language distinguishes them.
    """

    get_abs_name: Callable[[Term], str]
    get_abs_formals: Callable[[Term], Any]
    get_abs_body: Callable[[Term], Term]
    make_abstraction: Callable[[str, Any, Term], Term]
    make_formals: Callable[[Sequence[NameTypePair]], Any]
    get_apply_name: Callable[[Term], str]
    get_apply_actuals: Callable[[Term], Any]
    make_application: Callable[[str, Any], Term]
    make_actuals: Callable[[Sequence[NameTypePair]], Any]
    body_from_fragment: Callable[[Term], Term]
    fragment_from_application: Callable[[Term], Term]


# ---------------------------------------------------------------------------
# Focus and scope
# ---------------------------------------------------------------------------


def select_focus(get_focus: SortCase[Term], prog: Term) -> Term:
    """Unwrap the first (preorder) focus wrapper recognised by ``get_focus``."""
    try:
        return apply_tu(oncetd_tu(mono_tu(get_focus)), prog)
    except StrategyFailure:
        raise NoFocus() from None


def replace_focus(put_focus: SortCase[Term], prog: Term) -> Term:
    """Rewrite the first focus wrapper via ``put_focus``, removing it.

    The search stops at the first wrapper ``put_focus`` recognises; if the
    rewriter then declines, ``ReplacementRejected`` propagates rather than
    the traversal descending further.
    """
    try:
        return apply_tp(oncetd_tp(mono_tp(put_focus)), prog)
    except StrategyFailure:
        raise NoFocus() from None


def mark_host(set_host: SortCase[Term], get_focus: SortCase[Term], prog: Term) -> Term:
    """Wrap the deepest host-acceptable node strictly containing the focus."""
    try:
        return apply_tp(above_tp(mono_tp(set_host), mono_tu(get_focus)), prog)
    except StrategyFailure:
        raise NoHost() from None


# ---------------------------------------------------------------------------
# Name analyses
# ---------------------------------------------------------------------------

Names = tuple[str, ...]


def _union(a: Names, b: Names) -> Names:
    out = list(a)
    for n in b:
        if n not in out:
            out.append(n)
    return tuple(out)


def _minus(a: Names, b: Names) -> Names:
    return tuple(n for n in a if n not in b)


_UNION = MonoidSpec((), _union)


def free_names_query(
    declared: QueryTU[Sequence[str]], referenced: QueryTU[Sequence[str]]
) -> QueryTU[Names]:
    """Recursive free-name analysis: at each node, the names referenced
    there joined with the free names of the children, minus the names the
    node declares. Refusal of either parameter query counts as "none"."""
    dec = choice_tu(map_tu(tuple, declared), const_tu(()))
    ref = choice_tu(map_tu(tuple, referenced), const_tu(()))
    query = QueryTU(lambda t: composed(t))  # tied below, after composition
    composed = comb_tu(_minus, comb_tu(_union, ref, all_tu(_UNION, query)), dec)
    return query


def free_names(
    declared: QueryTU[Sequence[str]],
    referenced: QueryTU[Sequence[str]],
    t: Term,
) -> Names:
    """Free names of ``t`` in order of first occurrence (preorder)."""
    return apply_tu(free_names_query(declared, referenced), t)


def bound_typed_names(
    declared: QueryTU[Sequence[NameTypePair]],
    get_focus: SortCase[Term],
    prog: Term,
) -> tuple[Environment, Term]:
    """Collect the name-type pairs declared on the root-to-focus path, in
    top-down order (deeper bindings later), together with the unwrapped
    focused fragment."""

    def select(env: Environment) -> QueryTU[tuple[Environment, Term]]:
        return mono_tu(SortCase(get_focus.sort, lambda t: (env, get_focus.fn(t))))

    def update(env: Environment) -> QueryTU[Environment]:
        return map_tu(lambda pairs: env + tuple(pairs), declared)

    try:
        return apply_tu(propagate_tu((), update, select), prog)
    except StrategyFailure:
        raise NoFocus() from None


def declared_names(declared: QueryTU[Sequence[NameTypePair]]) -> QueryTU[Names]:
    return map_tu(lambda pairs: tuple(p.name for p in pairs), declared)


def free_typed_names(
    declared: QueryTU[Sequence[NameTypePair]],
    referenced: QueryTU[Sequence[str]],
    env: Environment,
    t: Term,
) -> tuple[NameTypePair, ...]:
    """Free names of ``t`` qualified with their types from ``env``; the
    innermost binding of each name wins."""
    out = []
    for name in free_names(declared_names(declared), referenced, t):
        pair = env_lookup(env, name)
        if pair is None:
            raise UntypedFreeName(name)
        out.append(pair)
    return tuple(out)


# ---------------------------------------------------------------------------
# Refactorings
# ---------------------------------------------------------------------------


def _has_focus(case: SortCase[Term], t: Term) -> bool:
    try:
        apply_tu(oncetd_tu(mono_tu(case)), t)
        return True
    except StrategyFailure:
        return False


def introduce(
    declared: QueryTU[Sequence[NameTypePair]],
    referenced: QueryTU[Sequence[str]],
    find2: SortCase[Term],
    sig: AbstractionSignature,
    abstr: Term,
    prog: Term,
) -> Term:
    """Append ``abstr`` to the focused abstraction list, provided its name
    is neither defined by the list nor free within it."""
    lst = select_focus(find2, prog)
    name = sig.get_abs_name(abstr)
    frees = free_names(declared_names(declared), referenced, lst)
    defs = tuple(sig.get_abs_name(a) for a in lst.children())
    if name in frees or name in defs:
        raise NameClash(name)
    extended = append_child(lst, abstr)

    def put(t: Term) -> Term:
        find2.fn(t)  # recognise the wrapper; declines elsewhere
        return extended

    return replace_focus(SortCase(find2.sort, put), prog)


def extract(
    declared: QueryTU[Sequence[NameTypePair]],
    referenced: QueryTU[Sequence[str]],
    find: SortCase[Term],
    mark: SortCase[Term],
    find2: SortCase[Term],
    check: Callable[[Term], None],
    sig: AbstractionSignature,
    new_name: str,
    prog: Term,
) -> Term:
    """Extract the focused fragment into a new abstraction.

    The fragment's typed free names become the formal parameters of the
    abstraction and the actual parameters of the application that replaces
    the focus; the abstraction is introduced into the deepest enclosing
    abstraction list. Any precondition failure raises before the program
    is touched, so failure leaves the input intact.
    """
    env, fragment = bound_typed_names(declared, find, prog)
    check(fragment)
    pairs = free_typed_names(declared, referenced, env, fragment)
    formals = sig.make_formals(pairs)
    body = sig.body_from_fragment(fragment)
    abstr = sig.make_abstraction(new_name, formals, body)
    marked = mark_host(mark, find, prog)
    extended = introduce(declared, referenced, find2, sig, abstr, marked)
    actuals = sig.make_actuals(pairs)
    app = sig.make_application(new_name, actuals)

    def put(t: Term) -> Term:
        find.fn(t)  # recognise the fragment wrapper
        return sig.fragment_from_application(app)

    result = replace_focus(SortCase(find.sort, put), extended)
    if _has_focus(find, result) or _has_focus(find2, result):
        raise RuntimeError("extraction left a focus wrapper behind")
    return result
