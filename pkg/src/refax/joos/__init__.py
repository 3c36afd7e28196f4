"""JOOS: a mini-Java instantiation of the refactoring framework."""

from . import ast
from .analysis import (
    ExprType,
    MethodType,
    declared_pairs,
    defined_names,
    referenced_names,
    static_check,
    used_names,
)
from .parser import parse_method, parse_program
from .pretty import pretty
from .refactoring import (
    check_extractable,
    extract_method,
    introduce_method,
    method_list_focus,
    method_list_host,
    method_signature,
    place_focus_by_span,
    statement_focus,
)

__all__ = [
    "ast",
    "ExprType",
    "MethodType",
    "declared_pairs",
    "defined_names",
    "used_names",
    "referenced_names",
    "static_check",
    "parse_program",
    "parse_method",
    "pretty",
    "check_extractable",
    "extract_method",
    "introduce_method",
    "method_signature",
    "statement_focus",
    "method_list_host",
    "method_list_focus",
    "place_focus_by_span",
]
