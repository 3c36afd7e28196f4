"""Command-line driver: parse, place a focus, refactor, check and dump.

Exit codes: 0 success; 1 a refactoring precondition failed (the source
file is untouched); 2 parse or span errors; 3 usage errors. Program text
goes to the output stream, diagnostics about failures to the error
stream, so outputs are pipeable. In-place rewriting is atomic (temp file
plus rename in the same directory).
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile

from . import joos, minilet
from .framework import FocusPresent, RefactoringError
from .lexing import ParseError, Span, SpanMismatch


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 3 on usage errors
        self.print_usage(sys.stderr)
        self.exit(3, f"{self.prog}: error: {message}\n")


def _span_arg(text: str) -> Span:
    return Span.parse(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="refax", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--lang", required=True, choices=["joos", "minilet"])
        p.add_argument("--file", required=True, help="source file to operate on")

    def output_opts(p: argparse.ArgumentParser) -> None:
        group = p.add_mutually_exclusive_group()
        group.add_argument("--output", help="write the result to this path")
        group.add_argument(
            "--in-place", action="store_true", help="rewrite the source file atomically"
        )

    p_extract = sub.add_parser("extract", parents=[], help="extract the focused fragment")
    common(p_extract)
    p_extract.add_argument(
        "--focus", required=True, type=_span_arg, metavar="L:C-L:C",
        help="span of the fragment (1-based, end-exclusive)",
    )
    p_extract.add_argument("--name", required=True, help="name for the new abstraction")
    output_opts(p_extract)

    p_intro = sub.add_parser("introduce", help="introduce a parsed abstraction")
    common(p_intro)
    p_intro.add_argument("--decl", required=True, help="file holding one abstraction")
    p_intro.add_argument("--class", dest="class_name", help="target class (joos)")
    p_intro.add_argument(
        "--focus", type=_span_arg, metavar="L:C-L:C",
        help="span of the target definition list (minilet)",
    )
    output_opts(p_intro)

    p_check = sub.add_parser("check", help="run the static checks")
    common(p_check)

    p_ast = sub.add_parser("ast", help="dump the term structure")
    common(p_ast)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(parser, args)
    except (RefactoringError, FocusPresent) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (ParseError, SpanMismatch) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _usage_error(parser: argparse.ArgumentParser, message: str) -> int:
    print(f"{parser.prog}: error: {message}", file=sys.stderr)
    return 3


def _dispatch(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.command == "extract":
        return _run_extract(args)
    if args.command == "introduce":
        return _run_introduce(parser, args)
    if args.command == "check":
        return _run_check(args)
    return _run_ast(args)


def _run_extract(args: argparse.Namespace) -> int:
    source = _read(args.file)
    if args.lang == "joos":
        focused = joos.place_focus_by_span(source, "statement", args.focus)
        result = joos.pretty(joos.extract_method(args.name, focused))
    else:
        focused = minilet.place_focus_by_span(source, "expr", args.focus)
        result = minilet.pretty(minilet.extract_function(args.name, focused))
    _emit(result, args)
    return 0


def _run_introduce(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    source = _read(args.file)
    decl_source = _read(args.decl)
    if args.lang == "joos":
        if not args.class_name:
            return _usage_error(parser, "introduce --lang joos requires --class")
        method = joos.parse_method(decl_source)
        program = joos.parse_program(source)
        focused = _focus_class_methods(program, args.class_name)
        result = joos.pretty(joos.introduce_method(method, focused))
    else:
        if args.focus is None:
            return _usage_error(parser, "introduce --lang minilet requires --focus")
        fundef = minilet.parse_fundef(decl_source)
        focused = minilet.place_focus_by_span(source, "fundeflist", args.focus)
        result = minilet.pretty(minilet.introduce_function(fundef, focused))
    _emit(result, args)
    return 0


def _focus_class_methods(program, class_name: str):
    from dataclasses import replace

    from .framework import NoHost
    from .joos import ast as jast

    classes = []
    found = False
    for cls in program.classes:
        if cls.name == class_name and not found:
            if not isinstance(cls.methods, jast.MethodList):
                raise NoHost(f"class {class_name!r} has no plain method list")
            classes.append(replace(cls, methods=jast.MethodDeclarationFocus(cls.methods)))
            found = True
        else:
            classes.append(cls)
    if not found:
        raise NoHost(f"no class named {class_name!r}")
    return replace(program, classes=tuple(classes))


def _run_check(args: argparse.Namespace) -> int:
    source = _read(args.file)
    if args.lang == "joos":
        diags = joos.static_check(joos.parse_program(source))
    else:
        diags = minilet.resolution_check(minilet.parse_program(source))
    for diag in diags:
        print(diag)
    return 0 if not diags else 1


def _run_ast(args: argparse.Namespace) -> int:
    from .terms import dump

    source = _read(args.file)
    if args.lang == "joos":
        program = joos.parse_program(source)
    else:
        program = minilet.parse_program(source)
    print(dump(program))
    return 0


def _emit(text: str, args: argparse.Namespace) -> None:
    if getattr(args, "in_place", False):
        directory = os.path.dirname(os.path.abspath(args.file))
        fd, tmp_path = tempfile.mkstemp(dir=directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                handle.write(text)
            os.replace(tmp_path, args.file)
        except BaseException:
            os.unlink(tmp_path)
            raise
    elif getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    sys.exit(main())
