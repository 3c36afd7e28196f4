"""Command-line contract: the golden corpus of end-to-end scenarios with
byte-exact stdout and the documented exit codes, plus output-mode behavior."""

from __future__ import annotations

from pathlib import Path

import pytest

from refax.cli import main

GOLDEN = Path(__file__).parent / "golden"

# (name, argv, expected exit code, expected-stdout file or literal "", stderr fragment)
SCENARIOS = [
    # -- joos ---------------------------------------------------------------
    ("j-extract-block",
     "extract --lang joos --file {g}/joos/account.joos --focus 6:9-10:10 --name stash",
     0, "j-extract-block.out", None),
    ("j-extract-stmt",
     "extract --lang joos --file {g}/joos/account.joos --focus 11:9-11:26 --name audit",
     0, "j-extract-stmt.out", None),
    ("j-extract-field",
     "extract --lang joos --file {g}/joos/fields.joos --focus 5:9-5:32 --name probe",
     0, "j-extract-field.out", None),
    ("j-extract-return-reject",
     "extract --lang joos --file {g}/joos/returns.joos --focus 5:9-10:10 --name body",
     1, "", "HasReturn"),
    ("j-extract-assign-reject",
     "extract --lang joos --file {g}/joos/assigns.joos --focus 5:9-7:10 --name body",
     1, "", "AssignsFreeVariable(count)"),
    ("j-extract-clash",
     "extract --lang joos --file {g}/joos/account.joos --focus 6:9-10:10 --name log",
     1, "", "NameClash"),
    ("j-extract-span-mismatch",
     "extract --lang joos --file {g}/joos/account.joos --focus 6:9-10:9 --name stash",
     2, "", "SpanMismatch"),
    ("j-extract-parse-error",
     "extract --lang joos --file {g}/joos/bad_syntax.joos --focus 1:1-1:2 --name x",
     2, "", "ParseError"),
    ("j-extract-usage",
     "extract --lang joos --file {g}/joos/account.joos --focus 6:9-10:10",
     3, "", "--name"),
    ("j-introduce",
     "introduce --lang joos --file {g}/joos/account.joos --class Account --decl {g}/joos/newmethod.jdecl",
     0, "j-introduce.out", None),
    ("j-introduce-clash",
     "introduce --lang joos --file {g}/joos/account.joos --class Account --decl {g}/joos/clash.jdecl",
     1, "", "NameClash"),
    ("j-introduce-bad-decl",
     "introduce --lang joos --file {g}/joos/account.joos --class Account --decl {g}/joos/bad.jdecl",
     2, "", "ParseError"),
    ("j-introduce-unknown-class",
     "introduce --lang joos --file {g}/joos/account.joos --class Missing --decl {g}/joos/newmethod.jdecl",
     1, "", "NoHost"),
    ("j-check-clean",
     "check --lang joos --file {g}/joos/account.joos",
     0, "", None),
    ("j-check-dirty",
     "check --lang joos --file {g}/joos/unresolved.joos",
     1, "j-check-dirty.out", None),
    ("j-ast",
     "ast --lang joos --file {g}/joos/fields.joos",
     0, "j-ast.out", None),
    # -- minilet ------------------------------------------------------------
    ("m-extract-inner",
     "extract --lang minilet --file {g}/minilet/nested.mlt --focus 6:31-6:36 --name mul",
     0, "m-extract-inner.out", None),
    ("m-extract-body",
     "extract --lang minilet --file {g}/minilet/pipeline.mlt --focus 5:5-5:22 --name left",
     0, "m-extract-body.out", None),
    ("m-extract-nohost",
     "extract --lang minilet --file {g}/minilet/top.mlt --focus 1:5-1:10 --name q",
     1, "", "NoHost"),
    ("m-extract-clash",
     "extract --lang minilet --file {g}/minilet/pipeline.mlt --focus 5:5-5:22 --name square",
     1, "", "NameClash"),
    ("m-extract-span-mismatch",
     "extract --lang minilet --file {g}/minilet/pipeline.mlt --focus 5:5-5:21 --name left",
     2, "", "SpanMismatch"),
    ("m-extract-parse-error",
     "extract --lang minilet --file {g}/minilet/bad.mlt --focus 1:1-1:2 --name x",
     2, "", "ParseError"),
    ("m-extract-usage",
     "extract --lang minilet --file {g}/minilet/pipeline.mlt --name x",
     3, "", "--focus"),
    ("m-introduce",
     "introduce --lang minilet --file {g}/minilet/pipeline.mlt --focus 2:5-3:23 --decl {g}/minilet/newfun.mdecl",
     0, "m-introduce.out", None),
    ("m-introduce-clash",
     "introduce --lang minilet --file {g}/minilet/pipeline.mlt --focus 2:5-3:23 --decl {g}/minilet/clash.mdecl",
     1, "", "NameClash"),
    ("m-introduce-missing-focus",
     "introduce --lang minilet --file {g}/minilet/pipeline.mlt --decl {g}/minilet/newfun.mdecl",
     3, "", "--focus"),
    ("m-check-clean",
     "check --lang minilet --file {g}/minilet/pipeline.mlt",
     0, "", None),
    ("m-check-dirty",
     "check --lang minilet --file {g}/minilet/unbound.mlt",
     1, "m-check-dirty.out", None),
    ("m-ast",
     "ast --lang minilet --file {g}/minilet/pipeline.mlt",
     0, "m-ast.out", None),
]


def run_scenario(argv_template, capsys):
    argv = argv_template.format(g=GOLDEN).split()
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.parametrize("name,argv,expected_code,out_file,err_fragment",
                         SCENARIOS, ids=[s[0] for s in SCENARIOS])
def test_golden_scenario(name, argv, expected_code, out_file, err_fragment, capsys):
    code, out, err = run_scenario(argv, capsys)
    assert code == expected_code, f"{name}: exit {code}, stderr: {err!r}"
    if out_file:
        expected = (GOLDEN / "expected" / out_file).read_text(encoding="utf-8")
        assert out == expected
    else:
        assert out == ""  # failures and clean checks print nothing on stdout
    if err_fragment is not None:
        assert err_fragment in err


def test_sources_untouched_by_read_only_runs(capsys):
    before = (GOLDEN / "joos" / "account.joos").read_bytes()
    for name, argv, *_ in SCENARIOS:
        run_scenario(argv, capsys)
    assert (GOLDEN / "joos" / "account.joos").read_bytes() == before


def test_output_to_file(tmp_path, capsys):
    out_path = tmp_path / "result.joos"
    code = main([
        "extract", "--lang", "joos", "--file", str(GOLDEN / "joos" / "account.joos"),
        "--focus", "6:9-10:10", "--name", "stash", "--output", str(out_path),
    ])
    assert code == 0
    assert capsys.readouterr().out == ""
    expected = (GOLDEN / "expected" / "j-extract-block.out").read_text(encoding="utf-8")
    assert out_path.read_text(encoding="utf-8") == expected


def test_in_place_success_rewrites_atomically(tmp_path, capsys):
    work = tmp_path / "account.joos"
    work.write_bytes((GOLDEN / "joos" / "account.joos").read_bytes())
    code = main([
        "extract", "--lang", "joos", "--file", str(work),
        "--focus", "6:9-10:10", "--name", "stash", "--in-place",
    ])
    assert code == 0
    expected = (GOLDEN / "expected" / "j-extract-block.out").read_text(encoding="utf-8")
    assert work.read_text(encoding="utf-8") == expected
    assert list(tmp_path.iterdir()) == [work]  # no temp litter


def test_in_place_failure_leaves_file_byte_identical(tmp_path, capsys):
    work = tmp_path / "account.joos"
    original = (GOLDEN / "joos" / "account.joos").read_bytes()
    work.write_bytes(original)
    code = main([
        "extract", "--lang", "joos", "--file", str(work),
        "--focus", "6:9-10:10", "--name", "log", "--in-place",
    ])
    assert code == 1
    assert work.read_bytes() == original


def test_missing_file_reports_io_error(capsys):
    code = main(["check", "--lang", "joos", "--file", "/nonexistent/x.joos"])
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_unknown_command_is_usage_error(capsys):
    assert main(["obliterate", "--lang", "joos", "--file", "x"]) == 3
    assert main([]) == 3
    assert main(["extract", "--lang", "cobol", "--file", "x", "--focus", "1:1-1:2", "--name", "n"]) == 3


def test_malformed_span_is_usage_error(capsys):
    code = main([
        "extract", "--lang", "joos", "--file", str(GOLDEN / "joos" / "account.joos"),
        "--focus", "86", "--name", "x",
    ])
    assert code == 3
    code = main([
        "extract", "--lang", "joos", "--file", str(GOLDEN / "joos" / "account.joos"),
        "--focus", "9:9-6:1", "--name", "x",
    ])
    assert code == 3
