"""Shared tokenizer and source-position types for the language frontends.

Positions are 1-based line:column; spans are end-exclusive.
"""

from __future__ import annotations

from dataclasses import dataclass

IDENT = "ident"
INT = "int"
KEYWORD = "kw"
SYMBOL = "sym"
EOF = "eof"


@dataclass(frozen=True)
class Span:
    line: int
    col: int
    end_line: int
    end_col: int

    def __str__(self) -> str:
        return f"{self.line}:{self.col}-{self.end_line}:{self.end_col}"

    @classmethod
    def parse(cls, text: str) -> Span:
        try:
            start, end = text.split("-")
            line, col = (int(p) for p in start.split(":"))
            end_line, end_col = (int(p) for p in end.split(":"))
        except ValueError:
            raise ValueError(f"malformed span {text!r}, expected L:C-L:C") from None
        if (end_line, end_col) < (line, col):
            raise ValueError(f"span {text!r} is not well-ordered")
        return cls(line, col, end_line, end_col)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int
    end_line: int
    end_col: int

    @property
    def start(self) -> tuple[int, int]:
        return (self.line, self.col)

    @property
    def end(self) -> tuple[int, int]:
        return (self.end_line, self.end_col)


class ParseError(Exception):
    def __init__(self, line: int, col: int, message: str) -> None:
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


class SpanMismatch(Exception):
    """The requested focus span does not exactly cover a node of the
    requested kind. The message lists the nearest candidate spans."""


_IDENT_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_")
_IDENT_CONT = _IDENT_START | set("0123456789")
_DIGITS = set("0123456789")


def tokenize(source: str, keywords: frozenset[str], symbols: tuple[str, ...]) -> list[Token]:
    """Scan ``source`` into tokens. ``symbols`` must be sorted longest first
    so multi-character operators win over their prefixes."""
    tokens: list[Token] = []
    line, col, i = 1, 1, 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            col += 1
            i += 1
            continue
        if ch in _IDENT_START:
            j = i
            while j < n and source[j] in _IDENT_CONT:
                j += 1
            text = source[i:j]
            kind = KEYWORD if text in keywords else IDENT
            tokens.append(Token(kind, text, line, col, line, col + (j - i)))
            col += j - i
            i = j
            continue
        if ch in _DIGITS:
            j = i
            while j < n and source[j] in _DIGITS:
                j += 1
            tokens.append(Token(INT, source[i:j], line, col, line, col + (j - i)))
            col += j - i
            i = j
            continue
        for sym in symbols:
            if source.startswith(sym, i):
                tokens.append(Token(SYMBOL, sym, line, col, line, col + len(sym)))
                col += len(sym)
                i += len(sym)
                break
        else:
            raise ParseError(line, col, f"unexpected character {ch!r}")
    tokens.append(Token(EOF, "", line, col, line, col))
    return tokens


class TokenStream:
    """Cursor over a token list with the lookahead helpers the recursive
    descent parsers need."""

    def __init__(self, tokens: list[Token]) -> None:
        self._tokens = tokens
        self.pos = 0

    def peek(self, ahead: int = 0) -> Token:
        i = min(self.pos + ahead, len(self._tokens) - 1)
        return self._tokens[i]

    def at(self, text: str, ahead: int = 0) -> bool:
        tok = self.peek(ahead)
        return tok.kind in (KEYWORD, SYMBOL) and tok.text == text

    def at_kind(self, kind: str, ahead: int = 0) -> bool:
        return self.peek(ahead).kind == kind

    def advance(self) -> Token:
        tok = self.peek()
        if tok.kind != EOF:
            self.pos += 1
        return tok

    def accept(self, text: str) -> Token | None:
        if self.at(text):
            return self.advance()
        return None

    def expect(self, text: str) -> Token:
        if self.at(text):
            return self.advance()
        return self.fail(repr(text))

    def expect_kind(self, kind: str, what: str) -> Token:
        if self.at_kind(kind):
            return self.advance()
        return self.fail(what)

    def expect_eof(self) -> None:
        if not self.at_kind(EOF):
            self.fail("end of input")

    def fail(self, expected: str) -> Token:
        tok = self.peek()
        found = repr(tok.text) if tok.kind != EOF else "end of input"
        raise ParseError(tok.line, tok.col, f"expected {expected}, found {found}")

    def last_end(self) -> tuple[int, int]:
        tok = self._tokens[max(self.pos - 1, 0)]
        return tok.end

    def span_from(self, start_pos: int) -> Span:
        start = self._tokens[start_pos]
        end_line, end_col = self.last_end()
        return Span(start.line, start.col, end_line, end_col)
