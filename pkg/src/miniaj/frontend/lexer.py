"""Tokenizer for MiniAJ source text."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import LexError

KEYWORDS = {
    "class", "extends", "aspect", "pointcut", "before", "after", "returning",
    "execution", "try", "catch", "while", "for", "if", "else", "new", "return",
    "print", "read", "sleep", "start", "wait", "notify", "import",
    "int", "string", "void", "this",
}

# Two-character operators must be matched before their one-character prefixes.
TWO_CHAR = ("==", "!=", "<=", ">=", "++", "--")
ONE_CHAR = "{}();,.@:=<>+-*/%"


@dataclass(frozen=True)
class Token:
    kind: str           # keyword, IDENT, INT, STRING, or the operator text
    value: str
    line: int
    col: int

    def __repr__(self) -> str:
        return f"{self.kind}({self.value!r})@{self.line}:{self.col}"


def tokenize(text: str) -> list[Token]:
    """Scan *text* into tokens, dropping comments and whitespace.

    Raises LexError with a position for any character outside the alphabet.
    """
    toks: list[Token] = []
    i, line, col = 0, 1, 1
    n = len(text)

    def advance(k: int) -> None:
        nonlocal i, line, col
        for _ in range(k):
            if i < n and text[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            advance(1)
            continue
        if text.startswith("//", i):
            while i < n and text[i] != "\n":
                advance(1)
            continue
        if text.startswith("/*", i):
            start_line, start_col = line, col
            advance(2)
            while i < n and not text.startswith("*/", i):
                advance(1)
            if i >= n:
                raise LexError("unterminated block comment", start_line, start_col)
            advance(2)
            continue
        if ch == '"':
            start_line, start_col = line, col
            advance(1)
            buf = []
            while i < n and text[i] != '"':
                if text[i] == "\n":
                    raise LexError("unterminated string literal", start_line, start_col)
                if text[i] == "\\" and i + 1 < n:
                    esc = text[i + 1]
                    buf.append({"n": "\n", "t": "\t", '"': '"', "\\": "\\"}.get(esc, esc))
                    advance(2)
                    continue
                buf.append(text[i])
                advance(1)
            if i >= n:
                raise LexError("unterminated string literal", start_line, start_col)
            advance(1)
            toks.append(Token("STRING", "".join(buf), start_line, start_col))
            continue
        if ch.isdigit():
            start_line, start_col = line, col
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(Token("INT", text[i:j], start_line, start_col))
            advance(j - i)
            continue
        if ch.isalpha() or ch == "_":
            start_line, start_col = line, col
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            kind = word if word in KEYWORDS else "IDENT"
            toks.append(Token(kind, word, start_line, start_col))
            advance(j - i)
            continue
        two = text[i:i + 2]
        if two in TWO_CHAR:
            toks.append(Token(two, two, line, col))
            advance(2)
            continue
        if ch in ONE_CHAR or ch == "!":
            if ch == "!":
                raise LexError(f"illegal character {ch!r}", line, col)
            toks.append(Token(ch, ch, line, col))
            advance(1)
            continue
        raise LexError(f"illegal character {ch!r}", line, col)
    return toks
