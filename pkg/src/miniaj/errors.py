"""Error types shared across the MiniAJ toolchain."""

from __future__ import annotations


class MiniAjError(Exception):
    """Base class; carries an optional source position."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.message = message
        self.line = line
        self.col = col
        super().__init__(str(self))

    def __str__(self) -> str:
        if self.line is not None:
            return f"{self.message} (line {self.line}, col {self.col})"
        return self.message


class LexError(MiniAjError):
    pass


class ParseError(MiniAjError):
    """Syntax error; carries the expected-token set."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None,
                 expected: tuple[str, ...] = ()):
        self.expected = expected
        super().__init__(message, line, col)


class ResolveError(MiniAjError):
    pass


class AnnotationError(MiniAjError):
    pass


class RuntimeFault(MiniAjError):
    """Aborted execution; the partial trace survives on the exception."""

    def __init__(self, message: str, trace=None, node: int | None = None):
        self.trace = trace
        self.node = node
        super().__init__(message)


class DeadlockError(RuntimeFault):
    pass


class ProtocolError(MiniAjError):
    """Slicer fed events out of order or referencing unknown vertices."""
