"""Exception hierarchy and source-location data shared across the package."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SourceSpan:
    """Byte range plus line/column of the start, for diagnostics."""

    start: int
    end: int
    line: int
    column: int

    def __post_init__(self) -> None:
        if self.start > self.end:
            raise ValueError(f"span start {self.start} past end {self.end}")

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


class PolicyEngineError(Exception):
    """Base class for every error this package raises deliberately."""


class InvalidInputError(PolicyEngineError, ValueError):
    """A value outside an operation's declared domain."""


class UnknownCombinerError(PolicyEngineError):
    """A combining-algorithm id that is not registered."""

    def __init__(self, message: str, span: SourceSpan | None = None):
        super().__init__(message)
        self.span = span


class EncodingUnsupportedError(PolicyEngineError):
    """A combiner requested under an encoding it is not defined for."""


class UnsupportedCombinerError(PolicyEngineError):
    """A combiner the selected logic backend has no formulation of."""


class UnknownLatticeError(PolicyEngineError):
    """A lattice name outside the exportable set."""


class UnboundVariableError(PolicyEngineError):
    """A comparison variable that no atom of the same condition binds."""


class ParseError(PolicyEngineError):
    """Malformed DSL input; carries the offending source location."""

    def __init__(self, message: str, span: SourceSpan | None = None):
        super().__init__(message)
        self.message = message
        self.span = span

    def __str__(self) -> str:
        if self.span is None:
            return self.message
        return f"{self.span}: {self.message}"


class ArityError(ParseError):
    """A construct with fewer members than the grammar requires."""


class EmptyRequestError(ParseError):
    """A request with no attribute facts."""
