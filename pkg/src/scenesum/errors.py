"""Exception hierarchy shared across the engine.

The CLI maps these onto exit codes: UsageError -> 1, InvalidInputError
(and subclasses) -> 2, ProviderError -> 3.
"""


class EngineError(Exception):
    """Base class for all engine failures."""


class UsageError(EngineError):
    """Bad command-line arguments or option combinations."""


class InvalidInputError(EngineError):
    """Input data violates a documented precondition or invariant."""


class SingularInputError(InvalidInputError):
    """A zero-norm vector reached a cosine computation."""


class SubtitleParseError(InvalidInputError):
    """Malformed subtitle payload; carries the 1-based offending line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ProviderError(EngineError):
    """A model provider failed (transport, contract, or lookup)."""


class MissingKeyError(ProviderError):
    """A file-backed provider has no entry for the requested key."""
