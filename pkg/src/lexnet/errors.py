"""Exception types shared across the package."""


class LexnetError(Exception):
    """Base class for all package errors."""


class ParseError(LexnetError):
    """Malformed dictionary source. Carries the 1-based line/column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class BuildError(LexnetError):
    """Network construction failed (e.g. a unit lost all of its tokens)."""


class UnresolvableWordError(LexnetError):
    """A word maps to no node, directly or through the affix rules."""

    def __init__(self, word: str):
        super().__init__(f"word not in network: {word!r}")
        self.word = word


class EmptyWordListError(LexnetError):
    """No token of a word list survived root-mapping."""


class FileFormatError(LexnetError):
    """A persisted artifact is unreadable or has an unsupported version."""
