"""Exception hierarchy shared across the package."""


class BigramError(Exception):
    """Base class for every error raised by exactbigrams."""


class CorpusDecodeError(BigramError, ValueError):
    """Input bytes are not valid UTF-8."""

    def __init__(self, offset: int, reason: str = "invalid UTF-8"):
        self.offset = offset
        super().__init__(f"{reason} at byte offset {offset}")


class CorpusFormatError(BigramError, ValueError):
    """A corpus record is malformed."""

    def __init__(self, line: int, reason: str):
        self.line = line
        super().__init__(f"line {line}: {reason}")


class IndexFormatError(BigramError, ValueError):
    """A saved index violates the file schema."""

    def __init__(self, field: str, reason: str):
        self.field = field
        super().__init__(f"{field}: {reason}")


class IndexVersionError(BigramError, ValueError):
    pass


class IncompatibleIndexError(BigramError, ValueError):
    """Two indexes differ in window or tokenizer and cannot be combined."""


class UndefinedScoreError(BigramError, ArithmeticError):
    pass
