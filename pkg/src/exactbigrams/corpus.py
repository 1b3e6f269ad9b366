"""Reading short-text corpora and normalizing them into token sequences."""

from __future__ import annotations

import json
import unicodedata
from dataclasses import dataclass
from typing import BinaryIO, Iterator, Optional, Tuple

from .errors import CorpusDecodeError, CorpusFormatError

__all__ = ["Document", "TokenizerConfig", "tokenize", "read_corpus", "FORMATS"]

FORMATS = ("lines", "jsonl")


@dataclass(frozen=True)
class TokenizerConfig:
    """Whitespace tokenizer options.

    The fingerprint is stored in saved indexes so that shards built with
    different normalization are never merged.
    """

    lowercase: bool = True
    strip_edge_punctuation: bool = False

    @property
    def fingerprint(self) -> str:
        return (
            f"whitespace;lowercase={str(self.lowercase).lower()}"
            f";strip_punct={str(self.strip_edge_punctuation).lower()}"
        )

    @classmethod
    def from_fingerprint(cls, fingerprint: str) -> "TokenizerConfig":
        parts = fingerprint.split(";")
        if len(parts) != 3 or parts[0] != "whitespace":
            raise ValueError(f"unrecognized tokenizer fingerprint {fingerprint!r}")
        opts = {}
        for part in parts[1:]:
            key, _, value = part.partition("=")
            if value not in ("true", "false"):
                raise ValueError(f"unrecognized tokenizer fingerprint {fingerprint!r}")
            opts[key] = value == "true"
        try:
            return cls(lowercase=opts["lowercase"], strip_edge_punctuation=opts["strip_punct"])
        except KeyError:
            raise ValueError(f"unrecognized tokenizer fingerprint {fingerprint!r}") from None


@dataclass(frozen=True)
class Document:
    tokens: Tuple[str, ...]
    id: Optional[str] = None

    @property
    def length(self) -> int:
        return len(self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)


def _is_punct(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P")


def _strip_punct(token: str) -> str:
    start, end = 0, len(token)
    while start < end and _is_punct(token[start]):
        start += 1
    while end > start and _is_punct(token[end - 1]):
        end -= 1
    return token[start:end]


def tokenize(text: str, config: TokenizerConfig = TokenizerConfig(), id: Optional[str] = None) -> Document:
    """Split ``text`` on Unicode whitespace and normalize each run.

    >>> tokenize("I like kitties and doggies").tokens
    ('i', 'like', 'kitties', 'and', 'doggies')
    """
    tokens = []
    for run in text.split():
        if config.lowercase:
            run = run.lower()
        if config.strip_edge_punctuation:
            run = _strip_punct(run)
        if run:
            tokens.append(run)
    return Document(tuple(tokens), id)


def _decoded_lines(source: BinaryIO) -> Iterator[Tuple[int, str]]:
    offset = 0
    for lineno, raw in enumerate(source, start=1):
        try:
            line = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CorpusDecodeError(offset + exc.start) from exc
        offset += len(raw)
        yield lineno, line.rstrip("\r\n")


def read_corpus(
    source: BinaryIO,
    format: str = "lines",
    config: TokenizerConfig = TokenizerConfig(),
) -> Iterator[Document]:
    """Yield one Document per record of a UTF-8 byte stream, in input order.

    ``lines``: every non-blank line is a document.
    ``jsonl``: every non-blank line is an object with a string ``text`` and
    an optional string ``id``; other fields are ignored.
    """
    if format not in FORMATS:
        raise ValueError(f"unknown corpus format {format!r}; expected one of {FORMATS}")
    for lineno, line in _decoded_lines(source):
        if not line.strip():
            continue
        if format == "lines":
            yield tokenize(line, config)
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusFormatError(lineno, f"invalid JSON ({exc.msg})") from exc
        if not isinstance(record, dict):
            raise CorpusFormatError(lineno, f"expected a JSON object, got {type(record).__name__}")
        text = record.get("text")
        if not isinstance(text, str):
            raise CorpusFormatError(lineno, 'missing or non-string field "text"')
        doc_id = record.get("id")
        if doc_id is not None and not isinstance(doc_id, str):
            raise CorpusFormatError(lineno, 'field "id" must be a string')
        yield tokenize(text, config, id=doc_id)
