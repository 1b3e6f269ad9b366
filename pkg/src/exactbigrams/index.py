"""Windowed frequency index: word counts, bigram counts, and boundary deficits.

Every token position ``idx`` of a document of length ``L`` has up to ``w - 1``
left partners and up to ``w - 1`` right partners.  Positions closer than
``w - 1`` to an edge lose partners; those positions are recorded per word in
two histograms, ``tfl`` (keyed by ``idx``) and ``tfr`` (keyed by the mirrored
position ``L - idx - 1``).  Slot ``d`` of a histogram counts occurrences with
offending index ``d``, so every histogram has length ``w - 1``.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import IO, Dict, Iterable, Mapping, Tuple, Union

from .corpus import Document, TokenizerConfig
from .errors import IncompatibleIndexError, IndexFormatError, IndexVersionError

__all__ = [
    "FORMAT_VERSION",
    "FrequencyIndex",
    "IndexBuilder",
    "build_index",
    "check_window",
    "dumps_index",
    "loads_index",
    "load_index",
    "merge",
    "save_index",
    "transform_right_index",
]

FORMAT_VERSION = 1

Bigram = Tuple[str, str]
Histogram = Tuple[int, ...]


def check_window(window: int) -> int:
    if isinstance(window, bool) or not isinstance(window, int) or window < 2:
        raise ValueError(f"window must be an integer >= 2, got {window!r}")
    return window


def transform_right_index(idx: int, length: int) -> int:
    """Mirror a position so that distance from the right edge reads as an index.

    >>> transform_right_index(4, 5)
    0
    """
    if not 0 <= idx < length:
        raise ValueError(f"position {idx} out of range for document of length {length}")
    return length - idx - 1


@dataclass(frozen=True)
class FrequencyIndex:
    """Immutable result of :func:`build_index`. Do not mutate the tables."""

    window: int
    tokenizer: str
    word_fd: Mapping[str, int] = field(default_factory=dict)
    bigram_fd: Mapping[Bigram, int] = field(default_factory=dict)
    tfl: Mapping[str, Histogram] = field(default_factory=dict)
    tfr: Mapping[str, Histogram] = field(default_factory=dict)
    doc_count: int = 0
    token_count: int = 0

    @classmethod
    def empty(cls, window: int, tokenizer: Union[str, TokenizerConfig] = TokenizerConfig()) -> "FrequencyIndex":
        if isinstance(tokenizer, TokenizerConfig):
            tokenizer = tokenizer.fingerprint
        return cls(check_window(window), tokenizer)

    @property
    def vocabulary(self) -> Iterable[str]:
        return self.word_fd.keys()

    def left_deficit(self, word: str) -> Histogram:
        return self.tfl.get(word, (0,) * (self.window - 1))

    def right_deficit(self, word: str) -> Histogram:
        return self.tfr.get(word, (0,) * (self.window - 1))


class IndexBuilder:
    """Accumulates documents one at a time; call :meth:`build` when done."""

    def __init__(self, window: int, tokenizer: Union[str, TokenizerConfig] = TokenizerConfig()):
        self.window = check_window(window)
        self.tokenizer = tokenizer.fingerprint if isinstance(tokenizer, TokenizerConfig) else tokenizer
        self.word_fd: Counter = Counter()
        self.bigram_fd: Counter = Counter()
        self.tfl: Dict[str, list] = {}
        self.tfr: Dict[str, list] = {}
        self.doc_count = 0
        self.token_count = 0

    def _bump(self, table: Dict[str, list], word: str, slot: int) -> None:
        hist = table.get(word)
        if hist is None:
            hist = table[word] = [0] * (self.window - 1)
        hist[slot] += 1

    def add(self, doc: Union[Document, Iterable[str]]) -> None:
        tokens = doc.tokens if isinstance(doc, Document) else tuple(doc)
        length = len(tokens)
        self.doc_count += 1
        self.token_count += length
        self.word_fd.update(tokens)
        for d in range(1, min(self.window, length)):
            self.bigram_fd.update(zip(tokens, tokens[d:]))
        edge = min(self.window - 1, length)
        for idx in range(edge):
            self._bump(self.tfl, tokens[idx], idx)
            # tokens[length - 1 - g] sits at mirrored index g
            self._bump(self.tfr, tokens[length - 1 - idx], idx)

    def update(self, docs: Iterable[Union[Document, Iterable[str]]]) -> "IndexBuilder":
        for doc in docs:
            self.add(doc)
        return self

    def build(self) -> FrequencyIndex:
        return FrequencyIndex(
            window=self.window,
            tokenizer=self.tokenizer,
            word_fd=dict(self.word_fd),
            bigram_fd=dict(self.bigram_fd),
            tfl={k: tuple(v) for k, v in self.tfl.items()},
            tfr={k: tuple(v) for k, v in self.tfr.items()},
            doc_count=self.doc_count,
            token_count=self.token_count,
        )


def build_index(
    docs: Iterable[Union[Document, Iterable[str]]],
    window: int,
    tokenizer: Union[str, TokenizerConfig] = TokenizerConfig(),
) -> FrequencyIndex:
    """Build all four tables in one pass over ``docs``.

    Pairs never cross document boundaries.  ``tokenizer`` only labels the
    index; documents are expected to be tokenized already.
    """
    return IndexBuilder(window, tokenizer).update(docs).build()


def _sum_hists(a: Mapping[str, Histogram], b: Mapping[str, Histogram]) -> Dict[str, Histogram]:
    out = dict(a)
    for word, hist in b.items():
        prev = out.get(word)
        out[word] = hist if prev is None else tuple(x + y for x, y in zip(prev, hist))
    return out


def merge(a: FrequencyIndex, b: FrequencyIndex) -> FrequencyIndex:
    """Combine two shard indexes built with the same window and tokenizer."""
    if a.window != b.window:
        raise IncompatibleIndexError(f"window mismatch: {a.window} vs {b.window}")
    if a.tokenizer != b.tokenizer:
        raise IncompatibleIndexError(f"tokenizer mismatch: {a.tokenizer!r} vs {b.tokenizer!r}")
    word_fd = Counter(a.word_fd)
    word_fd.update(b.word_fd)
    bigram_fd = Counter(a.bigram_fd)
    bigram_fd.update(b.bigram_fd)
    return FrequencyIndex(
        window=a.window,
        tokenizer=a.tokenizer,
        word_fd=dict(word_fd),
        bigram_fd=dict(bigram_fd),
        tfl=_sum_hists(a.tfl, b.tfl),
        tfr=_sum_hists(a.tfr, b.tfr),
        doc_count=a.doc_count + b.doc_count,
        token_count=a.token_count + b.token_count,
    )


# -- persistence ------------------------------------------------------------

def _to_json(index: FrequencyIndex) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "window": index.window,
        "tokenizer": index.tokenizer,
        "doc_count": index.doc_count,
        "token_count": index.token_count,
        "word_fd": dict(index.word_fd),
        "bigram_fd": [[w1, w2, n] for (w1, w2), n in sorted(index.bigram_fd.items())],
        "tfl": {k: list(v) for k, v in index.tfl.items()},
        "tfr": {k: list(v) for k, v in index.tfr.items()},
    }


def dumps_index(index: FrequencyIndex) -> bytes:
    text = json.dumps(_to_json(index), sort_keys=True, ensure_ascii=False, separators=(",", ":"))
    return (text + "\n").encode("utf-8")


def save_index(index: FrequencyIndex, sink: IO[bytes]) -> None:
    """Write ``index`` as canonical JSON; identical indexes give identical bytes."""
    sink.write(dumps_index(index))


def _is_count(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool) and x >= 0


def _need(cond: bool, field_name: str, reason: str) -> None:
    if not cond:
        raise IndexFormatError(field_name, reason)


def _load_hists(obj, name: str, window: int, word_fd: Mapping[str, int]) -> Dict[str, Histogram]:
    _need(isinstance(obj, dict), name, "expected an object")
    out = {}
    for word, hist in obj.items():
        where = f"{name}[{word!r}]"
        _need(isinstance(hist, list) and len(hist) == window - 1, where, f"expected a list of {window - 1} counts")
        _need(all(_is_count(x) for x in hist), where, "counts must be nonnegative integers")
        _need(sum(hist) <= word_fd.get(word, 0), where, "more deficit entries than occurrences")
        if any(hist):
            out[word] = tuple(hist)
    return out


def loads_index(data: Union[bytes, str]) -> FrequencyIndex:
    try:
        obj = json.loads(data)
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise IndexFormatError("<document>", f"not valid JSON ({exc})") from exc
    _need(isinstance(obj, dict), "<document>", "expected a JSON object")
    version = obj.get("format_version")
    if version != FORMAT_VERSION or isinstance(version, bool):
        raise IndexVersionError(f"unsupported format_version {version!r}; expected {FORMAT_VERSION}")

    window = obj.get("window")
    _need(_is_count(window) and window >= 2, "window", "must be an integer >= 2")
    tokenizer = obj.get("tokenizer")
    _need(isinstance(tokenizer, str), "tokenizer", "must be a string")
    for name in ("doc_count", "token_count"):
        _need(_is_count(obj.get(name)), name, "must be a nonnegative integer")

    word_fd = obj.get("word_fd")
    _need(isinstance(word_fd, dict), "word_fd", "expected an object")
    for word, n in word_fd.items():
        _need(_is_count(n) and n >= 1, f"word_fd[{word!r}]", "counts must be positive integers")
    _need(sum(word_fd.values()) == obj["token_count"], "token_count", "does not match the sum of word_fd")

    rows = obj.get("bigram_fd")
    _need(isinstance(rows, list), "bigram_fd", "expected a list")
    bigram_fd = {}
    for i, row in enumerate(rows):
        where = f"bigram_fd[{i}]"
        _need(
            isinstance(row, list) and len(row) == 3 and isinstance(row[0], str) and isinstance(row[1], str),
            where,
            "expected [word1, word2, count]",
        )
        _need(_is_count(row[2]) and row[2] >= 1, where, "counts must be positive integers")
        pair = (row[0], row[1])
        _need(pair not in bigram_fd, where, "duplicate pair")
        bigram_fd[pair] = row[2]

    return FrequencyIndex(
        window=window,
        tokenizer=tokenizer,
        word_fd=dict(word_fd),
        bigram_fd=bigram_fd,
        tfl=_load_hists(obj.get("tfl"), "tfl", window, word_fd),
        tfr=_load_hists(obj.get("tfr"), "tfr", window, word_fd),
        doc_count=obj["doc_count"],
        token_count=obj["token_count"],
    )


def load_index(source: IO[bytes]) -> FrequencyIndex:
    """Read an index written by :func:`save_index`, validating the schema."""
    return loads_index(source.read())
