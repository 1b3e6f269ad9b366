"""Exact and approximate marginal frequencies and 2x2 contingency tables."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence, Union

from .index import FrequencyIndex

__all__ = [
    "ContingencyTable",
    "Mode",
    "approx_marginal",
    "contingency",
    "exact_left_marginal",
    "exact_right_marginal",
    "total_bigram_count",
]


class Mode(str, enum.Enum):
    EXACT = "exact"
    APPROXIMATE = "approximate"

    @classmethod
    def parse(cls, value: Union[str, "Mode"]) -> "Mode":
        if isinstance(value, Mode):
            return value
        if value == "approx":
            return cls.APPROXIMATE
        return cls(value)


def _deficit(window: int, hist: Sequence[int]) -> int:
    # an occurrence at offending index d has only d partners on that side
    return sum(n * (window - d - 1) for d, n in enumerate(hist))


def approx_marginal(index: FrequencyIndex, word: str) -> int:
    """Partner count assuming every occurrence sees a full window on each side."""
    return (index.window - 1) * index.word_fd.get(word, 0)


def exact_left_marginal(index: FrequencyIndex, word: str) -> int:
    """Number of windowed bigrams whose second element is ``word``."""
    hist = index.tfl.get(word)
    full = approx_marginal(index, word)
    return full if hist is None else full - _deficit(index.window, hist)


def exact_right_marginal(index: FrequencyIndex, word: str) -> int:
    """Number of windowed bigrams whose first element is ``word``."""
    hist = index.tfr.get(word)
    full = approx_marginal(index, word)
    return full if hist is None else full - _deficit(index.window, hist)


def total_bigram_count(index: FrequencyIndex) -> int:
    return sum(index.bigram_fd.values())


@dataclass(frozen=True)
class ContingencyTable:
    """Counts for (word1 first, word2 second) over all windowed bigrams.

    ``n10`` is word1 followed by something other than word2, ``n01`` is
    something other than word1 followed by word2.  Approximate tables may hold
    negative cells; check ``mode`` before trusting them.
    """

    n11: int
    n10: int
    n01: int
    n00: int
    total: int
    mode: Mode = Mode.EXACT

    @property
    def row1(self) -> int:
        return self.n11 + self.n10

    @property
    def col1(self) -> int:
        return self.n11 + self.n01

    def is_consistent(self) -> bool:
        cells = (self.n11, self.n10, self.n01, self.n00)
        return min(cells) >= 0 and sum(cells) == self.total


def contingency(
    index: FrequencyIndex,
    word1: str,
    word2: str,
    mode: Union[str, Mode] = Mode.EXACT,
    total: int = None,
) -> ContingencyTable:
    """Assemble the 2x2 table for the ordered pair (word1, word2).

    ``total`` may be passed to avoid re-summing the bigram table on every call
    when scoring many pairs in exact mode.
    """
    mode = Mode.parse(mode)
    n11 = index.bigram_fd.get((word1, word2), 0)
    if mode is Mode.EXACT:
        row = exact_right_marginal(index, word1)
        col = exact_left_marginal(index, word2)
        if total is None:
            total = total_bigram_count(index)
    else:
        row = approx_marginal(index, word1)
        col = approx_marginal(index, word2)
        total = (index.window - 1) * index.token_count
    n10 = row - n11
    n01 = col - n11
    return ContingencyTable(n11, n10, n01, total - n11 - n10 - n01, total, mode)
