"""Brute-force windowed bigram enumeration, used as ground truth.

Nothing here touches the deficit tables; every count is obtained by walking
all position pairs directly.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple, Union

from .corpus import Document
from .index import FrequencyIndex, check_window
from .marginals import exact_left_marginal, exact_right_marginal, total_bigram_count

__all__ = ["VerificationReport", "enumerate_bigrams", "oracle_bigrams", "oracle_marginals", "verify_index"]

Doc = Union[Document, Sequence[str]]


def _tokens(doc: Doc) -> Sequence[str]:
    return doc.tokens if isinstance(doc, Document) else doc


def enumerate_bigrams(doc: Doc, window: int) -> Counter:
    check_window(window)
    tokens = _tokens(doc)
    pairs = Counter()
    for i in range(len(tokens)):
        for j in range(i + 1, len(tokens)):
            if j - i <= window - 1:
                pairs[(tokens[i], tokens[j])] += 1
    return pairs


def oracle_bigrams(docs: Iterable[Doc], window: int) -> Counter:
    total = Counter()
    for doc in docs:
        total.update(enumerate_bigrams(doc, window))
    return total


def oracle_marginals(docs: Iterable[Doc], window: int, word: str) -> Tuple[int, int]:
    """(pairs ending in ``word``, pairs starting with ``word``)."""
    left = right = 0
    for (first, second), n in oracle_bigrams(docs, window).items():
        if second == word:
            left += n
        if first == word:
            right += n
    return left, right


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    quantity: Optional[str] = None
    index_value: object = None
    oracle_value: object = None

    def __str__(self) -> str:
        if self.ok:
            return "OK"
        return f"MISMATCH {self.quantity}: index={self.index_value} oracle={self.oracle_value}"


def verify_index(index: FrequencyIndex, docs: Iterable[Doc]) -> VerificationReport:
    """Recount everything from ``docs`` and report the first disagreement."""
    docs = [_tokens(d) for d in docs]
    w = index.window

    def fail(quantity, ours, theirs):
        return VerificationReport(False, quantity, ours, theirs)

    if index.doc_count != len(docs):
        return fail("doc_count", index.doc_count, len(docs))
    tokens = sum(len(d) for d in docs)
    if index.token_count != tokens:
        return fail("token_count", index.token_count, tokens)

    words = Counter(t for d in docs for t in d)
    for word in sorted(set(words) | set(index.word_fd)):
        if index.word_fd.get(word, 0) != words[word]:
            return fail(f"word_fd[{word!r}]", index.word_fd.get(word, 0), words[word])

    pairs = oracle_bigrams(docs, w)
    for pair in sorted(set(pairs) | set(index.bigram_fd)):
        if index.bigram_fd.get(pair, 0) != pairs[pair]:
            return fail(f"bigram_fd[{pair!r}]", index.bigram_fd.get(pair, 0), pairs[pair])

    left, right = Counter(), Counter()
    for (first, second), n in pairs.items():
        right[first] += n
        left[second] += n
    for word in sorted(words):
        if exact_left_marginal(index, word) != left[word]:
            return fail(f"left_marginal[{word!r}]", exact_left_marginal(index, word), left[word])
        if exact_right_marginal(index, word) != right[word]:
            return fail(f"right_marginal[{word!r}]", exact_right_marginal(index, word), right[word])

    n = sum(pairs.values())
    if total_bigram_count(index) != n:
        return fail("total", total_bigram_count(index), n)
    return VerificationReport(True)
