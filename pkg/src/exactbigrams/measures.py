"""Association measures over contingency tables and top-k collocation ranking."""

from __future__ import annotations

import enum
import heapq
import math
from dataclasses import dataclass
from typing import List, Tuple, Union

from .errors import UndefinedScoreError
from .index import FrequencyIndex
from .marginals import ContingencyTable, Mode, contingency, total_bigram_count

__all__ = ["MeasureId", "ScoredBigram", "score", "top_k"]


class MeasureId(str, enum.Enum):
    PMI = "pmi"
    CHI_SQUARE = "chi_square"
    LOG_LIKELIHOOD = "log_likelihood"
    T_SCORE = "t_score"
    DICE = "dice"


@dataclass(frozen=True)
class ScoredBigram:
    pair: Tuple[str, str]
    score: float
    n11: int


def _expected(t: ContingencyTable):
    n = t.total
    row0, col0 = t.n01 + t.n00, t.n10 + t.n00
    return (
        t.row1 * t.col1 / n,
        t.row1 * col0 / n,
        row0 * t.col1 / n,
        row0 * col0 / n,
    )


def _pmi(t: ContingencyTable) -> float:
    if t.n11 <= 0:
        raise UndefinedScoreError("pmi is undefined for a zero joint count")
    return math.log2(t.n11 * t.total / (t.row1 * t.col1))


def _chi_square(t: ContingencyTable) -> float:
    denom = t.row1 * t.col1 * (t.n01 + t.n00) * (t.n10 + t.n00)
    if denom == 0:
        # a degenerate margin carries no evidence either way
        return 0.0
    return t.total * (t.n11 * t.n00 - t.n10 * t.n01) ** 2 / denom


def _log_likelihood(t: ContingencyTable) -> float:
    g2 = 0.0
    for obs, exp in zip((t.n11, t.n10, t.n01, t.n00), _expected(t)):
        if obs < 0:
            raise UndefinedScoreError("log_likelihood needs nonnegative cells")
        if obs == 0 or exp == 0:
            continue
        g2 += obs * math.log(obs / exp)
    return 2.0 * g2


def _t_score(t: ContingencyTable) -> float:
    if t.n11 <= 0:
        raise UndefinedScoreError("t_score is undefined for a zero joint count")
    return (t.n11 - _expected(t)[0]) / math.sqrt(t.n11)


def _dice(t: ContingencyTable) -> float:
    denom = t.row1 + t.col1
    if denom <= 0:
        raise UndefinedScoreError("dice is undefined when both marginals are zero")
    return 2.0 * t.n11 / denom


_MEASURES = {
    MeasureId.PMI: _pmi,
    MeasureId.CHI_SQUARE: _chi_square,
    MeasureId.LOG_LIKELIHOOD: _log_likelihood,
    MeasureId.T_SCORE: _t_score,
    MeasureId.DICE: _dice,
}


def score(table: ContingencyTable, measure: Union[str, MeasureId]) -> float:
    """Score one contingency table.

    pmi is log2(n11 * N / (row1 * col1)); the others follow the usual
    textbook definitions (chi-square without continuity correction, G2 with
    natural logs, t-score against the independence expectation).

    Raises UndefinedScoreError when the measure has no value for the table.
    """
    measure = MeasureId(measure)
    if table.total <= 0:
        raise UndefinedScoreError("empty contingency table")
    try:
        return _MEASURES[measure](table)
    except (ZeroDivisionError, ValueError) as exc:
        raise UndefinedScoreError(f"{measure.value}: {exc}") from exc


def top_k(
    index: FrequencyIndex,
    measure: Union[str, MeasureId],
    k: int = 10,
    min_count: int = 1,
    mode: Union[str, Mode] = Mode.EXACT,
) -> List[ScoredBigram]:
    """Return the ``k`` best-scoring bigrams with at least ``min_count`` joint occurrences.

    Ordering is by descending score, then ascending (word1, word2).  Pairs whose
    score is undefined under ``mode`` are left out.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    measure = MeasureId(measure)
    mode = Mode.parse(mode)
    floor = max(min_count, 1)
    total = total_bigram_count(index)
    candidates = []
    for pair, n11 in index.bigram_fd.items():
        if n11 < floor:
            continue
        try:
            value = score(contingency(index, pair[0], pair[1], mode, total=total), measure)
        except UndefinedScoreError:
            continue
        candidates.append((-value, pair, n11))
    best = heapq.nsmallest(k, candidates)
    return [ScoredBigram(pair, -neg, n11) for neg, pair, n11 in best]
