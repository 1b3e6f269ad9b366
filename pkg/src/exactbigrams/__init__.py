"""Exact windowed bigram marginals for corpora of short texts.

The usual shortcut takes freq(word, *) = freq(*, word) = (w - 1) * freq(word),
which overcounts every occurrence that sits near a document edge.  This
package keeps per-word histograms of those edge positions so both marginals
come out exact at the same query cost.
"""

from .corpus import Document, TokenizerConfig, read_corpus, tokenize
from .errors import (
    BigramError,
    CorpusDecodeError,
    CorpusFormatError,
    IncompatibleIndexError,
    IndexFormatError,
    IndexVersionError,
    UndefinedScoreError,
)
from .index import (
    FrequencyIndex,
    IndexBuilder,
    build_index,
    load_index,
    merge,
    save_index,
    transform_right_index,
)
from .marginals import (
    ContingencyTable,
    Mode,
    approx_marginal,
    contingency,
    exact_left_marginal,
    exact_right_marginal,
    total_bigram_count,
)
from .measures import MeasureId, ScoredBigram, score, top_k
from .oracle import VerificationReport, enumerate_bigrams, oracle_marginals, verify_index

__version__ = "0.1.0"

__all__ = [
    "BigramError",
    "ContingencyTable",
    "CorpusDecodeError",
    "CorpusFormatError",
    "Document",
    "FrequencyIndex",
    "IncompatibleIndexError",
    "IndexBuilder",
    "IndexFormatError",
    "IndexVersionError",
    "MeasureId",
    "Mode",
    "ScoredBigram",
    "TokenizerConfig",
    "UndefinedScoreError",
    "VerificationReport",
    "approx_marginal",
    "build_index",
    "contingency",
    "enumerate_bigrams",
    "exact_left_marginal",
    "exact_right_marginal",
    "load_index",
    "merge",
    "oracle_marginals",
    "read_corpus",
    "save_index",
    "score",
    "tokenize",
    "top_k",
    "total_bigram_count",
    "transform_right_index",
    "verify_index",
]
