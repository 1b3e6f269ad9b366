import io
import json
import random
from collections import Counter

import pytest
from hypothesis import given, settings

from exactbigrams import (
    FrequencyIndex,
    IncompatibleIndexError,
    IndexBuilder,
    IndexFormatError,
    IndexVersionError,
    TokenizerConfig,
    build_index,
    load_index,
    merge,
    save_index,
    tokenize,
    transform_right_index,
)
from exactbigrams.index import dumps_index, loads_index
from helpers import DOGS, KITTIES, MICE, WINDOW2_PAIRS, WINDOW4_PAIRS, corpora, random_corpus, windows


def hist_multiset(hist):
    return Counter({d: n for d, n in enumerate(hist) if n})


@pytest.mark.parametrize("idx,length,expected", [(4, 5, 0), (0, 1, 0), (2, 6, 3)])
def test_transform_right_index(idx, length, expected):
    assert transform_right_index(idx, length) == expected


@pytest.mark.parametrize("idx,length", [(5, 5), (-1, 3), (0, 0)])
def test_transform_right_index_out_of_range(idx, length):
    with pytest.raises(ValueError):
        transform_right_index(idx, length)


def test_build_window2_paper_example():
    index = build_index([tokenize(KITTIES)], 2)
    assert index.bigram_fd == {pair: 1 for pair in WINDOW2_PAIRS}


def test_build_window4_paper_example():
    index = build_index([tokenize(KITTIES)], 4)
    assert index.bigram_fd == {pair: 1 for pair in WINDOW4_PAIRS}


def test_tfl_eight_mice():
    index = build_index([tokenize(MICE)], 5)
    assert hist_multiset(index.tfl["eight"]) == Counter({0: 1, 3: 1})


@pytest.mark.parametrize("w", [2, 3, 4, 5, 9])
def test_dogs_and_cats_deficits_for_all_windows(w):
    index = build_index([tokenize(DOGS)], w)
    assert hist_multiset(index.tfl["dogs"]) == Counter({0: 1})
    assert hist_multiset(index.tfr["cats"]) == Counter({0: 1})


def test_repeated_pair_counts_every_position_pair():
    index = build_index([["b", "a", "a"]], 3)
    assert index.bigram_fd[("b", "a")] == 2
    assert index.bigram_fd[("a", "a")] == 1


def test_short_document_lands_in_both_tables():
    index = build_index([["x", "y"]], 5)
    assert index.tfl["x"] == (1, 0, 0, 0) and index.tfr["x"] == (0, 1, 0, 0)
    assert index.tfl["y"] == (0, 1, 0, 0) and index.tfr["y"] == (1, 0, 0, 0)


@pytest.mark.parametrize("w", [1, 0, -3, True, 2.5])
def test_bad_window(w):
    with pytest.raises(ValueError):
        build_index([], w)


def test_empty_docs_count_but_contribute_nothing():
    index = build_index([[], ["a"], []], 3)
    assert index.doc_count == 3 and index.token_count == 1
    assert index.bigram_fd == {}


@given(corpora, windows)
def test_table_invariants(docs, w):
    index = build_index(docs, w)
    assert sum(index.word_fd.values()) == index.token_count
    assert all(n >= 1 for n in index.word_fd.values())
    assert all(n >= 1 for n in index.bigram_fd.values())
    for table in (index.tfl, index.tfr):
        for word, hist in table.items():
            assert len(hist) == w - 1  # every stored index lies in [0, w-2]
            assert sum(hist) <= index.word_fd[word]


@given(corpora, windows)
def test_total_bigrams_closed_form(docs, w):
    index = build_index(docs, w)
    expected = sum(min(w - 1, len(d) - 1 - i) for d in docs for i in range(len(d)))
    assert sum(index.bigram_fd.values()) == expected
    if all(len(d) >= w - 1 for d in docs):
        nonempty = sum(1 for d in docs if d)
        assert expected == (w - 1) * index.token_count - nonempty * w * (w - 1) // 2
    if w == 2:
        assert expected == index.token_count - sum(1 for d in docs if d)


# -- merge ------------------------------------------------------------------

def test_merge_identity():
    x = build_index([tokenize(KITTIES), tokenize(MICE)], 4)
    assert merge(x, FrequencyIndex.empty(4)) == x
    assert merge(FrequencyIndex.empty(4), x) == x


def test_merge_window_mismatch():
    with pytest.raises(IncompatibleIndexError):
        merge(build_index([], 3), build_index([], 4))


def test_merge_tokenizer_mismatch():
    with pytest.raises(IncompatibleIndexError):
        merge(build_index([], 3), build_index([], 3, TokenizerConfig(lowercase=False)))


@settings(max_examples=50)
@given(corpora, corpora, corpora, windows)
def test_merge_matches_concatenated_build(a, b, c, w):
    ia, ib, ic = (build_index(x, w) for x in (a, b, c))
    assert merge(ia, ib) == build_index(a + b, w)
    assert merge(ia, ib) == merge(ib, ia)
    assert merge(merge(ia, ib), ic) == merge(ia, merge(ib, ic))


def test_incremental_builder_equals_batch():
    rng = random.Random(7)
    docs = random_corpus(rng)
    builder = IndexBuilder(3)
    for d in docs:
        builder.add(d)
    assert builder.build() == build_index(docs, 3)


# -- persistence --------------------------------------------------------------

def _roundtrip(index):
    buf = io.BytesIO()
    save_index(index, buf)
    buf.seek(0)
    return load_index(buf)


def test_round_trip_window4():
    index = build_index([tokenize(KITTIES)], 4)
    assert _roundtrip(index) == index


def test_save_is_deterministic_regardless_of_insertion_order():
    docs = [tokenize(KITTIES), tokenize(MICE), tokenize(DOGS)]
    assert dumps_index(build_index(docs, 3)) == dumps_index(build_index(docs, 3))
    swapped = merge(build_index(docs[2:], 3), build_index(docs[:2], 3))
    assert dumps_index(swapped) == dumps_index(build_index(docs, 3))


def test_save_empty_index():
    data = json.loads(dumps_index(FrequencyIndex.empty(3)))
    assert data["word_fd"] == {} and data["bigram_fd"] == [] and data["tfl"] == {} and data["tfr"] == {}
    assert _roundtrip(FrequencyIndex.empty(3)) == FrequencyIndex.empty(3)


def test_file_layout():
    data = json.loads(dumps_index(build_index([tokenize(MICE)], 5)))
    assert data["format_version"] == 1
    assert data["window"] == 5
    assert data["tfl"]["eight"] == [1, 0, 0, 1]
    assert data["bigram_fd"] == sorted(data["bigram_fd"])
    raw = dumps_index(build_index([tokenize(MICE)], 5)).decode()
    keys = [k for k in json.loads(raw)]
    assert keys == sorted(keys)


@given(corpora, windows)
def test_round_trip_property(docs, w):
    index = build_index(docs, w)
    assert loads_index(dumps_index(index)) == index


def _corrupt(**changes):
    data = json.loads(dumps_index(build_index([tokenize(KITTIES)], 4)))
    data.update(changes)
    return json.dumps(data).encode()


def test_load_rejects_unknown_version():
    with pytest.raises(IndexVersionError):
        loads_index(_corrupt(format_version=999))


@pytest.mark.parametrize(
    "changes,field",
    [
        ({"word_fd": {"i": -1}}, "word_fd['i']"),
        ({"bigram_fd": [["i", "like", -2]]}, "bigram_fd[0]"),
        ({"bigram_fd": [["i", "like"]]}, "bigram_fd[0]"),
        ({"window": 1}, "window"),
        ({"tokenizer": 3}, "tokenizer"),
        ({"doc_count": "x"}, "doc_count"),
        ({"token_count": 99}, "token_count"),
        ({"tfl": {"i": [1, 0]}}, "tfl['i']"),
        ({"tfr": {"i": [0, 0, -1]}}, "tfr['i']"),
        ({"tfl": {"i": [1, 1, 0]}}, "tfl['i']"),
    ],
)
def test_load_rejects_schema_violations(changes, field):
    with pytest.raises(IndexFormatError) as err:
        loads_index(_corrupt(**changes))
    assert err.value.field == field


def test_load_rejects_garbage():
    with pytest.raises(IndexFormatError):
        loads_index(b"\x00not json")
    with pytest.raises(IndexFormatError):
        loads_index(b"[]")
