import random

from hypothesis import strategies as st

KITTIES = "I like kitties and doggies"
MICE = "eight mice eat eight cheese sticks"
DOGS = "Dogs are better than cats"

WINDOW2_PAIRS = {("i", "like"), ("like", "kitties"), ("kitties", "and"), ("and", "doggies")}
WINDOW4_PAIRS = {
    ("i", "like"), ("i", "kitties"), ("i", "and"),
    ("like", "kitties"), ("like", "and"), ("like", "doggies"),
    ("kitties", "and"), ("kitties", "doggies"),
    ("and", "doggies"),
}


def random_corpus(rng: random.Random, n_docs=(2, 50), doc_len=(0, 10), vocab=(3, 8)):
    words = [f"t{i}" for i in range(rng.randint(*vocab))]
    return [
        [rng.choice(words) for _ in range(rng.randint(*doc_len))]
        for _ in range(rng.randint(*n_docs))
    ]


tokens = st.sampled_from(["a", "b", "c", "d", "e"])
documents = st.lists(tokens, max_size=10)
corpora = st.lists(documents, max_size=12)
windows = st.integers(min_value=2, max_value=6)
