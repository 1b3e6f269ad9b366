# %% [markdown]
# # Ranking collocations
#
# Contingency tables built from exact marginals are internally consistent
# (cells nonnegative, summing to N).  Approximate ones can drift, which moves
# scores and sometimes the ranking.

# %%
from exactbigrams import build_index, contingency, score, tokenize, top_k

texts = [
    "new york is big",
    "i love new york",
    "new york new york",
    "york is old",
    "big apple big city",
    "the big apple",
]
index = build_index([tokenize(t) for t in texts], window=2)

# %%
print(contingency(index, "new", "york", "exact"))
print(contingency(index, "new", "york", "approximate"))

# %%
for mode in ("exact", "approximate"):
    print(mode)
    for hit in top_k(index, "log_likelihood", k=5, mode=mode):
        print(f"   {hit.pair[0]:>6} {hit.pair[1]:<6} n11={hit.n11}  G2={hit.score:.3f}")

# %%
for measure in ("pmi", "chi_square", "log_likelihood", "t_score", "dice"):
    exact = score(contingency(index, "big", "apple"), measure)
    approx = score(contingency(index, "big", "apple", "approximate"), measure)
    print(f"{measure:15} exact={exact:8.4f}  approx={approx:8.4f}")
