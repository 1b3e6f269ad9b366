# %% [markdown]
# # Windowed bigrams and boundary deficits
#
# A window of size w pairs each token with the next w - 1 tokens.  Tokens near
# either end of a short text have fewer partners, and the index records them.

# %%
from exactbigrams import build_index, enumerate_bigrams, tokenize

doc = tokenize("I like kitties and doggies")
doc.tokens

# %%
for w in (2, 4):
    pairs = sorted(enumerate_bigrams(doc, w))
    print(f"window {w}: {len(pairs)} pairs")
    for a, b in pairs:
        print("   ", a, b)

# %% [markdown]
# Each histogram slot d counts occurrences whose offending index is d.  For
# the right side, the index is measured from the end of the text.

# %%
index = build_index([tokenize("eight mice eat eight cheese sticks")], window=5)
print("tfl[eight] =", index.tfl["eight"])   # offending left indices 0 and 3
print("tfr[sticks] =", index.tfr["sticks"])

# %%
index = build_index([tokenize("Dogs are better than cats")], window=3)
print("tfl[dogs] =", index.tfl["dogs"], " tfr[cats] =", index.tfr["cats"])
