# %% [markdown]
# # Exact marginals against the full-window shortcut
#
# The shortcut gives every occurrence w - 1 partners on both sides.  The exact
# marginal subtracts the partners lost to document edges.

# %%
from exactbigrams import approx_marginal, build_index, exact_left_marginal, exact_right_marginal, tokenize

index = build_index([tokenize("I like kitties and doggies")], window=4)
print(f"{'word':8} {'approx':>6} {'left':>5} {'right':>5}")
for word in ["i", "like", "kitties", "and", "doggies"]:
    print(f"{word:8} {approx_marginal(index, word):>6} "
          f"{exact_left_marginal(index, word):>5} {exact_right_marginal(index, word):>5}")

# %% [markdown]
# "doggies" never starts a pair, yet the shortcut credits it with three.
#
# ## How fast does the error shrink?
#
# On a single text of length L the shortcut overstates the bigram total by
# w(w-1)/2.  Relative to the true total that fraction falls like 1/L.

# %%
import random

from exactbigrams import total_bigram_count

rng = random.Random(0)
w = 5
for length in (10, 30, 100, 1000, 10000):
    idx = build_index([[rng.choice("abcdef") for _ in range(length)]], w)
    exact = total_bigram_count(idx)
    approx = (w - 1) * idx.token_count
    print(f"L={length:>6}  exact={exact:>6}  approx={approx:>6}  rel.err={(approx - exact) / exact:.2e}")

# %% [markdown]
# A corpus of many short texts pays that penalty once per text, so the error
# never washes out: tweets of 12 tokens at w=5 are off by about 26%.

# %%
tweets = [[rng.choice("abcdefghij") for _ in range(12)] for _ in range(2000)]
idx = build_index(tweets, w)
exact = total_bigram_count(idx)
print(f"2000 tweets: relative error {((w - 1) * idx.token_count - exact) / exact:.1%}")
