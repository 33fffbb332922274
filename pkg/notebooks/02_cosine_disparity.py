# %% [markdown]
# # From occurrence data to a disparity matrix
#
# Rows are documents, columns are categories. Two categories are similar
# when they tend to be assigned to the same documents; disparity is
# `1 - cosine`.

# %%
import numpy as np

from portdiv import cosine_similarity, to_disparity, validate_similarity

rng = np.random.default_rng(0)
docs = rng.integers(0, 3, size=(200, 6)).astype(float)
docs[:, 5] = docs[:, 0]  # category 6 duplicates category 1
docs[:, 4] = 0           # category 5 never occurs

s = cosine_similarity(docs)
np.set_printoptions(precision=3, suppress=True)
print(s)

# %% [markdown]
# Duplicated categories get similarity exactly 1; an empty category is
# dissimilar to everything but itself.

# %%
print(s[0, 5], s[4])
d = to_disparity(s)
print(d)

# %% [markdown]
# Similarity matrices exported by other tools are usually rounded, so
# validation tolerates tiny asymmetries (default 1e-9) and symmetrizes them.

# %%
exported = [
    [1.0000, 0.6270, 0.3146, 0.1280, 0.1564],
    [0.6270, 1.0000, 0.1319, 0.0777, 0.2190],
    [0.3146, 0.1319, 1.0000, 0.4214, 0.1322],
    [0.1280, 0.0777, 0.4214, 1.0000, 0.0865],
    [0.1564, 0.2190, 0.1322, 0.0865, 1.0000],
]
print(to_disparity(validate_similarity(exported)))

try:
    validate_similarity([[1, 0.5], [0.7, 1]])
except ValueError as exc:
    print("rejected:", exc)
