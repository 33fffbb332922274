# %% [markdown]
# # Indicator table and correlations for twenty portfolios
#
# Twenty synthetic "cities" over 60 categories, with a disparity matrix
# derived from a random document-category matrix. Each city gets one row of
# indicators; the indicators are then correlated pairwise, Pearson below the
# diagonal and Spearman above it.

# %%
import numpy as np

from portdiv import batch_indicators, correlation_table, cosine_similarity, to_disparity
from portdiv.analysis import format_correlation

rng = np.random.default_rng(42)
n_cat, n_city = 60, 20
d = to_disparity(cosine_similarity(rng.poisson(0.4, size=(500, n_cat))))

occupancy = rng.uniform(0.1, 0.9, n_city)
counts = rng.lognormal(1.5, 1.2, size=(n_cat, n_city)).round()
counts *= rng.uniform(size=counts.shape) < occupancy
labels = [f"city{i:02d}" for i in range(n_city)]

table = batch_indicators(counts, d, labels=labels)

# %%
print(f"{'label':8} {'rao':>6} {'div':>6} {'gini':>6} {'var':>6}")
order = sorted(range(n_city), key=lambda i: -table.records[i].div)
for i in order:
    r = table.records[i]
    print(f"{labels[i]:8} {r.rao_stirling:6.3f} {r.div:6.3f} {r.gini:6.3f} "
          f"{r.variety_relative:6.3f}")

# %% [markdown]
# DIV tracks variety and Gini closely because they are two of its factors,
# while Rao-Stirling follows Gini-Simpson and Shannon.

# %%
ct = correlation_table(table)
print(format_correlation(ct))
