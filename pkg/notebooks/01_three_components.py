# %% [markdown]
# # Variety, balance and disparity
#
# A portfolio is a vector of counts over N categories. DIV multiplies three
# separately computed factors, each in [0, 1]:
#
# * relative variety: share of categories that are occupied,
# * balance: Gini coefficient of the occupied counts,
# * disparity: mean pairwise disparity among the occupied categories.
#
# Rao-Stirling diversity mixes the first two into its proportion weights.

# %%
import numpy as np

import portdiv

d = np.array(
    [
        [0.0, 0.5, 0.3, 0.7],
        [0.5, 0.0, 0.2, 0.1],
        [0.3, 0.2, 0.0, 0.6],
        [0.7, 0.1, 0.6, 0.0],
    ]
)
x = np.array([3, 1, 0, 0])

# %%
variety = portdiv.relative_variety(x)
balance = portdiv.gini(x)
spread = portdiv.mean_disparity(x, d)
print(f"relative variety {variety}, gini {balance}, mean disparity {spread}")
print(f"div = {variety} * {balance} * {spread} = {portdiv.div(x, d)}")
print(f"rao-stirling = {portdiv.rao_stirling(x, d)}")

# %% [markdown]
# Gini is taken over the occupied categories only, so padding a portfolio
# with empty categories lowers variety but leaves balance untouched.

# %%
padded = np.concatenate([x, np.zeros(4)])
print(portdiv.gini(x), portdiv.gini(padded))
print(portdiv.relative_variety(x), portdiv.relative_variety(padded))

# %% [markdown]
# An evenly spread portfolio has Gini 0 and therefore DIV 0, whatever its
# Rao-Stirling value.

# %%
even = np.ones(4)
full = 1 - np.eye(4)
print("rao-stirling", portdiv.rao_stirling(even, full), "div", portdiv.div(even, full))

# %% [markdown]
# The comparison indicators, and the whole record at once:

# %%
h, h_max = portdiv.shannon(x)
print(f"gini-simpson {portdiv.gini_simpson(x)}, shannon {h:.4f} of max {h_max}")
print(f"coefficient of variation {portdiv.coefficient_of_variation(x)}")
print(portdiv.indicator_record(1, x, d))
