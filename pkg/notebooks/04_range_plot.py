# %% [markdown]
# # Rao-Stirling and DIV on a common axis
#
# Computes an indicator table with the command-line workflow and renders the
# per-portfolio comparison chart. Files are written to `OUT` (a temporary
# directory unless `PORTDIV_OUT` is set).

# %%
import os
import tempfile
from pathlib import Path

import numpy as np

from portdiv.cli import main
from portdiv.dataio import read_output, write_matrix

OUT = Path(os.environ.get("PORTDIV_OUT") or tempfile.mkdtemp(prefix="portdiv-"))
rng = np.random.default_rng(7)

write_matrix(rng.poisson(0.5, size=(400, 40)).astype(float), OUT / "occurrence.csv")
counts = rng.lognormal(1.0, 1.0, size=(40, 20)).round()
counts *= rng.uniform(size=counts.shape) < rng.uniform(0.1, 0.95, 20)
write_matrix(counts, OUT / "Matrix.csv")
(OUT / "labels.txt").write_text("".join(f"portfolio {i + 1}\n" for i in range(20)))

# %%
main(["cosine", "--occurrence", str(OUT / "occurrence.csv"), "--out", str(OUT / "Sim.csv")])
main(["compute", "--matrix", str(OUT / "Matrix.csv"), "--sim", str(OUT / "Sim.csv"),
      "--labels", str(OUT / "labels.txt"), "--out", str(OUT / "diverse.csv")])
main(["plot", "--table", str(OUT / "diverse.csv"), "--out", str(OUT / "ranges.svg")])

# %% [markdown]
# The spread of each indicator across portfolios:

# %%
table = read_output(OUT / "diverse.csv")
for name in ("rao_stirling", "div"):
    values = table.column(name)
    print(f"{name:13} {min(values):.2f} .. {max(values):.2f}")
print("chart:", OUT / "ranges.svg")
