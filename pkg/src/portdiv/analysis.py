"""Batch indicator tables and cross-indicator correlation analysis."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numpy.typing import ArrayLike
from scipy import stats

from portdiv.dataio import (
    OUTPUT_COLUMNS,
    MatrixFile,
    OutputTable,
    atomic_write_text,
    format_number,
)
from portdiv.errors import DimensionError, DiversityError, DomainError
from portdiv.measures import indicator_record

__all__ = [
    "DEFAULT_INDICATORS",
    "INDICATOR_NAMES",
    "CorrelationTable",
    "average_ranks",
    "batch_indicators",
    "correlation_table",
    "format_correlation",
    "pearson",
    "significance_marker",
    "spearman",
    "write_correlation",
]

# Default column order for correlation tables.
DEFAULT_INDICATORS = (
    "rao_stirling",
    "div",
    "gini",
    "variety_relative",
    "gini_simpson",
    "shannon",
)
INDICATOR_NAMES = OUTPUT_COLUMNS[2:]


def batch_indicators(
    m: MatrixFile | ArrayLike,
    d: ArrayLike,
    labels: Sequence[str] | None = None,
) -> OutputTable:
    """Compute one :class:`IndicatorRecord` per column of an occurrence matrix.

    Parameters
    ----------
    m : MatrixFile or array-like, shape (N, C)
        Category counts; rows are categories, columns are portfolios.
    d : array-like, shape (N, N)
        Disparity matrix.
    labels : sequence of str, optional
        Column labels. Defaults to ``m.labels`` for a :class:`MatrixFile`.
    """
    if isinstance(m, MatrixFile):
        if labels is None:
            labels = m.labels
        values = m.values
    else:
        values = np.asarray(m, dtype=np.float64)
    if values.ndim != 2:
        raise DimensionError(f"occurrence matrix must be 2-D, got shape {values.shape}")
    dm = np.asarray(d, dtype=np.float64)
    n_rows, n_cols = values.shape
    if dm.ndim != 2 or dm.shape != (n_rows, n_rows):
        raise DimensionError(
            f"matrix has {n_rows} rows (categories) but the disparity matrix is "
            f"{'x'.join(map(str, dm.shape))}; expected {n_rows}x{n_rows}"
        )
    if labels is not None and len(labels) != n_cols:
        raise DimensionError(f"{len(labels)} labels for {n_cols} columns")
    records = [indicator_record(j + 1, values[:, j], dm) for j in range(n_cols)]
    return OutputTable(records=records, labels=list(labels) if labels is not None else None)


def _paired(x: ArrayLike, y: ArrayLike) -> tuple[np.ndarray, np.ndarray]:
    a = np.asarray(x, dtype=np.float64)
    b = np.asarray(y, dtype=np.float64)
    if a.ndim != 1 or a.shape != b.shape:
        raise DimensionError(f"series lengths differ: {a.shape} vs {b.shape}")
    if a.size < 3:
        raise DomainError(f"need at least 3 observations, got {a.size}")
    return a, b


def pearson(x: ArrayLike, y: ArrayLike) -> float:
    """Product-moment correlation of two equally long series (n >= 3).

    Raises
    ------
    DomainError
        If either series is constant.
    """
    a, b = _paired(x, y)
    da = a - a.mean()
    db = b - b.mean()
    saa = np.dot(da, da)
    sbb = np.dot(db, db)
    if saa == 0 or sbb == 0:
        raise DomainError("constant series")
    r = np.dot(da, db) / math.sqrt(saa * sbb)
    return float(min(1.0, max(-1.0, r)))


def average_ranks(x: ArrayLike) -> np.ndarray:
    """Ranks 1..n; tied values share the mean of the ranks they span."""
    return stats.rankdata(np.asarray(x, dtype=np.float64), method="average")


def spearman(x: ArrayLike, y: ArrayLike) -> float:
    """Spearman rank correlation: :func:`pearson` of the average ranks."""
    a, b = _paired(x, y)
    try:
        return pearson(average_ranks(a), average_ranks(b))
    except DomainError:
        raise DomainError("constant series (all values tied)") from None


def significance_marker(r: float, n: int) -> str:
    """``'**'`` if significant at 0.01, ``'*'`` at 0.05 (two-tailed), else ``''``.

    Uses ``t = r sqrt((n - 2) / (1 - r^2))`` on ``n - 2`` degrees of freedom.
    For Spearman coefficients this is the usual large-sample approximation.
    """
    if n < 3 or not math.isfinite(r):
        return ""
    if abs(r) >= 1.0:
        p = 0.0
    else:
        t = abs(r) * math.sqrt((n - 2) / (1.0 - r * r))
        p = 2.0 * float(stats.t.sf(t, n - 2))
    if p < 0.01:
        return "**"
    if p < 0.05:
        return "*"
    return ""


@dataclass
class CorrelationTable:
    """Pairwise indicator correlations.

    ``values[i, j]`` holds Pearson r for ``i > j`` (lower triangle) and
    Spearman rho for ``i < j`` (upper triangle). The diagonal, and cells where
    a series is constant or has missing values, are NaN.
    """

    names: tuple[str, ...]
    values: np.ndarray
    markers: list[list[str]]
    n: int

    def pearson(self, a: str, b: str) -> float:
        i, j = self.names.index(a), self.names.index(b)
        return float(self.values[max(i, j), min(i, j)])

    def spearman(self, a: str, b: str) -> float:
        i, j = self.names.index(a), self.names.index(b)
        return float(self.values[min(i, j), max(i, j)])


def correlation_table(
    table: OutputTable, indicators: Sequence[str] = DEFAULT_INDICATORS
) -> CorrelationTable:
    """Pearson (lower triangle) and Spearman (upper) among indicator columns.

    Raises
    ------
    DiversityError
        If the table has fewer than 3 rows.
    KeyError
        If an indicator name is unknown.
    """
    names = tuple(indicators)
    unknown = [name for name in names if name not in INDICATOR_NAMES]
    if unknown:
        raise KeyError(f"unknown indicator(s): {', '.join(unknown)}")
    n = len(table)
    if n < 3:
        raise DiversityError(f"need at least 3 portfolios, got {n}")
    cols = [table.column(name) for name in names]
    k = len(names)
    values = np.full((k, k), np.nan)
    markers = [[""] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i == j or any(v is None for v in cols[i]) or any(v is None for v in cols[j]):
                continue
            func = pearson if i > j else spearman
            try:
                r = func(cols[i], cols[j])
            except DomainError:
                continue
            values[i, j] = r
            markers[i][j] = significance_marker(r, n)
    return CorrelationTable(names=names, values=values, markers=markers, n=n)


def format_correlation(ct: CorrelationTable) -> str:
    """CSV text of a correlation table.

    A leading ``#`` line states the triangle layout. Cells carry the
    coefficient plus an optional ``*``/``**`` suffix; the diagonal is blank and
    undefined cells read ``NA``.
    """
    lines = [
        f"# lower triangle: Pearson r; upper triangle: Spearman rho; n={ct.n}; "
        "* p<0.05, ** p<0.01 (two-tailed)",
        ",".join(("indicator",) + ct.names),
    ]
    for i, name in enumerate(ct.names):
        cells = [name]
        for j in range(len(ct.names)):
            if i == j:
                cells.append("")
            elif math.isnan(ct.values[i, j]):
                cells.append("NA")
            else:
                cells.append(format_number(float(ct.values[i, j])) + ct.markers[i][j])
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def write_correlation(ct: CorrelationTable, path) -> None:
    """Atomically write :func:`format_correlation` output to ``path``."""
    atomic_write_text(path, format_correlation(ct))
