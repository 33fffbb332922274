"""Scalar diversity indicators of a single portfolio.

A portfolio is a 1-D vector of nonnegative category counts of length ``N``.
Indicators that need pairwise information between categories take an
``N x N`` disparity matrix ``d`` with ``d[i, j]`` in [0, 1].

Balance indicators (Gini, coefficient of variation) are computed over the
occupied categories only, i.e. the ``n_c`` entries strictly greater than zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from portdiv.errors import DimensionError, DomainError

__all__ = [
    "IndicatorRecord",
    "as_portfolio",
    "coefficient_of_variation",
    "div",
    "gini",
    "gini_simpson",
    "indicator_record",
    "mean_disparity",
    "rao_stirling",
    "relative_variety",
    "shannon",
]


@dataclass(frozen=True)
class IndicatorRecord:
    """All indicators of one portfolio (one column of an occurrence matrix).

    ``column_index`` is 1-based. ``coeff_variation`` is ``None`` for an empty
    portfolio, where it is undefined.
    """

    column_index: int
    rao_stirling: float
    div: float
    gini: float
    gini_simpson: float
    shannon: float
    h_max: float
    variety_relative: float
    n_total: int
    n_present: int
    coeff_variation: float | None


def as_portfolio(v: ArrayLike) -> np.ndarray:
    """Return ``v`` as a validated float64 count vector.

    Raises
    ------
    DomainError
        If ``v`` is not one-dimensional, is empty, or holds negative or
        non-finite entries.
    """
    x = np.asarray(v, dtype=np.float64)
    if x.ndim != 1:
        raise DomainError(f"portfolio must be one-dimensional, got shape {x.shape}")
    if x.size == 0:
        raise DomainError("portfolio must have at least one category")
    if not np.all(np.isfinite(x)):
        raise DomainError("portfolio contains non-finite values")
    if np.any(x < 0):
        raise DomainError("portfolio contains negative counts")
    return x


def _as_disparity(d: ArrayLike, n: int) -> np.ndarray:
    m = np.asarray(d, dtype=np.float64)
    if m.shape != (n, n):
        raise DimensionError(
            f"disparity matrix has shape {m.shape}, portfolio has {n} categories"
        )
    return m


def _support(x: np.ndarray) -> np.ndarray:
    return np.flatnonzero(x > 0)


def _proportions(x: np.ndarray, what: str) -> np.ndarray:
    total = x.sum()
    if not total > 0:
        raise DomainError(f"{what} undefined on empty support")
    return x / total


# The helpers below take already validated inputs restricted to the support:
# ``pos`` are the positive counts, ``sub`` the matching block of ``d``.

def _gini_positive(pos: np.ndarray) -> float:
    # Rank form: entries ascending, ranks 1..n.
    n = pos.size
    xs = np.sort(pos, kind="stable")
    weights = 2.0 * np.arange(1, n + 1) - n - 1
    return float(np.dot(weights, xs) / (n * xs.sum()))


def _gini_simpson_positive(ps: np.ndarray) -> float:
    return float(1.0 - np.dot(ps, ps))


def _shannon_positive(ps: np.ndarray) -> float:
    h = -float(np.dot(ps, np.log2(ps)))
    return max(h, 0.0)


def _rao_positive(ps: np.ndarray, sub: np.ndarray) -> float:
    # Restricting to the support is exact: zero proportions add nothing.
    off = sub - np.diag(np.diag(sub))
    return float(ps @ off @ ps)


def _mean_disparity_positive(sub: np.ndarray) -> float:
    nc = sub.shape[0]
    if nc <= 1:
        return 0.0
    return float((sub.sum() - np.trace(sub)) / (nc * (nc - 1)))


def _cv_positive(pos: np.ndarray) -> float:
    return float(np.std(pos) / np.mean(pos))


def gini(v: ArrayLike) -> float:
    """Gini coefficient over the occupied categories of ``v``.

    Uses the rank formulation ``sum((2i - n - 1) x_i) / (n sum(x_i))`` with the
    ``n`` positive entries sorted ascending. Zero entries are excluded, so
    ``gini([3, 1, 0, 0]) == gini([3, 1])``.

    Parameters
    ----------
    v : array-like
        Nonnegative counts.

    Returns
    -------
    float
        A value in ``[0, (n - 1) / n]``.

    Raises
    ------
    DomainError
        If ``v`` has no positive entry.
    """
    x = as_portfolio(v)
    pos = x[x > 0]
    if pos.size == 0:
        raise DomainError("gini undefined on empty support")
    return _gini_positive(pos)


def relative_variety(v: ArrayLike) -> float:
    """Share of categories with a count strictly above zero (``n_c / N``)."""
    x = as_portfolio(v)
    return np.count_nonzero(x > 0) / x.size


def gini_simpson(v: ArrayLike) -> float:
    """Gini-Simpson index ``1 - sum(p_i**2)``."""
    p = _proportions(as_portfolio(v), "gini-simpson")
    return _gini_simpson_positive(p[p > 0])


def shannon(v: ArrayLike) -> tuple[float, float]:
    """Shannon entropy in bits and its maximum ``log2(N)``.

    Zero-probability categories contribute nothing. ``N`` counts every
    category, occupied or not.

    Returns
    -------
    (float, float)
        ``(H, H_max)``.
    """
    x = as_portfolio(v)
    p = _proportions(x, "shannon entropy")
    return _shannon_positive(p[p > 0]), math.log2(x.size)


def rao_stirling(v: ArrayLike, d: ArrayLike) -> float:
    """Rao-Stirling diversity ``sum_{i != j} p_i p_j d_ij``.

    The sum runs over ordered pairs, so each unordered pair contributes twice.
    Diagonal entries of ``d`` are ignored.
    """
    x = as_portfolio(v)
    m = _as_disparity(d, x.size)
    p = _proportions(x, "rao-stirling diversity")
    s = _support(x)
    return _rao_positive(p[s], m[np.ix_(s, s)])


def mean_disparity(v: ArrayLike, d: ArrayLike) -> float:
    """Average off-diagonal disparity among the occupied categories of ``v``.

    Returns ``sum_{i != j} d_ij / (n_c (n_c - 1))`` over the support, and 0 when
    fewer than two categories are occupied.
    """
    x = as_portfolio(v)
    m = _as_disparity(d, x.size)
    s = _support(x)
    return _mean_disparity_positive(m[np.ix_(s, s)])


def div(v: ArrayLike, d: ArrayLike) -> float:
    """Three-factor diversity: relative variety x Gini x mean disparity.

    Gini enters as is (not ``1 - Gini``), so a perfectly even portfolio scores
    0. An empty portfolio also scores 0 instead of raising.
    """
    x = as_portfolio(v)
    m = _as_disparity(d, x.size)
    s = _support(x)
    if s.size == 0:
        return 0.0
    return (s.size / x.size) * _gini_positive(x[s]) * _mean_disparity_positive(m[np.ix_(s, s)])


def coefficient_of_variation(v: ArrayLike) -> float:
    """Population standard deviation over mean of the positive entries."""
    x = as_portfolio(v)
    pos = x[x > 0]
    if pos.size == 0:
        raise DomainError("coefficient of variation undefined on empty support")
    return _cv_positive(pos)


def indicator_record(column_index: int, v: ArrayLike, d: ArrayLike) -> IndicatorRecord:
    """Compute every indicator for one portfolio.

    An all-zero portfolio yields zeros for the diversity fields, ``h_max =
    log2(N)`` and a missing coefficient of variation.
    """
    x = as_portfolio(v)
    m = _as_disparity(d, x.size)
    n_total = x.size
    s = _support(x)
    n_present = int(s.size)
    h_max = math.log2(n_total)
    if n_present == 0:
        return IndicatorRecord(
            column_index=column_index,
            rao_stirling=0.0,
            div=0.0,
            gini=0.0,
            gini_simpson=0.0,
            shannon=0.0,
            h_max=h_max,
            variety_relative=0.0,
            n_total=n_total,
            n_present=0,
            coeff_variation=None,
        )
    pos = x[s]
    ps = (x / x.sum())[s]
    sub = m[np.ix_(s, s)]
    variety = n_present / n_total
    g = _gini_positive(pos)
    return IndicatorRecord(
        column_index=column_index,
        rao_stirling=_rao_positive(ps, sub),
        div=variety * g * _mean_disparity_positive(sub),
        gini=g,
        gini_simpson=_gini_simpson_positive(ps),
        shannon=_shannon_positive(ps),
        h_max=h_max,
        variety_relative=variety,
        n_total=n_total,
        n_present=n_present,
        coeff_variation=_cv_positive(pos),
    )
