"""Similarity and disparity matrices between categories.

Occurrence data are stored documents x categories, so each *column* is the
profile of one category and cosine similarity is taken between columns.
Disparity is ``1 - cosine``. Validated matrices are returned as read-only
float64 arrays.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from portdiv.errors import RangeError, ShapeError, SymmetryError, ValidationError

__all__ = [
    "DEFAULT_TOLERANCE",
    "cosine_similarity",
    "to_disparity",
    "to_similarity",
    "validate_disparity",
    "validate_similarity",
]

DEFAULT_TOLERANCE = 1e-9


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def _mirror_upper(a: np.ndarray) -> np.ndarray:
    # Copy the upper triangle onto the lower one so a[i, j] == a[j, i] bitwise.
    iu = np.triu_indices(a.shape[0], k=1)
    a[(iu[1], iu[0])] = a[iu]
    return a


def cosine_similarity(m: ArrayLike) -> np.ndarray:
    """Cosine similarity among the column vectors of an occurrence matrix.

    Parameters
    ----------
    m : array-like, shape (R, N)
        Nonnegative occurrence counts, one row per document and one column
        per category.

    Returns
    -------
    ndarray, shape (N, N)
        Symmetric similarity matrix with unit diagonal. Pairs that involve an
        all-zero column have similarity 0.
    """
    a = np.asarray(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
        raise ShapeError(f"occurrence matrix must be 2-D and nonempty, got shape {a.shape}")
    if not np.all(np.isfinite(a)) or np.any(a < 0):
        raise RangeError("occurrence matrix must hold finite nonnegative values")
    gram = a.T @ a
    sq = np.diag(gram).copy()
    nonzero = sq > 0
    with np.errstate(divide="ignore", invalid="ignore"):
        # sqrt(a*a) == a in binary floating point, so duplicate columns give
        # exactly gram_ii / gram_ii == 1 whenever the products are exact.
        s = gram / np.sqrt(np.outer(sq, sq))
    s[~nonzero, :] = 0.0
    s[:, ~nonzero] = 0.0
    np.clip(s, 0.0, 1.0, out=s)
    _mirror_upper(s)
    np.fill_diagonal(s, 1.0)
    return _frozen(s)


def _check_square(a: np.ndarray) -> None:
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ShapeError(f"matrix must be square and nonempty, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValidationError("matrix contains non-finite values")


def _check_symmetric(a: np.ndarray, tolerance: float) -> None:
    asym = np.abs(a - a.T)
    worst = np.unravel_index(np.argmax(asym), asym.shape)
    if asym[worst] > tolerance:
        i, j = sorted(int(k) for k in worst)
        raise SymmetryError(
            f"matrix is not symmetric: cell ({i + 1},{j + 1}) differs from "
            f"({j + 1},{i + 1}) by {asym[worst]:.6g} > tolerance {tolerance:g}"
        )


def _check_range(a: np.ndarray, tolerance: float) -> None:
    bad = np.argwhere((a < -tolerance) | (a > 1.0 + tolerance))
    if bad.size:
        i, j = (int(k) for k in bad[0])
        raise RangeError(f"cell ({i + 1},{j + 1}) = {a[i, j]!r} outside [0, 1]")


def _symmetrized(a: np.ndarray, diagonal: float) -> np.ndarray:
    s = (a + a.T) / 2.0
    np.clip(s, 0.0, 1.0, out=s)
    _mirror_upper(s)
    np.fill_diagonal(s, diagonal)
    return s


def validate_similarity(raw: ArrayLike, tolerance: float = DEFAULT_TOLERANCE) -> np.ndarray:
    """Check a raw similarity matrix and return its cleaned, read-only form.

    The matrix must be square, symmetric within ``tolerance``, have a diagonal
    within ``tolerance`` of 1 and entries in ``[-tolerance, 1 + tolerance]``.
    The result is the symmetrized average with diagonal 1, clamped to [0, 1].

    Raises
    ------
    ShapeError, SymmetryError, RangeError
    """
    a = np.array(raw, dtype=np.float64)
    _check_square(a)
    _check_symmetric(a, tolerance)
    diag = np.diag(a)
    off = np.flatnonzero(np.abs(diag - 1.0) > tolerance)
    if off.size:
        k = int(off[0])
        raise RangeError(f"diagonal cell ({k + 1},{k + 1}) = {diag[k]!r}, expected 1")
    _check_range(a, tolerance)
    return _frozen(_symmetrized(a, 1.0))


def validate_disparity(raw: ArrayLike, tolerance: float = DEFAULT_TOLERANCE) -> np.ndarray:
    """Like :func:`validate_similarity`, but for a disparity matrix (zero diagonal)."""
    a = np.array(raw, dtype=np.float64)
    _check_square(a)
    _check_symmetric(a, tolerance)
    diag = np.diag(a)
    off = np.flatnonzero(np.abs(diag) > tolerance)
    if off.size:
        k = int(off[0])
        raise RangeError(f"diagonal cell ({k + 1},{k + 1}) = {diag[k]!r}, expected 0")
    _check_range(a, tolerance)
    return _frozen(_symmetrized(a, 0.0))


def to_disparity(s: ArrayLike) -> np.ndarray:
    """``1 - s`` off the diagonal, zero on it."""
    d = 1.0 - np.asarray(s, dtype=np.float64)
    np.fill_diagonal(d, 0.0)
    return _frozen(d)


def to_similarity(d: ArrayLike) -> np.ndarray:
    """Inverse of :func:`to_disparity`: ``1 - d`` off the diagonal, one on it."""
    s = 1.0 - np.asarray(d, dtype=np.float64)
    np.fill_diagonal(s, 1.0)
    return _frozen(s)
