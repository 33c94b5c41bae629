"""Exact Gaussian elimination over a Field."""
from typing import List, Tuple

import numpy as np

from qhopf.core.fields import Field
from qhopf.utils.errors import DimensionMismatch, NotInvertible


def matmul(field: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[-1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return field.reduce(np.dot(a, b))


def kron(field: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return field.reduce(np.kron(a, b))


def row_reduce(field: Field, mat: np.ndarray, ncols: int = None) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form; pivots are searched in the first ``ncols`` columns."""
    m = field.reduce(np.array(mat, copy=True))
    rows, cols = m.shape
    ncols = cols if ncols is None else ncols
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        nonzero = np.nonzero(m[r:, c] != 0)[0]
        if len(nonzero) == 0:
            continue
        piv = r + int(nonzero[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = field.reduce(m[r] * field.inv(m[r, c]))
        # columns left of c are already zero in row r; only rows with a nonzero entry change
        hit = np.nonzero(m[:, c] != 0)[0]
        hit = hit[hit != r]
        if len(hit):
            m[np.ix_(hit, np.arange(c, cols))] = field.reduce(m[hit, c:] - np.outer(m[hit, c], m[r, c:]))
        pivots.append(c)
        r += 1
    return m, pivots


def rank(field: Field, mat: np.ndarray) -> int:
    return len(row_reduce(field, mat)[1])


def solve(field: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """One solution X of A X = B (free variables set to zero).

    Raises NotInvertible when the system is inconsistent.
    """
    vector = b.ndim == 1
    if vector:
        b = b.reshape(-1, 1)
    if a.shape[0] != b.shape[0]:
        raise DimensionMismatch(f"system {a.shape} against right-hand side {b.shape}")
    k = a.shape[1]
    aug = np.concatenate([field.reduce(a), field.reduce(b)], axis=1)
    red, pivots = row_reduce(field, aug, ncols=k)
    if np.any(red[len(pivots):, k:] != 0):
        raise NotInvertible("linear system has no solution")
    x = field.zeros((k, b.shape[1]))
    for row, col in enumerate(pivots):
        x[col] = red[row, k:]
    return x.reshape(-1) if vector else x


def nullspace(field: Field, a: np.ndarray) -> np.ndarray:
    """Basis of {x : A x = 0}, one vector per column."""
    red, pivots = row_reduce(field, a)
    k = a.shape[1]
    free = [c for c in range(k) if c not in pivots]
    basis = field.zeros((k, len(free)))
    for j, f in enumerate(free):
        basis[f, j] = field.one
        for row, col in enumerate(pivots):
            basis[col, j] = field.neg(red[row, f])
    return basis


def inverse(field: Field, a: np.ndarray) -> np.ndarray:
    if a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"cannot invert non-square {a.shape}")
    red, pivots = row_reduce(field, np.concatenate([field.reduce(a), field.eye(a.shape[0])], axis=1),
                             ncols=a.shape[0])
    if len(pivots) < a.shape[0]:
        raise NotInvertible("matrix is singular")
    return red[:, a.shape[0]:]
