"""Gaussian elimination over F_q on integer-encoded numpy arrays.

Matrices hold element indices of a ``GF``; every arithmetic step is a table
lookup, so the same code serves prime and extension fields.
"""

from __future__ import annotations

import numpy as np

from .field import GF


def as_matrix(field: GF, rows, ncols: int | None = None) -> np.ndarray:
    """Coerce rows of field elements (or an index array) to a 2-D index array."""
    if isinstance(rows, np.ndarray):
        arr = rows.astype(np.int64)
    else:
        arr = np.array([[field(v).index for v in row] for row in rows], dtype=np.int64)
    if arr.size == 0:
        return np.zeros((0, ncols if ncols is not None else (arr.shape[-1] if arr.ndim == 2 else 0)), dtype=np.int64)
    if arr.ndim == 1:
        arr = arr[None, :]
    return arr


def rref(field: GF, A: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form, pivoting on the first nonzero entry of each column."""
    R = np.array(A, dtype=np.int64, copy=True)
    nrows, ncols = R.shape
    sub, mul, inv = field.sub_table, field.mul_table, field.inv_table
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        pr = r + nz[0]
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        R[r] = mul[inv[R[r, c]], R[r]]
        factors = R[:, c].copy()
        factors[r] = 0
        if factors.any():
            R = sub[R, mul[factors[:, None], R[r][None, :]]]
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank(field: GF, A: np.ndarray) -> int:
    if A.size == 0:
        return 0
    return len(rref(field, A)[1])


def nullspace(field: GF, A: np.ndarray, ncols: int | None = None) -> np.ndarray:
    """Basis (as rows) of ``{v : A v^T = 0}``."""
    n = A.shape[1] if A.ndim == 2 and A.shape[1] else (ncols or 0)
    if A.size == 0:
        return np.eye(n, dtype=np.int64)
    R, pivots = rref(field, A)
    free = [c for c in range(n) if c not in set(pivots)]
    N = np.zeros((len(free), n), dtype=np.int64)
    neg = field.neg_table
    for i, f in enumerate(free):
        N[i, f] = 1
        for j, pc in enumerate(pivots):
            N[i, pc] = neg[R[j, f]]
    return N


def matmul(field: GF, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Matrix product over F_q."""
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch {A.shape} x {B.shape}")
    add, mul = field.add_table, field.mul_table
    acc = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for k in range(A.shape[1]):
        acc = add[acc, mul[A[:, k][:, None], B[k][None, :]]]
    return acc


def scale(field: GF, c: int, v: np.ndarray) -> np.ndarray:
    return field.mul_table[c, v]


def vadd(field: GF, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return field.add_table[a, b]


def combine(field: GF, coeffs: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """``sum_i coeffs[i] * rows[i]``."""
    return matmul(field, np.asarray(coeffs, dtype=np.int64)[None, :], rows)[0]


def same_rowspace(field: GF, A: np.ndarray, B: np.ndarray) -> bool:
    ra, rb = rank(field, A), rank(field, B)
    if ra != rb:
        return False
    if ra == 0:
        return True
    return rank(field, np.vstack([A, B])) == ra


def inverse(field: GF, A: np.ndarray) -> np.ndarray:
    """Inverse of a square matrix; raises ValueError when singular."""
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError(f"not square: {A.shape}")
    R, piv = rref(field, np.hstack([A, np.eye(n, dtype=np.int64)]))
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ValueError("matrix is singular")
    return R[:, n:]
