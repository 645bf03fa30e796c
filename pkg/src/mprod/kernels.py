"""Dense per-slice matrix kernels the tensor algorithms delegate to.

Everything here acts on ordinary 2-D complex arrays.  The tensor-level
code calls these once per transform-domain slice.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .core import DEFAULT_TOL, ToleranceConfig, _matrix_index, _matrix_rank
from .errors import DimMismatch, SingularSystem

__all__ = [
    "MatrixFRD",
    "MatrixQDR",
    "matrix_rank",
    "matrix_frd",
    "matrix_qdr",
    "matrix_index",
    "solve_linear",
]


@dataclass(frozen=True)
class MatrixFRD:
    """Full-rank factorization ``A = f @ g`` with rank(f) = rank(g) = rank.

    ``f`` is m-by-rank with orthonormal columns, ``g`` is rank-by-n.
    A zero matrix factors into empty f and g with rank 0.
    """

    f: np.ndarray
    g: np.ndarray
    rank: int


@dataclass(frozen=True)
class MatrixQDR:
    """Square-root-free factorization ``A = q @ d @ r``.

    ``q`` holds pairwise-orthogonal unnormalized columns, ``d`` is the
    diagonal inverse Gram matrix diag(1 / (q_i^* q_i)), and ``r = q^* A``
    is upper trapezoidal.  Since col(q) = col(A), the product
    q (q^* q)^{-1} q^* A reproduces A.
    """

    q: np.ndarray
    d: np.ndarray
    r: np.ndarray
    rank: int


def matrix_rank(a, tol: ToleranceConfig | None = None) -> int:
    """Numerical rank from singular values above rank_rel_tol * s_max * max(m, n)."""
    a = np.asarray(a, dtype=complex)
    return _matrix_rank(a, tol or DEFAULT_TOL)


def matrix_frd(a, tol: ToleranceConfig | None = None) -> MatrixFRD:
    """Full-rank factorization via column-pivoted QR.

    The orthonormal factor is the leading rank columns of Q; the row
    factor is the matching rows of R with the pivoting permutation
    undone, so ``f @ g`` reconstructs A.  Pivot ties are resolved by the
    underlying LAPACK routine, which always picks the lowest eligible
    column index, so the output is deterministic.
    """
    a = np.asarray(a, dtype=complex)
    tol = tol or DEFAULT_TOL
    m, n = a.shape
    r = _matrix_rank(a, tol)
    if r == 0:
        return MatrixFRD(np.zeros((m, 0), dtype=complex), np.zeros((0, n), dtype=complex), 0)
    q, rr, piv = scipy.linalg.qr(a, mode="economic", pivoting=True)
    f = np.ascontiguousarray(q[:, :r])
    g = np.zeros((r, n), dtype=complex)
    g[:, piv] = rr[:r, :]
    return MatrixFRD(f, g, r)


def matrix_qdr(a, tol: ToleranceConfig | None = None, max_cols: int | None = None) -> MatrixQDR:
    """Unnormalized modified Gram-Schmidt over the columns of A.

    Each column is orthogonalized against the kept directions and kept
    itself when its residual norm exceeds ``zero_column_tol * max(1, ||a_j||)``.
    With ``max_cols`` set, at most that many directions are kept, which
    turns the reconstruction into a projection onto the leading
    directions (used for lossy compression).

    Entries of ``r`` below the staircase are identically zero in exact
    arithmetic, so they are stored as exact zeros.
    """
    a = np.asarray(a, dtype=complex)
    tol = tol or DEFAULT_TOL
    m, n = a.shape
    limit = n if max_cols is None else min(n, max_cols)
    qs: list[np.ndarray] = []
    grams: list[float] = []
    for j in range(n):
        if len(qs) >= limit:
            break
        v = a[:, j].copy()
        for q, gram in zip(qs, grams):
            v -= (np.vdot(q, v) / gram) * q
        if np.linalg.norm(v) > tol.zero_column_tol * max(1.0, np.linalg.norm(a[:, j])):
            qs.append(v)
            grams.append(np.vdot(v, v).real)
    rank = len(qs)
    if rank == 0:
        return MatrixQDR(
            np.zeros((m, 0), dtype=complex),
            np.zeros((0, 0), dtype=complex),
            np.zeros((0, n), dtype=complex),
            0,
        )
    q = np.stack(qs, axis=1)
    d = np.diag([1.0 / gram for gram in grams]).astype(complex)
    r = q.conj().T @ a
    for i in range(rank):
        r[i, :i] = 0.0
    return MatrixQDR(q, d, r, rank)


def matrix_index(a, tol: ToleranceConfig | None = None) -> int:
    """Smallest j with rank(A^j) == rank(A^{j+1}); at most m for an m-by-m matrix."""
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimMismatch(f"index is defined for square matrices, got {a.shape}")
    return _matrix_index(a, tol or DEFAULT_TOL)


def solve_linear(a, b, tol: ToleranceConfig | None = None) -> np.ndarray:
    """Solve ``a @ x = b`` by LU with partial pivoting.

    Raises SingularSystem when the smallest pivot falls below
    ``rank_rel_tol * max|pivot| * n``.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    tol = tol or DEFAULT_TOL
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimMismatch(f"coefficient matrix must be square, got {a.shape}")
    if b.shape[0] != a.shape[0]:
        raise DimMismatch(f"right-hand side rows {b.shape[0]} != system size {a.shape[0]}")
    n = a.shape[0]
    if n == 0:
        return np.zeros_like(b)
    with warnings.catch_warnings():
        # Singularity is detected by the pivot check below and raised as
        # SingularSystem; the factorization-time warning is redundant.
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(a, check_finite=False)
    pivots = np.abs(np.diag(lu))
    largest = pivots.max()
    if largest == 0.0 or pivots.min() <= tol.rank_rel_tol * largest * n:
        raise SingularSystem(f"pivot below threshold (min {pivots.min():.3e})")
    return scipy.linalg.lu_solve((lu, piv), b, check_finite=False)
