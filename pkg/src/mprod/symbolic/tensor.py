"""Exact tensor algebra over the field of rational functions.

Tensors and matrices are numpy object arrays of RatFun entries, so all
the shape conventions of the numeric side carry over while every value
stays exact.  Rank decisions are exact zero tests; no tolerances appear
anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..errors import DimMismatch, ExistenceViolated, SingularTransform
from .ratfun import Poly, RatFun

__all__ = [
    "SymQDR",
    "sym_tensor",
    "rational_matrix",
    "rational_matrix_inverse",
    "sym_mode3_product",
    "sym_facewise_product",
    "sym_m_product",
    "sym_transpose",
    "sym_m_identity",
    "sym_matrix_qdr",
    "sym_tensor_qdr",
    "sym_outer_inverse",
    "sym_pinv",
    "sym_evaluate",
]


def _entry(value) -> RatFun:
    if isinstance(value, RatFun):
        return value
    if isinstance(value, Poly):
        return RatFun(value)
    return RatFun.const(value)


def sym_tensor(entries) -> np.ndarray:
    """Build an object array of RatFun from nested ints/Fractions/Polys/RatFuns."""
    arr = np.array(entries, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for idx in np.ndindex(arr.shape):
        out[idx] = _entry(arr[idx])
    return out


def _sym_zeros(shape) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out[...] = RatFun.ZERO
    return out


def rational_matrix(entries) -> np.ndarray:
    """Square object array of Fractions for use as an exact transform."""
    arr = np.array(entries, dtype=object)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimMismatch(f"transform must be square, got {arr.shape}")
    out = np.empty(arr.shape, dtype=object)
    for idx in np.ndindex(arr.shape):
        out[idx] = Fraction(arr[idx])
    return out


def rational_matrix_inverse(mat) -> np.ndarray:
    """Exact inverse by Gauss-Jordan elimination with nonzero pivoting."""
    mat = rational_matrix(mat)
    p = mat.shape[0]
    work = [[Fraction(mat[i, j]) for j in range(p)] + [Fraction(int(i == j)) for j in range(p)]
            for i in range(p)]
    for col in range(p):
        pivot_row = next((r for r in range(col, p) if work[r][col] != 0), None)
        if pivot_row is None:
            raise SingularTransform("exact elimination found a zero column")
        work[col], work[pivot_row] = work[pivot_row], work[col]
        pivot = work[col][col]
        work[col] = [v / pivot for v in work[col]]
        for r in range(p):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
    out = np.empty((p, p), dtype=object)
    for i in range(p):
        for j in range(p):
            out[i, j] = work[i][p + j]
    return out


def sym_mode3_product(a, w) -> np.ndarray:
    """Exact mode-3 product with a rational matrix w of shape (p', p)."""
    w = np.array(w, dtype=object)
    m, n, p = a.shape
    if w.ndim != 2 or w.shape[1] != p:
        raise DimMismatch(f"mode-3 matrix of shape {w.shape} does not match depth {p}")
    scalars = np.empty(w.shape, dtype=object)
    for idx in np.ndindex(w.shape):
        scalars[idx] = _entry(Fraction(w[idx]) if not isinstance(w[idx], RatFun) else w[idx])
    out = _sym_zeros((m, n, w.shape[0]))
    for k in range(w.shape[0]):
        for t in range(p):
            c = scalars[k, t]
            if c.is_zero:
                continue
            for i in range(m):
                for j in range(n):
                    out[i, j, k] = out[i, j, k] + c * a[i, j, t]
    return out


def sym_facewise_product(a, b) -> np.ndarray:
    if a.shape[2] != b.shape[2] or a.shape[1] != b.shape[0]:
        raise DimMismatch(f"facewise shapes do not conform: {a.shape} vs {b.shape}")
    out = _sym_zeros((a.shape[0], b.shape[1], a.shape[2]))
    for k in range(a.shape[2]):
        out[:, :, k] = _sym_matmul(a[:, :, k], b[:, :, k])
    return out


def _sym_matmul(x, y) -> np.ndarray:
    m, inner = x.shape
    n = y.shape[1]
    out = _sym_zeros((m, n))
    for i in range(m):
        for j in range(n):
            acc = RatFun.ZERO
            for t in range(inner):
                xt = x[i, t]
                yt = y[t, j]
                if not (xt.is_zero or yt.is_zero):
                    acc = acc + xt * yt
            out[i, j] = acc
    return out


def sym_m_product(a, b, m) -> np.ndarray:
    """Exact tensor-tensor product under the rational transform ``m``."""
    mat = rational_matrix(m)
    minv = rational_matrix_inverse(mat)
    at = sym_mode3_product(a, mat)
    bt = sym_mode3_product(b, mat)
    return sym_mode3_product(sym_facewise_product(at, bt), minv)


def sym_transpose(a) -> np.ndarray:
    """Slice-wise transpose; no conjugation over this coefficient field.

    Transposing commutes with the mode-3 product here, so this equals
    transposing every transform-domain slice and pulling back.
    """
    return a.transpose(1, 0, 2).copy()


def sym_m_identity(m: int, p: int, mat) -> np.ndarray:
    """Tensor whose transform-domain slices are all the m-by-m identity."""
    minv = rational_matrix_inverse(rational_matrix(mat))
    stack = _sym_zeros((m, m, p))
    for i in range(m):
        for k in range(p):
            stack[i, i, k] = RatFun.ONE
    return sym_mode3_product(stack, minv)


@dataclass(frozen=True)
class SymQDR:
    """Exact QDR factors; structure matches the numeric TensorQDR."""

    q: np.ndarray
    d: np.ndarray
    r: np.ndarray
    rank: int


def sym_matrix_qdr(a) -> SymQDR:
    """Unnormalized Gram-Schmidt with exact zero tests.

    A column is kept exactly when its reduced residual is a nonzero
    vector of rational functions.  The Gram values q_i . q_i are sums
    of squares over a formally real field, hence nonzero for nonzero
    columns, so no pivoting decisions depend on magnitudes.
    """
    m, n = a.shape
    qs: list[np.ndarray] = []
    grams: list[RatFun] = []
    for j in range(n):
        v = np.array([a[i, j] for i in range(m)], dtype=object)
        for q, gram in zip(qs, grams):
            coef = _sym_dot(q, v) / gram
            if not coef.is_zero:
                v = np.array([v[i] - coef * q[i] for i in range(m)], dtype=object)
        if any(not v[i].is_zero for i in range(m)):
            qs.append(v)
            grams.append(_sym_dot(v, v))
    rank = len(qs)
    q = _sym_zeros((m, rank))
    d = _sym_zeros((rank, rank))
    for i, (col, gram) in enumerate(zip(qs, grams)):
        q[:, i] = col
        d[i, i] = gram.reciprocal()
    r = _sym_matmul(q.transpose(), a) if rank else _sym_zeros((0, n))
    return SymQDR(q, d, r, rank)


def _sym_dot(u, v) -> RatFun:
    acc = RatFun.ZERO
    for a, b in zip(u, v):
        if not (a.is_zero or b.is_zero):
            acc = acc + a * b
    return acc


def sym_tensor_qdr(a, m) -> SymQDR:
    """Exact tensor QDR with zero padding of rank-deficient slices."""
    mat = rational_matrix(m)
    minv = rational_matrix_inverse(mat)
    mm, n, p = a.shape
    at = sym_mode3_product(a, mat)
    slices = [sym_matrix_qdr(at[:, :, k]) for k in range(p)]
    rank = max(s.rank for s in slices)
    qt = _sym_zeros((mm, rank, p))
    dt = _sym_zeros((rank, rank, p))
    rt = _sym_zeros((rank, n, p))
    for k, fac in enumerate(slices):
        qt[:, : fac.rank, k] = fac.q
        dt[: fac.rank, : fac.rank, k] = fac.d
        rt[: fac.rank, :, k] = fac.r
    if rank == 0:
        return SymQDR(qt, dt, rt, 0)
    return SymQDR(
        sym_mode3_product(qt, minv),
        sym_mode3_product(dt, minv),
        sym_mode3_product(rt, minv),
        rank,
    )


def _sym_solve(core, rhs, slice_index: int) -> np.ndarray:
    """Exact solve of core @ x = rhs; singularity means the requested
    outer inverse does not exist for this slice."""
    s = core.shape[0]
    cols = rhs.shape[1]
    work = [[core[i, j] for j in range(s)] + [rhs[i, j] for j in range(cols)]
            for i in range(s)]
    for col in range(s):
        pivot_row = next((r for r in range(col, s) if not work[r][col].is_zero), None)
        if pivot_row is None:
            raise ExistenceViolated(slice_index)
        work[col], work[pivot_row] = work[pivot_row], work[col]
        pivot = work[col][col]
        work[col] = [v / pivot for v in work[col]]
        for r in range(s):
            if r != col and not work[r][col].is_zero:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
    out = _sym_zeros((s, cols))
    for i in range(s):
        for j in range(cols):
            out[i, j] = work[i][s + j]
    return out


def sym_outer_inverse(a, w, m) -> np.ndarray:
    """Exact outer inverse of ``a`` with range and null space prescribed by ``w``."""
    mat = rational_matrix(m)
    minv = rational_matrix_inverse(mat)
    mm, n, p = a.shape
    if w.shape != (n, mm, p):
        raise DimMismatch(f"prescription tensor must be {(n, mm, p)}, got {w.shape}")
    at = sym_mode3_product(a, mat)
    wt = sym_mode3_product(w, mat)
    zt = _sym_zeros((n, mm, p))
    for k in range(p):
        fac = sym_matrix_qdr(wt[:, :, k])
        if fac.rank == 0:
            continue
        core = _sym_matmul(_sym_matmul(fac.r, at[:, :, k]), fac.q)
        x = _sym_solve(core, fac.r, k)
        zt[:, :, k] = _sym_matmul(fac.q, x)
    return sym_mode3_product(zt, minv)


def sym_pinv(a, m) -> np.ndarray:
    """Exact Moore-Penrose inverse: the outer inverse prescribed by the transpose."""
    return sym_outer_inverse(a, sym_transpose(a), m)


def sym_evaluate(a, x0) -> np.ndarray:
    """Evaluate every entry at the rational point x0 into a float array."""
    out = np.empty(a.shape, dtype=float)
    for idx in np.ndindex(a.shape):
        out[idx] = float(a[idx](x0))
    return out
