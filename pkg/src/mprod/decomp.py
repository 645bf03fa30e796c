"""Tensor-level factorizations built from the per-slice kernels.

Both decompositions run slice by slice in the transform domain and pad
rank-deficient slices with zero columns/rows up to the tubal rank, so
every slice factor has the same shape before the inverse transform
mixes them back.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_TOL,
    ToleranceConfig,
    Transform,
    as_tensor3,
    mode3_product,
)
from .errors import DimMismatch
from .kernels import matrix_frd, matrix_qdr

__all__ = ["TensorFRD", "TensorQDR", "tensor_frd", "tensor_qdr", "truncated_qdr"]


@dataclass(frozen=True)
class TensorFRD:
    """Full-rank decomposition ``A = f * g`` with both factors of tubal rank ``rank``."""

    f: np.ndarray
    g: np.ndarray
    rank: int


@dataclass(frozen=True)
class TensorQDR:
    """Decomposition ``A = q * d * r`` with diagonal d and upper-trapezoidal r
    in the transform domain."""

    q: np.ndarray
    d: np.ndarray
    r: np.ndarray
    rank: int


def tensor_frd(a, transform: Transform, tol: ToleranceConfig | None = None) -> TensorFRD:
    """Full-rank decomposition of a tensor.

    Slices whose rank falls short of the tubal rank r get their column
    factor padded with zero columns on the right and their row factor
    with zero rows at the bottom.
    """
    a = as_tensor3(a)
    tol = tol or DEFAULT_TOL
    m, n, p = a.shape
    at = mode3_product(a, transform.matrix)
    slice_factors = [matrix_frd(at[:, :, k], tol) for k in range(p)]
    r = max(fac.rank for fac in slice_factors)
    ft = np.zeros((m, r, p), dtype=complex)
    gt = np.zeros((r, n, p), dtype=complex)
    for k, fac in enumerate(slice_factors):
        ft[:, : fac.rank, k] = fac.f
        gt[: fac.rank, :, k] = fac.g
    return TensorFRD(
        mode3_product(ft, transform.inverse) if r else ft,
        mode3_product(gt, transform.inverse) if r else gt,
        r,
    )


def tensor_qdr(a, transform: Transform, tol: ToleranceConfig | None = None) -> TensorQDR:
    """Square-root-free QDR decomposition of a tensor."""
    a = as_tensor3(a)
    tol = tol or DEFAULT_TOL
    m, n, p = a.shape
    at = mode3_product(a, transform.matrix)
    slice_factors = [matrix_qdr(at[:, :, k], tol) for k in range(p)]
    r = max(fac.rank for fac in slice_factors)
    qt = np.zeros((m, r, p), dtype=complex)
    dt = np.zeros((r, r, p), dtype=complex)
    rt = np.zeros((r, n, p), dtype=complex)
    for k, fac in enumerate(slice_factors):
        qt[:, : fac.rank, k] = fac.q
        dt[: fac.rank, : fac.rank, k] = fac.d
        rt[: fac.rank, :, k] = fac.r
    if r == 0:
        return TensorQDR(qt, dt, rt, 0)
    return TensorQDR(
        mode3_product(qt, transform.inverse),
        mode3_product(dt, transform.inverse),
        mode3_product(rt, transform.inverse),
        r,
    )


def truncated_qdr(a, transform: Transform, k: int, tol: ToleranceConfig | None = None) -> TensorQDR:
    """QDR limited to at most ``k`` kept directions per slice.

    No rank padding happens beyond filling each factor out to exactly k
    columns/rows; the reconstruction projects every transform-domain
    slice onto the span of its leading k Gram-Schmidt directions.
    """
    a = as_tensor3(a)
    tol = tol or DEFAULT_TOL
    m, n, p = a.shape
    if not 1 <= k <= min(m, n):
        raise DimMismatch(f"truncation rank {k} outside [1, {min(m, n)}]")
    at = mode3_product(a, transform.matrix)
    qt = np.zeros((m, k, p), dtype=complex)
    dt = np.zeros((k, k, p), dtype=complex)
    rt = np.zeros((k, n, p), dtype=complex)
    for s in range(p):
        fac = matrix_qdr(at[:, :, s], tol, max_cols=k)
        qt[:, : fac.rank, s] = fac.q
        dt[: fac.rank, : fac.rank, s] = fac.d
        rt[: fac.rank, :, s] = fac.r
    return TensorQDR(
        mode3_product(qt, transform.inverse),
        mode3_product(dt, transform.inverse),
        mode3_product(rt, transform.inverse),
        k,
    )
