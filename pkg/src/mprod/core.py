"""Third-order tensor algebra driven by an invertible mode-3 transform.

A tensor is a dense complex numpy array of shape ``(m, n, p)``; frontal
slice ``k`` is the m-by-n matrix ``A[:, :, k]``.  An invertible p-by-p
matrix applied along the third mode moves a tensor into the transform
domain, where every algorithm in this library works slice by slice;
results are pulled back with the inverse matrix.  All operations are
pure functions and leave their inputs untouched.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimMismatch, SingularSlice, SingularTransform

__all__ = [
    "ToleranceConfig",
    "Transform",
    "MultiRank",
    "MultiIndex",
    "as_tensor3",
    "mode3_product",
    "facewise_product",
    "m_product",
    "m_transpose",
    "m_identity",
    "m_inverse",
    "multirank",
    "multi_index",
    "fro_norm",
    "m_power",
]


@dataclass(frozen=True)
class ToleranceConfig:
    """Numerical thresholds shared by the slice-wise algorithms.

    rank_rel_tol     relative singular-value cutoff for rank decisions
    residual_tol     acceptance bound for reconstruction/identity residuals
    zero_column_tol  Gram-Schmidt column-rejection threshold
    """

    rank_rel_tol: float = 1e-12
    residual_tol: float = 1e-8
    zero_column_tol: float = 1e-12

    def __post_init__(self):
        for name in ("rank_rel_tol", "residual_tol", "zero_column_tol"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")


DEFAULT_TOL = ToleranceConfig()

# 64-bit linear congruential generator (Knuth's MMIX constants).  Used for
# the reproducible "random" transform; the doubles are the top 53 bits of
# each state mapped into [0, 1).
_LCG_MULT = 6364136223846793005
_LCG_INC = 1442695040888963407
_LCG_MASK = (1 << 64) - 1


def _lcg_doubles(seed: int, count: int) -> list[float]:
    state = seed & _LCG_MASK
    out = []
    for _ in range(count):
        state = (_LCG_MULT * state + _LCG_INC) & _LCG_MASK
        out.append((state >> 11) / float(1 << 53))
    return out


class Transform:
    """An invertible p-by-p mode-3 transform with its cached inverse.

    Construction verifies invertibility: the residual
    ``||M @ Minv - I||_F`` must not exceed ``1e-10 * ||M||_F * ||Minv||_F``.
    """

    __slots__ = ("matrix", "inverse", "p")

    def __init__(self, matrix, inverse=None):
        matrix = np.asarray(matrix, dtype=complex)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise DimMismatch(f"transform must be square, got shape {matrix.shape}")
        p = matrix.shape[0]
        if inverse is None:
            try:
                inverse = np.linalg.inv(matrix)
            except np.linalg.LinAlgError as exc:
                raise SingularTransform(str(exc)) from exc
        else:
            inverse = np.asarray(inverse, dtype=complex)
            if inverse.shape != (p, p):
                raise DimMismatch("inverse shape does not match the transform")
        resid = np.linalg.norm(matrix @ inverse - np.eye(p))
        bound = 1e-10 * np.linalg.norm(matrix) * np.linalg.norm(inverse)
        if not np.isfinite(resid) or resid > bound:
            raise SingularTransform(
                f"transform failed the invertibility check (residual {resid:.3e})"
            )
        self.matrix = matrix
        self.inverse = inverse
        self.p = p

    @classmethod
    def identity(cls, p: int) -> "Transform":
        eye = np.eye(p)
        return cls(eye, eye)

    @classmethod
    def dct(cls, p: int) -> "Transform":
        """Orthonormal discrete cosine transform matrix (applied densely)."""
        j = np.arange(p)
        k = j[:, None]
        mat = np.sqrt(2.0 / p) * np.cos(np.pi * (2 * j + 1) * k / (2 * p))
        mat[0, :] /= np.sqrt(2.0)
        return cls(mat, mat.T.copy())

    @classmethod
    def random(cls, p: int, seed: int = 0) -> "Transform":
        """Reproducible dense transform with entries in [-1, 1).

        Entries come row-major from the documented 64-bit LCG, so the
        same seed produces the same matrix everywhere.
        """
        vals = _lcg_doubles(seed, p * p)
        mat = 2.0 * np.array(vals).reshape(p, p) - 1.0
        return cls(mat)

    def __repr__(self):
        return f"Transform(p={self.p})"


@dataclass(frozen=True)
class MultiRank:
    """Per-slice transform-domain ranks; the tubal rank is their maximum."""

    ranks: tuple[int, ...]

    @property
    def tubal_rank(self) -> int:
        return max(self.ranks)


@dataclass(frozen=True)
class MultiIndex:
    """Per-slice matrix indices; the tubal index is their maximum."""

    indices: tuple[int, ...]

    @property
    def tubal_index(self) -> int:
        return max(self.indices)


def as_tensor3(a) -> np.ndarray:
    """Validate and return ``a`` as a complex (m, n, p) array."""
    a = np.asarray(a, dtype=complex)
    if a.ndim != 3:
        raise DimMismatch(f"expected a third-order tensor, got ndim={a.ndim}")
    if min(a.shape) < 1:
        raise DimMismatch(f"tensor dimensions must be positive, got {a.shape}")
    return a


def _matrix_rank(mat: np.ndarray, tol: ToleranceConfig) -> int:
    """Numerical rank: singular values above rank_rel_tol * s_max * max(m, n)."""
    if mat.size == 0:
        return 0
    s = np.linalg.svd(mat, compute_uv=False)
    if s.size == 0 or s[0] == 0:
        return 0
    return int(np.count_nonzero(s > tol.rank_rel_tol * s[0] * max(mat.shape)))


def _matrix_index(mat: np.ndarray, tol: ToleranceConfig) -> int:
    """Smallest j >= 0 with rank(mat^j) == rank(mat^{j+1}); rank(mat^0) = m."""
    m = mat.shape[0]
    prev = m
    power = np.eye(m, dtype=complex)
    for j in range(1, m + 2):
        power = power @ mat
        r = _matrix_rank(power, tol)
        if r == prev:
            return j - 1
        prev = r
    return m


def mode3_product(a, w) -> np.ndarray:
    """Apply a matrix along the third mode.

    ``out[i, j, k] = sum_t a[i, j, t] * w[k, t]`` for ``w`` of shape
    (p', p); the result has shape (m, n, p').
    """
    a = as_tensor3(a)
    w = np.asarray(w, dtype=complex)
    if w.ndim != 2 or w.shape[1] != a.shape[2]:
        raise DimMismatch(
            f"mode-3 matrix of shape {w.shape} does not match tensor depth {a.shape[2]}"
        )
    return np.tensordot(a, w, axes=([2], [1]))


def facewise_product(a, b) -> np.ndarray:
    """Slice-by-slice matrix product: ``out[:, :, k] = a[:, :, k] @ b[:, :, k]``."""
    a = as_tensor3(a)
    b = as_tensor3(b)
    if a.shape[2] != b.shape[2]:
        raise DimMismatch(f"slice counts differ: {a.shape[2]} vs {b.shape[2]}")
    if a.shape[1] != b.shape[0]:
        raise DimMismatch(f"inner dimensions differ: {a.shape} vs {b.shape}")
    return np.einsum("ijk,jlk->ilk", a, b)


def _check_transform(a: np.ndarray, transform: Transform) -> None:
    if transform.p != a.shape[2]:
        raise DimMismatch(
            f"transform size {transform.p} does not match tensor depth {a.shape[2]}"
        )


def m_product(a, b, transform: Transform) -> np.ndarray:
    """Tensor-tensor product: facewise product in the transform domain."""
    a = as_tensor3(a)
    b = as_tensor3(b)
    _check_transform(a, transform)
    at = mode3_product(a, transform.matrix)
    bt = mode3_product(b, transform.matrix)
    return mode3_product(facewise_product(at, bt), transform.inverse)


def m_transpose(a, transform: Transform) -> np.ndarray:
    """Conjugate-transpose every transform-domain slice, then pull back."""
    a = as_tensor3(a)
    _check_transform(a, transform)
    at = mode3_product(a, transform.matrix)
    return mode3_product(np.conj(at.transpose(1, 0, 2)), transform.inverse)


def m_identity(m: int, p: int, transform: Transform) -> np.ndarray:
    """The m-by-m-by-p tensor whose transform-domain slices are all I_m."""
    if m < 1 or p < 1:
        raise DimMismatch("identity dimensions must be positive")
    if transform.p != p:
        raise DimMismatch(f"transform size {transform.p} does not match p={p}")
    stack = np.repeat(np.eye(m, dtype=complex)[:, :, None], p, axis=2)
    return mode3_product(stack, transform.inverse)


def m_inverse(a, transform: Transform, tol: ToleranceConfig | None = None) -> np.ndarray:
    """Invert a square tensor slice by slice in the transform domain.

    Raises SingularSlice(k) when slice k is rank-deficient at the
    configured threshold.
    """
    a = as_tensor3(a)
    tol = tol or DEFAULT_TOL
    m, n, p = a.shape
    if m != n:
        raise DimMismatch(f"tensor is not square: {a.shape}")
    _check_transform(a, transform)
    at = mode3_product(a, transform.matrix)
    out = np.empty_like(at)
    for k in range(p):
        if _matrix_rank(at[:, :, k], tol) < m:
            raise SingularSlice(k)
        out[:, :, k] = np.linalg.inv(at[:, :, k])
    return mode3_product(out, transform.inverse)


def multirank(a, transform: Transform, tol: ToleranceConfig | None = None) -> MultiRank:
    """Numerical rank of every transform-domain slice."""
    a = as_tensor3(a)
    tol = tol or DEFAULT_TOL
    _check_transform(a, transform)
    at = mode3_product(a, transform.matrix)
    return MultiRank(tuple(_matrix_rank(at[:, :, k], tol) for k in range(a.shape[2])))


def multi_index(a, transform: Transform, tol: ToleranceConfig | None = None) -> MultiIndex:
    """Matrix index of every transform-domain slice of a square tensor."""
    a = as_tensor3(a)
    tol = tol or DEFAULT_TOL
    if a.shape[0] != a.shape[1]:
        raise DimMismatch(f"tensor is not square: {a.shape}")
    _check_transform(a, transform)
    at = mode3_product(a, transform.matrix)
    return MultiIndex(tuple(_matrix_index(at[:, :, k], tol) for k in range(a.shape[2])))


def fro_norm(a) -> float:
    """Frobenius norm over all entries."""
    return float(np.linalg.norm(np.asarray(a, dtype=complex).ravel()))


def m_power(a, j: int, transform: Transform) -> np.ndarray:
    """j-th tensor power; the zeroth power is the identity tensor."""
    a = as_tensor3(a)
    if j < 0:
        raise ValueError("power must be non-negative")
    if a.shape[0] != a.shape[1]:
        raise DimMismatch(f"tensor is not square: {a.shape}")
    _check_transform(a, transform)
    out = m_identity(a.shape[0], a.shape[2], transform)
    for _ in range(j):
        out = m_product(out, a, transform)
    return out
