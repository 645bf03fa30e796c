"""Shared fixtures: example tensors from files plus random generators."""

from pathlib import Path

import numpy as np
import pytest

from mprod import Transform, mode3_product
from mprod.formats import read_mat, read_rational_mat, read_st3, read_t3

FIXDIR = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixdir() -> Path:
    return FIXDIR


def _load(name: str) -> np.ndarray:
    return read_t3(FIXDIR / name)


@pytest.fixture(scope="session")
def frd_example():
    """2x3x2 tensor with slice ranks (1, 2) and its shear transform."""
    return _load("frd_2x3x2.t3"), Transform(read_mat(FIXDIR / "shear2.mat"))


@pytest.fixture(scope="session")
def pinv_dense_example():
    """3x3x3 tensor with slice ranks (2, 2, 3) and its shear transform."""
    return _load("pinv_dense_3x3x3.t3"), Transform(read_mat(FIXDIR / "shear3a.mat"))


@pytest.fixture(scope="session")
def pinv_fractions_example():
    """3x4x3 tensor with slice ranks (1, 2, 3); inverse has exact small fractions."""
    return _load("pinv_fractions_3x4x3.t3"), Transform(read_mat(FIXDIR / "shear3b.mat"))


@pytest.fixture(scope="session")
def drazin_example():
    """3x3x3 tensor with slice indices (1, 2, 3)."""
    return _load("drazin_graded_3x3x3.t3"), Transform(read_mat(FIXDIR / "shear3b.mat"))


@pytest.fixture(scope="session")
def qdr_example():
    """3x4x3 tensor with slice ranks (1, 2, 3) for factor-structure checks."""
    return _load("qdr_graded_3x4x3.t3"), Transform(read_mat(FIXDIR / "shear3b.mat"))


@pytest.fixture(scope="session")
def sym_poly_example():
    """2x2x2 polynomial tensor plus its two rational transforms."""
    return (
        read_st3(FIXDIR / "sym_poly_2x2x2.st3"),
        read_rational_mat(FIXDIR / "mix2.mat"),
        read_rational_mat(FIXDIR / "dft2.mat"),
    )


@pytest.fixture(scope="session")
def sym_outer_example():
    """Rational-function tensor, its prescription tensor, and the transform."""
    return (
        read_st3(FIXDIR / "sym_outer_a_2x2x2.st3"),
        read_st3(FIXDIR / "sym_outer_w_2x2x2.st3"),
        read_rational_mat(FIXDIR / "mix2.mat"),
    )


# ---------------------------------------------------------------------------
# Random-instance builders (all deterministic through the caller's rng).
# ---------------------------------------------------------------------------

def random_multirank_tensor(rng, m, n, p, transform, ranks=None, complex_entries=False,
                            orthonormal_factors=False):
    """Tensor whose transform-domain slice ranks are prescribed.

    Each slice is a product of rank-r factors, built in the transform
    domain and pulled back.  With ``orthonormal_factors`` the slices get
    singular values in [0.5, 2], so inverses stay O(1); the plain mode
    uses Gaussian factors, whose conditioning can wander.  Random draws
    stay at rank >= 1: an exactly-zero slice survives the pullback only
    under an exact (identity-like) transform, so callers wanting rank-0
    slices must prescribe them together with such a transform.
    """
    if ranks is None:
        ranks = rng.integers(1, min(m, n) + 1, size=p)
    at = np.zeros((m, n, p), dtype=complex)
    for k, r in enumerate(ranks):
        if r == 0:
            continue
        left = rng.standard_normal((m, r))
        right = rng.standard_normal((r, n))
        if complex_entries:
            left = left + 1j * rng.standard_normal((m, r))
            right = right + 1j * rng.standard_normal((r, n))
        if orthonormal_factors:
            left, _ = np.linalg.qr(left)
            rq, _ = np.linalg.qr(right.conj().T)
            sing = rng.uniform(0.5, 2.0, size=r)
            at[:, :, k] = left @ np.diag(sing) @ rq.conj().T
        else:
            at[:, :, k] = left @ right
    return mode3_product(at, transform.inverse), tuple(int(r) for r in ranks)


def random_index_tensor(rng, m, p, transform, indices=None):
    """Square tensor whose transform-domain slice indices are prescribed.

    Slice k is an orthogonal similarity of blockdiag(N, C) where N is a
    nilpotent shift block of the requested index and C a well-conditioned
    diagonal block.  Random draws keep the invertible block nonempty so
    rank decisions on high powers stay clean.
    """
    if indices is None:
        indices = rng.integers(0, m, size=p)
    at = np.zeros((m, m, p), dtype=complex)
    for k, j in enumerate(indices):
        block = np.zeros((m, m))
        if j > 0:
            block[: j, : j] = np.diag(np.ones(j - 1), 1)
        core = m - j
        if core:
            block[j:, j:] = np.diag(rng.uniform(0.5, 2.0, size=core)
                                    * rng.choice([-1.0, 1.0], size=core))
        q, _ = np.linalg.qr(rng.standard_normal((m, m)))
        at[:, :, k] = q @ block @ q.T
    return mode3_product(at, transform.inverse), tuple(int(j) for j in indices)
