#!/usr/bin/env python3
"""Regenerate everything under fixtures/ deterministically.

Run from the repository root:  python3 tools/make_fixtures.py
"""

from pathlib import Path

import numpy as np

from mprod import ImageRGB, write_ppm
from mprod.formats import write_mat, write_rational_mat, write_st3, write_t3
from mprod.symbolic import Poly, RatFun, sym_tensor

ROOT = Path(__file__).resolve().parent.parent
FIXDIR = ROOT / "fixtures"


def tensor(slices) -> np.ndarray:
    """Stack a list of 2-D slices along the third axis."""
    return np.stack([np.asarray(s, dtype=complex) for s in slices], axis=2)


def main() -> None:
    FIXDIR.mkdir(exist_ok=True)

    # --- transforms -----------------------------------------------------
    write_mat(np.array([[1.0, -1.0], [0.0, 1.0]]), FIXDIR / "shear2.mat")
    write_mat(np.array([[1.0, -1.0, 1.0], [0.0, 1.0, 1.0], [0.0, 0.0, 1.0]]),
              FIXDIR / "shear3a.mat")
    write_mat(np.array([[1.0, 0.0, 1.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]),
              FIXDIR / "shear3b.mat")
    write_rational_mat([[1, 2], [1, 1]], FIXDIR / "mix2.mat")
    write_rational_mat([[1, 1], [1, -1]], FIXDIR / "dft2.mat")

    # --- numeric tensors ------------------------------------------------
    write_t3(tensor([[[0, 1, 0], [0, 1, 1]],
                     [[1, 0, 1], [0, 1, 1]]]), FIXDIR / "frd_2x3x2.t3")

    write_t3(tensor([[[0, 1, 0], [-1, 0, 1], [-1, 0, 1]],
                     [[1, 1, 1], [1, 1, 2], [-1, 0, -1]],
                     [[1, 2, 1], [2, 1, 1], [1, 1, 1]]]),
             FIXDIR / "pinv_dense_3x3x3.t3")

    write_t3(tensor([[[-1, 2, 3, 0], [-1, 1, -3, 2], [0, 2, 2, -2]],
                     [[1, 1, 1, 0], [0, 0, -1, 0], [1, 1, 0, 0]],
                     [[2, -2, -2, 0], [0, -1, 2, -2], [2, -2, 0, 2]]]),
             FIXDIR / "pinv_fractions_3x4x3.t3")

    write_t3(tensor([[[1, 0, 0], [3, 3, -1], [0, 0, 0]],
                     [[2, 0, 0], [0, 0, 1], [0, 0, 0]],
                     [[0, 1, 0], [0, 0, 1], [0, 0, 0]]]),
             FIXDIR / "drazin_graded_3x3x3.t3")

    write_t3(tensor([[[4, 2, -2, -1], [4, 2, -4, 0], [2, 3, -2, 1]],
                     [[1, -2, 3, 2], [2, -2, 4, 2], [2, -2, 4, 2]],
                     [[-2, -2, 0, -1], [-2, -2, 2, -2], [-1, -3, 1, -2]]]),
             FIXDIR / "qdr_graded_3x4x3.t3")

    # --- symbolic tensors -----------------------------------------------
    x = Poly([0, 1])
    poly_entries = np.empty((2, 2, 2), dtype=object)
    poly_entries[:, :, 0] = np.array(
        [[Poly([1, 1]), Poly([1, 1])], [Poly([2, 1]), Poly([1, -1])]], dtype=object)
    poly_entries[:, :, 1] = np.array([[x, x], [x, x]], dtype=object)
    write_st3(sym_tensor(poly_entries), FIXDIR / "sym_poly_2x2x2.st3")

    series_recip = RatFun(Poly([0, 6]), Poly([6, 6, 3, 1]))  # 6x / (x^3 + 3x^2 + 6x + 6)
    outer_a = np.empty((2, 2, 2), dtype=object)
    outer_a[:, :, 0] = np.array([[series_recip, 0], [0, 0]], dtype=object)
    outer_a[:, :, 1] = np.array([[0, 0], [Poly([0, 2]), 0]], dtype=object)
    write_st3(sym_tensor(outer_a), FIXDIR / "sym_outer_a_2x2x2.st3")

    outer_w = np.empty((2, 2, 2), dtype=object)
    outer_w[:, :, 0] = np.array([[Poly([1, 1]), 0], [0, 0]], dtype=object)
    outer_w[:, :, 1] = np.array([[0, 0], [x, 0]], dtype=object)
    write_st3(sym_tensor(outer_w), FIXDIR / "sym_outer_w_2x2x2.st3")

    # --- images -----------------------------------------------------------
    u = np.array([(i % 15) + 1 for i in range(16)])
    v = np.array([((2 * i) % 15) + 1 for i in range(16)])
    rank1 = np.stack([np.outer(u, v), np.outer(v, u), np.outer(u, u)], axis=2)
    write_ppm(ImageRGB(16, 16, rank1.astype(np.uint8)), FIXDIR / "rank1_16x16.ppm")

    gradient = np.array([[[0, 0, 0], [64, 128, 192]],
                         [[32, 96, 160], [255, 255, 255]]], dtype=np.uint8)
    write_ppm(ImageRGB(2, 2, gradient), FIXDIR / "gradient_2x2.ppm")

    manifest = """\
# Fixture manifest: file -> contents and the checks that consume it.

shear2.mat               2x2 unit upper-triangular transform used with frd_2x3x2.t3.
shear3a.mat              3x3 unit upper-triangular transform used with pinv_dense_3x3x3.t3.
shear3b.mat              3x3 unit upper-triangular transform used with the graded-rank and graded-index tensors.
mix2.mat                 rational 2x2 transform [[1,2],[1,1]] for the symbolic outer-inverse and pinv checks.
dft2.mat                 rational 2x2 transform [[1,1],[1,-1]] (unnormalized two-point DFT) for the symbolic QDR factor checks.

frd_2x3x2.t3             2x3x2 integer tensor with transform-domain slice ranks (1,2); full-rank decomposition acceptance check.
pinv_dense_3x3x3.t3      3x3x3 integer tensor, slice ranks (2,2,3); Moore-Penrose acceptance check with known 4-decimal inverse.
pinv_fractions_3x4x3.t3  3x4x3 integer tensor, slice ranks (1,2,3); Moore-Penrose acceptance check with known exact-fraction inverse.
drazin_graded_3x3x3.t3   3x3x3 integer tensor whose slice indices are (1,2,3); Drazin acceptance check with known inverse.
qdr_graded_3x4x3.t3      3x4x3 integer tensor, slice ranks (1,2,3); QDR acceptance check (reconstruction and factor structure).

sym_poly_2x2x2.st3       2x2x2 tensor of degree-1 polynomials; exact QDR factor checks under dft2.mat and mix2.mat.
sym_outer_a_2x2x2.st3    2x2x2 rational-function tensor (one series-reciprocal entry, one linear entry); symbolic outer-inverse and pinv acceptance checks under mix2.mat.
sym_outer_w_2x2x2.st3    2x2x2 polynomial prescription tensor paired with sym_outer_a_2x2x2.st3.

rank1_16x16.ppm          16x16 RGB image, every channel an exact integer rank-1 outer product; k=1 compression captures it exactly.
gradient_2x2.ppm         2x2 RGB gradient; byte-exact PPM round-trip check.
"""
    (FIXDIR / "MANIFEST.txt").write_text(manifest, encoding="ascii")
    print(f"wrote fixtures to {FIXDIR}")


if __name__ == "__main__":
    main()
