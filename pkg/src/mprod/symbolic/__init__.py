"""Exact symbolic side of the library: rational-function tensors."""

from .ratfun import Poly, RatFun, poly_gcd, poly_lcm
from .tensor import (
    SymQDR,
    rational_matrix,
    rational_matrix_inverse,
    sym_evaluate,
    sym_facewise_product,
    sym_m_identity,
    sym_m_product,
    sym_matrix_qdr,
    sym_mode3_product,
    sym_outer_inverse,
    sym_pinv,
    sym_tensor,
    sym_tensor_qdr,
    sym_transpose,
)

__all__ = [
    "Poly",
    "RatFun",
    "poly_gcd",
    "poly_lcm",
    "SymQDR",
    "rational_matrix",
    "rational_matrix_inverse",
    "sym_evaluate",
    "sym_facewise_product",
    "sym_m_identity",
    "sym_m_product",
    "sym_matrix_qdr",
    "sym_mode3_product",
    "sym_outer_inverse",
    "sym_pinv",
    "sym_tensor",
    "sym_tensor_qdr",
    "sym_transpose",
]
