"""M-product tensor algebra: decompositions, generalized inverses, and
QDR-based lossy image compression, in numeric and exact-symbolic forms."""

from .core import (
    MultiIndex,
    MultiRank,
    ToleranceConfig,
    Transform,
    as_tensor3,
    facewise_product,
    fro_norm,
    m_identity,
    m_inverse,
    m_power,
    m_product,
    m_transpose,
    mode3_product,
    multi_index,
    multirank,
)
from .decomp import TensorFRD, TensorQDR, tensor_frd, tensor_qdr, truncated_qdr
from .errors import (
    DimMismatch,
    DivisionByZeroFunction,
    ExistenceViolated,
    MalformedHeader,
    MProdError,
    PoleAtPoint,
    SingularSlice,
    SingularSystem,
    SingularTransform,
    TooSmall,
    TruncatedPayload,
    UnsupportedMaxval,
)
from .geninv import (
    GinvReport,
    SubspaceReport,
    check_subspaces,
    drazin_frd,
    drazin_qdr,
    outer_inverse_qdr,
    pinv_frd,
    pinv_qdr,
    residual_report,
)
from .imaging import (
    CompressionResult,
    ImageRGB,
    compress,
    image_to_tensor,
    psnr,
    read_ppm,
    ssim,
    tensor_to_image,
    write_ppm,
)
from .kernels import (
    MatrixFRD,
    MatrixQDR,
    matrix_frd,
    matrix_index,
    matrix_qdr,
    matrix_rank,
    solve_linear,
)

__version__ = "0.1.0"
