"""Lossy color-image compression by truncated QDR, plus quality metrics.

Images are 8-bit RGB; a height-by-width-by-3 image becomes a tensor
with one frontal slice per color channel.  Compression keeps the
leading k Gram-Schmidt directions of every transform-domain slice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Transform, as_tensor3, m_product
from .decomp import truncated_qdr
from .errors import (
    DimMismatch,
    MalformedHeader,
    TooSmall,
    TruncatedPayload,
    UnsupportedMaxval,
)

__all__ = [
    "ImageRGB",
    "CompressionResult",
    "read_ppm",
    "write_ppm",
    "image_to_tensor",
    "tensor_to_image",
    "compress",
    "psnr",
    "ssim",
]

_SSIM_WINDOW = 8
_SSIM_C1 = (0.01 * 255.0) ** 2
_SSIM_C2 = (0.03 * 255.0) ** 2


@dataclass(frozen=True)
class ImageRGB:
    """8-bit RGB image; pixels are a (height, width, 3) uint8 array."""

    width: int
    height: int
    pixels: np.ndarray

    def __post_init__(self):
        if self.pixels.dtype != np.uint8:
            raise ValueError("pixels must be uint8")
        if self.pixels.shape != (self.height, self.width, 3):
            raise DimMismatch(
                f"pixel block {self.pixels.shape} does not match "
                f"{(self.height, self.width, 3)}"
            )


@dataclass(frozen=True)
class CompressionResult:
    """Reconstruction of a compressed image together with its quality metrics."""

    k: int
    reconstructed: ImageRGB
    psnr_db: float
    ssim: float
    storage_ratio: float


def read_ppm(path) -> ImageRGB:
    """Read a binary (P6) PPM file with maxval 255.

    Header comments introduced by ``#`` are skipped; the payload must
    contain exactly width * height * 3 bytes.
    """
    with open(path, "rb") as fh:
        data = fh.read()

    pos = 0

    def next_token():
        nonlocal pos
        while pos < len(data):
            ch = data[pos:pos + 1]
            if ch == b"#":
                while pos < len(data) and data[pos:pos + 1] not in (b"\n", b"\r"):
                    pos += 1
            elif ch.isspace():
                pos += 1
            else:
                break
        start = pos
        while pos < len(data) and not data[pos:pos + 1].isspace():
            pos += 1
        if start == pos:
            raise MalformedHeader("unexpected end of header")
        return data[start:pos]

    magic = next_token()
    if magic != b"P6":
        raise MalformedHeader(f"expected P6, got {magic!r}")
    try:
        width = int(next_token())
        height = int(next_token())
        maxval = int(next_token())
    except ValueError as exc:
        raise MalformedHeader(str(exc)) from exc
    if width < 1 or height < 1:
        raise MalformedHeader(f"bad dimensions {width}x{height}")
    if maxval != 255:
        raise UnsupportedMaxval(f"maxval {maxval} unsupported, need 255")
    pos += 1  # single whitespace byte after maxval
    need = width * height * 3
    payload = data[pos:pos + need]
    if len(payload) < need:
        raise TruncatedPayload(f"expected {need} pixel bytes, found {len(payload)}")
    pixels = np.frombuffer(payload, dtype=np.uint8).reshape(height, width, 3).copy()
    return ImageRGB(width, height, pixels)


def write_ppm(image: ImageRGB, path) -> None:
    with open(path, "wb") as fh:
        fh.write(f"P6\n{image.width} {image.height}\n255\n".encode("ascii"))
        fh.write(image.pixels.tobytes())


def image_to_tensor(image: ImageRGB) -> np.ndarray:
    """Channel values as a (height, width, 3) complex tensor."""
    return image.pixels.astype(float).astype(complex)


def tensor_to_image(a) -> ImageRGB:
    """Quantize a depth-3 tensor back to 8-bit RGB.

    Real parts are rounded half away from zero, then clamped to [0, 255];
    both steps are fixed so outputs are bit-reproducible.
    """
    a = as_tensor3(a)
    if a.shape[2] != 3:
        raise DimMismatch(f"expected 3 channels, got {a.shape[2]}")
    vals = a.real
    rounded = np.sign(vals) * np.floor(np.abs(vals) + 0.5)
    clamped = np.clip(rounded, 0.0, 255.0).astype(np.uint8)
    return ImageRGB(a.shape[1], a.shape[0], clamped)


def psnr(a: ImageRGB, b: ImageRGB) -> float:
    """Peak signal-to-noise ratio in dB over all channel samples.

    Identical images give math.inf.
    """
    if (a.width, a.height) != (b.width, b.height):
        raise DimMismatch("image sizes differ")
    diff = a.pixels.astype(float) - b.pixels.astype(float)
    mse = float(np.mean(diff * diff))
    if mse == 0.0:
        return math.inf
    return 10.0 * math.log10(255.0 ** 2 / mse)


def _channel_ssim(x: np.ndarray, y: np.ndarray) -> float:
    win = _SSIM_WINDOW
    xw = np.lib.stride_tricks.sliding_window_view(x, (win, win))
    yw = np.lib.stride_tricks.sliding_window_view(y, (win, win))
    mu_x = xw.mean(axis=(-2, -1))
    mu_y = yw.mean(axis=(-2, -1))
    # Biased (1/N) window statistics; constant windows cancel exactly.
    var_x = (xw * xw).mean(axis=(-2, -1)) - mu_x * mu_x
    var_y = (yw * yw).mean(axis=(-2, -1)) - mu_y * mu_y
    cov = (xw * yw).mean(axis=(-2, -1)) - mu_x * mu_y
    num = (2.0 * mu_x * mu_y + _SSIM_C1) * (2.0 * cov + _SSIM_C2)
    den = (mu_x * mu_x + mu_y * mu_y + _SSIM_C1) * (var_x + var_y + _SSIM_C2)
    return float(np.mean(num / den))


def ssim(a: ImageRGB, b: ImageRGB) -> float:
    """Mean structural similarity over 8x8 sliding windows, averaged over channels."""
    if (a.width, a.height) != (b.width, b.height):
        raise DimMismatch("image sizes differ")
    if min(a.width, a.height) < _SSIM_WINDOW:
        raise TooSmall(f"image smaller than the {_SSIM_WINDOW}x{_SSIM_WINDOW} window")
    xa = a.pixels.astype(float)
    xb = b.pixels.astype(float)
    return float(np.mean([_channel_ssim(xa[:, :, c], xb[:, :, c]) for c in range(3)]))


def compress(image: ImageRGB, k: int, transform: Transform | None = None) -> CompressionResult:
    """Compress by rank-k truncated QDR and score the reconstruction.

    The default transform is the identity, which compresses each color
    channel independently.
    """
    transform = transform or Transform.identity(3)
    if transform.p != 3:
        raise DimMismatch("image compression needs a depth-3 transform")
    m, n = image.height, image.width
    if not 1 <= k <= min(m, n):
        raise DimMismatch(f"truncation rank {k} outside [1, {min(m, n)}]")
    a = image_to_tensor(image)
    fac = truncated_qdr(a, transform, k)
    approx = m_product(m_product(fac.q, fac.d, transform), fac.r, transform)
    rebuilt = tensor_to_image(approx)
    return CompressionResult(
        k=k,
        reconstructed=rebuilt,
        psnr_db=psnr(image, rebuilt),
        ssim=ssim(image, rebuilt),
        storage_ratio=k * (m + n + k) / (m * n),
    )
