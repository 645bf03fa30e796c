"""Text file formats: dense tensors (.t3), transforms (.mat), symbolic
tensors (.st3), and flat key-value reports.

All decimal parsing is locale independent ('.' radix).  Entry order in
every tensor payload is slice-major, then row-major within a slice.
Numeric output uses 17 significant digits so float64 values round-trip
exactly.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import MalformedHeader, TruncatedPayload
from .symbolic import Poly, RatFun, sym_tensor

__all__ = [
    "read_t3",
    "write_t3",
    "read_mat",
    "write_mat",
    "read_rational_mat",
    "write_rational_mat",
    "read_st3",
    "write_st3",
    "format_report",
]

_FMT = "{:.17g}"


def _fmt(x: float) -> str:
    return _FMT.format(float(x))


def _entries_iter(a: np.ndarray):
    m, n, p = a.shape
    for k in range(p):
        for i in range(m):
            for j in range(n):
                yield a[i, j, k]


def write_t3(a, path, kind: str | None = None) -> None:
    """Write a tensor; kind is 'real' or 'complex', auto-detected by default."""
    a = np.asarray(a, dtype=complex)
    if a.ndim != 3:
        raise ValueError(f"expected a third-order tensor, got ndim={a.ndim}")
    if kind is None:
        kind = "real" if np.all(a.imag == 0) else "complex"
    if kind not in ("real", "complex"):
        raise ValueError(f"bad kind {kind!r}")
    m, n, p = a.shape
    lines = [f"t3 {m} {n} {p} {kind}"]
    for k in range(p):
        for i in range(m):
            row = a[i, :, k]
            if kind == "real":
                lines.append(" ".join(_fmt(v.real) for v in row))
            else:
                lines.append(" ".join(f"{_fmt(v.real)} {_fmt(v.imag)}" for v in row))
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def _parse_numeric_payload(tokens: list[str], count: int, kind: str, where: str) -> np.ndarray:
    per = 1 if kind == "real" else 2
    if len(tokens) < count * per:
        raise TruncatedPayload(
            f"{where}: expected {count * per} value tokens, found {len(tokens)}"
        )
    try:
        vals = [float(t) for t in tokens[: count * per]]
    except ValueError as exc:
        raise MalformedHeader(f"{where}: bad numeric token ({exc})") from exc
    if kind == "real":
        return np.array(vals, dtype=complex)
    flat = np.array(vals).reshape(count, 2)
    return flat[:, 0] + 1j * flat[:, 1]


def read_t3(path) -> np.ndarray:
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    tokens = text.split()
    if len(tokens) < 5 or tokens[0] != "t3":
        raise MalformedHeader(f"{path}: not a t3 file")
    try:
        m, n, p = int(tokens[1]), int(tokens[2]), int(tokens[3])
    except ValueError as exc:
        raise MalformedHeader(f"{path}: bad dimensions") from exc
    kind = tokens[4]
    if kind not in ("real", "complex") or min(m, n, p) < 1:
        raise MalformedHeader(f"{path}: bad header")
    flat = _parse_numeric_payload(tokens[5:], m * n * p, kind, str(path))
    out = np.empty((m, n, p), dtype=complex)
    it = iter(flat)
    for k in range(p):
        for i in range(m):
            for j in range(n):
                out[i, j, k] = next(it)
    return out


def write_mat(mat, path, kind: str | None = None) -> None:
    mat = np.asarray(mat, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"expected a square matrix, got {mat.shape}")
    if kind is None:
        kind = "real" if np.all(mat.imag == 0) else "complex"
    p = mat.shape[0]
    lines = [f"mat {p} {kind}"]
    for i in range(p):
        if kind == "real":
            lines.append(" ".join(_fmt(v.real) for v in mat[i]))
        else:
            lines.append(" ".join(f"{_fmt(v.real)} {_fmt(v.imag)}" for v in mat[i]))
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def read_mat(path) -> np.ndarray:
    with open(path, "r", encoding="ascii") as fh:
        tokens = fh.read().split()
    if len(tokens) < 3 or tokens[0] != "mat":
        raise MalformedHeader(f"{path}: not a mat file")
    try:
        p = int(tokens[1])
    except ValueError as exc:
        raise MalformedHeader(f"{path}: bad size") from exc
    kind = tokens[2]
    if p < 1:
        raise MalformedHeader(f"{path}: bad size")
    if kind == "rational":
        frac = _parse_rational_payload(tokens[3:], p * p, str(path))
        return np.array([[float(frac[i * p + j]) for j in range(p)] for i in range(p)],
                        dtype=complex)
    if kind not in ("real", "complex"):
        raise MalformedHeader(f"{path}: bad kind {kind!r}")
    flat = _parse_numeric_payload(tokens[3:], p * p, kind, str(path))
    return flat.reshape(p, p)


def _parse_rational_payload(tokens: list[str], count: int, where: str) -> list[Fraction]:
    if len(tokens) < count:
        raise TruncatedPayload(f"{where}: expected {count} tokens, found {len(tokens)}")
    try:
        return [Fraction(t) for t in tokens[:count]]
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedHeader(f"{where}: bad rational token ({exc})") from exc


def read_rational_mat(path) -> np.ndarray:
    """Read a 'mat <p> rational' file into an object array of Fractions."""
    with open(path, "r", encoding="ascii") as fh:
        tokens = fh.read().split()
    if len(tokens) < 3 or tokens[0] != "mat" or tokens[2] != "rational":
        raise MalformedHeader(f"{path}: not a rational mat file")
    try:
        p = int(tokens[1])
    except ValueError as exc:
        raise MalformedHeader(f"{path}: bad size") from exc
    flat = _parse_rational_payload(tokens[3:], p * p, str(path))
    out = np.empty((p, p), dtype=object)
    for i in range(p):
        for j in range(p):
            out[i, j] = flat[i * p + j]
    return out


def write_rational_mat(mat, path) -> None:
    mat = np.array(mat, dtype=object)
    p = mat.shape[0]
    lines = [f"mat {p} rational"]
    for i in range(p):
        lines.append(" ".join(str(Fraction(mat[i, j])) for j in range(p)))
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def _poly_tokens(poly: Poly) -> str:
    if poly.is_zero:
        return "[0]"
    return "[" + " ".join(str(c) for c in poly.coeffs) + "]"


def write_st3(a, path) -> None:
    """Write a symbolic tensor: one '[num] [den]' coefficient line per entry."""
    m, n, p = a.shape
    lines = ["st3", f"dims=[{m},{n},{p}]"]
    for k in range(p):
        for i in range(m):
            for j in range(n):
                entry = a[i, j, k]
                lines.append(f"{_poly_tokens(entry.num)} {_poly_tokens(entry.den)}")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def read_st3(path) -> np.ndarray:
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != "st3":
        raise MalformedHeader(f"{path}: not an st3 file")
    if len(lines) < 2 or not (lines[1].startswith("dims=[") and lines[1].endswith("]")):
        raise MalformedHeader(f"{path}: missing dims field")
    try:
        m, n, p = (int(v) for v in lines[1][len("dims=["):-1].split(","))
    except ValueError as exc:
        raise MalformedHeader(f"{path}: bad dims field") from exc
    if min(m, n, p) < 1:
        raise MalformedHeader(f"{path}: bad dims field")
    body = lines[2:]
    if len(body) < m * n * p:
        raise TruncatedPayload(f"{path}: expected {m * n * p} entry lines, found {len(body)}")
    entries = np.empty((m, n, p), dtype=object)
    pos = 0
    for k in range(p):
        for i in range(m):
            for j in range(n):
                entries[i, j, k] = _parse_st3_entry(body[pos], str(path))
                pos += 1
    return sym_tensor(entries)


def _parse_st3_entry(line: str, where: str) -> RatFun:
    groups = []
    rest = line
    for _ in range(2):
        start = rest.find("[")
        end = rest.find("]")
        if start < 0 or end < start:
            raise MalformedHeader(f"{where}: bad entry line {line!r}")
        groups.append(rest[start + 1:end].split())
        rest = rest[end + 1:]
    try:
        num = Poly([Fraction(t) for t in groups[0]])
        den = Poly([Fraction(t) for t in groups[1]])
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedHeader(f"{where}: bad coefficient in {line!r}") from exc
    return RatFun(num, den)


def format_report(entries: dict) -> str:
    """Render a flat key-value report, floats at 17 significant digits."""
    lines = []
    for key, value in entries.items():
        if isinstance(value, float):
            lines.append(f"{key} = {_fmt(value)}")
        else:
            lines.append(f"{key} = {value}")
    return "\n".join(lines) + "\n"
