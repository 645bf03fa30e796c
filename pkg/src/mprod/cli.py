"""Command-line front door.

One subcommand per library operation; tensors travel as .t3/.st3 text
files, transforms as .mat files or the built-in identity/dct/random
generators, images as binary PPM.  Residual and metric reports go to
standard output and, with --out-report, to a file.

Exit codes: 0 success, 2 usage or input-file problems, 3 mathematical
failures (the error class name is printed on standard error).
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import decomp, formats, geninv, imaging, symbolic
from .core import ToleranceConfig, Transform, fro_norm, m_product
from .errors import MProdError


def _add_tolerance_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--rank-tol", type=float, default=None,
                        help="relative singular-value cutoff for rank decisions")
    parser.add_argument("--residual-tol", type=float, default=None,
                        help="acceptance bound for identity residuals")
    parser.add_argument("--zero-col-tol", type=float, default=None,
                        help="Gram-Schmidt column rejection threshold")


def _tolerances(args) -> ToleranceConfig:
    base = ToleranceConfig()
    return ToleranceConfig(
        rank_rel_tol=base.rank_rel_tol if args.rank_tol is None else args.rank_tol,
        residual_tol=base.residual_tol if args.residual_tol is None else args.residual_tol,
        zero_column_tol=(base.zero_column_tol if args.zero_col_tol is None
                         else args.zero_col_tol),
    )


def _numeric_transform(spec: str, seed: int, p: int) -> Transform:
    if spec == "identity":
        return Transform.identity(p)
    if spec == "dct":
        return Transform.dct(p)
    if spec == "random":
        return Transform.random(p, seed)
    return Transform(formats.read_mat(spec))


def _rational_transform(spec: str, p: int) -> np.ndarray:
    if spec == "identity":
        eye = [[1 if i == j else 0 for j in range(p)] for i in range(p)]
        return symbolic.rational_matrix(eye)
    return formats.read_rational_mat(spec)


def _emit_report(entries: dict, out_path) -> None:
    text = formats.format_report(entries)
    sys.stdout.write(text)
    if out_path:
        with open(out_path, "w", encoding="ascii") as fh:
            fh.write(text)


def _cmd_frd(args) -> int:
    a = formats.read_t3(args.A)
    transform = _numeric_transform(args.transform, args.seed, a.shape[2])
    tol = _tolerances(args)
    fac = decomp.tensor_frd(a, transform, tol)
    resid = fro_norm(m_product(fac.f, fac.g, transform) - a) if fac.rank else fro_norm(a)
    if args.out_f:
        formats.write_t3(fac.f, args.out_f)
    if args.out_g:
        formats.write_t3(fac.g, args.out_g)
    _emit_report({"rank": fac.rank, "reconstruction_residual": resid}, args.out_report)
    return 0


def _cmd_qdr(args) -> int:
    a = formats.read_t3(args.A)
    transform = _numeric_transform(args.transform, args.seed, a.shape[2])
    tol = _tolerances(args)
    fac = decomp.tensor_qdr(a, transform, tol)
    if fac.rank:
        rebuilt = m_product(m_product(fac.q, fac.d, transform), fac.r, transform)
        resid = fro_norm(rebuilt - a)
    else:
        resid = fro_norm(a)
    for attr, path in (("q", args.out_q), ("d", args.out_d), ("r", args.out_r)):
        if path:
            formats.write_t3(getattr(fac, attr), path)
    _emit_report({"rank": fac.rank, "reconstruction_residual": resid}, args.out_report)
    return 0


def _cmd_pinv(args) -> int:
    a = formats.read_t3(args.A)
    transform = _numeric_transform(args.transform, args.seed, a.shape[2])
    tol = _tolerances(args)
    fn = geninv.pinv_frd if args.method == "frd" else geninv.pinv_qdr
    report = fn(a, transform, tol)
    if args.out_x:
        formats.write_t3(report.x, args.out_x)
    _emit_report(dict(report.residuals), args.out_report)
    return 0


def _cmd_drazin(args) -> int:
    a = formats.read_t3(args.A)
    transform = _numeric_transform(args.transform, args.seed, a.shape[2])
    tol = _tolerances(args)
    fn = geninv.drazin_frd if args.method == "frd" else geninv.drazin_qdr
    report = fn(a, transform, tol)
    if args.out_x:
        formats.write_t3(report.x, args.out_x)
    _emit_report(dict(report.residuals), args.out_report)
    return 0


def _cmd_outer(args) -> int:
    a = formats.read_t3(args.A)
    w = formats.read_t3(args.W)
    transform = _numeric_transform(args.transform, args.seed, a.shape[2])
    tol = _tolerances(args)
    report = geninv.outer_inverse_qdr(a, w, transform, tol)
    if args.out_x:
        formats.write_t3(report.x, args.out_x)
    _emit_report(dict(report.residuals), args.out_report)
    return 0


def _sym_identities_exact(a, x, mat, which: str) -> bool:
    ax = symbolic.sym_m_product(a, x, mat)
    xa = symbolic.sym_m_product(x, a, mat)
    if which == "pinv":
        checks = [
            _sym_equal(symbolic.sym_m_product(ax, a, mat), a),
            _sym_equal(symbolic.sym_m_product(xa, x, mat), x),
            _sym_equal(symbolic.sym_transpose(ax), ax),
            _sym_equal(symbolic.sym_transpose(xa), xa),
        ]
    else:
        checks = [_sym_equal(symbolic.sym_m_product(xa, x, mat), x)]
    return all(checks)


def _sym_equal(a, b) -> bool:
    return a.shape == b.shape and all(a[idx] == b[idx] for idx in np.ndindex(a.shape))


def _cmd_sym_pinv(args) -> int:
    a = formats.read_st3(args.A)
    mat = _rational_transform(args.transform, a.shape[2])
    x = symbolic.sym_pinv(a, mat)
    if args.out_x:
        formats.write_st3(x, args.out_x)
    ok = _sym_identities_exact(a, x, mat, "pinv")
    _emit_report({"identities": "exact" if ok else "violated"}, args.out_report)
    return 0


def _cmd_sym_outer(args) -> int:
    a = formats.read_st3(args.A)
    w = formats.read_st3(args.W)
    mat = _rational_transform(args.transform, a.shape[2])
    z = symbolic.sym_outer_inverse(a, w, mat)
    if args.out_x:
        formats.write_st3(z, args.out_x)
    ok = _sym_identities_exact(a, z, mat, "outer")
    _emit_report({"identities": "exact" if ok else "violated"}, args.out_report)
    return 0


def _cmd_compress(args) -> int:
    image = imaging.read_ppm(args.image)
    transform = _numeric_transform(args.transform, args.seed, 3)
    result = imaging.compress(image, args.k, transform)
    if args.out_image:
        imaging.write_ppm(result.reconstructed, args.out_image)
    _emit_report(
        {
            "k": result.k,
            "psnr_db": result.psnr_db,
            "ssim": result.ssim,
            "storage_ratio": result.storage_ratio,
        },
        args.out_report,
    )
    return 0


def _cmd_metrics(args) -> int:
    first = imaging.read_ppm(args.a)
    second = imaging.read_ppm(args.b)
    _emit_report(
        {"psnr_db": imaging.psnr(first, second), "ssim": imaging.ssim(first, second)},
        args.out_report,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mprod",
        description="Transform-product tensor algebra: decompositions, "
                    "generalized inverses, and image compression.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def tensor_command(name, fn, help_text):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--A", required=True, help="input tensor (.t3)")
        cmd.add_argument("--transform", default="identity",
                         help="transform: .mat path, or identity|dct|random")
        cmd.add_argument("--seed", type=int, default=0,
                         help="seed for the random transform")
        cmd.add_argument("--out-report", default=None)
        _add_tolerance_flags(cmd)
        cmd.set_defaults(fn=fn)
        return cmd

    cmd = tensor_command("frd", _cmd_frd, "full-rank decomposition")
    cmd.add_argument("--out-f", default=None)
    cmd.add_argument("--out-g", default=None)

    cmd = tensor_command("qdr", _cmd_qdr, "QDR decomposition")
    cmd.add_argument("--out-q", default=None)
    cmd.add_argument("--out-d", default=None)
    cmd.add_argument("--out-r", default=None)

    cmd = tensor_command("pinv", _cmd_pinv, "Moore-Penrose inverse")
    cmd.add_argument("--method", choices=("frd", "qdr"), default="frd")
    cmd.add_argument("--out-x", default=None)

    cmd = tensor_command("drazin", _cmd_drazin, "Drazin inverse")
    cmd.add_argument("--method", choices=("frd", "qdr"), default="frd")
    cmd.add_argument("--out-x", default=None)

    cmd = tensor_command("outer", _cmd_outer, "outer inverse with prescribed subspaces")
    cmd.add_argument("--W", required=True, help="prescription tensor (.t3)")
    cmd.add_argument("--out-x", default=None)

    cmd = sub.add_parser("sym-pinv", help="exact symbolic Moore-Penrose inverse")
    cmd.add_argument("--A", required=True, help="input tensor (.st3)")
    cmd.add_argument("--transform", default="identity",
                     help="rational .mat path or identity")
    cmd.add_argument("--out-x", default=None)
    cmd.add_argument("--out-report", default=None)
    cmd.set_defaults(fn=_cmd_sym_pinv)

    cmd = sub.add_parser("sym-outer", help="exact symbolic outer inverse")
    cmd.add_argument("--A", required=True, help="input tensor (.st3)")
    cmd.add_argument("--W", required=True, help="prescription tensor (.st3)")
    cmd.add_argument("--transform", default="identity",
                     help="rational .mat path or identity")
    cmd.add_argument("--out-x", default=None)
    cmd.add_argument("--out-report", default=None)
    cmd.set_defaults(fn=_cmd_sym_outer)

    cmd = sub.add_parser("compress", help="truncated-QDR image compression")
    cmd.add_argument("--image", required=True, help="input image (binary PPM)")
    cmd.add_argument("--k", type=int, required=True, help="truncation rank")
    cmd.add_argument("--transform", default="identity",
                     help="transform: .mat path, or identity|dct|random")
    cmd.add_argument("--seed", type=int, default=0)
    cmd.add_argument("--out-image", default=None)
    cmd.add_argument("--out-report", default=None)
    cmd.set_defaults(fn=_cmd_compress)

    cmd = sub.add_parser("metrics", help="PSNR and SSIM between two images")
    cmd.add_argument("--a", required=True)
    cmd.add_argument("--b", required=True)
    cmd.add_argument("--out-report", default=None)
    cmd.set_defaults(fn=_cmd_metrics)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except MProdError as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 3
    except OSError as exc:
        sys.stderr.write(f"{exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
