"""Command-line interface: one analysis per subcommand, JSON in and out.

Exit codes: 0 success, 1 input or usage error, 2 inverse requested of a
non-invertible filter, 3 a verification or translation-invariance check
failed. Identical invocations produce byte-identical output; reports carry
the tool version and an "exact" flag that is false whenever results come
from a grid-sampled symbol rather than a full finite dual group.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import __version__
from .convop import FilterMatrix, apply, adjoint, compose, extract_filter, symbol
from .errors import GConvError, NotInvertibleError, SchemaError
from .fourier import grid_symbol
from .oracle import DENSE_DIM_CAP, dense_singular_values, dense_synthesis, densify
from .riesz import gram, riesz_analysis
from .serialization import (
    SCHEMA_VERSION,
    dense_from_jsonable,
    dumps,
    filter_from_jsonable,
    filter_to_jsonable,
    load_path,
    riesz_report_to_jsonable,
    sniff_kind,
    spectral_report_to_jsonable,
    system_from_jsonable,
    taps_from_jsonable,
    variance_report_to_jsonable,
    vector_from_jsonable,
    vector_to_jsonable,
)
from .spectral import (
    hermitian_extremal_eigs,
    inverse_filter,
    inverse_norm,
    operator_norm,
    spectral_report,
)

ENV_DET_TOL = "GCONV_DET_TOL"

VERIFY_TOL = 1e-9


def _emit(args, doc: dict) -> None:
    text = dumps(doc)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    if not args.quiet:
        sys.stdout.write(text)


def _envelope(command: str, payload: dict) -> dict:
    doc = {"schema": SCHEMA_VERSION, "version": __version__, "command": command}
    doc.update(payload)
    return doc


def _det_tol(args) -> float | None:
    value = args.det_tol
    if value is None:
        env = os.environ.get(ENV_DET_TOL)
        if env is not None:
            try:
                value = float(env)
            except ValueError:
                raise GConvError(f"{ENV_DET_TOL}={env!r} is not a number")
    if value is not None and not value > 0:
        raise GConvError(f"det tolerance must be positive, got {value}")
    return value


def _load_symbol(args):
    """Build the symbol for `norm`: exact from a filter file, sampled from
    an integer-lattice taps file (which requires --grid)."""
    doc = load_path(args.input)
    kind = sniff_kind(doc)
    if kind == "filter":
        if args.grid is not None:
            raise GConvError("--grid applies only to integer-lattice taps input")
        return symbol(filter_from_jsonable(doc))
    if kind == "taps":
        if args.grid is None:
            raise GConvError("taps input needs --grid to choose the sampling density")
        entries, dim = taps_from_jsonable(doc)
        return grid_symbol(entries, args.grid, dim=dim)
    raise SchemaError(f"{args.input}: expected a filter or taps document, found '{kind}'")


def _side_outputs(args, sym, gram_mode: bool = False) -> None:
    if not (getattr(args, "plot", None) or getattr(args, "csv", None)):
        return
    from . import report as report_mod

    if gram_mode:
        table = report_mod.gram_profile(sym)
    else:
        table = report_mod.symbol_profile(sym)
    if args.csv:
        report_mod.write_csv(table, args.csv)
    if args.plot:
        report_mod.render_figure(table, args.plot)


def cmd_norm(args) -> int:
    sym = _load_symbol(args)
    rep = spectral_report(sym, _det_tol(args))
    _emit(args, _envelope("norm", spectral_report_to_jsonable(rep)))
    _side_outputs(args, sym)
    return 0


def cmd_invert(args) -> int:
    filt = filter_from_jsonable(load_path(args.input))
    try:
        inv = inverse_filter(filt, _det_tol(args))
    except NotInvertibleError as exc:
        _emit(args, _envelope("invert", {
            "exact": True,
            "invertible": False,
            "min_det_abs": exc.min_det_abs,
            "argmin_xi": exc.argmin_xi,
            "det_tolerance": exc.tolerance,
        }))
        return 2
    _emit(args, filter_to_jsonable(inv))
    return 0


def cmd_compose(args) -> int:
    outer = filter_from_jsonable(load_path(args.outer))
    inner = filter_from_jsonable(load_path(args.inner))
    _emit(args, filter_to_jsonable(compose(outer, inner)))
    return 0


def cmd_adjoint(args) -> int:
    filt = filter_from_jsonable(load_path(args.input))
    _emit(args, filter_to_jsonable(adjoint(filt)))
    return 0


def cmd_apply(args) -> int:
    filt = filter_from_jsonable(load_path(args.filter))
    vec = vector_from_jsonable(load_path(args.signal))
    _emit(args, vector_to_jsonable(apply(filt, vec)))
    return 0


def cmd_riesz(args) -> int:
    system = system_from_jsonable(load_path(args.input))
    rep = riesz_analysis(system, _det_tol(args))
    _emit(args, _envelope("riesz", riesz_report_to_jsonable(rep)))
    if args.plot or args.csv:
        _side_outputs(args, gram(system).gram_symbol, gram_mode=True)
    return 0


def cmd_extract(args) -> int:
    matrix, spec, rows, cols = dense_from_jsonable(load_path(args.input))
    result = extract_filter(matrix, spec, rows, cols)
    if isinstance(result, FilterMatrix):
        _emit(args, filter_to_jsonable(result))
        return 0
    _emit(args, _envelope("extract", variance_report_to_jsonable(result)))
    return 3


def _verify_filter(filt: FilterMatrix) -> list[dict]:
    if filt.spec.cardinality * max(filt.rows, filt.cols) > DENSE_DIM_CAP:
        raise GConvError(
            f"size cap: |G| * max(rows, cols) must stay within {DENSE_DIM_CAP}"
        )
    checks = []
    dense = densify(filt)
    sigma = dense_singular_values(dense)
    norm, _ = operator_norm(symbol(filt))
    scale = max(1.0, float(sigma[0]))
    checks.append({
        "name": "operator_norm_vs_dense",
        "deviation": abs(norm - float(sigma[0])) / scale,
        "tolerance": VERIFY_TOL,
    })
    recovered = extract_filter(dense.matrix, filt.spec, filt.rows, filt.cols)
    if isinstance(recovered, FilterMatrix):
        dev = float(np.abs(recovered.taps - filt.taps).max())
    else:
        dev = float("inf")
    checks.append({
        "name": "filter_recovery_from_dense",
        "deviation": dev / max(1.0, float(np.abs(filt.taps).max())),
        "tolerance": VERIFY_TOL,
    })
    if filt.rows == filt.cols:
        from .jacobi import singular_values as sv_batch

        per_xi = np.sort(sv_batch(symbol(filt).data).reshape(-1))
        dense_sorted = np.sort(sigma)
        checks.append({
            "name": "singular_multiset_vs_dense",
            "deviation": float(np.abs(per_xi - dense_sorted).max()) / scale,
            "tolerance": VERIFY_TOL,
        })
        try:
            inv = inverse_norm(symbol(filt))
            checks.append({
                "name": "inverse_norm_vs_dense",
                "deviation": abs(inv - 1.0 / float(sigma[-1])) / max(1.0, inv),
                "tolerance": VERIFY_TOL,
            })
        except NotInvertibleError:
            pass
    return checks


def _verify_system(system) -> list[dict]:
    rep = riesz_analysis(system)
    ext = hermitian_extremal_eigs(gram(system).gram_symbol.data)
    S = dense_synthesis(system)
    sv = np.linalg.svd(S, compute_uv=False)
    width = system.n_generators * system.acting.cardinality
    squared = np.zeros(width)
    squared[:sv.size] = sv ** 2
    top, bottom = float(squared.max()), float(squared.min())
    scale = max(1.0, top)
    return [
        {
            "name": "bessel_bound_vs_dense_synthesis",
            "deviation": abs(rep.bessel_bound - top) / scale,
            "tolerance": VERIFY_TOL,
        },
        {
            "name": "smallest_gram_eigenvalue_vs_dense_synthesis",
            "deviation": abs(ext.min_value - bottom) / scale,
            "tolerance": VERIFY_TOL,
        },
    ]


def cmd_verify(args) -> int:
    doc = load_path(args.input)
    kind = sniff_kind(doc)
    if kind == "filter":
        checks = _verify_filter(filter_from_jsonable(doc))
    elif kind == "system":
        checks = _verify_system(system_from_jsonable(doc))
    else:
        raise SchemaError(f"{args.input}: verify expects a filter or system, found '{kind}'")
    passed = all(c["deviation"] <= c["tolerance"] for c in checks)
    for c in checks:
        c["passed"] = bool(c["deviation"] <= c["tolerance"])
    _emit(args, _envelope("verify", {
        "exact": True,
        "passed": passed,
        "max_deviation": max(c["deviation"] for c in checks),
        "checks": checks,
    }))
    return 0 if passed else 3


def _add_common(sub, det_tol=False, plot=False):
    sub.add_argument("--out", metavar="PATH", help="also write the output to this file")
    sub.add_argument("--quiet", action="store_true", help="suppress standard output")
    if det_tol:
        sub.add_argument("--det-tol", type=float, metavar="T",
                         help="absolute determinant threshold for invertibility "
                              f"(default scale-aware; env {ENV_DET_TOL})")
    if plot:
        sub.add_argument("--plot", metavar="PNG",
                         help="render the per-frequency profile to a figure file")
        sub.add_argument("--csv", metavar="CSV",
                         help="write the per-frequency profile as CSV")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gconv",
        description="Analyze translation-invariant filters on finite abelian groups "
                    "and translate systems generated by group actions.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("norm", help="operator norm, entrywise-sup bound, and "
                                    "invertibility margin of a filter")
    p.add_argument("input", help="filter JSON, or integer-lattice taps JSON with --grid")
    p.add_argument("--grid", type=int, metavar="K",
                   help="sample an integer-lattice symbol on K points per dimension "
                        "(results carry exact=false)")
    _add_common(p, det_tol=True, plot=True)
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("invert", help="inverse filter, or the frequency that "
                                      "blocks inversion (exit 2)")
    p.add_argument("input", help="square filter JSON")
    _add_common(p, det_tol=True)
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("compose", help="filter of the composition outer after inner")
    p.add_argument("outer", help="outer filter JSON")
    p.add_argument("inner", help="inner filter JSON")
    _add_common(p)
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("adjoint", help="filter of the Hilbert-adjoint operator")
    p.add_argument("input", help="filter JSON")
    _add_common(p)
    p.set_defaults(func=cmd_adjoint)

    p = sub.add_parser("apply", help="convolve a filter with a vector signal")
    p.add_argument("filter", help="filter JSON")
    p.add_argument("signal", help="vector signal JSON")
    _add_common(p)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("riesz", help="optimal Bessel/Riesz bounds of a generator system")
    p.add_argument("input", help="generator system JSON")
    _add_common(p, det_tol=True, plot=True)
    p.set_defaults(func=cmd_riesz)

    p = sub.add_parser("verify", help="cross-check fast-path results against the "
                                      "dense realization (exit 3 on mismatch)")
    p.add_argument("input", help="filter or generator system JSON")
    _add_common(p, det_tol=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("extract", help="recover a filter from a dense matrix, or "
                                       "certify it is not translation invariant (exit 3)")
    p.add_argument("input", help="dense operator JSON")
    _add_common(p)
    p.set_defaults(func=cmd_extract)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotInvertibleError as exc:
        print(f"gconv: {exc}", file=sys.stderr)
        return 2
    except GConvError as exc:
        print(f"gconv: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"gconv: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
