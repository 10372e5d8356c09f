"""Command-line surface: verify | roots | constants | norm | landscape.

Exit codes: 0 success (verify: all checks passed), 1 check failure,
2 configuration or I/O error.  Identical flags produce byte-identical
output files.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .constants import c_n
from .holder import f
from .optimizer import ConfigError, global_sup, _piece_bounds
from .report import (
    report_to_json,
    report_to_markdown,
    run_verification,
    supremum_dict,
)
from .roots import find_alpha

import numpy as np


def _thread_cap() -> int:
    """Validate HOLDER_CERT_THREADS (a cap on parallelism; we stay within
    any positive cap by running sequentially)."""
    raw = os.environ.get("HOLDER_CERT_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
    except ValueError:
        raise ConfigError(f"HOLDER_CERT_THREADS must be a positive int, got {raw!r}")
    if cap < 1:
        raise ConfigError(f"HOLDER_CERT_THREADS must be a positive int, got {raw!r}")
    return cap


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_verification(n_max=args.n_max)
    report.config["format"] = args.format
    report.config["strict"] = args.strict
    text = report_to_json(report) if args.format == "json" else report_to_markdown(report)
    _emit(text, args.out)
    if not report.ok:
        return 1
    if args.strict and not report.strict_ok:
        return 1
    return 0


def cmd_roots(args: argparse.Namespace) -> int:
    lines = ["n alpha theta bracket_width residual"]
    for n in range(1, args.n + 1):
        cert = find_alpha(n)
        lines.append(
            f"{n} {cert.alpha!r} {cert.theta!r} {cert.bracket.width!r} {cert.residual!r}"
        )
        if cert.residual > args.tol:
            print(f"residual for n={n} exceeds --tol {args.tol:g}", file=sys.stderr)
            _emit("\n".join(lines) + "\n", args.out)
            return 1
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_constants(args: argparse.Namespace) -> int:
    lines = ["n alpha_n alpha_np1 delta i_closed i_quad g f_factor c"]
    for n in range(1, args.n + 1):
        r = c_n(n)
        lines.append(
            f"{r.n} {r.alpha_n!r} {r.alpha_np1!r} {r.delta!r} {r.i_closed!r} "
            f"{r.i_quad!r} {r.g!r} {r.f_factor!r} {r.c!r}"
        )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_norm(args: argparse.Namespace) -> int:
    rep = global_sup(
        n_intervals=args.n,
        x_cap=args.x_cap,
        grid_resolution=args.resolution,
        alpha_exp=args.alpha,
    )
    _emit(json.dumps(supremum_dict(rep), indent=2) + "\n", args.out)
    return 0


def cmd_landscape(args: argparse.Namespace) -> int:
    lo, hi = _piece_bounds(args.n, args.x_cap)
    xs = np.linspace(lo, hi, args.resolution)
    rows = ["x,y,q"]
    for x in xs:
        fx = f(float(x))
        for y in xs:
            if x == y:
                q = 0.0
            else:
                q = abs(f(float(y)) - fx) / abs(float(y) - float(x)) ** 0.5
            rows.append(f"{float(x)!r},{float(y)!r},{q!r}")
    _emit("\n".join(rows) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="holdercert",
        description="Certified verification of the sqrt(2|x-y|) bound for x sin(1/x) "
        "and numerical estimation of its Holder-1/2 seminorm.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the full inequality-certification campaign")
    p.add_argument("--n-max", type=int, default=200)
    p.add_argument("--format", choices=("json", "md"), default="json")
    p.add_argument("--out", default=None)
    p.add_argument("--strict", action="store_true", help="undecided counts as failure")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("roots", help="certified roots alpha_n and angles theta_n")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--tol", type=float, default=1e-10, help="max acceptable tangent residual")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("constants", help="per-interval constants table")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("norm", help="estimate the global quotient supremum")
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--n", type=int, default=200)
    p.add_argument("--x-cap", type=float, default=8.0)
    p.add_argument("--resolution", type=int, default=512)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("landscape", help="CSV quotient landscape over one piece")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--resolution", type=int, default=64)
    p.add_argument("--x-cap", type=float, default=8.0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_landscape)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _thread_cap()
        return args.func(args)
    except (ConfigError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
