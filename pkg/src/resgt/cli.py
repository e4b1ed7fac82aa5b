"""Command-line front end.

Subcommands: construct, verify, encode, decode, simulate, info.
Exit codes: 0 success; 1 a checked property fails (or certification
fails); 2 usage, format, or dimension errors.  Data goes to stdout,
diagnostics to stderr, so encode | decode pipelines compose.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import conditions, geometry, simulation
from .boolsemi import (
    BoolMatrix,
    FormatError,
    matrix_from_text,
    matrix_to_text,
    vector_from_text,
    vector_to_text,
)
from .conditions import CertificationFailed, equivalence_reports, report_to_text
from .geometry import GeometryError, pls_from_text, pls_to_text
from .residuation import (
    SizeGuardExceeded,
    TestingScheme,
    decode,
    encode,
    scheme_from_text,
    scheme_to_text,
)


def _default_workers() -> int:
    return int(os.environ.get("RESGT_WORKERS", "1"))


def _read_matrix(path: str) -> BoolMatrix:
    return matrix_from_text(Path(path).read_text())


def _read_vector(args: argparse.Namespace):
    text = Path(args.input).read_text() if args.input else sys.stdin.read()
    return vector_from_text(text)


def cmd_construct(args: argparse.Namespace) -> int:
    workers = args.workers or _default_workers()
    if args.kind == "gq-w":
        gq = geometry.construct_symplectic(_as_int(args.param, "q"))
        pls, source = gq.pls, geometry.scheme_source(gq)
        default_prefix = f"w{gq.s}"
    elif args.kind == "grid":
        gq = geometry.construct_grid(_as_int(args.param, "s"))
        pls, source = gq.pls, geometry.scheme_source(gq)
        default_prefix = f"grid{gq.s}"
    else:
        pls = pls_from_text(Path(args.param).read_text())
        source = "file"
        default_prefix = Path(args.param).stem
    try:
        scheme = geometry.to_testing_scheme(pls, verify=True, workers=workers)
    except CertificationFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    prefix = args.out or default_prefix
    Path(f"{prefix}.pls").write_text(pls_to_text(pls))
    Path(f"{prefix}.mat").write_text(matrix_to_text(scheme.matrix))
    Path(f"{prefix}.scheme").write_text(scheme_to_text(scheme, source=source))
    print(f"n={scheme.n} k={scheme.k} d={scheme.certified_d}")
    return 0


def _as_int(value: str, name: str) -> int:
    if not value.lstrip("-").isdigit():
        raise ValueError(f"{name} must be an integer, got {value!r}")
    return int(value)


def cmd_verify(args: argparse.Namespace) -> int:
    H = _read_matrix(args.matrix)
    workers = args.workers or _default_workers()
    if args.max_d:
        print(conditions.max_d(H, workers=workers))
        return 0
    if args.equiv is not None:
        reports = equivalence_reports(H, args.equiv, workers=workers)
        for name in sorted(reports):
            sys.stdout.write(report_to_text(reports[name]))
        verdicts = {r.holds for r in reports.values()}
        agree = len(verdicts) == 1
        print(f"agreement={'true' if agree else 'false'}")
        return 0 if agree else 1
    if args.dis is not None:
        report = conditions.check_d_dis(H, args.dis, workers=workers)
    else:
        report = conditions.check_d_rev_via_ball(H, args.rev, workers=workers)
    sys.stdout.write(report_to_text(report))
    return 0 if report.holds else 1


def cmd_encode(args: argparse.Namespace) -> int:
    H = _read_matrix(args.matrix)
    x = _read_vector(args)
    sys.stdout.write(vector_to_text(encode(TestingScheme(H), x)))
    return 0


def cmd_decode(args: argparse.Namespace) -> int:
    H = _read_matrix(args.matrix)
    y = _read_vector(args)
    sys.stdout.write(vector_to_text(decode(TestingScheme(H), y)))
    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    scheme, _source = scheme_from_text(Path(args.scheme).read_text())
    if args.fixed_weight is not None:
        model = simulation.PatternModel.fixed_weight(args.fixed_weight, seed=args.seed)
    else:
        model = simulation.PatternModel.bernoulli(args.bernoulli, seed=args.seed)
    workers = args.workers or _default_workers()
    stats, records = simulation.run_campaign(scheme, model, args.trials, workers=workers)
    Path(args.out).write_text(simulation.campaign_csv(records))
    text = simulation.stats_text(stats)
    if args.stats:
        Path(args.stats).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_info(args: argparse.Namespace) -> int:
    text = Path(args.path).read_text()
    kind, payload = _sniff(text)
    print(f"kind={kind}")
    if kind == "pls":
        pls = payload
        gq = geometry.is_generalized_quadrangle(pls)
        print(f"points={pls.v}")
        print(f"lines={pls.b}")
        print(f"order=({pls.s},{pls.t})")
        print(f"gq={'true' if gq.holds else 'false'}")
        return 0
    if kind == "scheme":
        scheme, source = payload
        H = scheme.matrix
        print(f"certified_d={scheme.certified_d}")
        print(f"source={source}")
    else:
        H = payload
    row_w = [m.bit_count() for m in H.row_masks]
    col_w = [m.bit_count() for m in H.col_masks]
    print(f"samples={H.rows}")
    print(f"tests={H.cols}")
    print(f"row_weight_min={min(row_w)}")
    print(f"row_weight_max={max(row_w)}")
    print(f"col_weight_min={min(col_w)}")
    print(f"col_weight_max={max(col_w)}")
    print(f"zero_rows={len(H.zero_rows())}")
    return 0


def _sniff(text: str):
    try:
        return "matrix", matrix_from_text(text)
    except FormatError:
        pass
    try:
        return "scheme", scheme_from_text(text)
    except FormatError:
        pass
    try:
        return "pls", pls_from_text(text)
    except (FormatError, GeometryError):
        raise FormatError("file is not a matrix, scheme, or incidence file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="resgt",
        description="Group testing over the Boolean semifield: construct, "
        "verify, encode/decode, and simulate testing schemes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a testing scheme from a finite geometry")
    p.add_argument("kind", choices=["gq-w", "grid", "from-pls"],
                   help="symplectic quadrangle W(q), (s+1)x(s+1) grid, or incidence file")
    p.add_argument("param", help="q for gq-w, s for grid, or a .pls path for from-pls")
    p.add_argument("--out", help="output prefix for the .pls/.mat/.scheme files")
    p.add_argument("--workers", type=int, help="processes for the certification sweep")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check disjunctness/reversibility of a matrix")
    p.add_argument("matrix", help="matrix file")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--dis", type=int, metavar="D", help="check d-disjunctness at D")
    mode.add_argument("--rev", type=int, metavar="D", help="check d-reversibility at D (ball sweep)")
    mode.add_argument("--max-d", action="store_true", help="print the largest certified d")
    mode.add_argument("--equiv", type=int, metavar="D",
                      help="run all applicable checkers at D and report agreement")
    p.add_argument("--workers", type=int, help="processes for subset/ball sweeps")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("encode", help="syndrome of a sample vector (stdin -> stdout)")
    p.add_argument("matrix", help="matrix file")
    p.add_argument("--in", dest="input", help="read the vector from a file instead of stdin")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decoded sample vector of a syndrome (stdin -> stdout)")
    p.add_argument("matrix", help="matrix file")
    p.add_argument("--in", dest="input", help="read the vector from a file instead of stdin")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="run a seeded campaign and write a CSV log")
    p.add_argument("scheme", help="scheme descriptor file")
    model = p.add_mutually_exclusive_group(required=True)
    model.add_argument("--fixed-weight", type=int, metavar="W",
                       help="draw patterns of exactly W positives")
    model.add_argument("--bernoulli", type=float, metavar="P",
                       help="draw each coordinate positive with probability P")
    p.add_argument("--trials", type=int, required=True, help="number of trials (>= 1)")
    p.add_argument("--seed", type=int, default=0, help="master seed")
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--stats", help="stats output path (default: stdout)")
    p.add_argument("--workers", type=int, help="processes for the trial sweep")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("info", help="print facts about a matrix/scheme/incidence file")
    p.add_argument("path")
    p.set_defaults(func=cmd_info)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (FormatError, GeometryError, ValueError, SizeGuardExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
