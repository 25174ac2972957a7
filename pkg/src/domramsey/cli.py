"""Command-line interface.

Exit status: 0 verdict reached and consistent, 2 verdict conflicts with the
printed table (or a check failed), 3 undetermined at the cap or budget,
64 usage error, 65 bad input data, 66 missing input file.
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import Optional

from . import proofcheck
from .generate import default_workers
from .graph import Graph6Error, encode_graph6, members, parse_graph6
from .invariants import independence, gamma_value_witness, ir_value_witness
from .search import (Certificate, CertificateError, RamseyVariant, certify_upper, compute_ramsey,
                     find_avoidance, verify_certificate)
from .table import PRINTED, regenerate

EXIT_OK = 0
EXIT_CONFLICT = 2
EXIT_UNDETERMINED = 3
EXIT_USAGE = 64
EXIT_DATAERR = 65
EXIT_NOINPUT = 66


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _variant(spec: str) -> RamseyVariant:
    try:
        return RamseyVariant.parse(spec)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _printed_value(variant: RamseyVariant):
    row = PRINTED.get((variant.m, variant.n))
    if row is None or variant.letter is None:
        return None
    value = row[variant.letter]
    return value if isinstance(value, int) else None


def _fmt(mask: int) -> str:
    return "{" + ",".join(map(str, members(mask))) + "}"


def cmd_params(args) -> int:
    if args.input in (None, "-"):
        lines = sys.stdin.readlines()
    else:
        with open(args.input, encoding="ascii", errors="replace") as fh:
            lines = fh.readlines()
    status = EXIT_OK
    out = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line:
            continue
        try:
            g = parse_graph6(line)
        except Graph6Error as exc:
            print(f"line {lineno}: {exc}", file=sys.stderr)
            status = EXIT_DATAERR
            continue
        b = independence(g.adj)
        gv, gw = gamma_value_witness(g.adj)
        iv, iw = ir_value_witness(g.adj)
        out.append(f"{g.order} {b.value} {gv} {iv} beta={_fmt(b.witness)} Gamma={_fmt(gw)} IR={_fmt(iw)}\n")
    _emit("".join(out), args.out)
    return status


def cmd_compute(args) -> int:
    variant = args.variant
    result = compute_ramsey(variant, args.p_max, prune=not args.no_prune, workers=args.workers)
    if not result.determined:
        print(f"{variant.name}: undetermined at cap {args.p_max}")
        return EXIT_UNDETERMINED
    cert = result.certificate
    if args.out:
        _emit(cert.to_text(), args.out)
    if args.extremal_out:
        _emit("".join(g6 + "\n" for g6 in result.extremal), args.extremal_out)
    print(f"{variant.name} = {result.value}")
    print(f"witness {cert.witness}" + (f" -> {args.out}" if args.out else ""))
    printed = _printed_value(variant)
    if printed is not None and printed != result.value:
        print(f"FLAG: printed table gives {variant.name} = {printed}")
        return EXIT_CONFLICT
    return EXIT_OK


def cmd_certify(args) -> int:
    variant = args.variant
    res = certify_upper(args.p, variant, prune=not args.no_prune, workers=args.workers, budget=args.budget)
    lines = [f"variant = {variant.name}", f"order = {args.p}", f"status = {res.status}",
             f"examined = {res.examined}"]
    lines += [lv.to_text() for lv in res.levels]
    if res.counterexample is not None:
        lines.append(f"counterexample_graph6 = {encode_graph6(res.counterexample.blue)}")
    text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    if args.out:
        print(f"{variant.name} at K_{args.p}: {res.status}")
    if res.status == "budget":
        return EXIT_UNDETERMINED
    printed = _printed_value(variant)
    if printed is not None:
        holds = res.status == "exhausted"
        if holds != (args.p >= printed):
            return EXIT_CONFLICT
    return EXIT_OK


def cmd_find(args) -> int:
    res = find_avoidance(args.p, args.variant, args.budget)
    if res.found:
        _emit(encode_graph6(res.coloring.blue) + "\n", args.out)
        print(f"found after {res.nodes} nodes", file=sys.stderr)
        return EXIT_OK
    if res.complete:
        print(f"no avoidance colouring of K_{args.p} exists ({res.nodes} nodes)")
        return EXIT_OK
    print(f"none within budget ({res.nodes} nodes)")
    return EXIT_UNDETERMINED


def cmd_table(args) -> int:
    report = regenerate(args.max_order, workers=args.workers)
    _emit(report.to_text(), args.out)
    if args.out:
        print(f"{len(report.cells)} cells, {len(report.disagreements)} flagged -> {args.out}")
    return EXIT_CONFLICT if report.disagreements or report.chain_violations else EXIT_OK


def cmd_scan(args) -> int:
    fn = proofcheck.scan_lemma2 if args.which == "lemma2" else proofcheck.scan_theorem3_falsifier
    report = fn(args.n_max, workers=args.workers)
    _emit(report.to_text(), args.out)
    if args.out:
        print(f"{len(report.violators)} violators")
    return EXIT_OK if report.ok else EXIT_CONFLICT


def _load_pattern(spec: Optional[str]):
    if spec is None:
        return None
    if os.path.exists(spec):
        with open(spec, encoding="ascii") as fh:
            spec = fh.read().strip().splitlines()[0]
    return parse_graph6(spec)


def cmd_check_t38(args) -> int:
    if not os.path.exists(args.file):
        print(f"no such file: {args.file}", file=sys.stderr)
        return EXIT_NOINPUT
    try:
        pattern = _load_pattern(args.pattern)
        report = proofcheck.check_extremal_t38(args.file, pattern)
    except (proofcheck.ExtremalInputError, Graph6Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATAERR
    _emit(report.to_text(), args.out)
    return EXIT_OK if report.passed else EXIT_CONFLICT


def cmd_verify(args) -> int:
    if not os.path.exists(args.certificate):
        print(f"no such file: {args.certificate}", file=sys.stderr)
        return EXIT_NOINPUT
    with open(args.certificate, encoding="ascii") as fh:
        try:
            cert = Certificate.from_text(fh.read())
            ok = verify_certificate(cert)
        except (ValueError, CertificateError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_DATAERR
    print(f"{cert.variant.name} = {cert.value}: {'valid' if ok else 'INVALID'}")
    return EXIT_OK if ok else EXIT_CONFLICT


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="domramsey", description="Upper domination / irredundance Ramsey toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, workers=True):
        p.add_argument("--out", help="output file (default: stdout)")
        if workers:
            p.add_argument("--workers", type=_positive, default=None,
                           help="worker processes (default: $DOMRAMSEY_WORKERS or 1)")

    p = sub.add_parser("params", help="beta, Gamma, IR of graph6 lines")
    p.add_argument("input", nargs="?", help="graph6 file, '-' for stdin")
    common(p, workers=False)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("compute", help="compute a Ramsey value with certificate")
    p.add_argument("--variant", type=_variant, required=True)
    p.add_argument("--p-max", type=_positive, required=True)
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--extremal-out", help="write all extremal avoiders as graph6 lines")
    common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("certify", help="exhaust colourings of K_p")
    p.add_argument("--variant", type=_variant, required=True)
    p.add_argument("--p", type=_positive, required=True)
    p.add_argument("--budget", type=_positive)
    p.add_argument("--no-prune", action="store_true")
    common(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("find", help="depth-first search for an avoidance colouring")
    p.add_argument("--variant", type=_variant, required=True)
    p.add_argument("--p", type=_positive, required=True)
    p.add_argument("--budget", type=_positive)
    common(p, workers=False)
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("table", help="regenerate small printed table values")
    p.add_argument("--max-order", type=_positive, default=9)
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("scan", help="exhaustive proof-step scans")
    p.add_argument("which", choices=["lemma2", "theorem3"])
    p.add_argument("--n-max", type=_positive, default=9)
    common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("check-t38", help="verify extremal t(3,8,21) colourings")
    p.add_argument("file")
    p.add_argument("--pattern", help="graph6 string or file with the pattern to search in red")
    common(p, workers=False)
    p.set_defaults(func=cmd_check_t38)

    p = sub.add_parser("verify", help="re-check a certificate file")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "workers", "absent") is None:
        try:
            args.workers = default_workers()
        except ValueError as exc:
            parser.error(str(exc))
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
