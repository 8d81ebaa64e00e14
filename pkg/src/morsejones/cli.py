"""Command line entry point.  Every subcommand only parses, calls the library
and prints; exit code 1 for domain errors, 2 for usage errors."""
from __future__ import annotations

import argparse
import sys

from . import diagram as dg
from . import reports
from .evaluator import is_exceptional
from .moves import (CertificateError, MoveError, insert_full_twists, load_certificate,
                    verify_certificate)


def _sign(text: str) -> int:
    if text in ("+", "+1", "1"):
        return 1
    if text in ("-", "-1"):
        return -1
    raise argparse.ArgumentTypeError(f"sign must be + or -, got {text!r}")


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="morsejones", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("validate", help="check a morse v1 file")
    p.add_argument("file")

    p = sub.add_parser("stats", help="girth, complexity, components, writhe")
    p.add_argument("file")

    p = sub.add_parser("eval", help="Jones polynomial, symbolic or at exp(2 pi i / r)")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--r", type=int)
    g.add_argument("--symbolic", action="store_true")

    p = sub.add_parser("twist", help="insert 4r full twists in standard form")
    p.add_argument("file")
    p.add_argument("--gap", type=int, required=True)
    p.add_argument("--strand", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sign", type=_sign, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--out")

    p = sub.add_parser("cert", help="certificate tools")
    csub = p.add_subparsers(dest="cert_cmd", required=True)
    v = csub.add_parser("verify")
    v.add_argument("--base", required=True)
    v.add_argument("--target", required=True)
    v.add_argument("--cert", required=True)

    p = sub.add_parser("gen", help="generate diagrams")
    gsub = p.add_subparsers(dest="family", required=True)
    t = gsub.add_parser("torus")
    t.add_argument("p", type=int)
    t.add_argument("q", type=int)
    t.add_argument("--out")
    u = gsub.add_parser("unlink")
    u.add_argument("m", type=int)
    u.add_argument("--out")
    rnd = gsub.add_parser("random")
    rnd.add_argument("seed")
    rnd.add_argument("g", type=int)
    rnd.add_argument("length", type=int)
    rnd.add_argument("--out")

    p = sub.add_parser("enum", help="enumerate small closed diagrams")
    p.add_argument("--max-events", type=int, required=True)
    p.add_argument("--max-girth", type=int, required=True)

    p = sub.add_parser("tqft", help="SU(2) level r-2 data")
    p.add_argument("--r", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--theta", action="store_true")
    g.add_argument("--srow", action="store_true")
    g.add_argument("--fusion", type=int, metavar="N")
    g.add_argument("--bound", type=int, metavar="G")

    p = sub.add_parser("bench", help="sweep vs state-sum benchmark, CSV output")
    p.add_argument("--family", choices=("torus", "random", "twist"), required=True)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--q", type=int, nargs="+", default=[10, 100, 1000])
    p.add_argument("--girth", type=int, default=12)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--length", type=int, default=40)
    p.add_argument("--r", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bf-limit", type=int, default=25)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", required=True)

    p = sub.add_parser("lemma-report", help="twist invariance of J at exp(2 pi i / r)")
    p.add_argument("--r", type=int, nargs="+", required=True)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    return ap


def _run(args) -> int:
    cmd = args.cmd
    if cmd == "validate":
        D = dg.load(args.file)
        print(f"OK events={len(D.events)} girth={dg.girth(D)}")
    elif cmd == "stats":
        print(reports.format_stats(dg.load(args.file)))
    elif cmd == "eval":
        D = dg.load(args.file)
        if args.symbolic:
            print(reports.format_symbolic(D))
        else:
            if is_exceptional(args.r):
                print(f"warning: r={args.r} is an exceptional root (q^4 = 1 or q^6 = 1)",
                      file=sys.stderr)
            print(reports.format_eval(D, args.r))
    elif cmd == "twist":
        D = insert_full_twists(dg.load(args.file), args.gap, args.strand, args.n,
                               args.sign, args.r)
        _emit(dg.serialize(D), args.out)
    elif cmd == "cert":
        base, target = dg.load(args.base), dg.load(args.target)
        cert = load_certificate(args.cert)
        weight = verify_certificate(base, target, cert)
        print(f"OK weight={reports.fmt_half(weight)}")
    elif cmd == "gen":
        if args.family == "torus":
            D = dg.torus_closure(args.p, args.q)
        elif args.family == "unlink":
            D = dg.unlink(args.m)
        else:
            D = dg.random_diagram(args.seed, args.g, args.length)
        _emit(dg.serialize(D), args.out)
    elif cmd == "enum":
        count = 0
        for D in dg.enumerate_closed(args.max_events, args.max_girth):
            print(D)
            count += 1
        print(f"count={count}")
    elif cmd == "tqft":
        what, arg = None, None
        if args.theta:
            what = "theta"
        elif args.srow:
            what = "srow"
        elif args.fusion is not None:
            what, arg = "fusion", args.fusion
        elif args.bound is not None:
            what, arg = "bound", args.bound
        print(reports.format_tqft(args.r, what, arg))
    elif cmd == "bench":
        if args.family == "torus":
            fam = reports.torus_family(args.p, args.q)
        elif args.family == "random":
            fam = reports.random_family(args.girth, args.count, args.length, args.seed)
        else:
            fam = reports.twist_family(args.r, args.count, args.seed)
        records = reports.run_bench(fam, args.bf_limit, args.workers)
        reports.write_csv(records, args.out)
        print(f"wrote {len(records)} records to {args.out}")
    elif cmd == "lemma-report":
        rows = reports.lemma_report(args.r, args.trials, args.seed)
        print(reports.format_lemma_report(rows))
        if any(row.failures for row in rows):
            return 1
    return 0


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args)
    except (dg.DiagramError, dg.FormatError, dg.LimitExceeded, CertificateError,
            MoveError, ValueError, OSError) as exc:
        if isinstance(exc, CertificateError):
            print(f"REJECT {exc}", file=sys.stderr)
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
