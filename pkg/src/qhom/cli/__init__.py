"""Command line entry point: ``qhom run | verify-paper | fmt | probe``."""

from __future__ import annotations

import argparse
import sys

from .. import serialize
from ..errors import ParseError
from .parser import format_script, parse
from .runner import Options, Runner, default_threads


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(path: str | None, obj) -> None:
    if path is None:
        return
    if path == "-":
        sys.stdout.write(serialize.dumps(obj))
    else:
        serialize.write(path, obj)


def _text_stream(args):
    # keep stdout clean for JSON when it goes there
    return sys.stderr if getattr(args, "json", None) == "-" else sys.stdout


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", metavar="PATH", help="write JSON output to PATH ('-' for stdout)")
    p.add_argument("--seed", type=int, default=0, help="seed for isomorphism searches")
    p.add_argument("--degree-bound", type=int, default=6)
    p.add_argument("--length-bound", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qhom", description="Quasi-projective and quasi-injective "
                                 "resolutions over graded quotient rings.")
    sub = ap.add_subparsers(dest="command", required=True)
    p = sub.add_parser("run", help="execute a script")
    p.add_argument("script")
    _common(p)
    p = sub.add_parser("verify-paper", help="run the theorem harness on the shipped corpus")
    _common(p)
    p = sub.add_parser("fmt", help="print a script in canonical form")
    p.add_argument("script")
    p.add_argument("--check", action="store_true", help="exit 1 if the file is not canonical")
    p = sub.add_parser("probe", help="search small examples for open questions (asserts nothing)")
    _common(p)
    return ap


def cmd_run(args) -> int:
    out = _text_stream(args)
    try:
        script = parse(_read(args.script))
    except ParseError as exc:
        print(f"{args.script}:{exc}", file=sys.stderr)
        return 2
    opts = Options(args.seed, args.degree_bound, args.length_bound, default_threads())
    outcomes = Runner(opts).run(script)
    failed = 0
    records = []
    for o in outcomes:
        for line in o.text:
            print(line, file=out)
        if o.error:
            failed += 1
            print(f"error: {o.error}", file=sys.stderr)
        records.append({"line": o.line, "statement": o.statement, "result": o.record,
                        "error": o.error})
    _emit(args.json, serialize.envelope(records, seed=args.seed, bounds=opts.bounds(),
                                        command="run"))
    return 1 if failed else 0


def cmd_verify(args) -> int:
    from ..harness import verify_paper

    out = _text_stream(args)
    report = verify_paper(args.seed, default_threads())
    print(f"{'theorem':<28} {'checked':>8} {'inconcl.':>8} {'violations':>10}", file=out)
    for t in report["theorems"]:
        print(f"{t['theorem-id']:<28} {t['instances-checked']:>8} {t['inconclusive']:>8} "
              f"{len(t['violations']):>10}", file=out)
    print(file=out)
    print(f"{'ring':<24} {'dim':>3} {'depth':>5} {'CM':>5} {'Gor':>5}", file=out)
    for r in report["rings"]:
        print(f"{r['ring']:<24} {r['dim']:>3} {r['depth']:>5} {str(r['cohen-macaulay']):>5} "
              f"{str(r['gorenstein']):>5}", file=out)
    bounds = {"degree": args.degree_bound, "length": args.length_bound}
    _emit(args.json, serialize.envelope(report, seed=args.seed, bounds=bounds,
                                        command="verify-paper"))
    print(f"\n{report['violations']} violation(s)", file=out)
    return 0 if report["violations"] == 0 else 1


def cmd_fmt(args) -> int:
    text = _read(args.script)
    try:
        out = format_script(text)
    except ParseError as exc:
        print(f"{args.script}:{exc}", file=sys.stderr)
        return 2
    if args.check:
        return 0 if out == text else 1
    sys.stdout.write(out)
    return 0


def cmd_probe(args) -> int:
    from ..probe import run_probes

    out = _text_stream(args)
    report = run_probes(args.seed)
    for row in report["hypersurface-descent"]:
        print(f"{row['ambient']:<22} f = {row['f']:<5} {row['module']:<6} "
              f"qpd_Q {row['qpd_Q']:<8} qpd_R {row['qpd_R']:<8} "
              f"qid_Q {row['qid_Q']:<8} qid_R {row['qid_R']}", file=out)
    bounds = {"degree": args.degree_bound, "length": args.length_bound}
    _emit(args.json, serialize.envelope(report, seed=args.seed, bounds=bounds, command="probe"))
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"run": cmd_run, "verify-paper": cmd_verify, "fmt": cmd_fmt,
               "probe": cmd_probe}[args.command]
    return handler(args)
