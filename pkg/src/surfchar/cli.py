"""Command line entry point.

Exit codes: 0 pass, 1 suite failure or bad records, 2 usage, 3 I/O.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys

from . import harness
from .rotations import InvalidInputError
from .triangles import ClassificationError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

_PI_TERM = re.compile(r"^([+-]?(?:\d+\.?\d*|\.\d+)?)\*?pi(?:/(\d+(?:\.\d*)?))?$")


def parse_angle(text: str) -> float:
    """A float, or a multiple of pi such as ``pi/2``, ``3pi/4`` or ``-2*pi``."""
    s = text.strip().lower()
    try:
        x = float(s)
    except ValueError:
        m = _PI_TERM.match(s)
        if not m:
            raise argparse.ArgumentTypeError(f"not an angle: {text!r}") from None
        coef = m.group(1)
        coef = 1.0 if coef in ("", "+") else -1.0 if coef == "-" else float(coef)
        x = coef * math.pi / (float(m.group(2)) if m.group(2) else 1.0)
    if not math.isfinite(x):
        raise argparse.ArgumentTypeError(f"not a finite angle: {text!r}")
    return x


def parse_triple(text: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated values: {text!r}")
    return tuple(parse_angle(p) for p in parts)


def _count(text):
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return n


def _seed(text):
    n = int(text)
    if not 0 <= n < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return n


def _tol(text):
    x = float(text)
    if not (x > 0 and math.isfinite(x)):
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return x


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="surfchar",
                                description="Genus-2 SO(3)/SU(2) character checks.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, choices=sorted(harness.SUITES))
    v.add_argument("--samples", type=_count, required=True)
    v.add_argument("--seed", type=_seed, default=0)
    v.add_argument("--tol", type=_tol, default=1e-9)
    v.add_argument("--workers", type=_count, default=1)

    s = sub.add_parser("sample", help="write random sample records as JSONL")
    s.add_argument("--space", required=True, choices=sorted(harness.SPACE_TAGS))
    s.add_argument("--flavor", choices=("so3", "su2"), default="so3")
    s.add_argument("--samples", type=_count, required=True)
    s.add_argument("--seed", type=_seed, default=0)
    s.add_argument("--out", required=True)

    o = sub.add_parser("orbit", help="double Klein orbit of a point")
    o.add_argument("--angles", type=parse_triple, required=True)
    o.add_argument("--pasting", type=parse_triple, required=True)
    o.add_argument("--space", choices=("G", "O"), default="G")

    c = sub.add_parser("classify", help="append sw_class to each record")
    c.add_argument("--in", dest="inp", required=True)
    c.add_argument("--out", default="-")
    c.add_argument("--tol", type=_tol, default=1e-6)
    return p


def _emit(lines, out):
    for line in lines:
        out.write(line + "\n")


def cmd_verify(args, out) -> int:
    report = harness.run_suite(args.suite, args.samples, args.seed, args.tol, args.workers)
    _emit([harness.dumps(report.to_dict())], out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_sample(args, out) -> int:
    recs = harness.sample_records(harness.SPACE_TAGS[args.space], args.samples, args.seed,
                                  args.flavor)
    text = "".join(r.to_json() + "\n" for r in recs)
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"surfchar: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_orbit(args, out) -> int:
    try:
        rows = harness.orbit_report(args.angles, args.pasting, args.space)
    except (InvalidInputError, ClassificationError) as exc:
        print(f"surfchar: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit([harness.dumps(r) for r in rows], out)
    return EXIT_OK


def cmd_classify(args, out) -> int:
    try:
        with open(args.inp, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        print(f"surfchar: cannot read {args.inp}: {exc.strerror}", file=sys.stderr)
        return EXIT_IO
    rows, bad = [], 0
    for k, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            d = json.loads(line)
            rec = harness.SampleRecord.from_dict(d)
            d["sw_class"] = harness.classify_record(rec, args.tol)
        except (ValueError, TypeError, KeyError, ArithmeticError) as exc:
            bad += 1
            d = {"line": k, "error": str(exc)}
        rows.append(harness.dumps(d))
    if args.out == "-":
        _emit(rows, out)
    else:
        try:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                _emit(rows, fh)
        except OSError as exc:
            print(f"surfchar: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
            return EXIT_IO
    return EXIT_FAIL if bad else EXIT_OK


COMMANDS = {"verify": cmd_verify, "sample": cmd_sample, "orbit": cmd_orbit,
            "classify": cmd_classify}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    return COMMANDS[args.command](args, out)


if __name__ == "__main__":
    sys.exit(main())
