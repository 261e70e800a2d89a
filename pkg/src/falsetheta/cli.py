"""Command line entry point: ``falsetheta <subcommand> ...``.

Exit codes: 0 all checks pass, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import diagrams as dg
from . import harness
from . import partitions as pt
from . import qseries as qs
from .errors import FalseThetaError


class UsageError(Exception):
    pass


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _family(args: argparse.Namespace) -> pt.Family:
    try:
        if args.family == "fq4":
            return pt.FQ4
        if args.family == "fq3p":
            return pt.FQ3P
        return pt.General(args.m, args.r)
    except FalseThetaError as exc:
        raise UsageError(str(exc))


def _identity(args: argparse.Namespace) -> qs.Identity:
    try:
        return qs.Identity(args.identity, args.m, args.r)
    except FalseThetaError as exc:
        raise UsageError(str(exc))


def _emit(args: argparse.Namespace, text: str, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _emit_report(args: argparse.Namespace, report: harness.VerificationReport) -> int:
    lines = [report.summary()]
    lines += [f"  {f['input']}: expected {f['expected']}, got {f['actual']}" for f in report.failures]
    _emit(args, "\n".join(lines), report.to_dict(timing=False))
    return 0 if report.passed else 1


# --------------------------------------------------------------------------- commands


def _sign_char(p: pt.BoxedPair) -> str:
    return "+" if pt.sign(p) > 0 else "-"


def cmd_expand(args: argparse.Namespace) -> int:
    ident = _identity(args)
    lhs = qs.identity_lhs(ident, args.n)
    rhs = qs.identity_rhs(ident, args.n)
    diff = lhs - rhs
    text = f"identity: {ident}\nLHS: {lhs}\nRHS: {rhs}\nLHS - RHS: {diff}\n"
    payload = {
        "identity": str(ident),
        "lhs": lhs.to_json(),
        "rhs": rhs.to_json(),
        "difference": diff.to_json(),
        "equal": diff.is_zero(),
    }
    _emit(args, text, payload)
    return 0 if diff.is_zero() else 1


def cmd_enumerate(args: argparse.Namespace) -> int:
    family = _family(args)
    general = isinstance(family, pt.General)
    pairs = pt.enumerate_pairs(args.n, family)
    rows = []
    lines = []
    for p in pairs:
        row = {"k": p.k, "parts": str(p.pi), "sign": pt.sign(p), "q_weight": pt.q_weight(p)}
        if general:
            row["z_weight"] = pt.z_weight(p)
            row["class"] = str(dg.classify(p))
        rows.append(row)
        extra = f" z={row['z_weight']} class={row['class']}" if general else ""
        lines.append(f"{str(p):30} sign={_sign_char(p)} q={row['q_weight']}{extra}")
    even, odd = pt.parity_counts(args.n, family)
    signed, predicted = even - odd, pt.predicted_count(args.n, family)
    lines.append(
        f"family={family} n={args.n} pairs={len(pairs)} even={even} odd={odd} "
        f"signed={signed} predicted={predicted}"
    )
    payload = {
        "family": str(family),
        "n": args.n,
        "pairs": rows,
        "even": even,
        "odd": odd,
        "signed_count": signed,
        "predicted_count": predicted,
    }
    _emit(args, "\n".join(lines), payload)
    return 0 if signed == predicted else 1


def cmd_involution(args: argparse.Namespace) -> int:
    family = _family(args)
    if not isinstance(family, pt.General):
        raise UsageError("no sign-reversing involution is known for the fq3p family")
    return _emit_report(args, harness.involution_suite(family, args.n_max))


def cmd_fixed_points(args: argparse.Namespace) -> int:
    family = _family(args)
    listing = harness.fixed_point_listing(family, args.n_max)
    note = "" if isinstance(family, pt.General) else " (conjectured)"
    lines = [f"n={n:<4} {str(p):30} sign={_sign_char(p)}{note}" for n, p in listing]
    lines.append(f"family={family} n_max={args.n_max} fixed_points={len(listing)}")
    payload = {
        "family": str(family),
        "n_max": args.n_max,
        "conjectured": not isinstance(family, pt.General),
        "fixed_points": [{"n": n, "k": p.k, "parts": str(p.pi), "sign": pt.sign(p)} for n, p in listing],
    }
    _emit(args, "\n".join(lines), payload)
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    family = _family(args)
    if not isinstance(family, pt.General):
        raise UsageError("render needs a General family (fq4 or general)")
    try:
        p = pt.BoxedPair(args.k, pt.parse_parts(args.parts), family)
    except (FalseThetaError, ValueError) as exc:
        raise UsageError(f"malformed pair: {exc}")
    text = dg.render(p)
    _emit(args, text, {"k": p.k, "parts": str(p.pi), "family": str(family), "rows": text.splitlines()})
    return 0


def cmd_report_all(args: argparse.Namespace) -> int:
    reports = harness.report_all()
    doc = harness.aggregate(reports)
    with open(args.out, "w") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")
    lines = [r.summary() for r in reports]
    lines.append(f"{doc['status'].upper()}: {sum(r.passed for r in reports)}/{len(reports)} suites; report written to {args.out}")
    _emit(args, "\n".join(lines), harness.aggregate(reports, timing=False))
    return 0 if doc["status"] == "pass" else 1


# --------------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="falsetheta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, family: bool = True) -> None:
        if family:
            p.add_argument("--family", choices=["fq4", "fq3p", "general"], default="fq4")
        p.add_argument("--m", type=int, default=2)
        p.add_argument("--r", type=int, default=1)
        p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("expand", help="expand both sides of an identity to q^N")
    p.add_argument("--identity", choices=["fq4", "fq3", "general"], default="fq4")
    p.add_argument("--n", type=_non_negative, required=True)
    common(p, family=False)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("enumerate", help="list the pairs of weight n with signs")
    p.add_argument("--n", type=_non_negative, required=True)
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("involution", help="check the sign-reversing involution for all n <= n-max")
    p.add_argument("--n-max", type=_non_negative, required=True)
    common(p)
    p.set_defaults(func=cmd_involution)

    p = sub.add_parser("fixed-points", help="list fixed points up to n-max")
    p.add_argument("--n-max", type=_non_negative, required=True)
    common(p)
    p.set_defaults(func=cmd_fixed_points)

    p = sub.add_parser("render", help="draw the boxed m-modular diagram of a pair")
    p.add_argument("--k", type=_non_negative, required=True)
    p.add_argument("--parts", default="", help="comma separated sizes, 'o' suffix = overlined")
    common(p)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("report-all", help="run every acceptance suite and write a JSON report")
    p.add_argument("--out", default="report.json")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_report_all)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
