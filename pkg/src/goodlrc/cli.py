"""Command-line front end.

Exit codes: 0 when every selected check verifies, 1 on operational errors
(bad arguments, library errors, budget overruns), 2 when a check is falsified.
All files are UTF-8 JSON; text output is for display only.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import analysis, golden
from .errors import LrcError
from .gf import field_create
from .goodpoly import (
    GoodPolyCert,
    cert_from_poly,
    construct_additive,
    construct_dickson,
    construct_multiplicative,
    construct_union_cosets,
    construct_cubic_shifted,
    verify_cert,
)
from .lrc import VARIANTS, CodeInstance, construct
from .poly import Poly

EXIT_OK, EXIT_ERROR, EXIT_FALSIFIED = 0, 1, 2
FAMILIES = ("mult", "add", "union", "dickson", "cubic", "user")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors, which this tool reserves for
    # falsified claims.
    def error(self, message):
        raise UsageError(message)


def _count(text):
    """Positive integer, accepting scientific notation such as 5e8."""
    try:
        value = float(text) if any(c in text for c in ".eE") else int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if value != int(value) or value <= 0:
        raise argparse.ArgumentTypeError(f"must be a positive integer: {text!r}")
    return int(value)


def _codes(text):
    """Comma-separated list of integer element codes."""
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from None


def default_budget():
    env = os.environ.get("LRC_BUDGET")
    if env is None:
        return analysis.DEFAULT_BUDGET
    try:
        return _count(env)
    except argparse.ArgumentTypeError as exc:
        raise UsageError(f"LRC_BUDGET: {exc}") from None


def _read_json(path):
    if path == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def dumps(obj):
    return json.dumps(obj, indent=2) + "\n"


class Output:
    def __init__(self, args):
        self.format = args.format
        self.quiet = args.quiet

    def emit(self, obj, text):
        if self.quiet:
            return
        sys.stdout.write(dumps(obj) if self.format == "json" else text.rstrip("\n") + "\n")


def _write(path, obj):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))


# -- commands ---------------------------------------------------------------------

def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join("--" + n.replace("_", "-") for n in missing)
        raise UsageError(f"family {args.family} requires {flags}")


def build_cert(args) -> GoodPolyCert:
    F = field_create(args.p, args.s, args.modulus)
    fam = args.family
    if fam == "mult":
        _need(args, "m")
        return construct_multiplicative(F, args.m, args.g1_degree)
    if fam == "add":
        _need(args, "basis")
        return construct_additive(F, args.basis, args.g1_degree)
    if fam == "union":
        _need(args, "l", "basis", "m")
        return construct_union_cosets(F, args.l, args.basis, args.m)
    if fam == "dickson":
        _need(args, "m", "a")
        return construct_dickson(F, args.m, args.a)
    if fam == "cubic":
        _need(args, "a1")
        return construct_cubic_shifted(F, args.a1)
    _need(args, "poly")
    g = Poly(F, args.poly)
    split = None
    if args.g1 is not None:
        g1 = Poly(F, args.g1)
        split = (g1, g // g1)
    return cert_from_poly(g, split)


def cmd_goodpoly(args, out):
    cert = build_cert(args)
    report = verify_cert(cert)
    data = cert.to_json()
    if args.out:
        _write(args.out, data)
    F = cert.field
    lines = [f"g = {cert.g.format()}  over GF({F.q})",
             f"L = {cert.L} sets of size {cert.degree}"]
    for A, c in zip(cert.sets, cert.constants):
        lines.append(f"  g = {F.format(c)} on {list(A)}")
    lines.append(f"roots = {list(cert.roots)}")
    if cert.split is not None:
        lines.append(f"split: g1 = {cert.g1.format()}, g2 = {cert.g2.format()}")
    lines.append("certificate verifies" if report.ok else f"certificate FAILS: {report.violation}")
    out.emit(data if not args.out else {"out": args.out, "L": cert.L, "verified": report.ok},
             "\n".join(lines))
    return EXIT_OK if report.ok else EXIT_FALSIFIED


def cmd_construct(args, out):
    cert = GoodPolyCert.from_json(_read_json(args.cert))
    inst = construct(cert.field, args.variant, args.r, args.delta, args.k, cert, args.L)
    data = inst.to_json()
    if args.out:
        _write(args.out, data)
    brief = {"n": inst.n, "k": inst.k, "claimed_d": inst.claimed_d,
             "optimality": data["optimality"], "summary": inst.summary()}
    text = inst.summary()
    if args.matrix:
        text += "\n" + inst.format_matrix()
    out.emit(brief if args.out else data, text)
    return EXIT_OK


def _instance(path):
    return CodeInstance.from_json(_read_json(path))


def cmd_encode(args, out):
    inst = _instance(args.instance)
    word = inst.encode(_read_json(args.message))
    if args.out:
        _write(args.out, word)
    out.emit(word, " ".join(map(str, word)))
    return EXIT_OK


def cmd_repair(args, out):
    inst = _instance(args.instance)
    word = analysis.repair(inst, _read_json(args.codeword))
    if args.out:
        _write(args.out, word)
    out.emit(word, " ".join(map(str, word)))
    return EXIT_OK


def cmd_analyze(args, out):
    inst = _instance(args.instance)
    claimed = inst.claimed_d
    report = {"summary": inst.summary()}
    lines = [inst.summary()]
    verdicts = []
    if not (args.bounds or args.locality or args.distance):
        args.bounds = True

    if args.bounds:
        b = inst.bounds()
        ok = b["claimed"] == b["improved"] and b["improved"] <= b["singleton"]
        report["bounds"] = dict(b, ok=ok)
        lines.append(f"bounds: singleton={b['singleton']} improved={b['improved']} "
                     f"claimed={b['claimed']} {'pass' if ok else 'FAIL'}")
        verdicts.append(ok)

    if args.distance:
        budget = args.budget or default_budget()
        if args.distance == "exhaustive":
            rep = analysis.min_distance_exhaustive(inst, budget, args.jobs)
            ok = rep.value == claimed
        elif args.distance == "witness":
            rep = analysis.witness_low_weight(inst)
            ok = rep.value == claimed
        else:
            rep = analysis.min_distance_sampled(inst, args.trials, args.seed)
            ok = rep.value >= claimed
        report["distance"] = dict(rep.to_json(), claimed=claimed, ok=ok)
        relation = ">=" if args.distance == "sampled" else "="
        lines.append(f"distance ({rep.mode}): {rep.value} over {rep.codewords_checked} "
                     f"codewords, claimed {claimed}: {'pass' if ok else 'FAIL'} "
                     f"(need {relation} claimed)")
        if rep.note:
            lines.append(f"  note: {rep.note}")
        verdicts.append(ok)

    if args.locality:
        loc = analysis.locality_check(inst)
        report["locality"] = loc.to_json()
        lines.append(f"locality: {len(loc.groups)} groups, {'pass' if loc.ok else 'FAIL'}")
        for g in loc.groups:
            if not g["ok"]:
                lines.append(f"  group {g['group']} fails on rows {g['bad_rows']}")
        verdicts.append(loc.ok)

    report["ok"] = all(verdicts)
    if args.out:
        _write(args.out, report)
    out.emit(report, "\n".join(lines))
    return EXIT_OK if report["ok"] else EXIT_FALSIFIED


def cmd_reproduce(args, out):
    budget = args.budget or default_budget()
    checks = golden.reproduce(budget=budget, trials=args.trials, seed=args.seed,
                              repairs=args.repairs)
    ok = all(c.ok for c in checks)
    data = {"ok": ok, "checks": [
        {"name": c.name, "ok": c.ok, "skipped": c.skipped, "detail": c.detail} for c in checks]}
    if args.out:
        _write(args.out, data)
    out.emit(data, "\n".join(c.line() for c in checks))
    return EXIT_OK if ok else EXIT_FALSIFIED


# -- parser -------------------------------------------------------------------------

def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--quiet", action="store_true", help="print nothing; rely on the exit code")
    common.add_argument("--out", help="also write the JSON result to this path")

    parser = _Parser(prog="goodlrc", description="Optimal (r, delta) locally repairable codes "
                                                  "from good polynomials.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gp = sub.add_parser("goodpoly", parents=[common], help="build a good-polynomial certificate")
    gp.add_argument("family", choices=FAMILIES)
    gp.add_argument("--p", type=int, required=True)
    gp.add_argument("--s", type=int, default=1)
    gp.add_argument("--modulus", type=_codes, help="monic modulus, coefficients low to high")
    gp.add_argument("--m", type=int)
    gp.add_argument("--g1-degree", type=int, help="attach the split g1 = x^d (mult, add)")
    gp.add_argument("--basis", type=_codes, help="GF(p)-basis of the subspace H")
    gp.add_argument("--l", type=int, help="subfield degree for the union family")
    gp.add_argument("--a", type=int, help="Dickson parameter")
    gp.add_argument("--a1", type=int, help="cubic parameter")
    gp.add_argument("--poly", type=_codes, help="user polynomial, coefficients low to high")
    gp.add_argument("--g1", type=_codes, help="divisor g1 of the user polynomial")
    gp.set_defaults(func=cmd_goodpoly)

    c = sub.add_parser("construct", parents=[common], help="build a code from a certificate")
    c.add_argument("cert")
    c.add_argument("--variant", choices=VARIANTS, required=True)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--delta", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--L", type=int)
    c.add_argument("--matrix", action="store_true", help="print the generator matrix (text)")
    c.set_defaults(func=cmd_construct)

    e = sub.add_parser("encode", parents=[common], help="encode a message")
    e.add_argument("instance")
    e.add_argument("message", help="JSON list of k element codes ('-' for stdin)")
    e.set_defaults(func=cmd_encode)

    r = sub.add_parser("repair", parents=[common], help="fill erasures (nulls) locally")
    r.add_argument("instance")
    r.add_argument("codeword", help="JSON list with null at erased positions ('-' for stdin)")
    r.set_defaults(func=cmd_repair)

    a = sub.add_parser("analyze", parents=[common], help="verify distance, locality and bounds")
    a.add_argument("instance")
    a.add_argument("--distance", choices=("exhaustive", "witness", "sampled"))
    a.add_argument("--locality", action="store_true")
    a.add_argument("--bounds", action="store_true")
    a.add_argument("--budget", type=_count, help="exhaustive codeword budget (default $LRC_BUDGET "
                                                 f"or {analysis.DEFAULT_BUDGET})")
    a.add_argument("--trials", type=_count, default=10 ** 5)
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--jobs", type=_count, default=1)
    a.set_defaults(func=cmd_analyze)

    rp = sub.add_parser("reproduce-paper", parents=[common], help="re-check the bundled examples")
    rp.add_argument("--budget", type=_count)
    rp.add_argument("--trials", type=_count, default=10 ** 5)
    rp.add_argument("--seed", type=int, default=0)
    rp.add_argument("--repairs", type=_count, default=1000)
    rp.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, Output(args))
    except UsageError as exc:
        print(f"goodlrc: usage error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except LrcError as exc:
        print(f"goodlrc: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        print(f"goodlrc: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
