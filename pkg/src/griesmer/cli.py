"""Command-line interface.

Exit codes make the tool usable as a certifier in CI: 0 means success and
every requested check passed, 1 means a verification failed (a computed
value contradicts a certified one), 2 means the input was invalid.  All
subcommands are deterministic: identical invocations write identical
bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chains import _chain_point, build_chain, plan_chain, reproduce_table
from .constructs import base_code_1, base_code_2, code_c1, code_c2
from .errors import InputError, VerificationFailure
from .mcode import (
    code_params,
    hyperplane_spectrum,
    oracle_weight_distribution,
    read_multiset,
    write_gmatrix,
    write_multiset,
)
from .transforms import find_disjoint_lines, projective_dual, puncture_flat, puncture_point

_FAMILIES = {
    "base1": base_code_1,
    "base2": base_code_2,
    "c1": code_c1,
    "c2": code_c2,
}


def _describe(M) -> str:
    p = code_params(M)
    return f"[{p.n},{p.k},{p.d}]_{M.q} divisor={p.divisor} gamma0={p.gamma0}"


def _cmd_construct(args) -> int:
    build = _FAMILIES[args.family]
    if args.family in ("c1", "c2"):
        M = build(args.k, args.q, allow_experimental=args.allow_experimental)
    else:
        M = build(args.k, args.q)
    print(f"{args.family}: {_describe(M)}")
    if args.out:
        write_multiset(M, args.out)
        print(f"wrote {args.out}")
    return 0


def _cmd_dual(args) -> int:
    M = read_multiset(args.infile)
    dual = projective_dual(M, args.divisor)
    print(f"dual: {_describe(dual)}")
    if args.out:
        write_multiset(dual, args.out)
        print(f"wrote {args.out}")
    return 0


def _cmd_puncture(args) -> int:
    M = read_multiset(args.infile)
    if args.lines:
        for line in find_disjoint_lines(M, args.lines):
            M = puncture_flat(M, line)
    for _ in range(args.points):
        M = puncture_point(M, _chain_point(M))
    print(f"punctured: {_describe(M)}")
    if args.out:
        write_multiset(M, args.out)
        print(f"wrote {args.out}")
    return 0


def _cmd_chain(args) -> int:
    plan = plan_chain(args.theorem, args.q, args.k, args.d)
    code, report = build_chain(plan)
    print(
        f"certified [{report.n},{report.k},{report.d}]_{report.q} "
        f"griesmer_n={report.griesmer_n} is_griesmer={report.is_griesmer}"
    )
    if args.out:
        write_multiset(code, args.out)
        print(f"wrote {args.out}")
    if args.report:
        with open(args.report, "w", encoding="ascii") as fh:
            json.dump(report.to_json(), fh, sort_keys=True, indent=2)
            fh.write("\n")
        print(f"wrote {args.report}")
    return 0


def _cmd_table(args) -> int:
    rows = reproduce_table(args.theorem, args.q, args.k)
    if args.format == "json":
        print(json.dumps([r.to_json() for r in rows], sort_keys=True, indent=2))
    else:
        width_n = max(len(str(r.n)) for r in rows)
        width_d = max(len(str(r.d)) for r in rows)
        for r in rows:
            print(f"{r.n:>{width_n}} {r.d:>{width_d}}")
    return 0


def _cmd_verify(args) -> int:
    M = read_multiset(args.infile)
    p = code_params(M)
    print(_describe(M))
    failures = []
    for label, expect, got in (
        ("n", args.expect_n, p.n),
        ("k", args.expect_k, p.k),
        ("d", args.expect_d, p.d),
    ):
        if expect is not None and expect != got:
            failures.append(f"{label}: expected {expect}, computed {got}")
    if args.oracle:
        dist = oracle_weight_distribution(M)
        spec = hyperplane_spectrum(M)
        oracle_d = min(w for w in dist if w > 0)
        if oracle_d != p.d:
            failures.append(f"oracle distance {oracle_d} != hyperplane distance {p.d}")
        for w, count in dist.items():
            if w and count != (M.q - 1) * spec.get(p.n - w, 0):
                failures.append(f"weight {w}: oracle count {count} breaks the spectrum relation")
        if sum(dist.values()) != M.q**p.k:
            failures.append("oracle did not see q^k codewords")
        if not failures:
            print(f"oracle: {M.q ** p.k} codewords agree with the hyperplane computation")
    for line in failures:
        print(f"FAIL {line}", file=sys.stderr)
    return 1 if failures else 0


def _cmd_export(args) -> int:
    M = read_multiset(args.infile)
    write_gmatrix(M, args.out)
    print(f"wrote {args.out}")
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="griesmer",
        description="Construct and certify length-optimal linear codes over GF(q).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a named family code")
    c.add_argument("--family", required=True, choices=sorted(_FAMILIES))
    c.add_argument("--q", required=True, type=int)
    c.add_argument("--k", required=True, type=int)
    c.add_argument("--allow-experimental", action="store_true",
                   help="try k=5 for c1/c2 with all claims checked at runtime")
    c.add_argument("--out")
    c.set_defaults(func=_cmd_construct)

    d = sub.add_parser("dual", help="projective dual of a multiset file")
    d.add_argument("--in", dest="infile", required=True)
    d.add_argument("--divisor", required=True, type=int)
    d.add_argument("--out")
    d.set_defaults(func=_cmd_dual)

    p = sub.add_parser("puncture", help="remove disjoint support lines and points")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--lines", type=int, default=0)
    p.add_argument("--points", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_puncture)

    ch = sub.add_parser("chain", help="build one certified length-optimal code")
    ch.add_argument("--theorem", required=True, type=int, choices=(1, 2))
    ch.add_argument("--q", required=True, type=int)
    ch.add_argument("--k", required=True, type=int)
    ch.add_argument("--d", required=True, type=int)
    ch.add_argument("--out")
    ch.add_argument("--report")
    ch.set_defaults(func=_cmd_chain)

    t = sub.add_parser("table", help="certify every distance a family covers")
    t.add_argument("--theorem", required=True, type=int, choices=(1, 2))
    t.add_argument("--q", required=True, type=int)
    t.add_argument("--k", required=True, type=int)
    t.add_argument("--format", choices=("txt", "json"), default="txt")
    t.set_defaults(func=_cmd_table)

    v = sub.add_parser("verify", help="recompute parameters of a multiset file")
    v.add_argument("--in", dest="infile", required=True)
    v.add_argument("--expect-n", type=int)
    v.add_argument("--expect-k", type=int)
    v.add_argument("--expect-d", type=int)
    v.add_argument("--oracle", action="store_true",
                   help="also enumerate all q^k codewords and cross-check")
    v.set_defaults(func=_cmd_verify)

    e = sub.add_parser("export", help="write the generator matrix of a multiset file")
    e.add_argument("--in", dest="infile", required=True)
    e.add_argument("--format", choices=("gmatrix",), default="gmatrix")
    e.add_argument("--out", required=True)
    e.set_defaults(func=_cmd_export)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except VerificationFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except (InputError, ValueError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())
