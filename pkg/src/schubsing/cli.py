"""Command-line interface.

Exit codes: 0 success / smooth / agreement, 1 semantic negative (singular,
mismatch, counterexamples), 2 usage error or size guard.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import islice, permutations

from . import __version__
from .exceptions import OracleCapError, SchubsingError
from .locus import maximal_elements, singular_locus, z_set
from .patterns import components_C, smoothness_witness
from .perm import (
    ORACLE_CAP_ENV,
    Permutation,
    bruhat_leq,
    check_cap,
    length,
    parse_permutation,
    sn_tables,
)
from .render import HIGHLIGHTS, render
from .tangent import tangent_set
from .verify import THEOREMS, verify

TABULATE_CAP = 9

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def cmd_smooth(args) -> int:
    w = parse_permutation(args.w)
    occ = smoothness_witness(w)
    payload = {"w": str(w), "smooth": occ is None}
    if occ is None:
        _emit(args, payload, "smooth")
        return EXIT_OK
    payload["witness"] = {"kind": occ.kind[1:], "positions": list(occ.positions)}
    _emit(args, payload, f"singular ({occ})")
    return EXIT_NEGATIVE


def cmd_tangent(args) -> int:
    w, v = parse_permutation(args.w), parse_permutation(args.v)
    if not bruhat_leq(v, w):
        print(f"error: {v} is not below {w} in Bruhat order; the fixed point lies outside X_w",
              file=sys.stderr)
        return EXIT_USAGE
    rep = tangent_set(w, v)
    lw = length(w)
    singular = rep.dim > lw
    payload = {"w": str(w), "v": str(v), "m": rep.dim, "l": lw, "singular": singular}
    lines = [f"m={rep.dim} l={lw} {'singular' if singular else 'smooth point'}"]
    if args.pairs:
        pairs = rep.sorted_pairs()
        payload["pairs"] = [[t.i, t.j] for t in pairs]
        lines.append("S(w,v): " + " ".join(map(str, pairs)))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_components(args) -> int:
    w = parse_permutation(args.w)
    loc = singular_locus(w, args.method)
    comps = loc.components
    payload = {
        "w": str(w),
        "method": args.method,
        "components": [str(u) for u in comps],
        "provenance": {str(u): loc.provenance[u] for u in comps},
    }
    mismatch = args.method == "both" and any(p != "both" for p in loc.provenance.values())
    payload["agree"] = not mismatch
    if comps:
        lines = [f"[{u}]" + (f"  ({loc.provenance[u]})" if args.method == "both" else "") for u in comps]
    else:
        lines = ["(none)"]
    _emit(args, payload, "\n".join(lines))
    if mismatch:
        print("error: configuration and oracle components disagree", file=sys.stderr)
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_zset(args) -> int:
    w = parse_permutation(args.w)
    certs = z_set(w)
    members = sorted({c.v for c in certs})
    maxi = maximal_elements(members)
    payload = {
        "w": str(w),
        "members": [str(v) for v in members],
        "maximal": [str(v) for v in maxi],
        "certificates": [
            {"v": str(c.v), "kind": c.occurrence.kind[1:], "positions": list(c.occurrence.positions)}
            for c in certs
        ],
    }
    lines = [f"Z(w): {len(members)} members"]
    lines += [f"  [{v}]" for v in members]
    lines.append("maximal: " + (" ".join(f"[{v}]" for v in maxi) if maxi else "(none)"))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    rep = verify(args.n, args.theorem, jobs=args.jobs)
    print(f"time {rep.seconds:.2f}s", file=sys.stderr)
    lines = [
        f"theorem {rep.theorem} n={rep.n}: {rep.permutations} permutations, "
        f"{rep.instances} instances, {len(rep.counterexamples)} counterexamples"
    ]
    lines += [json.dumps(c) for c in rep.counterexamples[:20]]
    _emit(args, rep.as_dict(), "\n".join(lines))
    return EXIT_OK if rep.ok else EXIT_NEGATIVE


def _tabulate_chunk(job):
    n, lo, hi, check_oracle = job
    out, bad = [], []
    for word in islice(permutations(range(1, n + 1)), lo, hi):
        w = Permutation(word)
        comps = components_C(w)
        smooth = smoothness_witness(w) is None
        rec = {
            "w": str(w),
            "length": length(w),
            "smooth": smooth,
            "components": [str(u) for u in comps],
            "componentCount": len(comps),
        }
        if smooth != (not comps):
            bad.append(str(w))
        if check_oracle and singular_locus(w, "oracle").components != comps:
            bad.append(str(w))
        out.append(json.dumps(rec))
    return out, bad


def cmd_tabulate(args) -> int:
    n = args.n
    if n < 1:
        print("error: --n must be positive", file=sys.stderr)
        return EXIT_USAGE
    check_cap(n, TABULATE_CAP, what="tabulate")
    if args.check_oracle:
        check_cap(n)
        sn_tables(n)
    start = time.perf_counter()
    total = 1
    for m in range(2, n + 1):
        total *= m
    jobs = max(1, args.jobs)
    step = max(1, -(-total // (8 * jobs)))
    chunks = [(n, lo, min(total, lo + step), args.check_oracle) for lo in range(0, total, step)]
    bad = []
    try:
        fh = open(args.out, "w", encoding="utf-8", newline="\n")
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    with fh:
        if jobs == 1:
            results = map(_tabulate_chunk, chunks)
            for lines, b in results:
                fh.writelines(line + "\n" for line in lines)
                bad.extend(b)
        else:
            ctx = multiprocessing.get_context("fork") if "fork" in multiprocessing.get_all_start_methods() else None
            with ProcessPoolExecutor(max_workers=jobs, mp_context=ctx) as pool:
                for lines, b in pool.map(_tabulate_chunk, chunks):
                    fh.writelines(line + "\n" for line in lines)
                    bad.extend(b)
    print(f"time {time.perf_counter() - start:.2f}s", file=sys.stderr)
    summary = {"n": n, "records": total, "out": args.out, "inconsistent": bad}
    _emit(args, summary, f"wrote {total} records to {args.out}" + (f"; {len(bad)} inconsistent" if bad else ""))
    return EXIT_NEGATIVE if bad else EXIT_OK


def cmd_render(args) -> int:
    w = parse_permutation(args.w)
    text = render(w, args.highlight)
    _emit(args, {"w": str(w), "highlight": args.highlight, "diagram": text.split("\n")}, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="schubsing",
        description="Smoothness, tangent dimensions and singular loci of Schubert varieties.",
        epilog=f"Exhaustive commands honour {ORACLE_CAP_ENV} (default cap 7).",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("smooth", parents=[common], help="pattern smoothness test")
    p.add_argument("w")
    p.set_defaults(func=cmd_smooth)

    p = sub.add_parser("tangent", parents=[common], help="tangent dimension m(w,v)")
    p.add_argument("w")
    p.add_argument("v")
    p.add_argument("--pairs", action="store_true", help="list the transpositions in S(w,v)")
    p.set_defaults(func=cmd_tangent)

    p = sub.add_parser("components", parents=[common], help="components of the singular locus")
    p.add_argument("w")
    p.add_argument("--method", choices=("config", "oracle", "both"), default="config")
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("zset", parents=[common], help="the candidate set Z(w) and its maximal elements")
    p.add_argument("w")
    p.set_defaults(func=cmd_zset)

    p = sub.add_parser("verify", parents=[common], help="exhaustive theorem check over S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theorem", choices=sorted(THEOREMS), required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tabulate", parents=[common], help="JSON Lines table over all of S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--check-oracle", action="store_true", help="cross-check each record against the oracle")
    p.set_defaults(func=cmd_tabulate)

    p = sub.add_parser("render", parents=[common], help="ASCII diagram")
    p.add_argument("w")
    p.add_argument("--highlight", choices=HIGHLIGHTS, default="none")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OracleCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SchubsingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
