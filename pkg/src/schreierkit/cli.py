"""``schreierkit`` command line: subgroup, enumerate, group, paper-verify.

Exit codes: 0 success, 1 a check failed, 2 bad input, 3 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

import yaml

from . import stallings, verify
from .constructions import build_group
from .errors import InputError, ResourceError, SchreierKitError
from .permgrp import DEFAULT_MAX_ORDER
from .stallings import INFINITE, Word
from .structure import ALL_QUERIES, analyze

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


def read_words(lines: Sequence[str], n: int, source: str = "<input>") -> list[Word]:
    """One word per line in letter syntax; ``#`` starts a comment, blank lines are skipped."""
    words = []
    for lineno, raw in enumerate(lines, 1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        try:
            words.append(Word.parse(text, n))
        except InputError as exc:
            raise InputError(f"{source}, line {lineno}: {exc}") from None
    return words


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, default=str))
    else:
        print(text)


def cmd_subgroup(args) -> int:
    words: list[Word] = []
    if args.file:
        if args.file == "-":
            words += read_words(sys.stdin.read().splitlines(), args.rank, "<stdin>")
        else:
            with open(args.file, encoding="utf-8") as fh:
                words += read_words(fh.read().splitlines(), args.rank, args.file)
    words += read_words(args.word or [], args.rank, "--word")
    g = stallings.from_generators(args.rank, words)
    idx = stallings.index(g)
    rk = stallings.rank(g)
    payload = {"generators": [str(w) for w in words], "graph": g.to_dict(),
               "index": None if idx == INFINITE else idx, "rank": rk}
    lines = [g.to_text(), f"index: {'infinite' if idx == INFINITE else idx}", f"rank: {rk}"]
    status = EXIT_OK
    if idx != INFINITE:
        expected = (args.rank - 1) * idx + 1
        holds = rk == expected
        sgens = [str(w) for w in stallings.schreier_generators(g)]
        payload.update(formula={"expected_rank": expected, "holds": holds}, schreier_generators=sgens)
        lines.append(f"formula: rank {rk} {'==' if holds else '!='} ({args.rank}-1)*{idx}+1 = {expected}: "
                     f"{'holds' if holds else 'FAILS'}")
        lines.append("schreier generators: " + " ".join(sgens))
        if not holds:
            status = EXIT_FAIL
    else:
        lines.append("formula: not applicable (infinite index)")
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(g.to_dot())
    _emit(args, payload, "\n".join(lines))
    return status


def cmd_enumerate(args) -> int:
    n, m = args.n, args.m
    per_index = {}
    bad = []
    for k in range(1, m + 1):
        subs = stallings.enumerate_subgroups(n, k, max_index=args.max_index)
        expected = (n - 1) * k + 1
        per_index[k] = len(subs)
        bad += [(k, g) for g in subs if stallings.rank(g) != expected]
    ok = not bad
    payload = {"n": n, "m": m, "counts": {str(k): c for k, c in per_index.items()},
               "violations": [{"index": k, "graph": g.to_dict()} for k, g in bad[:20]],
               "status": "pass" if ok else "fail"}
    lines = [f"index {k}: {c} subgroups, rank {(n - 1) * k + 1}" for k, c in per_index.items()]
    lines.append(f"{'PASS' if ok else 'FAIL'}: {sum(per_index.values())} subgroups, {len(bad)} violations")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def _load_spec(text: str):
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    try:
        return yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise InputError(f"cannot parse group spec: {exc}") from None


def cmd_group(args) -> int:
    record = _load_spec(args.spec)
    G, provenance = build_group(record, args.max_order)
    queries = []
    for q in args.query or ["order", "d", "supersolvable"]:
        queries += [x.strip() for x in q.split(",") if x.strip()]
    if "all" in queries:
        queries = list(ALL_QUERIES)
    unknown = sorted(set(queries) - set(ALL_QUERIES))
    if unknown:
        raise InputError(f"unknown query {', '.join(unknown)}; expected some of {', '.join(ALL_QUERIES)}")
    rep = analyze(G, queries, seed=args.seed, max_order=args.max_order, residual_primes=args.prime or ())
    payload = {"spec": record, "degree": G.degree, "provenance": provenance, **rep.to_dict()}
    text = f"{'degree':20s} {G.degree}\n" + rep.to_text()
    _emit(args, payload, text)
    return EXIT_OK


def cmd_paper_verify(args) -> int:
    settings = verify.Settings(seed=args.seed, max_order=args.max_order, max_index=args.max_index,
                               timeout_per_check=args.timeout_per_check)
    selected = verify.select(args.only)
    if not selected:
        raise InputError(f"no check matches {args.only}; known: {', '.join(c.check_id for c in verify.CHECKS)}")
    old = stallings._SKIP_FOLDING
    stallings._SKIP_FOLDING = args.inject_fault == "skip-folding"
    try:
        reports = [verify.run_check(c, settings) for c in selected]
    finally:
        stallings._SKIP_FOLDING = old
    ok = all(r.passed for r in reports)
    payload = {"status": "pass" if ok else "fail", "reports": [r.to_dict() for r in reports]}
    _emit(args, payload, verify.format_table(reports))
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized searches (default 0)")
    common.add_argument("--max-order", type=int, default=argparse.SUPPRESS,
                        help=f"largest group order to build or enumerate (default {DEFAULT_MAX_ORDER})")
    common.add_argument("--max-index", type=int, default=argparse.SUPPRESS,
                        help=f"largest subgroup index to enumerate (default {stallings.DEFAULT_MAX_INDEX})")
    common.add_argument("--timeout-per-check", type=float, default=argparse.SUPPRESS,
                        help="override each verification check's runtime budget, in seconds")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="structured output")

    parser = argparse.ArgumentParser(prog="schreierkit", parents=[common],
                                     description="Subgroups of free groups and finite supersolvability tests.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("subgroup", parents=[common], help="fold a subgroup of F_n given by words")
    p.add_argument("--rank", "-n", type=int, required=True, help="rank of the ambient free group")
    p.add_argument("file", nargs="?", help="word file, one word per line ('-' for stdin)")
    p.add_argument("--word", "-w", action="append", help="a generator word (repeatable)")
    p.add_argument("--dot", help="write the folded graph in Graphviz format to this path")
    p.set_defaults(func=cmd_subgroup)

    p = sub.add_parser("enumerate", parents=[common], help="check the rank formula for all small-index subgroups")
    p.add_argument("-n", type=int, required=True, help="rank of the free group")
    p.add_argument("-m", type=int, required=True, help="largest index")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("group", parents=[common], help="build a group from a spec and analyze it")
    p.add_argument("spec", help="YAML/JSON group spec, or @path to a file holding one")
    p.add_argument("--query", "-q", action="append",
                   help=f"comma-separated queries from {', '.join(ALL_QUERIES)} or 'all'")
    p.add_argument("--prime", "-p", type=int, action="append", help="report the p-residual for this prime")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("paper-verify", parents=[common], help="run the acceptance checks")
    p.add_argument("--only", action="append", help="run checks whose id contains this token (repeatable)")
    p.add_argument("--inject-fault", choices=["skip-folding"], help="deliberately break folding")
    p.add_argument("--list", action="store_true", help="list the checks and exit")
    p.set_defaults(func=cmd_paper_verify)
    return parser


_DEFAULTS = {"seed": 0, "max_order": DEFAULT_MAX_ORDER, "max_index": stallings.DEFAULT_MAX_INDEX,
             "timeout_per_check": None, "json": False}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    for key, val in _DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, val)
    if getattr(args, "list", False):
        for c in verify.CHECKS:
            print(f"{c.check_id:26s} {c.description}")
        return EXIT_OK
    try:
        return args.func(args)
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (SchreierKitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
