"""Command-line front end.

Exit codes: 0 on success (or when every asserted check passes), 1 on a
semantic failure such as an invalid sequence or a failed check, 2 on usage
and parse errors.
"""

from __future__ import annotations

import argparse
import os
import random
import sys

from .enumeration import random_tree, verify_diameter, verify_sequences
from .errors import EccTreeError, InvalidSequence, ParseError
from .indices import SteinerIndex, evaluate, parse_index_spec, sw_k_formula
from .sequence import (
    build_extremal,
    build_Tdn,
    counterexample_pair,
    of_tree,
    parse_sequence,
    reduction_index,
    seq_reduce,
)
from .transforms import caterpillarize, mate
from .tree import parse_edge_list, to_edge_list

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _read_tree(path: str | None):
    if path in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(str(exc)) from None
    return parse_edge_list(text)


def cmd_validate(args) -> int:
    try:
        s = parse_sequence(args.sequence)
    except InvalidSequence as exc:
        print(f"INVALID {exc.reason}")
        return EXIT_FAIL
    print(f"VALID {s}")
    return EXIT_OK


def cmd_build(args) -> int:
    chosen = sum(x is not None for x in (args.sequence, args.tdn, args.counterexample))
    if chosen != 1:
        raise ParseError("give exactly one of SEQUENCE, --tdn N D, --counterexample N D")
    if args.sequence is not None:
        s = parse_sequence(args.sequence)
        sys.stdout.write(to_edge_list(build_extremal(s), [f"T({s})"]))
    elif args.tdn is not None:
        n, d = args.tdn
        sys.stdout.write(to_edge_list(build_Tdn(n, d), [f"T_{{{d},{n}}}"]))
    else:
        n, d = args.counterexample
        t1, t2 = counterexample_pair(n, d)
        sys.stdout.write(to_edge_list(t1, [f"counterexample n={n} d={d}", "T1"]))
        sys.stdout.write(to_edge_list(t2, ["T2"]))
    return EXIT_OK


def cmd_index(args) -> int:
    t = _read_tree(args.tree)
    if args.all_k:
        if args.index is not None and not isinstance(parse_index_spec(args.index), SteinerIndex):
            raise ParseError("--all-k only applies to the steiner index")
        for k in range(1, t.n + 1):
            print(f"k={k} SW={sw_k_formula(t, k)}")
        return EXIT_OK
    if args.index is None:
        raise ParseError("an index spec is required unless --all-k is given")
    print(evaluate(t, parse_index_spec(args.index)))
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = parse_index_spec(args.index)
    jobs = args.jobs or os.cpu_count() or 1
    if args.diameter is not None:
        report = verify_diameter(args.order, args.diameter, spec, jobs=jobs)
    else:
        report = verify_sequences(args.order, spec, jobs=jobs)
    floating = not spec.exact
    cols = ["class", "size", "extremal", "constructor", "unique"]
    if floating:
        cols.append("tie")
    print("\t".join(cols + ["result"]))
    for c in report.classes:
        row = [c.key, str(c.size), str(c.extremal_value),
               str(c.flags["extremal_is_constructor"]), str(c.flags["unique"])]
        if floating:
            row.append(str(c.flags["tie"]))
        print("\t".join(row + ["PASS" if c.passed else "FAIL"]))
    print(f"# order={report.order} index={report.index_spec} trees={report.tree_count} "
          f"classes={len(report.classes)} {'PASS' if report.passed else 'FAIL'}")
    if args.json == "-":
        print(report.to_json())
    elif args.json:
        with open(args.json, "w") as fh:
            fh.write(report.to_json() + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_transform(args) -> int:
    *files, op = args.operands
    if op not in ("mate", "caterpillarize", "seq-reduce") or len(files) > 1:
        raise ParseError("usage: transform [TREE-FILE] {mate,caterpillarize,seq-reduce}")
    path = files[0] if files else None
    if op == "seq-reduce":
        s = parse_sequence(args.seq) if args.seq else of_tree(_read_tree(path))
        i = reduction_index(s)
        print(f"# seq-reduce: {s} i={i}")
        print(seq_reduce(s))
        return EXIT_OK
    t = _read_tree(path)
    if op == "mate":
        out, trace = mate(t)
        sys.stdout.write(to_edge_list(out, [trace.describe()]))
    else:
        out, steps = caterpillarize(t)
        sys.stdout.write(to_edge_list(out, [f"caterpillarize: steps={steps}"]))
    return EXIT_OK


def cmd_random(args) -> int:
    rng = random.Random(args.seed)
    sys.stdout.write(to_edge_list(random_tree(args.order, rng), [f"random seed={args.seed}"]))
    return EXIT_OK


def get_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ecctree", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="test a tree eccentric sequence")
    p.add_argument("sequence", help="full form '2,2,3,3,3' or compact form '2;3'")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("build", help="print an extremal tree as an edge list")
    p.add_argument("sequence", nargs="?")
    p.add_argument("--tdn", nargs=2, type=int, metavar=("N", "D"))
    p.add_argument("--counterexample", nargs=2, type=int, metavar=("N", "D"))
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("index", help="evaluate an index on a tree")
    p.add_argument("tree", help="edge-list file, '-' for stdin")
    p.add_argument("index", nargs="?", help="wiener|hyper|harary|genw:L|rcw|steiner:K")
    p.add_argument("--all-k", action="store_true", help="print SW_k for k = 1..n")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("verify", help="exhaustively check the extremal trees")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--index", required=True)
    p.add_argument("--diameter", type=int)
    p.add_argument("--json", metavar="OUT", help="write the JSON report ('-' for stdout)")
    p.add_argument("--jobs", type=int, default=None, help="worker processes")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("transform", help="mate, caterpillarize or reduce a sequence",
                       usage="%(prog)s [-h] [--seq SEQ] [TREE-FILE] {mate,caterpillarize,seq-reduce}")
    p.add_argument("operands", nargs="+", metavar="[TREE-FILE] OP",
                   help="tree file ('-' or omitted for stdin) followed by the operation")
    p.add_argument("--seq", help="sequence input for seq-reduce")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("random", help="print a uniformly random labelled tree")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_random)
    return parser


def main(argv=None) -> int:
    args = get_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EccTreeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
