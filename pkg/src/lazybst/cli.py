"""Command-line surface: one-shot subcommands over the text formats.

Exit codes: 0 success, 1 usage error, 2 malformed input, 3 semantically
unusable input.  All output is TSV on stdout; files are only written
through explicit --out/--dump flags.  Every subcommand is deterministic
given its flags; the randomized ones refuse to run without --seed.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import fileio
from .cost import run_lazy_finger, run_root_finger
from .entropy import WeightVector, conditional_entropy, df_bound, entropy, \
    weights_from_tree
from .errors import MalformedInputError, ToolError, UsageError
from .model import build_balanced
from .multitree import build_multitree, node_count, run_multitree
from .optimize import mehlhorn_build, optimal_lazy_dp, optimal_root_dp, treap_build
from .seqgen import RANDOM_KINDS, GeneratorSpec, KINDS, frequencies_from_sequence, \
    generate


@dataclass(frozen=True)
class CompareRow:
    strategy: str
    total_cost: int
    per_search: float
    bound_refs: str

    def tsv(self) -> str:
        return f"{self.strategy}\t{self.total_cost}\t{self.per_search:.6f}\t{self.bound_refs}"


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits 2; the contract wants 1
        raise UsageError(message)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    return Path(path).read_text()


def _load_stats(args):
    if (args.seq is None) == (args.freq is None):
        raise UsageError("exactly one of --seq and --freq is required")
    if args.seq is not None:
        return frequencies_from_sequence(fileio.read_sequence(_read(args.seq)))
    return fileio.read_freq(_read(args.freq))


def cmd_gen(args) -> int:
    matrix = None
    n = args.n
    if args.matrix is not None:
        matrix = fileio.read_matrix(_read(args.matrix))
        if n is None:
            n = matrix.shape[0]
        elif n != matrix.shape[0]:
            raise UsageError(f"--n {n} does not match the {matrix.shape[0]}-key matrix")
    if n is None:
        raise UsageError("--n is required")
    if args.kind in RANDOM_KINDS and args.seed is None:
        raise UsageError(f"--seed is required for kind {args.kind}")
    spec = GeneratorSpec(kind=args.kind, n=n, m=args.m if args.m is not None else n,
                         seed=args.seed if args.seed is not None else 0,
                         k=args.k, matrix=matrix, concentration=args.concentration)
    _emit(fileio.write_sequence(generate(spec)), args.out)
    return 0


def cmd_stats(args) -> int:
    x = fileio.read_sequence(_read(args.seq))
    if x.m == 0:
        raise MalformedInputError("empty sequence")
    s = frequencies_from_sequence(x)
    h = entropy(s)
    hc = conditional_entropy(s) if x.m >= 2 else 0.0
    print(f"n\t{x.n}")
    print(f"m\t{x.m}")
    print(f"H\t{h:.6f}")
    print(f"H_c\t{hc:.6f}")
    return 0


def cmd_freq(args) -> int:
    x = fileio.read_sequence(_read(args.seq))
    _emit(fileio.write_freq(frequencies_from_sequence(x)), args.out)
    return 0


def cmd_opt(args) -> int:
    s = _load_stats(args)
    res = optimal_lazy_dp(s) if args.method == "lazy" else optimal_root_dp(s)
    if args.out:
        _emit(fileio.write_tree(res.tree), args.out)
    print(f"cost\t{res.cost}")
    return 0


def cmd_build(args) -> int:
    if args.kind == "balanced":
        if args.n is None:
            raise UsageError("--n is required for balanced")
        tree = build_balanced(args.n)
    else:
        if args.weights is None:
            raise UsageError(f"--weights is required for {args.kind}")
        w = fileio.read_weights(_read(args.weights))
        if args.kind == "mehlhorn":
            tree = mehlhorn_build(w)
        else:
            if args.seed is None:
                raise UsageError("--seed is required for treap")
            tree = treap_build(w, args.seed)
    _emit(fileio.write_tree(tree), args.out)
    return 0


def cmd_eval(args) -> int:
    tree = fileio.read_tree(_read(args.tree))
    x = fileio.read_sequence(_read(args.seq))
    run = run_lazy_finger if args.method == "lazy" else run_root_finger
    rep = run(tree, x)
    print(f"transition_cost\t{rep.transition_cost}")
    print(f"initial_descent\t{rep.initial_descent}")
    print(f"total_with_root_start\t{rep.total_with_root_start}")
    print(f"per_search_avg\t{float(rep.per_search_avg):.6f}")
    return 0


def cmd_bound(args) -> int:
    w = fileio.read_weights(_read(args.weights))
    x = fileio.read_sequence(_read(args.seq))
    print(f"df_bound\t{df_bound(w, x):.6f}")
    return 0


def cmd_weights(args) -> int:
    tree = fileio.read_tree(_read(args.tree))
    _emit(fileio.write_weights(weights_from_tree(tree)), args.out)
    return 0


def cmd_multitree(args) -> int:
    x = fileio.read_sequence(_read(args.seq))
    if x.m == 0:
        raise MalformedInputError("empty sequence")
    s = frequencies_from_sequence(x)
    mt = build_multitree(s, args.d)
    total = run_multitree(mt, x)
    hc = conditional_entropy(s) if x.m >= 2 else 0.0
    print(f"n\t{x.n}")
    print(f"d\t{args.d}")
    print(f"m\t{x.m}")
    print(f"nodes\t{node_count(mt)}")
    print(f"total_comparisons\t{total}")
    print(f"per_search_avg\t{total / x.m:.6f}")
    print(f"H_c\t{hc:.6f}")
    if args.dump:
        lines = [fileio.write_tree(mt.global_tree)]
        for i in range(1, mt.n + 1):
            members = " ".join(str(k) for k in mt.succ[i].members)
            lines.append(f"T{i}:" + (f" {members}" if members else "") + "\n")
        Path(args.dump).write_text("".join(lines))
    return 0


def cmd_compare(args) -> int:
    x = fileio.read_sequence(_read(args.seq))
    if x.m == 0:
        raise MalformedInputError("empty sequence")
    if args.seed is None:
        raise UsageError("--seed is required for compare (treap strategy)")
    s = frequencies_from_sequence(x)
    m = x.m
    h = entropy(s)
    hc = conditional_entropy(s) if m >= 2 else 0.0
    d = args.d if args.d is not None else min(16, x.n)

    rows: list[CompareRow] = []

    bal = build_balanced(x.n)
    t = run_lazy_finger(bal, x).transition_cost
    rows.append(CompareRow("balanced-lazy", t, t / m, f"model=edges;H_c={hc:.6f}"))

    opt_lazy = optimal_lazy_dp(s)
    w4 = weights_from_tree(opt_lazy.tree)
    df = df_bound(w4, x)
    rows.append(CompareRow("opt-lazy", opt_lazy.cost, opt_lazy.cost / m,
                           f"model=edges;H_c={hc:.6f};df_bound={df:.6f}"))

    opt_root = optimal_root_dp(s)
    rows.append(CompareRow("opt-root", opt_root.cost, opt_root.cost / m,
                           f"model=edges;H={h:.6f}"))

    # Mehlhorn needs strictly positive weights; add-one smoothing covers
    # keys the sequence never touches.
    smooth = WeightVector.from_values([int(c) + 1 for c in s.searches[1:]])
    meh = mehlhorn_build(smooth)
    t = run_root_finger(meh, x).transition_cost
    rows.append(CompareRow("mehlhorn-root", t, t / m, f"model=edges;H={h:.6f}"))

    treap = treap_build(w4, args.seed)
    t = run_lazy_finger(treap, x).transition_cost
    rows.append(CompareRow("treap-lazy", t, t / m,
                           f"model=edges;seed={args.seed};df_bound={df:.6f}"))

    mt = build_multitree(s, d)
    t = run_multitree(mt, x)
    rows.append(CompareRow("multitree", t, t / m,
                           f"model=comparisons;d={d};H_c={hc:.6f}"))

    print("strategy\ttotal\tper_search\tnotes")
    for row in rows:
        print(row.tsv())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lazybst",
                     description="Static BST toolkit for lazy-finger workloads")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a search sequence file")
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--k", type=int, help="distinct keys per round (rounds kind)")
    p.add_argument("--concentration", type=float, default=0.2,
                   help="Dirichlet parameter for default markov rows")
    p.add_argument("--matrix", help="markov transition matrix file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("stats", help="entropy report for a sequence")
    p.add_argument("--seq", required=True)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("freq", help="count table of a sequence")
    p.add_argument("--seq", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_freq)

    p = sub.add_parser("opt", help="optimal tree for a workload")
    p.add_argument("--method", required=True, choices=("lazy", "root"))
    p.add_argument("--seq")
    p.add_argument("--freq")
    p.add_argument("--out", help="where to write the tree file")
    p.set_defaults(func=cmd_opt)

    p = sub.add_parser("build", help="construct a tree without optimizing")
    p.add_argument("--kind", required=True, choices=("balanced", "mehlhorn", "treap"))
    p.add_argument("--n", type=int)
    p.add_argument("--weights")
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("eval", help="run a sequence against a tree")
    p.add_argument("--method", required=True, choices=("lazy", "root"))
    p.add_argument("--tree", required=True)
    p.add_argument("--seq", required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("bound", help="weighted dynamic-finger bound")
    p.add_argument("--weights", required=True)
    p.add_argument("--seq", required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("weights", help="4^-depth weights of a tree")
    p.add_argument("--tree", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("multitree", help="successor-tree structure report")
    p.add_argument("--seq", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--dump", help="where to write the structure dump")
    p.set_defaults(func=cmd_multitree)

    p = sub.add_parser("compare", help="strategy sweep over one sequence")
    p.add_argument("--seq", required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--d", type=int)
    p.set_defaults(func=cmd_compare)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as e:  # --help
        return 0 if e.code in (0, None) else int(e.code)
    except ToolError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
