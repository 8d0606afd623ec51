"""Command-line entry point.

Output follows SAT-solver conventions: `s` status lines, `v` value lines
of signed literals terminated by 0, exit code 10 when an answer/model was
found, 20 for unsatisfiable, 0 for non-decision subcommands, 1 for usage
or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
import time

from .branching import NodeCounter, max_hamming_q
from .dimacs import ParseError, load_formula, serialize_formula
from .formula import Assignment, Formula, hamming_distance, verify_xmodel
from .gen import random_formula
from .oracle import CapExceeded, enumerate_xmodels, max_hamming_brute
from .solver import find_xmodel
from .subset_scan import ScanStats, max_hamming_p
from .tau import parse_branch_spec, tau_root

EXIT_ANSWER = 10
EXIT_UNSAT = 20
EXIT_OK = 0
EXIT_ERROR = 1


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; the CLI contract wants 1."""

    def error(self, message):
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _value_line(model: Assignment, variables) -> str:
    lits = [v if model[v] else -v for v in sorted(variables)]
    return "v " + " ".join(str(l) for l in lits + [0])


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="xham", description="Max Hamming distance between XSAT models")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="decide x-satisfiability, print one model")
    p_solve.add_argument("file")

    p_max = sub.add_parser("maxham", help="maximum Hamming distance between x-models")
    p_max.add_argument("--algo", choices=("p", "q", "brute"), default="q")
    p_max.add_argument("--witness", action="store_true", help="print a maximizing model pair (p/brute)")
    p_max.add_argument("--stats", action="store_true", help="print search statistics")
    p_max.add_argument(
        "--count-free",
        action="store_true",
        help="count declared-but-unused variables as free flips",
    )
    p_max.add_argument("file")

    p_models = sub.add_parser("models", help="enumerate all x-models")
    p_models.add_argument("file")

    p_tau = sub.add_parser(
        "tau",
        help="largest root of a branching recurrence; comma separates several specs",
    )
    p_tau.add_argument("spec", nargs="+", help="decrements like 7^2 3^6")

    p_gen = sub.add_parser("gen", help="generate a random instance")
    p_gen.add_argument("--vars", type=int, required=True)
    p_gen.add_argument("--clauses", type=int, required=True)
    p_gen.add_argument("--len", type=int, required=True, dest="length")
    p_gen.add_argument("--seed", type=int, default=None)
    p_gen.add_argument("-o", "--output", default=None)

    p_bench = sub.add_parser("bench", help="run seeded instances, emit CSV")
    p_bench.add_argument("--algo", choices=("p", "q", "brute"), default="q")
    p_bench.add_argument("--runs", type=int, required=True)
    p_bench.add_argument("--vars", type=int, required=True)
    p_bench.add_argument("--clauses", type=int, required=True)
    p_bench.add_argument("--len", type=int, required=True, dest="length")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("-o", "--output", default=None)

    p_verify = sub.add_parser("verify", help="check a witness pair against an instance")
    p_verify.add_argument("file")
    p_verify.add_argument("witnesses")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args)
    except (ParseError, CapExceeded, OSError, ValueError) as exc:
        print(f"xham: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def _dispatch(args) -> int:
    handlers = {
        "solve": _cmd_solve,
        "maxham": _cmd_maxham,
        "models": _cmd_models,
        "tau": _cmd_tau,
        "gen": _cmd_gen,
        "bench": _cmd_bench,
        "verify": _cmd_verify,
    }
    return handlers[args.command](args)


def _cmd_solve(args) -> int:
    formula = load_formula(args.file)
    model = find_xmodel(formula)
    if model is None:
        print("s UNSAT")
        return EXIT_UNSAT
    print("s XSAT")
    print(_value_line(model, formula.variables()))
    return EXIT_ANSWER


def _run_maxham(formula: Formula, algo: str, counter: NodeCounter, stats: ScanStats):
    if algo == "q":
        return max_hamming_q(formula, counter)
    if algo == "p":
        return max_hamming_p(formula, stats)
    return max_hamming_brute(formula)


def _cmd_maxham(args) -> int:
    if args.witness and args.algo == "q":
        print("xham: error: --witness needs --algo p or brute", file=sys.stderr)
        return EXIT_ERROR
    formula = load_formula(args.file)
    counter = NodeCounter()
    stats = ScanStats()
    result = _run_maxham(formula, args.algo, counter, stats)
    if result.unsat:
        print("s UNSATISFIABLE")
        return EXIT_UNSAT

    distance = result.distance
    witnesses = result.witnesses
    if args.count_free:
        unused = formula.num_vars - len(formula.variables())
        distance += unused
        if witnesses is not None and unused:
            first, second = (dict(w) for w in witnesses)
            for v in range(1, formula.num_vars + 1):
                if v not in first:
                    first[v] = True
                    second[v] = False
            witnesses = (first, second)
    print(f"s MAXHAM {distance}")
    if args.witness and witnesses is not None:
        variables = witnesses[0].keys()
        print(_value_line(witnesses[0], variables))
        print(_value_line(witnesses[1], variables))
    if args.stats:
        if args.algo == "q":
            print(f"c stats nodes={counter.nodes} leaves={counter.leaves}")
        elif args.algo == "p":
            print(f"c stats solver_calls={stats.solver_calls} subsets={stats.subsets_checked}")
    return EXIT_ANSWER


def _cmd_models(args) -> int:
    formula = load_formula(args.file)
    for model in enumerate_xmodels(formula):
        print(_value_line(model, formula.variables()))
    return EXIT_OK


def _cmd_tau(args) -> int:
    joined = " ".join(args.spec)
    for spec in joined.split(","):
        if not spec.strip():
            continue
        root = tau_root(parse_branch_spec(spec))
        print(f"{root:.6f}")
    return EXIT_OK


def _cmd_gen(args) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("XHAM_SEED", "0"))
    formula = random_formula(args.vars, args.clauses, args.length, seed)
    text = serialize_formula(formula)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_bench(args) -> int:
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(["id", "n", "m", "len", "algo", "result", "nodes", "leaves", "ms"])
    for run in range(args.runs):
        seed = args.seed + run
        formula = random_formula(args.vars, args.clauses, args.length, seed)
        counter = NodeCounter()
        stats = ScanStats()
        start = time.perf_counter()
        result = _run_maxham(formula, args.algo, counter, stats)
        elapsed_ms = (time.perf_counter() - start) * 1000.0
        outcome = "unsat" if result.unsat else str(result.distance)
        nodes, leaves = counter.nodes, counter.leaves
        if args.algo == "p":
            nodes, leaves = stats.solver_calls, 0
        writer.writerow(
            [f"s{seed}", args.vars, args.clauses, args.length, args.algo, outcome, nodes, leaves, f"{elapsed_ms:.3f}"]
        )
    text = buffer.getvalue()
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _parse_witness_file(path) -> list[Assignment]:
    assignments: list[Assignment] = []
    with open(path, "r", encoding="utf-8") as handle:
        for line in handle:
            tokens = line.split()
            if not tokens:
                continue
            if tokens[0] == "v":
                tokens = tokens[1:]
            elif tokens[0] in ("c", "s"):
                continue
            lits = [int(t) for t in tokens]
            assignments.append({abs(l): l > 0 for l in lits if l != 0})
    return assignments


def _cmd_verify(args) -> int:
    formula = load_formula(args.file)
    assignments = _parse_witness_file(args.witnesses)
    if len(assignments) != 2:
        print(f"xham: error: expected 2 witness lines, found {len(assignments)}", file=sys.stderr)
        return EXIT_ERROR
    first, second = assignments
    if first.keys() != second.keys():
        print("xham: error: witness variable sets differ", file=sys.stderr)
        return EXIT_ERROR
    try:
        ok = verify_xmodel(formula, first) and verify_xmodel(formula, second)
    except ValueError as exc:
        print(f"xham: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if not ok:
        print("xham: error: witness is not an x-model", file=sys.stderr)
        return EXIT_ERROR
    print(f"s VERIFIED {hamming_distance(first, second)}")
    return EXIT_ANSWER


if __name__ == "__main__":
    sys.exit(main())
