"""Max Hamming distance by scanning variable subsets.

Two x-models differing exactly on a set X leave every clause with 0 or 2
literals over X (one flipped literal alone would break exactly-one). So
only such "allowed" subsets can separate a model pair, and X works iff
the formula stays x-satisfiable after adding flipped copies of the
clauses X touches: a model of that union yields the second model by
flipping X. The scan runs subset sizes from n down and stops at the
first hit, calling the solver only for allowed subsets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .formula import BOTTOM, Assignment, Formula, HammingResult
from .solver import find_xmodel


@dataclass
class ScanStats:
    """How much work the scan did; solver_calls stays within the number
    of allowed subsets."""

    subsets_checked: int = 0
    solver_calls: int = 0


def allowed_subset_check(formula: Formula, subset) -> bool:
    """True iff every clause has 0 or 2 literals of variables in subset."""
    chosen = set(subset)
    for clause in formula.clauses:
        count = sum(1 for lit in clause if abs(lit) in chosen)
        if count not in (0, 2):
            return False
    return True


def flipped_union(formula: Formula, subset) -> Formula:
    """The formula plus flipped copies of every clause the subset touches.

    Clauses untouched by the subset are not duplicated. Requires the
    subset to pass `allowed_subset_check`.
    """
    if not allowed_subset_check(formula, subset):
        raise ValueError("subset leaves a clause with an odd touch count")
    chosen = set(subset)
    copies = []
    for clause in formula.clauses:
        if any(abs(lit) in chosen for lit in clause):
            copies.append(tuple(-lit if abs(lit) in chosen else lit for lit in clause))
    return Formula(formula.num_vars, formula.clauses + tuple(copies))


def max_hamming_p(formula: Formula, stats: ScanStats | None = None) -> HammingResult:
    """Exact max Hamming distance with witnesses, via the subset scan.

    A satisfiability pre-check handles the unsatisfiable case without
    touching the subset loop (the empty subset is the k=0 iteration, so
    it is not revisited at the end).
    """
    if stats is None:
        stats = ScanStats()
    stats.solver_calls += 1
    base_model = find_xmodel(formula)
    if base_model is None:
        return HammingResult(BOTTOM)

    variables = formula.variables()
    n = len(variables)
    position = {v: i for i, v in enumerate(variables)}
    duplicate_free = all(len({abs(l) for l in c}) == len(c) for c in formula.clauses)
    masks = None
    if duplicate_free:
        masks = [sum(1 << position[abs(l)] for l in clause) for clause in formula.clauses]

    for size in range(n, 0, -1):
        for combo in itertools.combinations(variables, size):
            stats.subsets_checked += 1
            if masks is not None:
                bitset = 0
                for v in combo:
                    bitset |= 1 << position[v]
                ok = True
                for mask in masks:
                    if (bitset & mask).bit_count() not in (0, 2):
                        ok = False
                        break
                if not ok:
                    continue
            elif not allowed_subset_check(formula, combo):
                continue
            stats.solver_calls += 1
            model = find_xmodel(flipped_union(formula, combo))
            if model is None:
                continue
            witness = {v: model[v] for v in variables}
            flipped = {v: (not witness[v] if v in combo else witness[v]) for v in variables}
            return HammingResult(size, (witness, flipped))
    return HammingResult(0, (dict(base_model), dict(base_model)))
