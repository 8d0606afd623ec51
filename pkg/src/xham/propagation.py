"""Substitution with propagation under exactly-one semantics.

Setting a variable, or rewriting one literal as another's complement, is
more than textual replacement: a literal that becomes true forces every
sibling in its clause false; a false literal is deleted; a clause holding
a complementary pair is satisfied by that pair, so its other literals are
false; a literal occurring twice must be false (two true copies would
oversatisfy); deletions create units which force further values. The
engine runs these rules to a fixpoint and reports either a simplified
formula plus everything it forced, or the canonical unsatisfiable
formula.

Every rule application strictly shrinks (forced variables grow, clauses
or literal counts drop), so the fixpoint always terminates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formula import Assignment, Formula, unsat_formula


@dataclass(frozen=True)
class PropagationResult:
    """Outcome of one propagation call.

    forced holds every assignment fixed during propagation, including the
    trigger. equivalences are (source, target) literal pairs with equal
    truth value, recorded by dual substitution; sources no longer occur
    in the formula. freed lists variables that vanished from the formula
    without being forced or rewritten (both values extend any model).
    """

    formula: Formula
    forced: Assignment
    equivalences: tuple[tuple[int, int], ...]
    freed: tuple[int, ...]
    unsat: bool


def normalize(formula: Formula) -> PropagationResult:
    """Run the simplification rules alone, with no trigger."""
    return _propagate(formula, {}, ())


def assign(formula: Formula, var: int, value: bool) -> PropagationResult:
    """Substitute a value for a variable and propagate.

    The x-models of the result, extended by `forced`, are exactly the
    x-models of the input in which var has the given value.
    """
    if var not in {abs(l) for c in formula.clauses for l in c}:
        raise ValueError(f"variable {var} does not occur in the formula")
    return _propagate(formula, {var: value}, ())


def substitute_dual(formula: Formula, a: int, b: int) -> PropagationResult:
    """Rewrite literal `a` as the complement of literal `b`, then propagate.

    Every occurrence of a becomes the complement of b and every
    occurrence of a's complement becomes b. The pair (a, -b) is recorded
    as an equivalence: x-models of the result correspond one-to-one with
    x-models of the input in which a and b take opposite truth values.
    """
    occurring = {abs(l) for c in formula.clauses for l in c}
    if abs(a) == abs(b):
        raise ValueError("dual substitution needs literals of distinct variables")
    if abs(a) not in occurring or abs(b) not in occurring:
        raise ValueError("both literals must occur in the formula")
    rewritten = []
    for clause in formula.clauses:
        rewritten.append(
            tuple(-b if lit == a else (b if lit == -a else lit) for lit in clause)
        )
    target = Formula(formula.num_vars, tuple(rewritten))
    return _propagate(target, {}, ((a, -b),), orig_vars=occurring)


def extend_model(result: PropagationResult, model: Assignment, freed_value: bool = True) -> Assignment:
    """Extend a model of result.formula back over the input's variables.

    Freed variables default to `freed_value` unless the model already
    chose them; equivalences resolve latest-first so chained rewrites see
    their targets.
    """
    full = dict(model)
    full.update(result.forced)
    for var in result.freed:
        full.setdefault(var, freed_value)
    for src, tgt in reversed(result.equivalences):
        truth = full[abs(tgt)] == (tgt > 0)
        full[abs(src)] = truth if src > 0 else not truth
    return full


def _propagate(
    formula: Formula,
    trigger: Assignment,
    equivalences: tuple[tuple[int, int], ...],
    orig_vars: set[int] | None = None,
) -> PropagationResult:
    if orig_vars is None:
        orig_vars = {abs(l) for c in formula.clauses for l in c}
    forced: Assignment = dict(trigger)
    conflict = False

    def force(var: int, value: bool) -> None:
        nonlocal conflict
        old = forced.get(var)
        if old is None:
            forced[var] = value
        elif old != value:
            conflict = True

    clauses: list[tuple[int, ...]] = list(formula.clauses)
    changed = True
    while changed and not conflict:
        changed = False
        size_before = len(forced)
        kept: list[tuple[int, ...]] = []
        for lits in clauses:
            status, live = _settle_clause(lits, forced, force)
            if status == "unsat":
                conflict = True
                break
            if status == "keep":
                kept.append(live)
                if len(live) != len(lits):
                    changed = True
            else:  # dropped: satisfied and removed
                changed = True
        clauses = kept
        if len(forced) != size_before:
            changed = True

    if conflict:
        return PropagationResult(
            unsat_formula(formula.num_vars), dict(forced), equivalences, (), True
        )

    out = Formula(formula.num_vars, tuple(clauses))
    remaining = {abs(l) for c in clauses for l in c}
    sources = {abs(src) for src, _ in equivalences}
    freed = tuple(
        sorted(v for v in orig_vars if v not in forced and v not in sources and v not in remaining)
    )
    return PropagationResult(out, dict(forced), equivalences, freed, False)


def _settle_clause(lits, forced, force):
    """Evaluate one clause against the forced map and emit consequences.

    Returns ("unsat"|"drop"|"keep", live_literals). Forces discovered
    here land in the shared map; the caller loops until nothing moves.
    """
    n_true = 0
    live: list[int] = []
    for lit in lits:
        value = forced.get(abs(lit))
        if value is None:
            live.append(lit)
        elif value == (lit > 0):
            n_true += 1
    if n_true >= 2:
        return "unsat", ()

    pos: dict[int, int] = {}
    neg: dict[int, int] = {}
    order: list[int] = []
    for lit in live:
        v = abs(lit)
        if v not in pos and v not in neg:
            order.append(v)
        if lit > 0:
            pos[v] = pos.get(v, 0) + 1
        else:
            neg[v] = neg.get(v, 0) + 1

    pair_vars = [v for v in order if pos.get(v, 0) >= 1 and neg.get(v, 0) >= 1]
    if pair_vars:
        # A complementary pair contributes exactly one true literal, so
        # two pairs (or a pair plus a true constant) oversatisfy.
        if len(pair_vars) >= 2 or n_true == 1:
            return "unsat", ()
        v = pair_vars[0]
        p, q = pos.get(v, 0), neg.get(v, 0)
        if min(p, q) >= 2:
            return "unsat", ()
        for lit in live:
            if abs(lit) != v:
                force(abs(lit), lit < 0)
        if p == 1 and q == 1:
            pass  # either value works here; var may be freed overall
        elif p == 1:
            force(v, True)  # the lone positive copy is the single true literal
        else:
            force(v, False)
        return "drop", ()

    if n_true == 1:
        for lit in live:
            force(abs(lit), lit < 0)
        return "drop", ()

    # No true constant, no complementary pair. A literal occurring twice
    # with one polarity must be false; force and re-evaluate next sweep.
    dup = False
    for v in order:
        if pos.get(v, 0) >= 2:
            force(v, False)
            dup = True
        elif neg.get(v, 0) >= 2:
            force(v, True)
            dup = True
    if dup:
        return "keep", tuple(live)

    if not live:
        return "unsat", ()
    if len(live) == 1:
        force(abs(live[0]), live[0] > 0)
        return "drop", ()
    return "keep", tuple(live)
