"""A small XSAT decision procedure.

Branches on which literal of a longest clause is the satisfactor: making
one literal true forces every sibling false under exactly-one semantics,
so each clause yields as many branches as literals. Propagation does the
rest. Worst-case bounds are not a goal here; this is the inner solver for
the subset-scan algorithm and a fast satisfiability filter.
"""

from __future__ import annotations

from .formula import Assignment, Formula
from .propagation import assign, extend_model, normalize


def find_xmodel(formula: Formula) -> Assignment | None:
    """Return a total x-model over Var(formula), or None.

    Deterministic: ties between longest clauses break on clause order,
    branch literals are tried in clause order, and variables left
    unconstrained by propagation are filled positively.
    """
    result = normalize(formula)
    if result.unsat:
        return None
    model = _search(result.formula)
    if model is None:
        return None
    return extend_model(result, model)


def _search(formula: Formula) -> Assignment | None:
    if not formula.clauses:
        return {}
    clause = max(formula.clauses, key=len)
    for lit in clause:
        result = assign(formula, abs(lit), lit > 0)
        if result.unsat:
            continue
        sub = _search(result.formula)
        if sub is not None:
            return extend_model(result, sub)
    return None
