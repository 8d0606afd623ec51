"""Exhaustive ground-truth engines.

Everything here trades time for certainty: model enumeration over all
2^n assignments, max Hamming by pairwise comparison, subset counting by
full scan, and expansion of generalized assignments into the concrete
models they stand for. Caps refuse oversized inputs instead of running
for hours.
"""

from __future__ import annotations

import itertools

import numpy as np

from .branching import GeneralizedAssignment, slot_options
from .formula import BOTTOM, Assignment, Formula, HammingResult

DEFAULT_ENUM_CAP = 24
DEFAULT_SUBSET_CAP = 20
_CHUNK = 1 << 16


class CapExceeded(ValueError):
    """Instance too large for exhaustive treatment."""


def enumerate_xmodels(formula: Formula, cap: int = DEFAULT_ENUM_CAP) -> list[Assignment]:
    """All x-models over Var(formula), in lexicographic order.

    Assignments are ordered as tuples of booleans over ascending
    variables, False before True.
    """
    variables = formula.variables()
    n = len(variables)
    if n > cap:
        raise CapExceeded(f"{n} variables exceed enumeration cap {cap}")
    if any(not clause for clause in formula.clauses):
        return []
    if n == 0:
        return [{}]

    position = {v: i for i, v in enumerate(variables)}
    shifts = np.array([n - 1 - position[v] for v in variables], dtype=np.uint32)
    models: list[Assignment] = []
    for start in range(0, 1 << n, _CHUNK):
        stop = min(start + _CHUNK, 1 << n)
        index = np.arange(start, stop, dtype=np.int64)
        bits = ((index[:, None] >> shifts[None, :]) & 1).astype(bool)
        ok = np.ones(stop - start, dtype=bool)
        for clause in formula.clauses:
            count = np.zeros(stop - start, dtype=np.int16)
            for lit in clause:
                column = bits[:, position[abs(lit)]]
                count += column if lit > 0 else ~column
            ok &= count == 1
        for row in np.nonzero(ok)[0]:
            models.append({v: bool(bits[row, position[v]]) for v in variables})
    return models


def max_hamming_brute(formula: Formula, cap: int = DEFAULT_ENUM_CAP) -> HammingResult:
    """Max pairwise Hamming distance by comparing every model pair.

    The witness pair is the lexicographically first maximizing one; a
    single model yields distance 0 witnessed by itself.
    """
    models = enumerate_xmodels(formula, cap)
    if not models:
        return HammingResult(BOTTOM)
    variables = formula.variables()
    if len(models) == 1:
        only = models[0]
        return HammingResult(0, (dict(only), dict(only)))
    matrix = np.array([[m[v] for v in variables] for m in models], dtype=bool)
    best = -1
    pair = (0, 0)
    for i in range(len(models) - 1):
        dist = (matrix[i + 1 :] != matrix[i]).sum(axis=1)
        j = int(np.argmax(dist))
        if int(dist[j]) > best:
            best = int(dist[j])
            pair = (i, i + 1 + j)
    return HammingResult(best, (dict(models[pair[0]]), dict(models[pair[1]])))


def check_zero_two(formula: Formula, model_a: Assignment, model_b: Assignment) -> bool:
    """Every clause holds 0 or 2 literals of variables where the models differ."""
    differing = {v for v in model_a if model_a[v] != model_b.get(v, model_a[v])}
    differing |= {v for v in model_b if model_b[v] != model_a.get(v, model_b[v])}
    for clause in formula.clauses:
        count = sum(1 for lit in clause if abs(lit) in differing)
        if count not in (0, 2):
            return False
    return True


def count_allowed_subsets_brute(formula: Formula, cap: int = DEFAULT_SUBSET_CAP) -> int:
    """Number of variable subsets touching every clause 0 or 2 times.

    Counts every S ⊆ Var(formula), the empty set included, such that each
    clause contains 0 or 2 literals of variables in S.
    """
    variables = formula.variables()
    n = len(variables)
    if n > cap:
        raise CapExceeded(f"{n} variables exceed subset cap {cap}")
    position = {v: i for i, v in enumerate(variables)}
    duplicate_free = all(len({abs(l) for l in c}) == len(c) for c in formula.clauses)
    if duplicate_free:
        masks = [sum(1 << position[abs(l)] for l in clause) for clause in formula.clauses]
        count = 0
        for subset in range(1 << n):
            for mask in masks:
                if (subset & mask).bit_count() not in (0, 2):
                    break
            else:
                count += 1
        return count
    # Clauses may mention a variable twice; count occurrences literally.
    clause_vars = [[abs(l) for l in clause] for clause in formula.clauses]
    count = 0
    for picks in itertools.product((False, True), repeat=n):
        chosen = {variables[i] for i in range(n) if picks[i]}
        if all(sum(v in chosen for v in vs) in (0, 2) for vs in clause_vars):
            count += 1
    return count


def expand_state(state: GeneralizedAssignment) -> list[Assignment]:
    """Every concrete assignment a leaf state represents.

    Fixed values are taken verbatim; a satisfactor group contributes one
    assignment per choice of satisfying participant; dual links follow
    their parent's concrete value; free roots take both values. Output is
    sorted for determinism.
    """
    state.validate(require_rooted=True)
    options: list[list[Assignment]] = []
    for var in sorted(state.values):
        options.append(_expand_tree(state, var, state.values[var]))
    for var in sorted(state.free):
        both = _expand_tree(state, var, False) + _expand_tree(state, var, True)
        options.append(both)

    assignments: list[Assignment] = [{}]
    for candidates in options:
        assignments = [{**base, **extra} for base in assignments for extra in candidates]
    keys = sorted(state.universe())
    assignments.sort(key=lambda m: tuple(m[k] for k in keys))
    return assignments


def _expand_tree(state, var, slot) -> list[Assignment]:
    out: list[Assignment] = []
    for value, member_slots in slot_options(state, var, slot):
        parts: list[list[Assignment]] = [[{var: value}]]
        for child, flip, anchor in state.dual.get(var, ()):
            basis = slot if anchor else value
            parts.append(_expand_tree(state, child, basis ^ flip))
        for member, member_slot in member_slots.items():
            parts.append(_expand_tree(state, member, member_slot))
        combined: list[Assignment] = [{}]
        for candidates in parts:
            combined = [{**base, **extra} for base in combined for extra in candidates]
        out.extend(combined)
    return out
