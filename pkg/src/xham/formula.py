"""Core types for exact satisfiability (XSAT).

Variables are dense positive integers 1..num_vars. A literal is a signed
variable index: k > 0 is the positive literal of variable k, -k its
negation. A clause is a tuple of literals, a formula an ordered multiset
of clauses. An assignment is an x-model when every clause contains
exactly one true literal.

The canonical unsatisfiable formula is the one holding a single empty
clause; `unsat_formula` builds it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

Clause = tuple[int, ...]
Assignment = dict[int, bool]


class _Bottom:
    """The "unsatisfiable" distance: below every integer, absorbs +k."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "BOTTOM"

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self


#: Answer for unsatisfiable instances. BOTTOM < 0 and BOTTOM + 1 is BOTTOM.
BOTTOM = _Bottom()


def max_bottom(*values):
    """Maximum that ignores BOTTOM unless every argument is BOTTOM."""
    if not values:
        raise ValueError("max_bottom needs at least one value")
    best = BOTTOM
    for v in values:
        if v is BOTTOM:
            continue
        if best is BOTTOM or v > best:
            best = v
    return best


@dataclass(frozen=True)
class HammingResult:
    """Answer of a max-Hamming computation.

    `distance` is BOTTOM for unsatisfiable input, otherwise the maximum
    pairwise Hamming distance over x-models (0 means a unique model).
    When witnesses are present they are two x-models realizing the
    distance.
    """

    distance: "int | _Bottom"
    witnesses: tuple[Assignment, Assignment] | None = None

    @property
    def unsat(self) -> bool:
        return self.distance is BOTTOM


@dataclass(frozen=True)
class Formula:
    """An XSAT instance: clause order and duplicate clauses are kept."""

    num_vars: int
    clauses: tuple[Clause, ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.num_vars < 0:
            raise ValueError("num_vars must be >= 0")
        for clause in self.clauses:
            for lit in clause:
                if not isinstance(lit, int) or lit == 0:
                    raise ValueError(f"bad literal {lit!r}: literals are nonzero ints")
                if abs(lit) > self.num_vars:
                    raise ValueError(
                        f"literal {lit} out of range for {self.num_vars} variables"
                    )

    @classmethod
    def from_clauses(cls, clauses, num_vars: int | None = None) -> "Formula":
        """Build a formula, inferring num_vars from the largest index if unset."""
        clauses = tuple(tuple(c) for c in clauses)
        if num_vars is None:
            num_vars = max((abs(l) for c in clauses for l in c), default=0)
        return cls(num_vars, clauses)

    def variables(self) -> list[int]:
        """Sorted variables actually occurring in clauses (Var(F))."""
        return sorted({abs(lit) for clause in self.clauses for lit in clause})

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def is_empty(self) -> bool:
        return not self.clauses


def unsat_formula(num_vars: int = 0) -> Formula:
    """The canonical unsatisfiable formula: a single empty clause."""
    return Formula(num_vars, ((),))


def literal_true(lit: int, assignment: Assignment) -> bool:
    return assignment[abs(lit)] == (lit > 0)


def verify_xmodel(formula: Formula, assignment: Assignment) -> bool:
    """True iff every clause has exactly one true literal under `assignment`.

    The assignment must be total over Var(formula); a partial one is a
    contract violation.
    """
    for clause in formula.clauses:
        count = 0
        for lit in clause:
            value = assignment.get(abs(lit))
            if value is None:
                raise ValueError(f"assignment misses variable {abs(lit)}")
            if value == (lit > 0):
                count += 1
        if count != 1:
            return False
    return True


def hamming_distance(a: Assignment, b: Assignment) -> int:
    """Number of variables on which two assignments disagree."""
    if a.keys() != b.keys():
        raise ValueError("assignments cover different variables")
    return sum(1 for v in a if a[v] != b[v])


def connected_components(formula: Formula) -> list[Formula]:
    """Split clauses by connected component of the formula graph.

    Variables are vertices; co-occurrence in a clause is an edge.
    Components are ordered by their first clause; each keeps the parent
    num_vars. Empty clauses form singleton components.
    """
    if not formula.clauses:
        return []
    # Union-find over variables, indexed by first clause touching them.
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    for clause in formula.clauses:
        vs = [abs(l) for l in clause]
        for v in vs:
            parent.setdefault(v, v)
        for v, w in itertools.pairwise(vs):
            union(v, w)

    groups: dict[object, list[Clause]] = {}
    order: list[object] = []
    empties = 0
    for clause in formula.clauses:
        if clause:
            key: object = find(abs(clause[0]))
        else:
            # Each empty clause is its own (unsatisfiable) component.
            key = ("empty", empties)
            empties += 1
        if key not in groups:
            groups[key] = []
            order.append(key)
        groups[key].append(clause)
    return [Formula(formula.num_vars, tuple(groups[k])) for k in order]
