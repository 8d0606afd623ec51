"""Max Hamming distance by DPLL-style branching over satisfactor roles.

Under any two x-models a variable either keeps one value or flips. The
recursion branches a longest clause three ways: its chosen literal is
true in both models, false in both, or flips together with exactly one
other literal of the clause (a clause can never straddle a model pair on
just one variable, so flips come in pairs per clause). The third kind
rewrites one literal as the other's complement, which removes a variable
from the formula but keeps it linked in the state.

Simplification keeps the search small: extra singletons sharing a clause
pool into one representative slot, and binary clauses turn into recorded
equivalences. Removed variables survive in per-variable link sets — a
generalized assignment — and leaves are scored by `gen_h`, the exact
maximum pairwise Hamming distance over every concrete assignment the
leaf state represents.

A subtlety drives the state layout: once a variable represents a pooled
clause slot, its formula occurrences stop meaning "this variable is
true" and start meaning "the pool supplies this clause's satisfactor",
while the variable's own concrete value can disagree (a pool peer may
take the role). Links therefore record which reading they bind to: pool
memberships carry the member's clause polarity on the link, and dual
links carry whether they follow the parent's slot or its concrete value.
In {(1 2), (2 3 4), (4 5 6)} the binary clause ties variable 1 to the
concrete value of 2 before 2 pools clause (2 3 4); once 3 supplies that
clause's satisfactor, 2 reads false even though its slot is active, and
1 must mirror the concrete false, not the slot. Rewrites recorded after
a pool forms bind the slot instead.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .formula import (
    BOTTOM,
    Formula,
    HammingResult,
    connected_components,
    max_bottom,
)
from .propagation import PropagationResult, assign, normalize, substitute_dual


@dataclass
class NodeCounter:
    """Recursion-tree instrumentation: leaves never exceeds nodes."""

    nodes: int = 0
    leaves: int = 0


@dataclass
class GeneralizedAssignment:
    """Partial assignment plus the link forest for removed variables.

    values: slot values of settled variables (for a pool representative
      the slot says "some pool literal is the satisfactor"). free: roots
      whose clauses vanished with both slot values open. sing maps a
      representative to (member, polarity) pairs: singleton peers pooled
      into its clause slot, each remembered with the value that makes its
      own literal the satisfactor. sat holds the same polarity for the
      representative itself. dual maps a variable to
      (child, flip, slot_anchor) triples: the child was rewritten away
      against this variable and mirrors it (inverted when flip is set),
      following the slot value when slot_anchor is set and the concrete
      value otherwise.

    Every removed variable sits in exactly one sing or dual set and the
    links form a forest rooted at valued, free, or still-live variables.
    """

    values: dict[int, bool] = field(default_factory=dict)
    free: list[int] = field(default_factory=list)
    sing: dict[int, list[tuple[int, bool]]] = field(default_factory=dict)
    dual: dict[int, list[tuple[int, bool, bool]]] = field(default_factory=dict)
    sat: dict[int, bool] = field(default_factory=dict)

    def copy(self) -> "GeneralizedAssignment":
        return GeneralizedAssignment(
            dict(self.values),
            list(self.free),
            {v: list(ms) for v, ms in self.sing.items()},
            {v: list(cs) for v, cs in self.dual.items()},
            dict(self.sat),
        )

    def root_vars(self) -> set[int]:
        return set(self.values) | set(self.free)

    def is_grouped(self, var: int) -> bool:
        return var in self.sat

    def record_sing(self, rep_lit: int, victim_lit: int) -> None:
        """Pool a singleton peer into a representative's clause slot.

        The representative must not already head a pool from another
        clause; a previously pooled victim simply nests, its old pool
        expanding off the slot value this membership hands it.
        """
        rep, victim = abs(rep_lit), abs(victim_lit)
        pol = rep_lit > 0
        if self.sat.setdefault(rep, pol) != pol:
            raise ValueError(f"variable {rep} already pools a different clause slot")
        self.sing.setdefault(rep, []).append((victim, victim_lit > 0))

    def record_dual(self, survivor_lit: int, removed_lit: int) -> None:
        flip = (removed_lit > 0) == (survivor_lit > 0)
        anchor = self.is_grouped(abs(survivor_lit))
        self.dual.setdefault(abs(survivor_lit), []).append((abs(removed_lit), flip, anchor))

    def absorb(self, result: PropagationResult) -> set[int]:
        """Fold a propagation result in; returns the new root variables."""
        new_roots: set[int] = set()
        for var, value in result.forced.items():
            old = self.values.get(var)
            if old is None:
                self.values[var] = value
                new_roots.add(var)
            elif old != value:
                raise ValueError(f"variable {var} forced to both values")
        known_free = set(self.free)
        for var in result.freed:
            if var not in known_free and var not in self.values:
                self.free.append(var)
                new_roots.add(var)
        return new_roots

    def validate(self, require_rooted: bool = False) -> None:
        """Check forest invariants; raise ValueError on ill-formed links."""
        parent: dict[int, int] = {}
        rooted = set(self.values) | set(self.free)
        for var, members in self.sing.items():
            if members and var not in self.sat:
                raise ValueError(f"pool head {var} lacks a slot polarity")
            for member, _ in members:
                if member in parent:
                    raise ValueError(f"variable {member} linked from two sets")
                parent[member] = var
        for var, children in self.dual.items():
            for child, _, _ in children:
                if child in parent:
                    raise ValueError(f"variable {child} linked from two sets")
                parent[child] = var
        for child in parent:
            if child in rooted:
                raise ValueError(f"linked variable {child} also carries a value")
            seen = {child}
            cursor = child
            while cursor in parent:
                cursor = parent[cursor]
                if cursor in seen:
                    raise ValueError(f"link cycle through variable {cursor}")
                seen.add(cursor)
            if require_rooted and cursor not in rooted:
                raise ValueError(f"link tree root {cursor} has no value and is not free")

    def universe(self) -> set[int]:
        """All variables the state speaks for."""
        out = set(self.values) | set(self.free)
        for var, members in self.sing.items():
            out.add(var)
            out.update(m for m, _ in members)
        for var, children in self.dual.items():
            out.add(var)
            out.update(c for c, _, _ in children)
        return out


def slot_options(state: GeneralizedAssignment, var: int, slot: bool):
    """Concrete readings of a variable's slot value.

    Yields (concrete_value, member_slots) pairs. For a plain variable the
    slot is the value. For a pool head whose slot is active, any one
    participant's literal may be the satisfactor; peers hand their own
    subtrees the slot values induced by that choice.
    """
    members = state.sing.get(var, ())
    own_pol = state.sat.get(var)
    if members and slot == own_pol:
        for chosen in (var, *(m for m, _ in members)):
            value = own_pol if chosen == var else not own_pol
            yield value, {m: (pol if m == chosen else not pol) for m, pol in members}
    else:
        yield slot, {m: not pol for m, pol in members}


def _tree_maxdist(state, var, slot_a, slot_b, memo) -> int:
    """Max Hamming distance over this subtree between two slot readings."""
    key = (var, slot_a, slot_b)
    cached = memo.get(key)
    if cached is not None:
        return cached
    best = -1
    for value_a, members_a in slot_options(state, var, slot_a):
        for value_b, members_b in slot_options(state, var, slot_b):
            dist = int(value_a != value_b)
            for child, flip, anchor in state.dual.get(var, ()):
                basis_a = slot_a if anchor else value_a
                basis_b = slot_b if anchor else value_b
                dist += _tree_maxdist(state, child, basis_a ^ flip, basis_b ^ flip, memo)
            for member, _ in state.sing.get(var, ()):
                dist += _tree_maxdist(state, member, members_a[member], members_b[member], memo)
            if dist > best:
                best = dist
    memo[key] = best
    return best


def gen_h(state: GeneralizedAssignment, roots=None) -> int:
    """Exact maximum pairwise Hamming distance represented by a state.

    Roots are independent, so the total is the sum of per-tree maxima; a
    fixed root still contributes through satisfactor choices inside its
    pool and their ripples along dual chains, and a free root may read
    its slot differently in the two models.

    This maximizes over the same choice structure the per-role Fix/di
    accounting walks (`fix_count`/`di_count`) but scores both models
    jointly, which stays exact when a chain hangs off a pool participant
    whose concrete value disagrees with its slot.
    """
    state.validate()
    if roots is None:
        roots = sorted(state.root_vars())
    memo: dict = {}
    total = 0
    for var in roots:
        value = state.values.get(var)
        if value is not None:
            total += _tree_maxdist(state, var, value, value, memo)
        else:  # free root: the two models may read the slot either way
            total += max(
                _tree_maxdist(state, var, sa, sb, memo)
                for sa in (False, True)
                for sb in (False, True)
            )
    return total


def fix_count(state: GeneralizedAssignment, var: int) -> int:
    """Flips available in a subtree when this variable changes role.

    Recursive role accounting: a pool maximizes over which participant
    moves, a dual set flips together with its parent (values sum), a
    bare variable counts itself.
    """
    state.validate()
    return _fix(state, var, False, False)


def _fix(state, var, skip_sing, skip_dual) -> int:
    members = () if skip_sing else state.sing.get(var, ())
    if members:
        best = _fix(state, var, True, skip_dual)
        for member, _ in members:
            best = max(best, _fix(state, member, False, False))
        return best
    children = () if skip_dual else state.dual.get(var, ())
    if children:
        return _fix(state, var, skip_sing, True) + sum(
            _fix(state, child, False, False) for child, _, _ in children
        )
    return 1


def di_count(state: GeneralizedAssignment, var: int) -> int:
    """Flips available below a variable whose own slot is pinned.

    A pinned pool head whose slot supplies the satisfactor still yields
    `fix_count` worth of movement (the role may change hands); otherwise
    the linked variables inherit values and only their own subtrees
    contribute.
    """
    state.validate()
    return _di(state, var, state.values.get(var))


def _di(state, var, value) -> int:
    members = state.sing.get(var, ())
    if members and value is not None and state.sat.get(var) == value:
        return _fix(state, var, False, False)
    total = 0
    for child, flip, _ in state.dual.get(var, ()):
        total += _di(state, child, None if value is None else value ^ flip)
    for member, pol in members:
        total += _di(state, member, not pol)
    return total


def _degree_map(formula: Formula) -> Counter:
    return Counter(abs(lit) for clause in formula.clauses for lit in clause)


def simplify_state(formula: Formula, state: GeneralizedAssignment):
    """Pool extra singletons and eliminate binary clauses, to a fixpoint.

    Returns the simplified formula and an updated copy of the state. An
    unsatisfiable outcome surfaces as the canonical single-empty-clause
    formula.
    """
    state = state.copy()
    formula, _ = _simplify(formula, state)
    return formula, state


def _simplify(formula: Formula, state: GeneralizedAssignment):
    """In-place simplification loop; returns (formula, unsat)."""
    while True:
        result = normalize(formula)
        state.absorb(result)
        if result.unsat:
            return result.formula, True
        formula = result.formula

        degrees = _degree_map(formula)
        merged = False
        for index, clause in enumerate(formula.clauses):
            singles = [lit for lit in clause if degrees[abs(lit)] == 1]
            if len(singles) < 2:
                continue
            # The pool head must not already head a pool from another
            # clause; a head that went singleton again nests as a member.
            fresh = [lit for lit in singles if not state.is_grouped(abs(lit))]
            if not fresh:
                continue
            rep = fresh[0]
            victim = next(lit for lit in singles if lit != rep)
            state.record_sing(rep, victim)
            shrunk = tuple(l for l in clause if l != victim)
            clauses = list(formula.clauses)
            clauses[index] = shrunk
            formula = Formula(formula.num_vars, tuple(clauses))
            merged = True
            break
        if merged:
            continue

        eliminated = False
        for clause in formula.clauses:
            if len(clause) != 2:
                continue
            first, second = clause
            # Keep a non-singleton alive when there is one; the removed
            # side hangs below the survivor either way.
            if degrees[abs(second)] == 1 and degrees[abs(first)] > 1:
                removed, survivor = second, first
            else:
                removed, survivor = first, second
            result = substitute_dual(formula, removed, survivor)
            state.record_dual(survivor, removed)
            state.absorb(result)
            if result.unsat:
                return result.formula, True
            formula = result.formula
            eliminated = True
            break
        if not eliminated:
            return formula, False


def max_hamming_q(
    formula: Formula,
    counter: NodeCounter | None = None,
    leaf_hook=None,
) -> HammingResult:
    """Exact max Hamming distance over x-models, by branching.

    Returns the distance only (no witnesses). `counter` collects
    recursion-tree statistics. `leaf_hook(state, trail)`, if given, is
    invoked whenever the formula runs empty, with the accumulated state
    and the branch decisions that led there — an observation point for
    verification.
    """
    if counter is None:
        counter = NodeCounter()
    distance = _q(formula, GeneralizedAssignment(), frozenset(), counter, leaf_hook, ())
    return HammingResult(distance)


def _q(formula, state, pending, counter, leaf_hook, trail):
    counter.nodes += 1
    before = state.root_vars()
    formula, dead = _simplify(formula, state)
    if dead:
        return BOTTOM
    retired = pending | (state.root_vars() - before)

    base = 0
    if retired:
        counter.leaves += 1
        base = gen_h(state, roots=sorted(retired))

    if not formula.clauses:
        if leaf_hook is not None:
            leaf_hook(state, trail)
        return base

    components = connected_components(formula)
    if len(components) > 1:
        total = base
        for component in components:
            sub = _q(component, state, frozenset(), counter, leaf_hook, trail)
            if sub is BOTTOM:
                return BOTTOM
            total += sub
        return total

    clause = max(formula.clauses, key=len)
    assert len(clause) >= 3, "units and binaries are gone after simplification"
    degrees = _degree_map(formula)
    pivot = _pick_pivot(clause, degrees)
    others = [lit for lit in clause if lit != pivot]

    def branch(result, link=None, step=()):
        if result.unsat:
            return BOTTOM
        child = state.copy()
        if link is not None:
            child.record_dual(*link)
        new_pending = frozenset(child.absorb(result))
        return _q(result.formula, child, new_pending, counter, leaf_hook, trail + step)

    pivot_grouped = state.is_grouped(abs(pivot))
    ans_true = branch(
        assign(formula, abs(pivot), pivot > 0), step=(("true", pivot, pivot_grouped),)
    )
    ans_false = _false_branch(formula, state, clause, pivot, degrees, counter, leaf_hook, trail)
    if ans_true is BOTTOM or ans_false is BOTTOM:
        return base + max_bottom(ans_true, ans_false)

    answers = [ans_true, ans_false]
    for lit in others:
        # The pivot flips together with exactly this literal; it leaves
        # the formula but stays linked below the literal's variable, so
        # the leaf scoring pays for its subtree.
        result = substitute_dual(formula, pivot, lit)
        step = ("dual", pivot, lit, pivot_grouped, state.is_grouped(abs(lit)))
        answers.append(branch(result, link=(lit, pivot), step=(step,)))
    return base + max_bottom(*answers)


def _pick_pivot(clause, degrees):
    """Lowest-indexed non-singleton literal, or lowest-indexed literal.

    Pooling normally leaves at most one singleton per clause, but a
    pool head may return to degree one, in which case any literal is a
    sound (if less balanced) pivot.
    """
    non_singletons = [lit for lit in clause if degrees[abs(lit)] > 1]
    if non_singletons:
        return min(non_singletons, key=abs)
    return min(clause, key=abs)


def _false_branch(formula, state, clause, pivot, degrees, counter, leaf_hook, trail):
    """ans_false: plain recursion, except length-4 clauses split further.

    For a length-4 clause, setting the pivot false leaves a ternary
    clause worth branching immediately (it balances the recurrence). The
    split is only taken when propagation left that ternary clause
    intact; any cascade falls back to the plain branch, which is always
    sound.
    """
    result = assign(formula, abs(pivot), pivot < 0)

    def child_call(res, base_state, base_pending, link, step):
        if res.unsat:
            return BOTTOM
        child = base_state.copy()
        if link is not None:
            child.record_dual(*link)
        new_pending = frozenset(base_pending | child.absorb(res))
        return _q(res.formula, child, new_pending, counter, leaf_hook, trail + step)

    pivot_grouped = state.is_grouped(abs(pivot))

    def plain():
        return child_call(result, state, frozenset(), None, (("false", pivot, pivot_grouped),))

    if len(clause) != 4 or result.unsat:
        return plain()
    shrunk = tuple(l for l in clause if l != pivot)
    if shrunk not in result.formula.clauses:
        return plain()

    second = _pick_pivot(shrunk, degrees)
    rest = [lit for lit in shrunk if lit != second]

    inner = result.formula
    inner_state = state.copy()
    inner_pending = frozenset(inner_state.absorb(result))
    prefix = (("false", pivot, pivot_grouped),)
    second_grouped = state.is_grouped(abs(second))

    def sub(res, link, step):
        return child_call(res, inner_state, inner_pending, link, prefix + (step,))

    ans1 = sub(assign(inner, abs(second), second > 0), None, ("true", second, second_grouped))
    ans2 = sub(assign(inner, abs(second), second < 0), None, ("false", second, second_grouped))
    if ans1 is BOTTOM or ans2 is BOTTOM:
        return max_bottom(ans1, ans2)
    ans3 = sub(
        substitute_dual(inner, second, rest[0]),
        (rest[0], second),
        ("dual", second, rest[0], second_grouped, state.is_grouped(abs(rest[0]))),
    )
    ans4 = sub(
        substitute_dual(inner, second, rest[1]),
        (rest[1], second),
        ("dual", second, rest[1], second_grouped, state.is_grouped(abs(rest[1]))),
    )
    return max_bottom(ans1, ans2, ans3, ans4)
