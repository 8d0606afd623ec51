import itertools
import random

from xham import (
    BOTTOM,
    Formula,
    GeneralizedAssignment,
    NodeCounter,
    di_count,
    enumerate_xmodels,
    expand_state,
    fix_count,
    gen_h,
    max_hamming_brute,
    max_hamming_q,
    random_formula,
    simplify_state,
)

from conftest import clause_count, formula


class TestSimplifyState:
    def test_all_singleton_clause_pools_and_forces(self):
        out, state = simplify_state(formula((1, 2, 3)), GeneralizedAssignment())
        assert out.clauses == ()
        # peers pool under one slot (nested), the surviving unit is forced
        # true with its satisfactor polarity recorded
        [(root, value)] = state.values.items()
        assert value is True and state.sat[root] is True
        assert state.universe() == {1, 2, 3}
        got = {tuple(sorted(m.items())) for m in expand_state(state)}
        want = {
            ((1, True), (2, False), (3, False)),
            ((1, False), (2, True), (3, False)),
            ((1, False), (2, False), (3, True)),
        }
        assert got == want

    def test_binary_clause_records_dual_link(self):
        out, state = simplify_state(formula((1, 2), (2, 3, 4)), GeneralizedAssignment())
        assert (1, True, False) in state.dual[2]

    def test_fixpoint_when_nothing_applies(self, tiny):
        out, state = simplify_state(tiny, GeneralizedAssignment())
        assert out == tiny
        assert state == GeneralizedAssignment()

    def test_unsat_surfaces_as_empty_clause(self):
        out, _ = simplify_state(formula((1,), (-1,)), GeneralizedAssignment())
        assert out.clauses == ((),)


def leaf_state(**kw):
    return GeneralizedAssignment(**kw)


class TestFixCount:
    def test_leaf(self):
        state = leaf_state(values={1: True})
        assert fix_count(state, 1) == 1

    def test_dual_pair_flips_together(self):
        state = leaf_state(values={1: True}, dual={1: [(2, True, False)]})
        assert fix_count(state, 1) == 2

    def test_pool_maximizes_over_members(self):
        state = leaf_state(
            values={1: True}, sing={1: [(2, True), (3, True)]}, sat={1: True}
        )
        assert fix_count(state, 1) == 1


class TestDiCount:
    def test_leaf_is_zero(self):
        state = leaf_state(values={1: True})
        assert di_count(state, 1) == 0

    def test_satisfactor_pool_counts_fix(self):
        state = leaf_state(values={1: True}, sing={1: [(2, True)]}, sat={1: True})
        assert di_count(state, 1) == fix_count(state, 1) == 1

    def test_non_satisfactor_dual_bottoms_out(self):
        state = leaf_state(values={1: True}, dual={1: [(2, True, False)]})
        assert di_count(state, 1) == 0


class TestGenH:
    def test_satisfactor_pool(self):
        state = leaf_state(
            values={1: True}, sing={1: [(2, True), (3, True)]}, sat={1: True}
        )
        assert gen_h(state) == 2

    def test_all_fixed_no_links(self):
        state = leaf_state(values={1: True, 2: False})
        assert gen_h(state) == 0

    def test_free_root_with_dual_chain(self):
        state = leaf_state(free=[2], dual={2: [(1, True, False)]})
        assert gen_h(state) == 2

    def test_matches_brute_maximum_over_expansions(self):
        """Binding contract: gen_h equals the pairwise max over expand_state."""
        rng = random.Random(77)
        seen = 0
        for length in (2, 3, 4, 5):
            for i in range(30):
                n = max(4, length) + rng.randrange(6)
                f = random_formula(n, clause_count(n, length), length, seed=9900 + 97 * i + length)
                leaves = []
                max_hamming_q(f, leaf_hook=lambda s, t: leaves.append(s.copy()))
                for state in leaves[:4]:
                    try:
                        expansions = expand_state(state)
                    except ValueError:
                        continue
                    keys = sorted(state.universe())
                    best = 0
                    for a, b in itertools.combinations(expansions, 2):
                        best = max(best, sum(1 for v in keys if a[v] != b[v]))
                    assert gen_h(state) == best
                    seen += 1
        assert seen > 50


class TestMaxHammingQ:
    def test_unsat(self):
        assert max_hamming_q(formula((1,), (-1,))).distance is BOTTOM

    def test_disjoint_components_add(self):
        assert max_hamming_q(formula((1, 2), (3, 4))).distance == 4

    def test_two_clauses(self, tiny):
        assert max_hamming_q(tiny).distance == 3

    def test_no_witnesses(self, tiny):
        assert max_hamming_q(tiny).witnesses is None

    def test_counter_tracks_nodes_and_leaves(self, tiny):
        counter = NodeCounter()
        max_hamming_q(tiny, counter)
        assert counter.nodes >= 1
        assert 0 <= counter.leaves <= counter.nodes

    def test_deterministic_node_count(self, tiny):
        a, b = NodeCounter(), NodeCounter()
        max_hamming_q(tiny, a)
        max_hamming_q(tiny, b)
        assert (a.nodes, a.leaves) == (b.nodes, b.leaves)

    def test_agrees_with_oracle_on_random_suite(self):
        for length in (2, 3, 4, 5, 6):
            for i in range(60):
                n = max(4, length) + (i % 7)
                f = random_formula(n, clause_count(n, length), length, seed=8100 + 13 * i + length)
                want = max_hamming_brute(f).distance
                got = max_hamming_q(f).distance
                assert (got is BOTTOM) == (want is BOTTOM)
                if want is not BOTTOM:
                    assert got == want


def shift_formula(f: Formula, offset: int) -> Formula:
    clauses = tuple(
        tuple(lit + offset if lit > 0 else lit - offset for lit in c) for c in f.clauses
    )
    return Formula(f.num_vars + offset, clauses)


class TestInvariants:
    def test_component_additivity(self):
        for i in range(30):
            f1 = random_formula(5, clause_count(5, 3), 3, seed=3300 + i)
            f2 = shift_formula(random_formula(5, clause_count(5, 3), 3, seed=3400 + i), 5)
            union = Formula(10, f1.clauses + f2.clauses)
            d1 = max_hamming_q(f1).distance
            d2 = max_hamming_q(f2).distance
            du = max_hamming_q(union).distance
            if d1 is BOTTOM or d2 is BOTTOM:
                assert du is BOTTOM
            else:
                assert du == d1 + d2

    def test_symmetry_under_renaming_and_polarity_flips(self):
        rng = random.Random(5)
        for i in range(30):
            f = random_formula(7, clause_count(7, 3), 3, seed=2200 + i)
            perm = list(range(1, 8))
            rng.shuffle(perm)
            flips = {v: rng.random() < 0.5 for v in range(1, 8)}
            mapping = {v: perm[v - 1] for v in range(1, 8)}
            clauses = tuple(
                tuple(
                    (1 if (lit > 0) != flips[abs(lit)] else -1) * mapping[abs(lit)]
                    for lit in c
                )
                for c in f.clauses
            )
            g = Formula(7, clauses)
            assert max_hamming_q(f).distance == max_hamming_q(g).distance

    def test_leaf_states_are_well_formed(self):
        for i in range(20):
            f = random_formula(8, clause_count(8, 4), 4, seed=1500 + i)
            leaves = []
            max_hamming_q(f, leaf_hook=lambda s, t: leaves.append(s.copy()))
            for state in leaves:
                state.validate()

    def test_simplification_only_instances_expand_to_all_models(self):
        """When no branching happens, the single leaf represents Var(F) exactly."""
        f = formula((1, 2, 3, 4))
        leaves = []
        max_hamming_q(f, leaf_hook=lambda s, t: leaves.append((s.copy(), t)))
        assert len(leaves) == 1 and leaves[0][1] == ()
        got = {tuple(sorted(m.items())) for m in expand_state(leaves[0][0])}
        want = {tuple(sorted(m.items())) for m in enumerate_xmodels(f)}
        assert got == want
