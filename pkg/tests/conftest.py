import itertools
import math

import pytest

from xham import Formula, enumerate_xmodels, extend_model, random_formula


def clause_count(n: int, length: int) -> int:
    """Clause count putting random instances near the sat/unsat boundary.

    The expected x-model count of a random instance is
    2^n * (length / 2^length)^m; solving for one expected model gives
    m = n * ln 2 / ln(2^length / length).
    """
    return max(1, round(n * math.log(2) / math.log((2 ** length) / length)))


def mixed_instances(length: int, count: int, seed_base: int, n_low: int = 4, n_high: int = 12):
    """Deterministic stream of (formula, seed) pairs for one clause length."""
    lo = max(n_low, length)
    out = []
    for i in range(count):
        n = lo + (i % (n_high - lo + 1))
        m = clause_count(n, length)
        seed = seed_base + i
        out.append(random_formula(n, m, length, seed))
    return out


def formula(*clauses, n=None) -> Formula:
    return Formula.from_clauses(clauses, num_vars=n)


@pytest.fixture
def tiny():
    """(a or b or c), (a or b or d): three models, max distance 3."""
    return formula((1, 2, 3), (1, 2, 4))


def expanded_models(result, input_vars):
    """All assignments over input_vars represented by a propagation result."""
    out = []
    for model in enumerate_xmodels(result.formula):
        for picks in itertools.product((False, True), repeat=len(result.freed)):
            chosen = dict(model)
            chosen.update(zip(result.freed, picks))
            full = extend_model(result, chosen)
            out.append({v: full[v] for v in input_vars})
    return out


def assert_model_preservation(f, result, keep=lambda m: True):
    """Model sets agree between input (filtered) and the extended output."""
    want = [{v: m[v] for v in f.variables()} for m in enumerate_xmodels(f) if keep(m)]
    got = expanded_models(result, f.variables())
    as_set = lambda ms: {tuple(sorted(m.items())) for m in ms}
    assert as_set(got) == as_set(want)
    assert len(got) == len(want)  # no double-represented model
