"""Random instance generation for tests and benchmarks."""

from __future__ import annotations

import random

from .formula import Formula


def random_formula(num_vars: int, num_clauses: int, clause_len: int, seed: int) -> Formula:
    """Uniform random instance, deterministic for a fixed seed.

    Each clause draws `clause_len` distinct variables and negates each
    with probability 1/2. Duplicate clauses may occur and are kept.
    """
    if clause_len > num_vars:
        raise ValueError(f"clause length {clause_len} exceeds variable count {num_vars}")
    rng = random.Random(seed)
    clauses = []
    for _ in range(num_clauses):
        variables = rng.sample(range(1, num_vars + 1), clause_len)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in variables))
    return Formula(num_vars, tuple(clauses))
