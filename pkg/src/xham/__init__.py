"""Max Hamming distance between exact-satisfiability (XSAT) models.

An x-model satisfies every clause with exactly one true literal; this
package decides x-satisfiability, enumerates models, and computes the
maximum Hamming distance between any two x-models by three routes: a
brute-force oracle, a subset scan backed by the solver, and a branching
search over satisfactor roles. A recurrence-root helper covers runtime
analysis of branching rules.
"""

from .branching import (
    GeneralizedAssignment,
    NodeCounter,
    di_count,
    fix_count,
    gen_h,
    max_hamming_q,
    simplify_state,
)
from .dimacs import ParseError, load_formula, parse_formula, serialize_formula
from .formula import (
    BOTTOM,
    Assignment,
    Clause,
    Formula,
    HammingResult,
    connected_components,
    hamming_distance,
    max_bottom,
    unsat_formula,
    verify_xmodel,
)
from .gen import random_formula
from .oracle import (
    CapExceeded,
    check_zero_two,
    count_allowed_subsets_brute,
    enumerate_xmodels,
    expand_state,
    max_hamming_brute,
)
from .propagation import (
    PropagationResult,
    assign,
    extend_model,
    normalize,
    substitute_dual,
)
from .solver import find_xmodel
from .subset_scan import ScanStats, allowed_subset_check, flipped_union, max_hamming_p
from .tau import nth_root, parse_branch_spec, tau_root

__version__ = "0.1.0"

__all__ = [
    "Assignment",
    "BOTTOM",
    "CapExceeded",
    "Clause",
    "Formula",
    "GeneralizedAssignment",
    "HammingResult",
    "NodeCounter",
    "ParseError",
    "PropagationResult",
    "ScanStats",
    "allowed_subset_check",
    "assign",
    "check_zero_two",
    "connected_components",
    "count_allowed_subsets_brute",
    "di_count",
    "enumerate_xmodels",
    "expand_state",
    "extend_model",
    "find_xmodel",
    "fix_count",
    "flipped_union",
    "gen_h",
    "hamming_distance",
    "load_formula",
    "max_bottom",
    "max_hamming_brute",
    "max_hamming_p",
    "max_hamming_q",
    "normalize",
    "nth_root",
    "parse_branch_spec",
    "parse_formula",
    "random_formula",
    "serialize_formula",
    "simplify_state",
    "substitute_dual",
    "tau_root",
    "unsat_formula",
    "verify_xmodel",
]
