"""Reading and writing the instance file format.

DIMACS-inspired: comment lines start with `c`, the header is
`p xsat <num_vars> <num_clauses>`, and each clause is a whitespace
separated run of nonzero integers terminated by 0. Newlines carry no
meaning beyond whitespace, so clauses may span or share lines.
"""

from __future__ import annotations

from .formula import Formula


class ParseError(ValueError):
    """Malformed instance text; the message names the offending line."""


def parse_formula(text: str) -> Formula:
    """Parse instance text into a Formula.

    Clause literal order is preserved. Variable indices above the
    declared count are rejected rather than auto-extended.
    """
    tokens: list[tuple[str, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("c"):
            continue
        for tok in stripped.split():
            tokens.append((tok, lineno))

    if not tokens:
        raise ParseError("line 1: missing 'p xsat <vars> <clauses>' header")
    if len(tokens) < 4 or tokens[0][0] != "p" or tokens[1][0] != "xsat":
        raise ParseError(f"line {tokens[0][1]}: malformed header, expected 'p xsat <vars> <clauses>'")
    try:
        num_vars = int(tokens[2][0])
        num_clauses = int(tokens[3][0])
        if num_vars < 0 or num_clauses < 0:
            raise ValueError
    except ValueError:
        raise ParseError(f"line {tokens[2][1]}: header counts must be non-negative integers") from None

    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    last_line = tokens[3][1]
    for tok, lineno in tokens[4:]:
        last_line = lineno
        try:
            lit = int(tok)
        except ValueError:
            raise ParseError(f"line {lineno}: expected integer literal, got {tok!r}") from None
        if lit == 0:
            clauses.append(tuple(current))
            current = []
            continue
        if abs(lit) > num_vars:
            raise ParseError(f"line {lineno}: variable {abs(lit)} exceeds declared count {num_vars}")
        current.append(lit)
    if current:
        raise ParseError(f"line {last_line}: clause missing terminating 0")
    if len(clauses) != num_clauses:
        raise ParseError(
            f"line {last_line}: header declares {num_clauses} clauses, found {len(clauses)}"
        )
    return Formula(num_vars, tuple(clauses))


def serialize_formula(formula: Formula) -> str:
    """Render a formula in the instance format; parse round-trips it."""
    lines = [f"p xsat {formula.num_vars} {len(formula.clauses)}"]
    for clause in formula.clauses:
        lines.append(" ".join(str(lit) for lit in clause + (0,)))
    return "\n".join(lines) + "\n"


def load_formula(path) -> Formula:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_formula(handle.read())
