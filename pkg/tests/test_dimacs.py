import pytest
from hypothesis import given
from hypothesis import strategies as st

from xham import Formula, ParseError, parse_formula, serialize_formula

from conftest import formula


class TestParse:
    def test_single_clause(self):
        f = parse_formula("p xsat 3 1\n1 2 3 0")
        assert f.num_vars == 3
        assert f.clauses == ((1, 2, 3),)

    def test_unit_clauses(self):
        f = parse_formula("p xsat 2 2\n1 0\n-1 0")
        assert f.num_vars == 2
        assert f.clauses == ((1,), (-1,))

    def test_index_above_declared_count(self):
        with pytest.raises(ParseError, match="exceeds"):
            parse_formula("p xsat 2 1\n1 3 0")

    def test_comments_and_layout_are_free(self):
        f = parse_formula("c header comment\np xsat 3 2\n1 2\n3 0 -1\nc mid\n-2 -3 0\n")
        assert f.clauses == ((1, 2, 3), (-1, -2, -3))

    def test_missing_terminator(self):
        with pytest.raises(ParseError, match="terminating 0"):
            parse_formula("p xsat 2 1\n1 2")

    def test_malformed_header(self):
        with pytest.raises(ParseError, match="header"):
            parse_formula("p cnf 2 1\n1 2 0")

    def test_wrong_clause_count(self):
        with pytest.raises(ParseError, match="declares"):
            parse_formula("p xsat 2 2\n1 2 0")

    def test_error_names_line(self):
        with pytest.raises(ParseError, match="line 3"):
            parse_formula("p xsat 2 1\nc filler\n1 9 0")

    def test_empty_clause_round_trips(self):
        f = parse_formula("p xsat 0 1\n0")
        assert f.clauses == ((),)


class TestSerialize:
    def test_single_clause(self):
        assert serialize_formula(formula((1, 2, 3))) == "p xsat 3 1\n1 2 3 0\n"

    def test_empty_formula(self):
        assert serialize_formula(Formula(0, ())) == "p xsat 0 0\n"

    def test_num_vars_inferred_when_unset(self):
        f = Formula.from_clauses([(1,), (-1,)])
        assert serialize_formula(f) == "p xsat 1 2\n1 0\n-1 0\n"


@given(
    st.integers(1, 8).flatmap(
        lambda n: st.lists(
            st.lists(
                st.integers(1, n).flatmap(lambda v: st.sampled_from([v, -v])),
                max_size=5,
            ).map(tuple),
            max_size=6,
        ).map(lambda cs: Formula(n, tuple(cs)))
    )
)
def test_round_trip(f):
    assert parse_formula(serialize_formula(f)) == f
