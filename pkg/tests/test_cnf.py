import pytest

from hanabi.cnf import CnfFormula, parse_dimacs
from hanabi.errors import CnfError, Not3Sat


def test_parse_single_clause():
    f = parse_dimacs("p cnf 3 1\n1 -2 3 0")
    assert f.num_vars == 3 and f.clauses == ((1, -2, 3),)


def test_parse_worked_formula(worked_formula):
    assert parse_dimacs("p cnf 3 2\n1 -2 3 0\n1 2 -3 0") == worked_formula


def test_comments_split_clauses_and_terminator():
    text = "c hello\np cnf 4 2\n1 2\n3 0 -4\n-1 2 0\n%\n0\n"
    assert parse_dimacs(text).clauses == ((1, 2, 3), (-4, -1, 2))


@pytest.mark.parametrize("text,exc,line", [
    ("p cnf 3 1\n1 1 2 0", Not3Sat, 2),
    ("p cnf 3 1\n1 2 0", Not3Sat, 2),
    ("p cnf 3 1\n1 2 3 4 0", Not3Sat, 2),
    ("p cnf 3 1\n1 2 5 0", CnfError, 2),
    ("p cnf 3 1\n1 2 x 0", CnfError, 2),
    ("1 2 3 0", CnfError, 1),
    ("p cnf 3 1\n1 2 3", CnfError, 2),
    ("p cnf 3\n", CnfError, 1),
    ("p cnf 3 1\np cnf 3 1\n", CnfError, 2),
])
def test_errors(text, exc, line):
    with pytest.raises(exc) as info:
        parse_dimacs(text)
    assert info.value.line == line


def test_count_mismatch():
    with pytest.raises(CnfError, match="declares 2"):
        parse_dimacs("p cnf 3 2\n1 2 3 0\n")


def test_satisfiability(worked_formula):
    assert worked_formula.satisfied_by((True, True, True))
    assert not worked_formula.satisfied_by((False, True, False))
    assert worked_formula.first_satisfying() == (True, True, True)
    signs = [(a, b, c) for a in (1, -1) for b in (2, -2) for c in (3, -3)]
    assert CnfFormula(3, signs).first_satisfying() is None
    assert parse_dimacs(worked_formula.to_dimacs()) == worked_formula
