"""3-CNF formulas and DIMACS parsing."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .errors import CnfError, Not3Sat

Clause = tuple[int, int, int]


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[Clause, ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(cl) for cl in self.clauses))
        if self.num_vars < 1:
            raise CnfError(f"need at least one variable, got {self.num_vars}")
        if not self.clauses:
            raise CnfError("formula has no clauses")
        for j, clause in enumerate(self.clauses, start=1):
            check_clause(clause, self.num_vars, f"clause {j}")

    @property
    def m(self) -> int:
        return len(self.clauses)

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        return all(clause_satisfied(cl, assignment) for cl in self.clauses)

    def satisfying_assignments(self) -> Iterator[tuple[bool, ...]]:
        """Brute force over all 2^v assignments."""
        for bits in product((True, False), repeat=self.num_vars):
            if self.satisfied_by(bits):
                yield bits

    def first_satisfying(self) -> tuple[bool, ...] | None:
        return next(self.satisfying_assignments(), None)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {self.m}"]
        lines += [" ".join(map(str, cl)) + " 0" for cl in self.clauses]
        return "\n".join(lines) + "\n"


def clause_satisfied(clause: Clause, assignment: Sequence[bool]) -> bool:
    return any(assignment[abs(lit) - 1] == (lit > 0) for lit in clause)


def check_clause(clause, num_vars: int, where: str, line: int | None = None) -> None:
    if len(clause) != 3:
        raise Not3Sat(f"{where} has {len(clause)} literals, expected 3", line)
    for lit in clause:
        if lit == 0 or abs(lit) > num_vars:
            raise CnfError(f"{where}: literal {lit} outside variables 1..{num_vars}", line)
    if len({abs(lit) for lit in clause}) != 3:
        raise Not3Sat(f"{where} repeats a variable: {list(clause)}", line)


def parse_dimacs(text: str) -> CnfFormula:
    num_vars = num_clauses = None
    clauses: list[Clause] = []
    current: list[int] = []
    current_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            fields = line.split()
            if num_vars is not None:
                raise CnfError("duplicate header", lineno)
            if len(fields) != 4 or fields[1] != "cnf":
                raise CnfError(f"bad header {line!r}", lineno)
            try:
                num_vars, num_clauses = int(fields[2]), int(fields[3])
            except ValueError:
                raise CnfError(f"bad header {line!r}", lineno) from None
            if num_vars < 1 or num_clauses < 1:
                raise CnfError(f"bad header {line!r}", lineno)
            continue
        if num_vars is None:
            raise CnfError("clause before 'p cnf' header", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise CnfError(f"bad literal {tok!r}", lineno) from None
            if current_line is None:
                current_line = lineno
            if lit == 0:
                check_clause(current, num_vars, f"clause {len(clauses) + 1}", current_line)
                clauses.append(tuple(current))
                current, current_line = [], None
            else:
                current.append(lit)
    if num_vars is None:
        raise CnfError("missing 'p cnf' header")
    if current:
        raise CnfError("last clause is not terminated by 0", current_line)
    if len(clauses) != num_clauses:
        raise CnfError(f"header declares {num_clauses} clauses, found {len(clauses)}")
    return CnfFormula(num_vars, tuple(clauses))
