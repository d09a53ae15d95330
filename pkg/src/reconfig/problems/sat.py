"""CNF formulas over named variables and their satisfied-clause fraction."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Mapping, Optional

from ..errors import DomainError

# A literal is (variable, polarity); polarity True means the positive literal.
Literal = tuple


def neg(lit: Literal) -> Literal:
    return (lit[0], not lit[1])


@dataclass(frozen=True)
class CnfFormula:
    """Clause list over named variables.

    ``uniform_width`` is k when every clause has exactly k distinct literals,
    else None.  ``occurrence_bound`` is the maximum number of literal
    occurrences of any single variable, counted over the whole clause list.
    """

    variables: tuple
    clauses: tuple

    def __post_init__(self):
        vset = set(self.variables)
        if len(vset) != len(self.variables):
            raise DomainError("duplicate variables")
        occur = {v: 0 for v in self.variables}
        widths = set()
        for c in self.clauses:
            if not c:
                raise DomainError("empty clause")
            if len(set(c)) != len(c):
                raise DomainError(f"clause {c!r} repeats a literal")
            widths.add(len(c))
            for (v, pol) in c:
                if v not in vset:
                    raise DomainError(f"clause references unknown variable {v!r}")
                if not isinstance(pol, bool):
                    raise DomainError("literal polarity must be a bool")
                occur[v] += 1
        object.__setattr__(self, "_occurrence_bound", max(occur.values()) if occur else 0)
        object.__setattr__(self, "_uniform_width", widths.pop() if len(widths) == 1 else None)
        object.__setattr__(self, "_var_index", {v: i for i, v in enumerate(self.variables)})

    @property
    def uniform_width(self) -> Optional[int]:
        return self._uniform_width

    @property
    def occurrence_bound(self) -> int:
        return self._occurrence_bound

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def max_width(self) -> int:
        return max((len(c) for c in self.clauses), default=0)

    def clauses_with(self, variable) -> tuple:
        return tuple(j for j, c in enumerate(self.clauses) if any(v == variable for v, _ in c))


def check_truth_assignment(formula: CnfFormula, sigma: Mapping) -> None:
    for v in formula.variables:
        if v not in sigma:
            raise DomainError(f"truth assignment is partial: {v!r} unassigned")
        if not isinstance(sigma[v], bool):
            raise DomainError(f"truth value for {v!r} must be a bool")


def literal_true(lit: Literal, sigma: Mapping) -> bool:
    v, pol = lit
    return sigma[v] is pol


def clause_satisfied(clause, sigma: Mapping) -> bool:
    return any(literal_true(lit, sigma) for lit in clause)


def satisfied_clause_count(formula: CnfFormula, sigma: Mapping) -> int:
    return sum(1 for c in formula.clauses if clause_satisfied(c, sigma))


def cnf_value(formula: CnfFormula, sigma: Mapping) -> Fraction:
    """Fraction of satisfied clauses, as an exact rational with denominator m."""
    if not formula.clauses:
        raise DomainError("formula has no clauses; value undefined")
    check_truth_assignment(formula, sigma)
    return Fraction(satisfied_clause_count(formula, sigma), len(formula.clauses))
