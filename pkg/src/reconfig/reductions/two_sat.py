"""Exact width-3 SAT to width-<=2 SAT via the ten-clause gadget.

Each clause (l1 v l2 v l3) spawns a helper variable z and the block

    (l1) (l2) (l3) (z) (~l1 v ~l2) (~l2 v ~l3) (~l3 v ~l1)
    (l1 v ~z) (l2 v ~z) (l3 v ~z).

With n true literals the best block score is 7 for n in {1,2,3} (z = F for
one or two true literals, z = T for three) and 6 for n = 0, so satisfying
assignments map to target value exactly 7/10.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import DomainError
from ..problems.instances import ProblemKind, ReconfigInstance
from ..problems.sat import CnfFormula, cnf_value, literal_true, neg
from ._seq import check_source_sequence
from .artifacts import ReductionArtifact

TAG = "e3sat_to_2sat"

TARGET_VALUE = Fraction(7, 10)


def _z_name(j: int) -> str:
    return f"z[{j}]"


def ten_clause_block(l1, l2, l3, z_var) -> tuple:
    """The gadget block for one source clause, in its fixed order."""
    z = (z_var, True)
    return (
        (l1,), (l2,), (l3,), (z,),
        (neg(l1), neg(l2)),
        (neg(l2), neg(l3)),
        (neg(l3), neg(l1)),
        (l1, neg(z)),
        (l2, neg(z)),
        (l3, neg(z)),
    )


def _true_count(clause, sigma) -> int:
    return sum(1 for lit in clause if literal_true(lit, sigma))


def _extend(formula: CnfFormula, sigma) -> dict:
    out = dict(sigma)
    for j, c in enumerate(formula.clauses):
        n = _true_count(c, sigma)
        if n == 0:
            raise DomainError(f"assignment does not satisfy clause {j}")
        out[_z_name(j)] = n == 3
    return out


def e3sat_to_2sat(src: ReconfigInstance) -> ReductionArtifact:
    if src.kind is not ProblemKind.SAT:
        raise DomainError("e3sat_to_2sat expects a SAT instance")
    formula: CnfFormula = src.payload
    if formula.uniform_width != 3:
        raise DomainError("source must have uniform clause width exactly 3")
    if cnf_value(formula, src.start) != 1 or cnf_value(formula, src.target) != 1:
        raise DomainError("start and target must satisfy the source formula")

    variables = list(formula.variables)
    clauses = []
    provenance = {}
    for j, c in enumerate(formula.clauses):
        variables.append(_z_name(j))
        for slot, cl in enumerate(ten_clause_block(c[0], c[1], c[2], _z_name(j))):
            provenance[("clause", len(clauses))] = {"source_clause": j, "slot": slot}
            clauses.append(cl)

    target_formula = CnfFormula(tuple(variables), tuple(clauses))
    start = _extend(formula, src.start)
    target_state = _extend(formula, src.target)
    for name, st in (("start", start), ("target", target_state)):
        if cnf_value(target_formula, st) != TARGET_VALUE:
            raise DomainError(f"{name} state does not land on value 7/10")  # pragma: no cover
    target = ReconfigInstance(ProblemKind.SAT, target_formula, start, target_state)
    structure = {
        "clauses": len(clauses),
        "expected_clauses": 10 * formula.num_clauses,
        "max_width": target_formula.max_width(),
        "variables": len(variables),
        "occurrence_bound": target_formula.occurrence_bound,
        "occurrence_bound_limit": 4 * max(formula.occurrence_bound, 1),
    }
    return ReductionArtifact(TAG, src, target, provenance, structure, {})


def map_sequence_e3sat_to_2sat(artifact: ReductionArtifact, src_seq: Sequence) -> list:
    """Lift a value-1 source sequence to target states all at exactly 7/10.

    A helper z flips from F to T just before a variable flip raises its
    clause's true-literal count from 2 to 3, and from T to F just after a
    drop from 3 to 2; every other transition needs no helper move.
    """
    states = check_source_sequence(artifact.source, src_seq)
    formula: CnfFormula = artifact.source.payload
    cur = dict(artifact.target.start)
    out = [dict(cur)]
    for i in range(1, len(states)):
        pre, post = states[i - 1], states[i]
        if pre == post:
            out.append(dict(cur))
            continue
        x = next(v for v in formula.variables if pre[v] != post[v])
        affected = formula.clauses_with(x)
        for j in affected:
            c = formula.clauses[j]
            if (_true_count(c, pre), _true_count(c, post)) == (2, 3):
                cur[_z_name(j)] = True
                out.append(dict(cur))
        cur[x] = post[x]
        out.append(dict(cur))
        for j in affected:
            c = formula.clauses[j]
            if (_true_count(c, pre), _true_count(c, post)) == (3, 2):
                cur[_z_name(j)] = False
                out.append(dict(cur))
    return out


def project_sequence_e3sat_to_2sat(artifact: ReductionArtifact, target_seq) -> list:
    names = artifact.source.payload.variables
    return [{v: s[v] for v in names} for s in target_seq]
