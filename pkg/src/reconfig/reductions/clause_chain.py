"""Exact width-k SAT to exact width-3 SAT by the standard chain split.

A clause (l_1 v ... v l_k) becomes k-2 clauses over k-3 fresh chain
variables:

    (l_1 v l_2 v z_1), (l_3 v ~z_1 v z_2), ..., (l_{k-1} v l_k v ~z_{k-3}).

With sentinels z_0 = T and z_{k-2} = F, a chain block is satisfied exactly
when every "descent" (z_{c-1}, z_c) = (T, F) sits at a chain clause whose
literal part is true.  The canonical chain setting for a first-true literal
at 1-based position p is the staircase with its single descent at that
literal's chain clause; the forward mapper moves between staircases with
one-flip morphs whose intermediate descents stay on commonly true clauses.
"""

from __future__ import annotations

from typing import Sequence

from ..errors import DomainError, InvalidSequenceError
from ..problems.instances import ProblemKind, ReconfigInstance
from ..problems.sat import CnfFormula, cnf_value, literal_true
from ._seq import check_source_sequence
from .artifacts import ReductionArtifact

TAG = "eksat_to_e3sat"


def _z_name(j: int, i: int) -> str:
    return f"z[{j},{i}]"


def _chain_clauses(lits, znames):
    k = len(lits)
    out = [(lits[0], lits[1], (znames[0], True))]
    for t in range(1, k - 3):
        out.append((lits[t + 1], (znames[t - 1], False), (znames[t], True)))
    out.append((lits[k - 2], lits[k - 1], (znames[k - 4], False)))
    return out


def _clause_positions(k: int):
    """Literal positions (0-based) feeding each of the k-2 chain clauses."""
    pos = [(0, 1)]
    for t in range(1, k - 3):
        pos.append((t + 1,))
    pos.append((k - 2, k - 1))
    return pos


def _clause_of_position(p: int, k: int) -> int:
    """Chain-clause index (0-based) whose literal part holds position p."""
    if p <= 1:
        return 0
    if p >= k - 2:
        return k - 3
    return p - 1


def _staircase(c: int, k: int) -> tuple:
    """Chain values with the single descent at chain clause c: z_t = T iff t < c."""
    return tuple(t < c for t in range(k - 3))


def _first_true_position(lits, sigma) -> int:
    for p, lit in enumerate(lits):
        if literal_true(lit, sigma):
            return p
    raise DomainError("clause has no true literal under a supposedly satisfying assignment")


def _extend(formula: CnfFormula, blocks, sigma) -> dict:
    out = dict(sigma)
    for j, c in enumerate(formula.clauses):
        k = len(c)
        cstar = _clause_of_position(_first_true_position(c, sigma), k)
        for name, val in zip(blocks[j], _staircase(cstar, k)):
            out[name] = val
    return out


def eksat_to_e3sat(src: ReconfigInstance) -> ReductionArtifact:
    if src.kind is not ProblemKind.SAT:
        raise DomainError("eksat_to_e3sat expects a SAT instance")
    formula: CnfFormula = src.payload
    k = formula.uniform_width
    if k is None or k < 4:
        raise DomainError("source must have uniform clause width k >= 4")
    if cnf_value(formula, src.start) != 1 or cnf_value(formula, src.target) != 1:
        raise DomainError("start and target must satisfy the source formula")

    blocks = {}
    clauses = []
    provenance = {}
    variables = list(formula.variables)
    for j, c in enumerate(formula.clauses):
        znames = tuple(_z_name(j, i) for i in range(1, k - 2))
        blocks[j] = znames
        variables.extend(znames)
        for slot, cl in enumerate(_chain_clauses(list(c), znames)):
            provenance[("clause", len(clauses))] = {"source_clause": j, "slot": slot}
            clauses.append(cl)

    target_formula = CnfFormula(tuple(variables), tuple(clauses))
    target = ReconfigInstance(ProblemKind.SAT, target_formula,
                              _extend(formula, blocks, src.start),
                              _extend(formula, blocks, src.target))
    structure = {
        "clauses": len(clauses),
        "expected_clauses": (k - 2) * formula.num_clauses,
        "clause_width": 3,
        "variables": len(variables),
        "occurrence_bound": target_formula.occurrence_bound,
        "occurrence_bound_limit": max(formula.occurrence_bound, 2),
    }
    aux = {"blocks": blocks, "k": k}
    return ReductionArtifact(TAG, src, target, provenance, structure, aux)


def _common_clause(lits, sigma_pre, sigma_post, k: int) -> int:
    """First chain clause whose literal part is true both before and after."""
    for c, positions in enumerate(_clause_positions(k)):
        pre = any(literal_true(lits[p], sigma_pre) for p in positions)
        post = any(literal_true(lits[p], sigma_post) for p in positions)
        if pre and post:
            return c
    raise InvalidSequenceError(
        "no chain clause stays true across the flip; the block cannot be"
        " carried at value 1 (clause pairs a variable with its negation)")


def _morph(cur, znames, c_from: int, c_to: int, emit) -> None:
    if c_to > c_from:
        flips = range(c_to - 1, c_from - 1, -1)
    else:
        flips = range(c_to, c_from)
    for t in flips:
        cur[znames[t]] = not cur[znames[t]]
        emit()


def map_sequence_eksat_to_e3sat(artifact: ReductionArtifact, src_seq: Sequence) -> list:
    states = check_source_sequence(artifact.source, src_seq)
    formula: CnfFormula = artifact.source.payload
    blocks = artifact.aux["blocks"]
    k = artifact.aux["k"]
    cur = dict(artifact.target.start)
    out = [dict(cur)]
    emit = lambda: out.append(dict(cur))  # noqa: E731
    for i in range(1, len(states)):
        pre, post = states[i - 1], states[i]
        if pre == post:
            emit()
            continue
        x = next(v for v in formula.variables if pre[v] != post[v])
        affected = formula.clauses_with(x)
        mids = {}
        for j in affected:
            lits = formula.clauses[j]
            c_pre = _clause_of_position(_first_true_position(lits, pre), k)
            mids[j] = _common_clause(lits, pre, post, k)
            _morph(cur, blocks[j], c_pre, mids[j], emit)
        cur[x] = post[x]
        emit()
        for j in affected:
            lits = formula.clauses[j]
            c_post = _clause_of_position(_first_true_position(lits, post), k)
            _morph(cur, blocks[j], mids[j], c_post, emit)
    return out


def project_sequence_eksat_to_e3sat(artifact: ReductionArtifact, target_seq) -> list:
    names = set(artifact.source.payload.variables)
    return [{v: s[v] for v in s if v in names} for s in target_seq]
