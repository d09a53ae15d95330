"""Exact width-3 SAT to binary CSP via the place encoding.

The constraint graph is bipartite: one {T,F} vertex per variable, one
3-symbol vertex per clause whose alphabet names the clause's literals (the
"place" of a true literal).  The edge between x and C forbids exactly the
pair where C names a literal of x that x's truth value falsifies.
"""

from __future__ import annotations

from typing import Sequence

from ..errors import DomainError
from ..problems.csp import Alphabet, ConstraintGraph
from ..problems.instances import ProblemKind, ReconfigInstance
from ..problems.sat import CnfFormula, cnf_value, literal_true
from ._seq import check_source_sequence
from .artifacts import ReductionArtifact

TAG = "e3sat_to_bcsp3"

TRUE_SYM = "T"
FALSE_SYM = "F"


def _lit_symbol(lit) -> str:
    v, pol = lit
    return f"+{v}" if pol else f"-{v}"


def _clause_vertex(j: int) -> str:
    return f"C[{j}]"


def _check_source(formula: CnfFormula) -> None:
    if formula.uniform_width != 3:
        raise DomainError("source must have uniform clause width exactly 3")
    for j, c in enumerate(formula.clauses):
        if len({v for v, _ in c}) != 3:
            raise DomainError(f"clause {j} must use three distinct variables")


def _encode(formula: CnfFormula, sigma) -> dict:
    psi = {v: TRUE_SYM if sigma[v] else FALSE_SYM for v in formula.variables}
    for j, c in enumerate(formula.clauses):
        for lit in c:
            if literal_true(lit, sigma):
                psi[_clause_vertex(j)] = _lit_symbol(lit)
                break
        else:
            raise DomainError(f"assignment does not satisfy clause {j}")
    return psi


def e3sat_to_bcsp3(src: ReconfigInstance) -> ReductionArtifact:
    if src.kind is not ProblemKind.SAT:
        raise DomainError("e3sat_to_bcsp3 expects a SAT instance")
    formula: CnfFormula = src.payload
    _check_source(formula)
    if cnf_value(formula, src.start) != 1 or cnf_value(formula, src.target) != 1:
        raise DomainError("start and target must satisfy the source formula")

    symbols = [TRUE_SYM, FALSE_SYM]
    for c in formula.clauses:
        for lit in c:
            s = _lit_symbol(lit)
            if s not in symbols:
                symbols.append(s)
    alphabet = Alphabet(tuple(symbols))

    vertices = list(formula.variables) + [_clause_vertex(j) for j in range(formula.num_clauses)]
    domains = {v: (TRUE_SYM, FALSE_SYM) for v in formula.variables}
    edges = []
    constraints = []
    provenance = {}
    for j, c in enumerate(formula.clauses):
        cv = _clause_vertex(j)
        domains[cv] = tuple(_lit_symbol(lit) for lit in c)
        for slot, (v, pol) in enumerate(c):
            forbidden = (FALSE_SYM if pol else TRUE_SYM, _lit_symbol((v, pol)))
            pi = frozenset((tv, ls) for tv in (TRUE_SYM, FALSE_SYM)
                           for ls in domains[cv] if (tv, ls) != forbidden)
            provenance[("edge", len(edges))] = {"clause": j, "slot": slot, "variable": str(v)}
            edges.append((v, cv))
            constraints.append(pi)

    graph = ConstraintGraph(tuple(vertices), tuple(edges), alphabet,
                            tuple(constraints), 2, domains)
    target = ReconfigInstance(ProblemKind.CSP, graph,
                              _encode(formula, src.start), _encode(formula, src.target))
    structure = {
        "vertices": len(vertices),
        "expected_vertices": len(formula.variables) + formula.num_clauses,
        "edges": len(edges),
        "expected_edges": 3 * formula.num_clauses,
        "max_degree": graph.max_degree(),
        "max_degree_limit": max(formula.occurrence_bound, 3),
    }
    aux = {"clause_vertices": tuple(_clause_vertex(j) for j in range(formula.num_clauses))}
    return ReductionArtifact(TAG, src, target, provenance, structure, aux)


def map_sequence_e3sat_to_bcsp3(artifact: ReductionArtifact, src_seq: Sequence) -> list:
    """Lift a value-1 source sequence.

    Before a variable flip, every affected clause vertex is parked on a
    literal that stays true across the flip; afterwards each is moved to the
    first literal true under the new assignment.
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
            safe = next((lit for lit in formula.clauses[j]
                         if lit[0] != x and literal_true(lit, post)), None)
            if safe is None:
                raise DomainError(f"clause {j} has no literal surviving the flip of {x!r}")
            sym = _lit_symbol(safe)
            if cur[_clause_vertex(j)] != sym:
                cur[_clause_vertex(j)] = sym
                out.append(dict(cur))
        cur[x] = TRUE_SYM if post[x] else FALSE_SYM
        out.append(dict(cur))
        for j in affected:
            canon = _lit_symbol(next(lit for lit in formula.clauses[j]
                                     if literal_true(lit, post)))
            if cur[_clause_vertex(j)] != canon:
                cur[_clause_vertex(j)] = canon
                out.append(dict(cur))
    return out


def project_sequence_e3sat_to_bcsp3(artifact: ReductionArtifact, target_seq) -> list:
    names = artifact.source.payload.variables
    return [{v: psi[v] == TRUE_SYM for v in names} for psi in target_seq]
