"""Binary CSP to exact-width SAT via the reconfigurable string encoding.

Each vertex v over a W-symbol alphabet becomes a block of W variables
x[v,1..W] read through enc.  For every hyperedge, every unacceptable value
tuple, and every combination of strings decoding to that tuple, one clause
of exactly q*W literals forbids that combination.  A truth assignment
satisfies all clauses of an edge's formula iff its decoded tuple is
acceptable.
"""

from __future__ import annotations

from itertools import product

from ..errors import DomainError
from ..problems.csp import ConstraintGraph, csp_value
from ..problems.instances import ProblemKind, ReconfigInstance
from ..problems.sat import CnfFormula
from ._seq import check_source_sequence
from .artifacts import ReductionArtifact
from .encoding import enc, enc_path, enc_preimages, lex_smallest_preimage

TAG = "qcsp_to_eksat"


def _var_name(v, a: int) -> str:
    return f"x[{v},{a}]"


def _encode_assignment(graph: ConstraintGraph, blocks, psi) -> dict:
    w = len(graph.alphabet)
    sigma = {}
    for v in graph.vertices:
        alpha = graph.alphabet.index(psi[v]) + 1
        bits = lex_smallest_preimage(alpha, w)
        for name, bit in zip(blocks[v], bits):
            sigma[name] = bit
    return sigma


def decode_assignment(artifact: ReductionArtifact, sigma) -> dict:
    """Read each block through enc; inverse direction of the encoding."""
    graph = artifact.source.payload
    blocks = artifact.aux["blocks"]
    out = {}
    for v in graph.vertices:
        bits = tuple(sigma[name] for name in blocks[v])
        out[v] = graph.alphabet.symbols[enc(bits) - 1]
    return out


def qcsp_to_eksat(src: ReconfigInstance) -> ReductionArtifact:
    if src.kind is not ProblemKind.CSP:
        raise DomainError("qcsp_to_eksat expects a CSP instance")
    graph: ConstraintGraph = src.payload
    w = len(graph.alphabet)
    if w < 2 or graph.q < 2:
        raise DomainError("the encoding needs q >= 2 and W >= 2")
    if not graph.edges:
        raise DomainError("source has no edges")

    blocks = {v: tuple(_var_name(v, a) for a in range(1, w + 1)) for v in graph.vertices}
    variables = tuple(name for v in graph.vertices for name in blocks[v])

    preimages = {a: enc_preimages(a, w) for a in range(1, w + 1)}
    all_tuples = list(product(graph.alphabet.symbols, repeat=graph.q))

    clauses = []
    provenance = {}
    for e_idx, (edge, pi) in enumerate(zip(graph.edges, graph.constraints)):
        for tup in all_tuples:
            if tup in pi:
                continue
            idxs = tuple(graph.alphabet.index(s) + 1 for s in tup)
            for combo in product(*(preimages[a] for a in idxs)):
                clause = []
                for vertex, bits in zip(edge, combo):
                    for a in range(w):
                        # literal is true exactly when x[v,a] differs from bits[a]
                        clause.append((blocks[vertex][a], not bits[a]))
                provenance[("clause", len(clauses))] = {
                    "edge": e_idx,
                    "unacceptable": tuple(str(s) for s in tup),
                    "strings": tuple("".join("T" if b else "F" for b in bits) for bits in combo),
                }
                clauses.append(tuple(clause))

    formula = CnfFormula(variables, tuple(clauses))
    m = len(clauses)
    bound = (w ** graph.q) * (2 ** (graph.q * w)) * len(graph.edges)
    if m > bound:
        raise DomainError("clause count exceeds its structural bound")  # pragma: no cover

    target = ReconfigInstance(ProblemKind.SAT, formula,
                              _encode_assignment(graph, blocks, src.start),
                              _encode_assignment(graph, blocks, src.target))
    structure = {
        "clauses": m,
        "clause_width": graph.q * w if m else 0,
        "variables": len(variables),
        "occurrence_bound": formula.occurrence_bound,
        "clause_bound": bound,
        "occurrence_bound_limit": (w ** graph.q) * (2 ** (graph.q * w)) * graph.max_degree(),
    }
    aux = {"blocks": blocks, "W": w, "q": graph.q}
    return ReductionArtifact(TAG, src, target, provenance, structure, aux)


def map_sequence_qcsp_to_eksat(artifact: ReductionArtifact, src_seq) -> list:
    """Lift a value-1 source sequence; each flip splices in an enc path."""
    states = check_source_sequence(artifact.source, src_seq)
    graph = artifact.source.payload
    blocks = artifact.aux["blocks"]
    cur = dict(artifact.target.start)
    out = [dict(cur)]
    for i in range(1, len(states)):
        prev, nxt = states[i - 1], states[i]
        if prev == nxt:
            out.append(dict(cur))
            continue
        v = next(u for u in graph.vertices if prev[u] != nxt[u])
        beta = graph.alphabet.index(nxt[v]) + 1
        here = tuple(cur[name] for name in blocks[v])
        for bits in enc_path(here, lex_smallest_preimage(beta, len(graph.alphabet)))[1:]:
            for name, bit in zip(blocks[v], bits):
                cur[name] = bit
            out.append(dict(cur))
    return out


def project_sequence_qcsp_to_eksat(artifact: ReductionArtifact, target_seq) -> list:
    return [decode_assignment(artifact, sigma) for sigma in target_seq]
