"""Complementation reductions: ISR to VCR and ISR to Clique.

VCR keeps the host graph and complements every state (C = V minus I), which
is a stepwise bijection since symmetric differences survive complementation.
Clique complements the host graph instead and keeps the states: independent
sets of G are exactly the cliques of its complement, and omega of the
complement equals alpha of G.
"""

from __future__ import annotations

from typing import Sequence

from .. import oracle
from ..errors import DomainError
from ..problems.graphs import SimpleGraph, complement
from ..problems.instances import ProblemKind, ReconfigInstance
from ._seq import check_source_sequence
from .artifacts import ReductionArtifact

TAG_VCR = "isr_to_vcr"
TAG_CLIQUE = "isr_to_clique"


def _source_alpha(src: ReconfigInstance) -> int:
    return src.opt_size if src.opt_size is not None else oracle.alpha(src.payload)


def isr_to_vcr(src: ReconfigInstance) -> ReductionArtifact:
    if src.kind is not ProblemKind.ISR:
        raise DomainError("isr_to_vcr expects an ISR instance")
    graph: SimpleGraph = src.payload
    verts = frozenset(graph.vertices)
    a = _source_alpha(src)
    b = len(graph.vertices) - a
    target = ReconfigInstance(ProblemKind.VCR, graph,
                              verts - src.start, verts - src.target, opt_size=b)
    structure = {"vertices": len(graph.vertices), "edges": len(graph.edges),
                 "alpha": a, "beta": b}
    provenance = {("vertex", v): {"source_vertex": str(v)} for v in graph.vertices}
    return ReductionArtifact(TAG_VCR, src, target, provenance, structure, {"alpha": a})


def map_sequence_isr_to_vcr(artifact: ReductionArtifact, src_seq: Sequence) -> list:
    states = check_source_sequence(artifact.source, src_seq)
    verts = frozenset(artifact.source.payload.vertices)
    return [verts - s for s in states]


def project_sequence_isr_to_vcr(artifact: ReductionArtifact, target_seq) -> list:
    verts = frozenset(artifact.source.payload.vertices)
    return [verts - frozenset(s) for s in target_seq]


def isr_to_clique(src: ReconfigInstance) -> ReductionArtifact:
    if src.kind is not ProblemKind.ISR:
        raise DomainError("isr_to_clique expects an ISR instance")
    graph: SimpleGraph = src.payload
    host = complement(graph)
    a = _source_alpha(src)
    target = ReconfigInstance(ProblemKind.CLIQUE, host, src.start, src.target, opt_size=a)
    structure = {"vertices": len(host.vertices), "edges": len(host.edges), "omega": a}
    provenance = {("vertex", v): {"source_vertex": str(v)} for v in host.vertices}
    return ReductionArtifact(TAG_CLIQUE, src, target, provenance, structure, {})


def map_sequence_isr_to_clique(artifact: ReductionArtifact, src_seq: Sequence) -> list:
    states = check_source_sequence(artifact.source, src_seq)
    return [frozenset(s) for s in states]


def project_sequence_isr_to_clique(artifact: ReductionArtifact, target_seq) -> list:
    return [frozenset(s) for s in target_seq]
