"""AND/OR constraint logic to independent set reconfiguration.

Every link becomes a token edge (a K2 straddling its two node gadgets) and
every OR node additionally contributes a token triangle (a K3).  An AND node
is three inner vertices on a two-edge path, each inner vertex being this
gadget's endpoint of one token edge; an OR node is a triangle whose corners
each hang onto a border vertex, the border vertex being this gadget's token
edge endpoint.  A maximum independent set picks exactly one vertex per token
edge and per triangle, and the picked token-edge endpoint marks the tail of
the corresponding link.
"""

from __future__ import annotations

from typing import Sequence

from .. import oracle
from ..errors import DomainError
from ..problems.graphs import SimpleGraph
from ..problems.instances import ProblemKind, ReconfigInstance
from ..problems.ncl import LinkColor, NclGraph, NodeKind, ncl_value
from ._seq import check_source_sequence
from .artifacts import ReductionArtifact

TAG = "ncl_to_isr"


def _endpoint_names(graph: NclGraph):
    """This-gadget token-edge endpoint per (node, incident link index)."""
    endpoint = {}
    for node, kind in graph.nodes:
        for idx in graph.incident_links(node):
            if kind is NodeKind.AND:
                endpoint[(node, idx)] = f"and:{node}:l{idx}"
            else:
                endpoint[(node, idx)] = f"or:{node}:brd{idx}"
    return endpoint


def ncl_to_isr(src: ReconfigInstance) -> ReductionArtifact:
    if src.kind is not ProblemKind.NCL:
        raise DomainError("ncl_to_isr expects a constraint logic instance")
    graph: NclGraph = src.payload
    for node, kind in graph.nodes:
        if kind not in (NodeKind.AND, NodeKind.OR):
            raise DomainError(f"node {node!r} has kind {kind.value}; only AND/OR is supported")
    n_and = graph.node_count(NodeKind.AND)
    n_or = graph.node_count(NodeKind.OR)
    if (n_and + n_or) % 2:
        raise DomainError("n_AND + n_OR must be even (token edge count must be integral)")
    if ncl_value(graph, src.start) != 1 or ncl_value(graph, src.target) != 1:
        raise DomainError("start and target orientations must satisfy the graph")

    endpoint = _endpoint_names(graph)
    vertices = []
    edges = []
    provenance = {}
    triangles = {}
    for node, kind in graph.nodes:
        incident = graph.incident_links(node)
        if kind is NodeKind.AND:
            reds = [i for i in incident if graph.links[i][2] is LinkColor.RED]
            blue = next(i for i in incident if graph.links[i][2] is LinkColor.BLUE)
            inner = {i: endpoint[(node, i)] for i in incident}
            for i in incident:
                vertices.append(inner[i])
                provenance[("vertex", inner[i])] = {"node": str(node), "link": i}
            edges.append((inner[reds[0]], inner[blue]))
            edges.append((inner[blue], inner[reds[1]]))
        else:
            tri = {i: f"or:{node}:tri{i}" for i in incident}
            triangles[node] = tri
            for i in incident:
                vertices.append(tri[i])
                provenance[("vertex", tri[i])] = {"node": str(node), "link": i,
                                                  "role": "triangle"}
                vertices.append(endpoint[(node, i)])
                provenance[("vertex", endpoint[(node, i)])] = {"node": str(node), "link": i,
                                                               "role": "border"}
                edges.append((tri[i], endpoint[(node, i)]))
            keys = list(incident)
            edges.append((tri[keys[0]], tri[keys[1]]))
            edges.append((tri[keys[1]], tri[keys[2]]))
            edges.append((tri[keys[0]], tri[keys[2]]))
    for idx, (u, w, _) in enumerate(graph.links):
        edges.append((endpoint[(u, idx)], endpoint[(w, idx)]))

    host = SimpleGraph(tuple(vertices), tuple(edges))
    alpha = oracle.alpha(host)
    aux = {"endpoint": endpoint, "triangles": triangles,
           "n_e": len(graph.links), "n_t": n_or, "n_and": n_and, "n_or": n_or}

    start = _independent_set_for(graph, endpoint, triangles, src.start)
    target_set = _independent_set_for(graph, endpoint, triangles, src.target)
    target = ReconfigInstance(ProblemKind.ISR, host, start, target_set, opt_size=alpha)
    structure = {
        "vertices": len(vertices),
        "expected_vertices": 3 * n_and + 6 * n_or,
        "token_edges": len(graph.links),
        "token_triangles": n_or,
        "alpha": alpha,
        "expected_alpha": len(graph.links) + n_or,
    }
    return ReductionArtifact(TAG, src, target, provenance, structure, aux)


def _independent_set_for(graph: NclGraph, endpoint, triangles, orientation) -> frozenset:
    """Canonical independent set of a satisfying orientation.

    Each token edge contributes its tail-side endpoint; each OR node's
    triangle contributes the corner of its first inward blue link.
    """
    chosen = set()
    for idx, (u, w, _) in enumerate(graph.links):
        tail = w if orientation[idx] == u else u
        chosen.add(endpoint[(tail, idx)])
    for node, tri in triangles.items():
        inward = next((i for i in graph.incident_links(node) if orientation[i] == node), None)
        if inward is None:
            raise DomainError(f"orientation does not satisfy OR node {node!r}")
        chosen.add(tri[inward])
    return frozenset(chosen)


def independent_set_for(artifact: ReductionArtifact, orientation) -> frozenset:
    graph: NclGraph = artifact.source.payload
    return _independent_set_for(graph, artifact.aux["endpoint"],
                                artifact.aux["triangles"], orientation)


def map_sequence_ncl_to_isr(artifact: ReductionArtifact, src_seq: Sequence) -> list:
    """Lift a value-1 orientation sequence to independent sets of size >= alpha-1.

    A link reversal swaps one token edge's selected endpoint, with the OR
    triangles on either side re-parked first (losing side) and last (gaining
    side); each swap removes then adds, so the set dips by at most one.
    """
    states = check_source_sequence(artifact.source, src_seq)
    graph: NclGraph = artifact.source.payload
    endpoint = artifact.aux["endpoint"]
    triangles = artifact.aux["triangles"]
    cur = set(artifact.target.start)
    out = [frozenset(cur)]

    def swap(remove, add):
        if remove == add:
            return
        cur.discard(remove)
        out.append(frozenset(cur))
        cur.add(add)
        out.append(frozenset(cur))

    def first_inward(node, orientation):
        return next(i for i in graph.incident_links(node) if orientation[i] == node)

    for i in range(1, len(states)):
        pre, post = states[i - 1], states[i]
        if pre == post:
            out.append(frozenset(cur))
            continue
        idx = next(k for k in range(len(pre)) if pre[k] != post[k])
        u, w, _ = graph.links[idx]
        head_old = pre[idx]
        head_new = post[idx]
        # losing side: the old head no longer receives this link
        if head_old in triangles:
            tri = triangles[head_old]
            want = tri[first_inward(head_old, post)]
            have = next(t for t in tri.values() if t in cur)
            swap(have, want)
        swap(endpoint[(head_new, idx)], endpoint[(head_old, idx)])
        if head_new in triangles:
            tri = triangles[head_new]
            want = tri[first_inward(head_new, post)]
            have = next(t for t in tri.values() if t in cur)
            swap(have, want)
        if frozenset(cur) != _independent_set_for(graph, endpoint, triangles, post):
            raise DomainError("mapper lost canonical form")  # pragma: no cover
    return out


def project_sequence_ncl_to_isr(artifact: ReductionArtifact, target_seq) -> list:
    """Orientations read off independent sets: a selected endpoint marks the tail."""
    graph: NclGraph = artifact.source.payload
    endpoint = artifact.aux["endpoint"]
    out = []
    for members in target_seq:
        members = frozenset(members)
        heads = []
        for idx, (u, w, _) in enumerate(graph.links):
            heads.append(u if endpoint[(w, idx)] in members else w)
        out.append(tuple(heads))
    return out
