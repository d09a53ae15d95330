"""Degree reduction of binary CSPs with the alphabet squaring trick.

Every reduced vertex v becomes a cloud with one copy per incident edge.  The
copies range over a squared alphabet whose pair values mean "both letters at
once": intra-cloud edges accept exactly the containment-comparable pairs, so
a cloud can drift from {a} through {a,b} to {b} one copy at a time without
breaking, which is what preserves perfect completeness.  Inter-cloud edges
accept a pair of value sets exactly when their full product is acceptable to
the original constraint.

Cloud graphs are complete by default; with expander sourcing enabled, clouds
at or above the threshold use random regular graphs certified by the
spectral module.  Decoding back is by plurality vote over letter membership
with ties broken by the fixed letter order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Mapping, Optional, Sequence

from ..errors import DomainError
from ..problems.csp import Alphabet, ConstraintGraph
from ..problems.instances import ProblemKind, ReconfigInstance
from ..spectral import make_cloud
from ._seq import check_source_sequence
from .artifacts import ReductionArtifact

TAG = "degree_reduce"

LETTERS = ("a", "b", "c")
PAIR_ORDER = ("ab", "bc", "ca")
MEMBERS = {
    "a": frozenset("a"), "b": frozenset("b"), "c": frozenset("c"),
    "ab": frozenset("ab"), "bc": frozenset("bc"), "ca": frozenset("ca"),
}
PAIR_NAME = {MEMBERS[p]: p for p in PAIR_ORDER}
SQUARED_ALPHABET = LETTERS + PAIR_ORDER


@dataclass(frozen=True)
class DegreeReductionParams:
    """Parameters of the degree reduction.

    epsilon is canonicalized to 1/ceil(1/epsilon); d0 defaults to the
    smallest even integer >= 9216/epsilon^2 for the canonical epsilon and can
    be overridden (tests use small artificial degrees).
    """

    epsilon: Fraction = Fraction(1, 3)
    d0: Optional[int] = None
    cloud_threshold: Optional[int] = None  # None means clouds are always complete
    expander_source: str = "complete_only"  # or "verified_random_regular"
    seed: int = 0
    retries: int = 5

    def __post_init__(self):
        eps = Fraction(self.epsilon)
        if not 0 < eps < 1:
            raise DomainError("epsilon must lie in (0,1)")
        object.__setattr__(self, "epsilon", eps)
        if self.d0 is not None and (self.d0 <= 0 or self.d0 % 2):
            raise DomainError("d0 override must be a positive even integer")
        if self.expander_source not in ("complete_only", "verified_random_regular"):
            raise DomainError(f"unknown expander_source {self.expander_source!r}")

    @property
    def epsilon_canonical(self) -> Fraction:
        return Fraction(1, ceil(1 / self.epsilon))

    @property
    def delta(self) -> Fraction:
        return self.epsilon_canonical / 8

    @property
    def d0_effective(self) -> int:
        if self.d0 is not None:
            return self.d0
        need = 9216 / self.epsilon_canonical ** 2
        m = ceil(need)
        return m + (m % 2)


def _member_name(v, edge_idx: int) -> str:
    return f"{v}@e{edge_idx}"


def _squared_domain(n_letters: int) -> tuple:
    letters = LETTERS[:n_letters]
    pairs = tuple(p for p in PAIR_ORDER if MEMBERS[p] <= set(letters))
    return letters + pairs


def _check_domains(graph: ConstraintGraph, reduced) -> None:
    if graph.domains is None:
        if len(graph.alphabet) != 3:
            raise DomainError("uniform-alphabet input must have exactly 3 symbols")
        return
    for v in reduced:
        if len(graph.domain(v)) > 3:
            raise DomainError(f"domain of {v!r} exceeds 3 symbols")


def degree_reduce(src: ReconfigInstance, params: DegreeReductionParams,
                  at_vertices=None,
                  cloud_edges_override: Optional[Mapping] = None) -> ReductionArtifact:
    """Replace each chosen vertex by a cloud over the squared alphabet.

    at_vertices selects the vertices to reduce (default: all of them);
    cloud_edges_override forces an explicit cloud topology, keyed by vertex,
    as pairs of cloud indices in incident-edge order.
    """
    if src.kind is not ProblemKind.CSP:
        raise DomainError("degree_reduce expects a CSP instance")
    graph: ConstraintGraph = src.payload
    if graph.q != 2:
        raise DomainError("degree_reduce expects a binary constraint graph")
    reduced = tuple(graph.vertices) if at_vertices is None else tuple(
        v for v in graph.vertices if v in set(at_vertices))
    if at_vertices is not None and len(reduced) != len(set(at_vertices)):
        raise DomainError("at_vertices contains unknown vertices")
    _check_domains(graph, reduced)
    for v in reduced:
        if graph.degree(v) == 0:
            raise DomainError(f"cannot reduce isolated vertex {v!r}")

    clouds = {}
    vertices = []
    domains = {}
    provenance = {}
    intra_edges = []
    intra_constraints = []
    for order, v in enumerate(graph.vertices):
        if v not in reduced:
            vertices.append(v)
            domains[v] = graph.domain(v)
            continue
        dom = graph.domain(v)
        letters = {s: LETTERS[i] for i, s in enumerate(dom)}
        origs = {LETTERS[i]: s for i, s in enumerate(dom)}
        edge_ids = graph.incident_edges(v)
        members = tuple(_member_name(v, e) for e in edge_ids)
        squared = _squared_domain(len(dom))
        for m, e in zip(members, edge_ids):
            vertices.append(m)
            domains[m] = squared
            provenance[("vertex", m)] = {"source_vertex": str(v), "source_edge": e}
        if cloud_edges_override is not None and v in cloud_edges_override:
            cloud_edges = tuple(tuple(p) for p in cloud_edges_override[v])
            for (i, j) in cloud_edges:
                if not (0 <= i < len(members) and 0 <= j < len(members) and i != j):
                    raise DomainError(f"bad cloud edge override ({i},{j}) at {v!r}")
        else:
            cloud = make_cloud(len(members), params.d0_effective,
                               cloud_threshold=params.cloud_threshold,
                               expander_source=params.expander_source,
                               seed=params.seed + order, retries=params.retries)
            cloud_edges = cloud.graph.edges
        contain = frozenset(
            (x, y) for x in squared for y in squared
            if MEMBERS[x] <= MEMBERS[y] or MEMBERS[y] <= MEMBERS[x])
        for (i, j) in cloud_edges:
            provenance[("edge", len(intra_edges))] = {"cloud_of": str(v)}
            intra_edges.append((members[i], members[j]))
            intra_constraints.append(contain)
        clouds[v] = {"members": members, "edge_ids": edge_ids,
                     "letter_of": letters, "orig_of": origs,
                     "squared": squared, "cloud_edges": cloud_edges}

    def side(vertex, e_idx):
        if vertex in clouds:
            node = _member_name(vertex, e_idx)
            unmap = {s: frozenset(clouds[vertex]["orig_of"][l] for l in MEMBERS[s])
                     for s in clouds[vertex]["squared"]}
        else:
            node = vertex
            unmap = {s: frozenset((s,)) for s in graph.domain(vertex)}
        return node, unmap

    inter_edges = []
    inter_constraints = []
    inter_prov = {}
    for e_idx, (edge, pi) in enumerate(zip(graph.edges, graph.constraints)):
        u, v = edge
        nu, unmap_u = side(u, e_idx)
        nv, unmap_v = side(v, e_idx)
        pairs = frozenset(
            (x, y) for x in domains[nu] for y in domains[nv]
            if all((s, t) in pi for s in unmap_u[x] for t in unmap_v[y]))
        inter_prov[len(inter_edges)] = e_idx
        inter_edges.append((nu, nv))
        inter_constraints.append(pairs)
    for i, e_idx in inter_prov.items():
        provenance[("edge", len(intra_edges) + i)] = {"source_edge": e_idx}

    symbols = []
    if len(reduced) < len(graph.vertices):
        symbols.extend(graph.alphabet.symbols)
    for s in SQUARED_ALPHABET:
        if any(s in clouds[v]["squared"] for v in clouds) and s not in symbols:
            symbols.append(s)
    alphabet = Alphabet(tuple(symbols))

    def lift(psi):
        out = {}
        for v in graph.vertices:
            if v in clouds:
                letter = clouds[v]["letter_of"][psi[v]]
                for m in clouds[v]["members"]:
                    out[m] = letter
            else:
                out[v] = psi[v]
        return out

    new_graph = ConstraintGraph(tuple(vertices), tuple(intra_edges) + tuple(inter_edges),
                                alphabet, tuple(intra_constraints) + tuple(inter_constraints),
                                2, domains)
    target = ReconfigInstance(ProblemKind.CSP, new_graph, lift(src.start), lift(src.target))
    structure = {
        "vertices": len(vertices),
        "expected_vertices_full": 2 * len(graph.edges),
        "edges": len(new_graph.edges),
        "max_degree": new_graph.max_degree(),
        "alphabet_size": len(alphabet),
        "d0": params.d0_effective,
    }
    aux = {"clouds": clouds, "reduced": reduced, "params": params,
           "n_intra": len(intra_edges)}
    return ReductionArtifact(TAG, src, target, provenance, structure, aux)


def plurality_decode(artifact: ReductionArtifact, psi_prime: Mapping) -> dict:
    """Majority letter per cloud, ties broken by the fixed letter order."""
    graph: ConstraintGraph = artifact.source.payload
    clouds = artifact.aux["clouds"]
    out = {}
    for v in graph.vertices:
        info = clouds.get(v)
        if info is None:
            out[v] = psi_prime[v]
            continue
        best_letter, best_count = None, -1
        for i, s in enumerate(graph.domain(v)):
            letter = LETTERS[i]
            count = sum(1 for m in info["members"] if letter in MEMBERS[psi_prime[m]])
            if count > best_count:
                best_letter, best_count = letter, count
        out[v] = info["orig_of"][best_letter]
    return out


def map_sequence_degree_reduce(artifact: ReductionArtifact, src_seq: Sequence) -> list:
    """Lift a value-1 source sequence; each flip sweeps its cloud twice."""
    states = check_source_sequence(artifact.source, src_seq)
    graph: ConstraintGraph = artifact.source.payload
    clouds = artifact.aux["clouds"]
    cur = dict(artifact.target.start)
    out = [dict(cur)]
    for i in range(1, len(states)):
        pre, post = states[i - 1], states[i]
        if pre == post:
            out.append(dict(cur))
            continue
        v = next(u for u in graph.vertices if pre[u] != post[u])
        info = clouds.get(v)
        if info is None:
            cur[v] = post[v]
            out.append(dict(cur))
            continue
        a = info["letter_of"][pre[v]]
        b = info["letter_of"][post[v]]
        pair = PAIR_NAME[frozenset((a, b))]
        for m in info["members"]:
            cur[m] = pair
            out.append(dict(cur))
        for m in info["members"]:
            cur[m] = b
            out.append(dict(cur))
    return out


def project_sequence_degree_reduce(artifact: ReductionArtifact, target_seq) -> list:
    return [plurality_decode(artifact, s) for s in target_seq]


def conflicting_cloud_subsets(artifact: ReductionArtifact, psi_prime: Mapping, vertex):
    """Disjoint cloud subsets S, T with |S|,|T| >= |D|/3 and all S-T pairs violated.

    D is the set of cloud members disagreeing with the plurality letter;
    returns (S, T, |D|), or None when the cloud unanimously agrees.  Mirrors
    the three-way case split on which disagreeing value class is largest.
    """
    clouds = artifact.aux["clouds"]
    info = clouds.get(vertex)
    if info is None:
        raise DomainError(f"{vertex!r} was not reduced")
    graph: ConstraintGraph = artifact.source.payload
    decoded = plurality_decode(artifact, psi_prime)
    p = info["letter_of"][decoded[vertex]]
    others = [l for l in LETTERS[:len(graph.domain(vertex))] if l != p]
    members = info["members"]
    disagree = [m for m in members if p not in MEMBERS[psi_prime[m]]]
    if not disagree:
        return None
    d = len(disagree)

    def of(*values):
        vals = set(values)
        return tuple(m for m in members if psi_prime[m] in vals)

    q = others[0]
    r = others[1] if len(others) > 1 else None
    cases = [(of(q), of(p, PAIR_NAME[frozenset((p, r))]) if r else of(p))]
    if r is not None:
        cases.append((of(r), of(p, PAIR_NAME[frozenset((p, q))])))
        cases.append((of(PAIR_NAME[frozenset((q, r))]),
                      of(p, PAIR_NAME[frozenset((p, q))], PAIR_NAME[frozenset((p, r))])))
    for s, t in cases:
        if 3 * len(s) >= d and 3 * len(t) >= d:
            return s, t, d
    raise DomainError("no qualifying subset pair; plurality bookkeeping is inconsistent")
