"""Simple undirected graphs and vertex-subset problems (ISR / VCR / Clique)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import DomainError, InvalidSequenceError


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph: no loops, no multi-edges."""

    vertices: tuple
    edges: tuple  # of (u, v) pairs

    def __post_init__(self):
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise DomainError("duplicate vertices")
        seen = set()
        adjacency: dict = {v: set() for v in self.vertices}
        for (u, v) in self.edges:
            if u == v:
                raise DomainError(f"loop at {u!r}")
            if u not in vset or v not in vset:
                raise DomainError(f"edge ({u!r},{v!r}) references unknown vertex")
            key = frozenset((u, v))
            if key in seen:
                raise DomainError(f"multi-edge ({u!r},{v!r})")
            seen.add(key)
            adjacency[u].add(v)
            adjacency[v].add(u)
        object.__setattr__(self, "_adj", {v: frozenset(a) for v, a in adjacency.items()})

    def neighbors(self, v) -> frozenset:
        return self._adj[v]

    def has_edge(self, u, v) -> bool:
        return v in self._adj[u]


def complement(graph: SimpleGraph) -> SimpleGraph:
    verts = graph.vertices
    edges = []
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if not graph.has_edge(u, v):
                edges.append((u, v))
    return SimpleGraph(verts, tuple(edges))


def is_independent_set(graph: SimpleGraph, members: Iterable) -> bool:
    ms = set(members)
    if not ms <= set(graph.vertices):
        return False
    return all(not (graph.neighbors(v) & ms) for v in ms)


def is_vertex_cover(graph: SimpleGraph, members: Iterable) -> bool:
    ms = set(members)
    if not ms <= set(graph.vertices):
        return False
    return all(u in ms or v in ms for (u, v) in graph.edges)


def is_clique(graph: SimpleGraph, members: Iterable) -> bool:
    ms = list(set(members))
    if not set(ms) <= set(graph.vertices):
        return False
    for i, u in enumerate(ms):
        for v in ms[i + 1:]:
            if not graph.has_edge(u, v):
                return False
    return True


@dataclass(frozen=True)
class VertexSubset:
    """A vertex set tagged with the role it is supposed to play."""

    members: frozenset
    role: str  # independent_set | vertex_cover | clique

    def check(self, graph: SimpleGraph) -> bool:
        if self.role == "independent_set":
            return is_independent_set(graph, self.members)
        if self.role == "vertex_cover":
            return is_vertex_cover(graph, self.members)
        if self.role == "clique":
            return is_clique(graph, self.members)
        raise DomainError(f"unknown role {self.role!r}")


def set_sequence_value(kind: str, graph: SimpleGraph, seq: Sequence, opt_size: int) -> Fraction:
    """Sequence value for vertex-subset problems.

    ISR / Clique: min_i |S_i| / (opt_size - 1), requiring opt_size >= 2.
    VCR: max_i |C_i| / (opt_size + 1).

    Invalid states are reported with their index.
    """
    if not seq:
        raise DomainError("empty sequence")
    if kind in ("isr", "clique"):
        if opt_size < 2:
            raise DomainError(f"{kind}: optimum {opt_size} < 2 makes the value denominator vanish")
        checker = is_independent_set if kind == "isr" else is_clique
        best = None
        for i, state in enumerate(seq):
            if not checker(graph, state):
                raise InvalidSequenceError(f"state is not a valid {kind} solution", index=i)
            val = Fraction(len(state), opt_size - 1)
            best = val if best is None else min(best, val)
        return best
    if kind == "vcr":
        worst = None
        for i, state in enumerate(seq):
            if not is_vertex_cover(graph, state):
                raise InvalidSequenceError("state is not a vertex cover", index=i)
            val = Fraction(len(state), opt_size + 1)
            worst = val if worst is None else max(worst, val)
        return worst
    raise DomainError(f"unknown subset problem kind {kind!r}")
