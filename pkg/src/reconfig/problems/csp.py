"""Constraint graphs (q-uniform hypergraphs with tuple constraints) and their values.

Values are exact rationals with denominator |E|; no floating point is used.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Mapping, Optional, Sequence

from ..errors import DomainError

Symbol = Hashable
Vertex = Hashable


@dataclass(frozen=True)
class Alphabet:
    """Ordered finite set of distinct symbols; the order breaks ties."""

    symbols: tuple

    def __post_init__(self):
        if not self.symbols:
            raise DomainError("alphabet must be nonempty")
        if len(set(self.symbols)) != len(self.symbols):
            raise DomainError("alphabet symbols must be distinct")
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.symbols)})

    def index(self, symbol) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise DomainError(f"symbol {symbol!r} not in alphabet") from None

    def __contains__(self, symbol) -> bool:
        return symbol in self._index

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)


@dataclass(frozen=True)
class ConstraintGraph:
    """q-uniform constraint hypergraph.

    ``constraints[i]`` is the set of acceptable symbol tuples for ``edges[i]``,
    ordered like the edge tuple.  ``domains`` optionally restricts each
    vertex to a subset of the alphabet (the state space of reconfiguration);
    the value function itself only requires alphabet membership.
    """

    vertices: tuple
    edges: tuple
    alphabet: Alphabet
    constraints: tuple
    q: int
    domains: Optional[Mapping] = None

    def __post_init__(self):
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise DomainError("duplicate vertices")
        if len(self.edges) != len(self.constraints):
            raise DomainError("edges and constraints must align")
        if self.q < 1:
            raise DomainError("arity q must be positive")
        for e in self.edges:
            if len(e) != self.q or len(set(e)) != self.q:
                raise DomainError(f"edge {e!r} must have exactly {self.q} distinct vertices")
            for v in e:
                if v not in vset:
                    raise DomainError(f"edge references unknown vertex {v!r}")
        for e, pi in zip(self.edges, self.constraints):
            for tup in pi:
                if len(tup) != self.q:
                    raise DomainError(f"constraint tuple {tup!r} has wrong arity")
                for s in tup:
                    if s not in self.alphabet:
                        raise DomainError(f"constraint symbol {s!r} not in alphabet")
        if self.domains is not None:
            for v in self.vertices:
                dom = self.domains.get(v)
                if not dom:
                    raise DomainError(f"vertex {v!r} missing from domains")
                for s in dom:
                    if s not in self.alphabet:
                        raise DomainError(f"domain symbol {s!r} not in alphabet")
        degree = {v: 0 for v in self.vertices}
        incident: dict = {v: [] for v in self.vertices}
        for i, e in enumerate(self.edges):
            for v in e:
                degree[v] += 1
                incident[v].append(i)
        object.__setattr__(self, "_degree", degree)
        object.__setattr__(self, "_incident", {v: tuple(ix) for v, ix in incident.items()})
        object.__setattr__(self, "_vertex_index", {v: i for i, v in enumerate(self.vertices)})

    def degree(self, v) -> int:
        return self._degree[v]

    def max_degree(self) -> int:
        return max(self._degree.values()) if self.vertices else 0

    def incident_edges(self, v) -> tuple:
        """Indices of the hyperedges containing v, in edge order."""
        return self._incident[v]

    def domain(self, v) -> tuple:
        if self.domains is None:
            return self.alphabet.symbols
        return tuple(self.domains[v])

    def has_full_domains(self) -> bool:
        if self.domains is None:
            return True
        return all(tuple(self.domains[v]) == self.alphabet.symbols for v in self.vertices)


def check_assignment(graph: ConstraintGraph, psi: Mapping, require_domains: bool = False) -> None:
    """Raise DomainError unless psi is total over V(G) with alphabet symbols."""
    for v in graph.vertices:
        if v not in psi:
            raise DomainError(f"assignment is partial: vertex {v!r} unassigned")
        s = psi[v]
        if s not in graph.alphabet:
            raise DomainError(f"assignment value {s!r} not in alphabet")
        if require_domains and s not in graph.domain(v):
            raise DomainError(f"assignment value {s!r} outside domain of {v!r}")


def satisfied_edge_count(graph: ConstraintGraph, psi: Mapping) -> int:
    n = 0
    for e, pi in zip(graph.edges, graph.constraints):
        if tuple(psi[v] for v in e) in pi:
            n += 1
    return n


def csp_value(graph: ConstraintGraph, psi: Mapping) -> Fraction:
    """Fraction of hyperedges whose constraint accepts psi, as an exact rational."""
    if not graph.edges:
        raise DomainError("constraint graph has no edges; value undefined")
    check_assignment(graph, psi)
    return Fraction(satisfied_edge_count(graph, psi), len(graph.edges))
