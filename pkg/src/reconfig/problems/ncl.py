"""Constraint-logic graphs: typed nodes, weighted colored links, orientations.

Red links have weight 1, blue links weight 2.  A node is satisfied when the
total incoming weight reaches its kind's threshold:

  AND / OR / CHOICE / FANOUT : 2
  RED_BLUE                   : 1   (only both-links-outward violates it)
  FREE_TERMINATOR            : 0   (always satisfied)

Parallel links between two nodes are allowed; self-loops are not.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Mapping, Sequence

from ..errors import DomainError


class NodeKind(Enum):
    AND = "and"
    OR = "or"
    CHOICE = "choice"
    RED_BLUE = "red_blue"
    FANOUT = "fanout"
    FREE_TERMINATOR = "free_terminator"


class LinkColor(Enum):
    RED = "red"
    BLUE = "blue"

    @property
    def weight(self) -> int:
        return 1 if self is LinkColor.RED else 2


SATISFY_THRESHOLD = {
    NodeKind.AND: 2,
    NodeKind.OR: 2,
    NodeKind.CHOICE: 2,
    NodeKind.FANOUT: 2,
    NodeKind.RED_BLUE: 1,
    NodeKind.FREE_TERMINATOR: 0,
}

# (red count, blue count) required per node kind; FREE_TERMINATOR takes one
# link of either color.
_INCIDENCE = {
    NodeKind.AND: (2, 1),
    NodeKind.OR: (0, 3),
    NodeKind.CHOICE: (3, 0),
    NodeKind.RED_BLUE: (1, 1),
    NodeKind.FANOUT: (2, 1),
}


@dataclass(frozen=True)
class NclGraph:
    """Typed-node graph with red (weight 1) and blue (weight 2) links."""

    nodes: tuple  # of (node id, NodeKind)
    links: tuple  # of (node id, node id, LinkColor)

    def __post_init__(self):
        ids = [n for n, _ in self.nodes]
        if len(set(ids)) != len(ids):
            raise DomainError("duplicate node ids")
        kind = dict(self.nodes)
        incident: dict = {n: [] for n in ids}
        for i, (u, v, color) in enumerate(self.links):
            if u == v:
                raise DomainError(f"link {i} is a self-loop")
            if u not in kind or v not in kind:
                raise DomainError(f"link {i} references an unknown node")
            if not isinstance(color, LinkColor):
                raise DomainError(f"link {i} has invalid color {color!r}")
            incident[u].append(i)
            incident[v].append(i)
        for n, k in self.nodes:
            reds = sum(1 for i in incident[n] if self.links[i][2] is LinkColor.RED)
            blues = len(incident[n]) - reds
            if k is NodeKind.FREE_TERMINATOR:
                if reds + blues != 1:
                    raise DomainError(f"terminator {n!r} must have exactly one link")
            elif (reds, blues) != _INCIDENCE[k]:
                raise DomainError(
                    f"node {n!r} of kind {k.value} has {reds} red / {blues} blue links"
                )
        object.__setattr__(self, "_kind", kind)
        object.__setattr__(self, "_incident", {n: tuple(ix) for n, ix in incident.items()})

    def kind_of(self, node) -> NodeKind:
        return self._kind[node]

    def incident_links(self, node) -> tuple:
        return self._incident[node]

    def node_count(self, kind: NodeKind) -> int:
        return sum(1 for _, k in self.nodes if k is kind)


# An orientation assigns each link its head: a tuple of node ids aligned with
# graph.links, entry i being the endpoint link i points into.
Orientation = tuple


def check_orientation(graph: NclGraph, orientation: Sequence) -> None:
    if len(orientation) != len(graph.links):
        raise DomainError("orientation must assign a head to every link")
    for i, head in enumerate(orientation):
        u, v, _ = graph.links[i]
        if head != u and head != v:
            raise DomainError(f"head of link {i} must be one of its endpoints")


def incoming_weight(graph: NclGraph, orientation: Sequence, node) -> int:
    w = 0
    for i in graph.incident_links(node):
        if orientation[i] == node:
            w += graph.links[i][2].weight
    return w


def node_satisfied(graph: NclGraph, orientation: Sequence, node) -> bool:
    return incoming_weight(graph, orientation, node) >= SATISFY_THRESHOLD[graph.kind_of(node)]


def satisfied_node_count(graph: NclGraph, orientation: Sequence) -> int:
    return sum(1 for n, _ in graph.nodes if node_satisfied(graph, orientation, n))


def ncl_value(graph: NclGraph, orientation: Sequence) -> Fraction:
    """Fraction of satisfied nodes, exact, with denominator |nodes|."""
    if not graph.nodes:
        raise DomainError("graph has no nodes; value undefined")
    check_orientation(graph, orientation)
    return Fraction(satisfied_node_count(graph, orientation), len(graph.nodes))


def orientation_from_heads(graph: NclGraph, heads: Mapping) -> Orientation:
    """Build an orientation tuple from a link-index to head mapping."""
    return tuple(heads[i] for i in range(len(graph.links)))
