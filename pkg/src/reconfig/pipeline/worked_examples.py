"""Hand-built demonstration instances used by the verification suite.

bottleneck_bcsp_instance: a binary constraint graph on {a,b,c} whose start
(all a) cannot reach its target (x,y moved to c) without breaking an edge:
w and v are pinned to a, so x must step to c while (x,y) still reads a.
Reducing at v with a cloud that happens to omit the edge between v's copies
toward w and x unlocks a perfect transformation, carried out by the explicit
cheating schedule below.

cnf_network_formula: the three-clause formula whose constraint-logic network
is used to demonstrate the orientation semantics and the flip schedule.
"""

from __future__ import annotations

from ..problems.csp import Alphabet, ConstraintGraph
from ..problems.instances import ProblemKind, ReconfigInstance
from ..problems.sat import CnfFormula
from ..reductions.artifacts import ReductionArtifact
from ..reductions.degree_reduction import DegreeReductionParams, degree_reduce

A, B, C = "a", "b", "c"
_SIGMA = (A, B, C)


def bottleneck_bcsp_instance(n_free: int = 2) -> ReconfigInstance:
    """Vertices w,v,x,y plus n free vertices hanging off v."""
    free = tuple(f"z{i}" for i in range(1, n_free + 1))
    vertices = ("w", "v", "x", "y") + free
    edges = [("w", "v"), ("v", "x"), ("x", "y")] + [("v", z) for z in free]
    permissive = frozenset((s, t) for s in _SIGMA for t in _SIGMA)
    constraints = [
        frozenset({(A, A)}),
        frozenset({(A, A), (B, A), (B, B), (B, C), (A, C)}),
        frozenset({(A, A), (B, A), (B, B), (C, B), (C, C)}),
    ] + [permissive] * n_free
    graph = ConstraintGraph(vertices, tuple(edges), Alphabet(_SIGMA),
                            tuple(constraints), 2)
    psi_s = {u: A for u in vertices}
    psi_t = dict(psi_s, x=C, y=C)
    return ReconfigInstance(ProblemKind.CSP, graph, psi_s, psi_t)


def reduced_bottleneck_instance(n_free: int = 2) -> ReductionArtifact:
    """The bottleneck instance after reduction at v only.

    The cloud on v is complete except for the edge between v's copies toward
    w and x (cloud order follows v's incident edges: w, x, then the free
    vertices), which is what makes the cheating schedule possible.
    """
    src = bottleneck_bcsp_instance(n_free)
    size = src.payload.degree("v")
    cloud_edges = tuple((i, j) for i in range(size) for j in range(i + 1, size)
                        if (i, j) != (0, 1))
    return degree_reduce(src, DegreeReductionParams(), at_vertices=("v",),
                         cloud_edges_override={"v": cloud_edges})


def cheating_schedule(artifact: ReductionArtifact) -> list:
    """The explicit perfect transformation on the reduced instance."""
    clouds = artifact.aux["clouds"]["v"]
    members = clouds["members"]
    v_w, v_x, v_free = members[0], members[1], list(members[2:])
    cur = dict(artifact.target.start)
    out = [dict(cur)]

    def step(vertex, value):
        cur[vertex] = value
        out.append(dict(cur))

    for m in v_free:
        step(m, "ab")
    step(v_x, "b")
    step("x", B)
    step("y", B)
    step("x", C)
    step("y", C)
    step(v_x, "a")
    for m in v_free:
        step(m, "a")
    return out


def cnf_network_formula() -> CnfFormula:
    """(w v x v y) and (w v ~x v z) and (x v ~y v z)."""
    w, x, y, z = "w", "x", "y", "z"
    return CnfFormula(
        (w, x, y, z),
        (
            ((w, True), (x, True), (y, True)),
            ((w, True), (x, False), (z, True)),
            ((x, True), (y, False), (z, True)),
        ),
    )


def cnf_network_instance() -> ReconfigInstance:
    """The network formula with endpoints (F,T,T,T) and (F,F,T,T)."""
    formula = cnf_network_formula()
    w, x, y, z = formula.variables
    sigma_s = {w: False, x: True, y: True, z: True}
    sigma_t = {w: False, x: False, y: True, z: True}
    return ReconfigInstance(ProblemKind.SAT, formula, sigma_s, sigma_t)
