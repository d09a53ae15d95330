"""Exact width-3 SAT to constraint logic via the CNF network.

One CHOICE node per variable (third red link parked on a free terminator,
the other two carrying the positive and negative literal signals), one OR
node per clause.  A literal occurring in t clauses reaches them through a
linear chain: a RED_BLUE converter, then t-1 FANOUT splitters each feeding a
RED_BLUE converter per branch.  Unused literals end in free terminators.

A truth assignment orients every link of a literal's tree toward the clauses
exactly when the literal is true, which satisfies every node iff the
assignment satisfies every clause.
"""

from __future__ import annotations

from typing import Sequence

from ..errors import DomainError
from ..problems.instances import ProblemKind, ReconfigInstance
from ..problems.ncl import LinkColor, NclGraph, NodeKind
from ..problems.sat import CnfFormula, cnf_value, literal_true
from ._seq import check_source_sequence
from .artifacts import ReductionArtifact

TAG = "e3sat_to_ncl"


def _lit_key(lit) -> str:
    v, pol = lit
    return f"{v}+" if pol else f"{v}-"


def _var_node(v) -> str:
    return f"var:{v}"


def _clause_node(j: int) -> str:
    return f"cl:{j}"


class _Builder:
    def __init__(self):
        self.nodes = []
        self.links = []
        self.provenance = {}
        self.tree_links = {}  # lit key -> list of (link_idx, depth, parent, child)

    def add_node(self, name, kind, why):
        self.nodes.append((name, kind))
        self.provenance[("node", name)] = why
        return name

    def add_link(self, parent, child, color, lit, depth, why):
        idx = len(self.links)
        self.links.append((parent, child, color))
        self.provenance[("link", idx)] = why
        if lit is not None:
            self.tree_links.setdefault(lit, []).append((idx, depth, parent, child))
        return idx

    def chain(self, lit, rb, occs, depth, counter):
        """Continue a literal chain from RED_BLUE node rb toward clauses occs."""
        if len(occs) == 1:
            self.add_link(rb, _clause_node(occs[0]), LinkColor.BLUE, lit, depth,
                          {"literal": lit, "clause": occs[0]})
            return
        fo = self.add_node(f"fo:{lit}:{counter[0]}", NodeKind.FANOUT, {"literal": lit})
        counter[0] += 1
        self.add_link(rb, fo, LinkColor.BLUE, lit, depth, {"literal": lit})
        leaf_rb = self.add_node(f"rb:{lit}:{counter[1]}", NodeKind.RED_BLUE, {"literal": lit})
        counter[1] += 1
        self.add_link(fo, leaf_rb, LinkColor.RED, lit, depth + 1, {"literal": lit})
        self.add_link(leaf_rb, _clause_node(occs[0]), LinkColor.BLUE, lit, depth + 2,
                      {"literal": lit, "clause": occs[0]})
        next_rb = self.add_node(f"rb:{lit}:{counter[1]}", NodeKind.RED_BLUE, {"literal": lit})
        counter[1] += 1
        self.add_link(fo, next_rb, LinkColor.RED, lit, depth + 1, {"literal": lit})
        self.chain(lit, next_rb, occs[1:], depth + 2, counter)


def e3sat_to_ncl(src: ReconfigInstance) -> ReductionArtifact:
    if src.kind is not ProblemKind.SAT:
        raise DomainError("e3sat_to_ncl expects a SAT instance")
    formula: CnfFormula = src.payload
    if formula.uniform_width != 3:
        raise DomainError("source must have uniform clause width exactly 3")
    if cnf_value(formula, src.start) != 1 or cnf_value(formula, src.target) != 1:
        raise DomainError("start and target must satisfy the source formula")

    b = _Builder()
    for j in range(formula.num_clauses):
        b.add_node(_clause_node(j), NodeKind.OR, {"clause": j})
    var_term_link = {}
    for v in formula.variables:
        b.add_node(_var_node(v), NodeKind.CHOICE, {"variable": str(v)})
        term = b.add_node(f"vterm:{v}", NodeKind.FREE_TERMINATOR, {"variable": str(v)})
        var_term_link[v] = b.add_link(_var_node(v), term, LinkColor.RED, None, 0,
                                      {"variable": str(v), "role": "slack"})
        for pol in (True, False):
            lit = _lit_key((v, pol))
            occs = [j for j, c in enumerate(formula.clauses) if (v, pol) in c]
            if not occs:
                t = b.add_node(f"lterm:{lit}", NodeKind.FREE_TERMINATOR, {"literal": lit})
                b.add_link(_var_node(v), t, LinkColor.RED, lit, 0,
                           {"literal": lit, "role": "terminator"})
            else:
                rb = b.add_node(f"rb:{lit}:0", NodeKind.RED_BLUE, {"literal": lit})
                b.add_link(_var_node(v), rb, LinkColor.RED, lit, 0, {"literal": lit})
                b.chain(lit, rb, occs, 1, [1, 1])

    graph = NclGraph(tuple(b.nodes), tuple(b.links))
    aux = {
        "trees": {lit: tuple(links) for lit, links in b.tree_links.items()},
        "var_term_link": var_term_link,
    }

    def orient(sigma):
        heads = [None] * len(graph.links)
        for v in formula.variables:
            heads[var_term_link[v]] = _var_node(v)
            for pol in (True, False):
                lit = _lit_key((v, pol))
                toward_leaves = sigma[v] is pol
                for idx, _, parent, child in b.tree_links.get(lit, ()):
                    heads[idx] = child if toward_leaves else parent
        return tuple(heads)

    target = ReconfigInstance(ProblemKind.NCL, graph, orient(src.start), orient(src.target))
    structure = {
        "nodes": len(graph.nodes),
        "links": len(graph.links),
        "choice_nodes": graph.node_count(NodeKind.CHOICE),
        "or_nodes": graph.node_count(NodeKind.OR),
        "fanout_nodes": graph.node_count(NodeKind.FANOUT),
        "red_blue_nodes": graph.node_count(NodeKind.RED_BLUE),
        "terminator_nodes": graph.node_count(NodeKind.FREE_TERMINATOR),
    }
    art = ReductionArtifact(TAG, src, target, b.provenance, structure, aux)
    return art


def orientation_for(artifact: ReductionArtifact, sigma) -> tuple:
    """The canonical orientation induced by a truth assignment."""
    formula: CnfFormula = artifact.source.payload
    graph: NclGraph = artifact.target.payload
    heads = [None] * len(graph.links)
    for v in formula.variables:
        heads[artifact.aux["var_term_link"][v]] = _var_node(v)
        for pol in (True, False):
            lit = _lit_key((v, pol))
            toward_leaves = sigma[v] is pol
            for idx, _, parent, child in artifact.aux["trees"].get(lit, ()):
                heads[idx] = child if toward_leaves else parent
    return tuple(heads)


def map_sequence_e3sat_to_ncl(artifact: ReductionArtifact, src_seq: Sequence) -> list:
    """Lift a value-1 source sequence.

    For a flip of x, the tree of the previously true literal is reversed
    inward leaf to root, then the other literal's tree is reversed outward
    root to leaf; clause nodes stay satisfied through their other true
    literal.
    """
    states = check_source_sequence(artifact.source, src_seq)
    formula: CnfFormula = artifact.source.payload
    trees = artifact.aux["trees"]
    cur = list(artifact.target.start)
    out = [tuple(cur)]
    for i in range(1, len(states)):
        pre, post = states[i - 1], states[i]
        if pre == post:
            out.append(tuple(cur))
            continue
        x = next(v for v in formula.variables if pre[v] != post[v])
        was_true = _lit_key((x, pre[x]))
        now_true = _lit_key((x, post[x]))
        inward = sorted(trees.get(was_true, ()), key=lambda l: (-l[1], l[0]))
        for idx, _, parent, _child in inward:
            if cur[idx] != parent:
                cur[idx] = parent
                out.append(tuple(cur))
        outward = sorted(trees.get(now_true, ()), key=lambda l: (l[1], l[0]))
        for idx, _, _parent, child in outward:
            if cur[idx] != child:
                cur[idx] = child
                out.append(tuple(cur))
    return out


def project_sequence_e3sat_to_ncl(artifact: ReductionArtifact, target_seq) -> list:
    """Read a truth value off each variable gadget.

    x is True exactly when its positive link leaves the variable node and
    its negative link enters it.
    """
    formula: CnfFormula = artifact.source.payload
    trees = artifact.aux["trees"]
    roots = {}
    for v in formula.variables:
        pos = trees[_lit_key((v, True))][0]
        negl = trees[_lit_key((v, False))][0]
        roots[v] = (pos[0], negl[0])
    out = []
    for heads in target_seq:
        sigma = {}
        for v in formula.variables:
            pos_idx, neg_idx = roots[v]
            pos_out = heads[pos_idx] != _var_node(v)
            neg_in = heads[neg_idx] == _var_node(v)
            sigma[v] = pos_out and neg_in
        out.append(sigma)
    return out
