"""Exact ground-truth computation of reconfiguration values by exhaustive search.

maxmin_value / minmax_value iterate candidate thresholds over the value grid
k/denominator (descending for maxmin, ascending for minmax) and test
start-to-target reachability by breadth-first search over the states whose
value clears the threshold.  The first reachable threshold is the answer and
the BFS shortest path is the witness.  Everything is deterministic: states
are encoded canonically and neighbors are generated in a fixed order.

alpha / beta / omega are computed by branch-and-bound maximum independent
set, exact at the graph sizes this library targets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Optional

from .errors import CapacityError, DomainError
from .problems.csp import ConstraintGraph
from .problems.graphs import SimpleGraph
from .problems.instances import ProblemKind, ReconfigInstance, check_state
from .problems.ncl import SATISFY_THRESHOLD, NclGraph
from .problems.sat import CnfFormula


@dataclass(frozen=True)
class OracleConfig:
    state_cap: int = 10 ** 6
    value_mode: str = "maxmin"  # informational; see maxmin_value / minmax_value

    def __post_init__(self):
        if self.state_cap < 1:
            raise DomainError("state_cap must be >= 1")


@dataclass(frozen=True)
class OracleResult:
    value: Fraction
    witness: Optional[tuple]
    explored_states: int


class _CspSpace:
    """States are tuples of per-vertex domain indices."""

    def __init__(self, graph: ConstraintGraph):
        if not graph.edges:
            raise DomainError("constraint graph has no edges; value undefined")
        self.graph = graph
        self.vertices = graph.vertices
        self.domains = [graph.domain(v) for v in self.vertices]
        self.dom_index = [{s: i for i, s in enumerate(d)} for d in self.domains]
        self.size = prod(len(d) for d in self.domains)
        self.denominator = len(graph.edges)
        vpos = {v: i for i, v in enumerate(self.vertices)}
        self._edges = []
        for e, pi in zip(graph.edges, graph.constraints):
            positions = tuple(vpos[v] for v in e)
            accept = set()
            for tup in pi:
                try:
                    accept.add(tuple(self.dom_index[p][s] for p, s in zip(positions, tup)))
                except KeyError:
                    continue  # tuple outside the domains can never be matched
            self._edges.append((positions, accept))

    def encode(self, psi):
        try:
            return tuple(self.dom_index[i][psi[v]] for i, v in enumerate(self.vertices))
        except KeyError as exc:
            raise DomainError(f"state symbol outside vertex domain: {exc}") from None

    def decode(self, key):
        return {v: self.domains[i][key[i]] for i, v in enumerate(self.vertices)}

    def count(self, key) -> int:
        n = 0
        for positions, accept in self._edges:
            if tuple(key[p] for p in positions) in accept:
                n += 1
        return n

    def neighbors(self, key):
        for i in range(len(key)):
            cur = key[i]
            for s in range(len(self.domains[i])):
                if s != cur:
                    yield key[:i] + (s,) + key[i + 1:]


class _SatSpace:
    """States are bitmasks over the variable order; bit set means True."""

    def __init__(self, formula: CnfFormula):
        if not formula.clauses:
            raise DomainError("formula has no clauses; value undefined")
        self.formula = formula
        self.n = len(formula.variables)
        self.size = 1 << self.n
        self.denominator = len(formula.clauses)
        self.full = self.size - 1
        vbit = {v: i for i, v in enumerate(formula.variables)}
        self._masks = []
        for c in formula.clauses:
            pos = 0
            negm = 0
            for (v, pol) in c:
                if pol:
                    pos |= 1 << vbit[v]
                else:
                    negm |= 1 << vbit[v]
            self._masks.append((pos, negm))

    def encode(self, sigma):
        key = 0
        for i, v in enumerate(self.formula.variables):
            if sigma[v]:
                key |= 1 << i
        return key

    def decode(self, key):
        return {v: bool(key >> i & 1) for i, v in enumerate(self.formula.variables)}

    def count(self, key) -> int:
        n = 0
        inv = self.full ^ key
        for pos, negm in self._masks:
            if key & pos or inv & negm:
                n += 1
        return n

    def neighbors(self, key):
        for i in range(self.n):
            yield key ^ (1 << i)


class _NclSpace:
    """States are bitmasks over links; bit set means the head is endpoint 1."""

    def __init__(self, graph: NclGraph):
        if not graph.nodes:
            raise DomainError("graph has no nodes; value undefined")
        self.graph = graph
        self.n = len(graph.links)
        self.size = 1 << self.n
        self.denominator = len(graph.nodes)
        self._nodes = []
        for node, kind in graph.nodes:
            terms = []
            for i in graph.incident_links(node):
                u, v, color = graph.links[i]
                inward_bit = 1 if v == node else 0
                terms.append((i, inward_bit, color.weight))
            self._nodes.append((tuple(terms), SATISFY_THRESHOLD[kind]))

    def encode(self, orientation):
        key = 0
        for i, head in enumerate(orientation):
            if head == self.graph.links[i][1]:
                key |= 1 << i
        return key

    def decode(self, key):
        return tuple(link[1] if key >> i & 1 else link[0]
                     for i, link in enumerate(self.graph.links))

    def count(self, key) -> int:
        n = 0
        for terms, threshold in self._nodes:
            w = 0
            for i, inward_bit, weight in terms:
                if (key >> i & 1) == inward_bit:
                    w += weight
                    if w >= threshold:
                        break
            if w >= threshold:
                n += 1
        return n

    def neighbors(self, key):
        for i in range(self.n):
            yield key ^ (1 << i)


class _SubsetSpace:
    """States are vertex bitmasks restricted to feasible subsets."""

    def __init__(self, graph: SimpleGraph, kind: ProblemKind, opt_size: int):
        self.graph = graph
        self.kind = kind
        self.n = len(graph.vertices)
        self.size = 1 << self.n
        vbit = {v: i for i, v in enumerate(graph.vertices)}
        adj = [0] * self.n
        for (u, v) in graph.edges:
            adj[vbit[u]] |= 1 << vbit[v]
            adj[vbit[v]] |= 1 << vbit[u]
        if kind is ProblemKind.CLIQUE:
            full = self.size - 1
            adj = [(full ^ adj[i]) & ~(1 << i) for i in range(self.n)]  # complement
        self._adj = adj
        self._vbit = vbit
        if kind is ProblemKind.VCR:
            self.denominator = opt_size + 1
        else:
            if opt_size < 2:
                raise DomainError(f"{kind.value}: optimum {opt_size} < 2 makes the denominator vanish")
            self.denominator = opt_size - 1

    def encode(self, members):
        key = 0
        for v in members:
            key |= 1 << self._vbit[v]
        return key

    def decode(self, key):
        return frozenset(v for v, i in self._vbit.items() if key >> i & 1)

    def count(self, key) -> int:
        return key.bit_count()

    def _indep_ok_add(self, key, i) -> bool:
        return not (self._adj[i] & key)

    def neighbors(self, key):
        if self.kind is ProblemKind.VCR:
            full = self.size - 1
            comp = full ^ key
            for i in range(self.n):
                bit = 1 << i
                if key & bit:
                    # removal keeps a cover iff i has no uncovered neighbor
                    if not (self._adj[i] & comp):
                        yield key ^ bit
                else:
                    yield key | bit
        elif self.kind is ProblemKind.CLIQUE:
            for i in range(self.n):
                bit = 1 << i
                if key & bit:
                    yield key ^ bit
                else:
                    rest = key
                    if self._adj[i] & rest == rest:
                        yield key | bit
        else:  # ISR
            for i in range(self.n):
                bit = 1 << i
                if key & bit:
                    yield key ^ bit
                elif self._indep_ok_add(key, i):
                    yield key | bit


def _make_space(instance: ReconfigInstance):
    kind = instance.kind
    if kind is ProblemKind.CSP:
        return _CspSpace(instance.payload)
    if kind is ProblemKind.SAT:
        return _SatSpace(instance.payload)
    if kind is ProblemKind.NCL:
        return _NclSpace(instance.payload)
    opt = instance.opt_size
    if opt is None:
        if kind is ProblemKind.ISR:
            opt = alpha(instance.payload)
        elif kind is ProblemKind.VCR:
            opt = beta(instance.payload)
        else:
            opt = omega(instance.payload)
    return _SubsetSpace(instance.payload, kind, opt)


def _bfs(space, start, target, allowed):
    """Shortest path from start to target through allowed states, or None."""
    if not allowed(start) or not allowed(target):
        return None
    if start == target:
        return [start]
    parent = {start: None}
    queue = deque((start,))
    while queue:
        u = queue.popleft()
        for w in space.neighbors(u):
            if w in parent or not allowed(w):
                continue
            parent[w] = u
            if w == target:
                path = [w]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                path.reverse()
                return path
            queue.append(w)
    return None


def _solve(instance: ReconfigInstance, cfg: OracleConfig, minmax: bool) -> OracleResult:
    space = _make_space(instance)
    if space.size > cfg.state_cap:
        raise CapacityError(f"state space {space.size} exceeds cap {cfg.state_cap}")
    for name, state in (("start", instance.start), ("target", instance.target)):
        ok, reason = check_state(instance, state)
        if not ok:
            raise DomainError(f"{name} state is malformed: {reason}")
    start = space.encode(instance.start)
    target = space.encode(instance.target)

    counts: dict = {}

    def cnt(key):
        c = counts.get(key)
        if c is None:
            c = space.count(key)
            counts[key] = c
        return c

    c_start, c_target = cnt(start), cnt(target)
    if minmax:
        candidates = range(max(c_start, c_target), space.n + 1)
    else:
        candidates = range(min(c_start, c_target), -1, -1)
    for k in candidates:
        if minmax:
            allowed = lambda s: cnt(s) <= k  # noqa: E731
        else:
            allowed = lambda s: cnt(s) >= k  # noqa: E731
        path = _bfs(space, start, target, allowed)
        if path is not None:
            witness = tuple(space.decode(s) for s in path)
            return OracleResult(Fraction(k, space.denominator), witness, len(counts))
    raise DomainError("start and target are not connected in the full state space")


def maxmin_value(instance: ReconfigInstance, cfg: OracleConfig = OracleConfig()) -> OracleResult:
    """Best achievable worst-state value over all start-to-target sequences."""
    if instance.kind is ProblemKind.VCR:
        raise DomainError("vertex cover reconfiguration uses minmax_value")
    return _solve(instance, cfg, minmax=False)


def minmax_value(instance: ReconfigInstance, cfg: OracleConfig = OracleConfig()) -> OracleResult:
    """Least achievable worst-state value for vertex cover reconfiguration."""
    if instance.kind is not ProblemKind.VCR:
        raise DomainError("minmax_value is defined for VCR instances only")
    return _solve(instance, cfg, minmax=True)


def solve(instance: ReconfigInstance, cfg: OracleConfig = OracleConfig()) -> OracleResult:
    """Dispatch to the objective matching the instance kind."""
    if instance.kind is ProblemKind.VCR:
        return minmax_value(instance, cfg)
    return maxmin_value(instance, cfg)


def _mis_size_and_set(adj, n):
    """Branch and bound over 'every maximal IS meets a closed neighborhood'."""
    best = 0
    best_set = 0

    def rec(cand, size, chosen):
        nonlocal best, best_set
        if size + cand.bit_count() <= best:
            return
        if not cand:
            if size > best:
                best, best_set = size, chosen
            return
        # pivot: minimum degree inside the candidate set, lowest index on ties
        pivot, pivot_deg = -1, None
        m = cand
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            d = (adj[i] & cand).bit_count()
            if pivot_deg is None or d < pivot_deg:
                pivot, pivot_deg = i, d
        branch = [pivot]
        m = adj[pivot] & cand
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            branch.append(i)
        for w in branch:
            rec(cand & ~adj[w] & ~(1 << w), size + 1, chosen | (1 << w))

    rec((1 << n) - 1, 0, 0)
    return best, best_set


def _adj_masks(graph: SimpleGraph):
    vbit = {v: i for i, v in enumerate(graph.vertices)}
    adj = [0] * len(graph.vertices)
    for (u, v) in graph.edges:
        adj[vbit[u]] |= 1 << vbit[v]
        adj[vbit[v]] |= 1 << vbit[u]
    return adj


def alpha(graph: SimpleGraph) -> int:
    """Size of a maximum independent set, exact."""
    if not graph.vertices:
        return 0
    size, _ = _mis_size_and_set(_adj_masks(graph), len(graph.vertices))
    return size


def maximum_independent_set(graph: SimpleGraph) -> frozenset:
    """One maximum independent set (deterministic branching order)."""
    if not graph.vertices:
        return frozenset()
    _, mask = _mis_size_and_set(_adj_masks(graph), len(graph.vertices))
    return frozenset(v for i, v in enumerate(graph.vertices) if mask >> i & 1)


def beta(graph: SimpleGraph) -> int:
    """Size of a minimum vertex cover; always |V| - alpha(G)."""
    return len(graph.vertices) - alpha(graph)


def omega(graph: SimpleGraph) -> int:
    """Size of a maximum clique, via the complement's independence number."""
    if not graph.vertices:
        return 0
    n = len(graph.vertices)
    adj = _adj_masks(graph)
    full = (1 << n) - 1
    comp = [(full ^ adj[i]) & ~(1 << i) for i in range(n)]
    size, _ = _mis_size_and_set(comp, n)
    return size
