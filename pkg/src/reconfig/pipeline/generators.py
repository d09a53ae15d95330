"""Seeded random instance generators for each problem kind.

Endpoint pairs are planted so that both endpoints are feasible (satisfying)
states; with require_value_one the generator resamples until the exhaustive
oracle confirms the pair reconfigures at value 1, so the instance comes with
a usable witness regime.
"""

from __future__ import annotations

import random
from itertools import combinations, product
from typing import Optional

from .. import oracle
from ..errors import DomainError, GenerationError
from ..problems.csp import Alphabet, ConstraintGraph
from ..problems.graphs import SimpleGraph, is_independent_set
from ..problems.instances import ProblemKind, ReconfigInstance
from ..problems.ncl import LinkColor, NclGraph, NodeKind, ncl_value
from ..problems.sat import CnfFormula, clause_satisfied


def _oracle_value_is_one(instance, state_cap) -> bool:
    res = oracle.solve(instance, oracle.OracleConfig(state_cap=state_cap))
    return res.value >= 1


def random_qcsp(rng: random.Random, n_vertices=4, n_edges=4, w=3,
                max_unacceptable=2, ensure_nonpermissive=True) -> ReconfigInstance:
    """Binary CSP over alphabet 1..w with planted satisfying endpoints."""
    if n_vertices < 2:
        raise DomainError("need at least two vertices")
    vertices = tuple(f"v{i}" for i in range(n_vertices))
    pool = list(combinations(range(n_vertices), 2))
    rng.shuffle(pool)
    n_edges = min(n_edges, len(pool))
    chosen = sorted(pool[:n_edges])
    # every vertex must occur in some edge (isolated vertices have no degree
    # to reduce and contribute nothing)
    used = {i for e in chosen for i in e}
    missing = [i for i in range(n_vertices) if i not in used]
    for i in missing:
        j = rng.choice([k for k in range(n_vertices) if k != i])
        e = (min(i, j), max(i, j))
        if e not in chosen:
            chosen.append(e)
    chosen.sort()
    edges = tuple((vertices[i], vertices[j]) for i, j in chosen)

    symbols = tuple(range(1, w + 1))
    psi_s = {v: rng.choice(symbols) for v in vertices}
    psi_t = {v: rng.choice(symbols) for v in vertices}
    all_pairs = list(product(symbols, repeat=2))
    constraints = []
    for e in edges:
        keep = {(psi_s[e[0]], psi_s[e[1]]), (psi_t[e[0]], psi_t[e[1]])}
        removable = [p for p in all_pairs if p not in keep]
        rng.shuffle(removable)
        k = rng.randint(0, min(max_unacceptable, len(removable)))
        constraints.append(frozenset(all_pairs) - set(removable[:k]))
    if ensure_nonpermissive and all(len(pi) == len(all_pairs) for pi in constraints):
        keep = {(psi_s[edges[0][0]], psi_s[edges[0][1]]), (psi_t[edges[0][0]], psi_t[edges[0][1]])}
        drop = next(p for p in all_pairs if p not in keep)
        constraints[0] = constraints[0] - {drop}
    graph = ConstraintGraph(vertices, edges, Alphabet(symbols), tuple(constraints), 2)
    return ReconfigInstance(ProblemKind.CSP, graph, psi_s, psi_t)


def _random_planted_cnf(rng: random.Random, n_vars, n_clauses, k) -> ReconfigInstance:
    if n_vars < k:
        raise DomainError(f"need at least {k} variables for width-{k} clauses")
    variables = tuple(f"x{i}" for i in range(n_vars))
    sigma_s = {v: rng.random() < 0.5 for v in variables}
    sigma_t = {v: rng.random() < 0.5 for v in variables}
    clauses = []
    for _ in range(n_clauses):
        for _attempt in range(200):
            vs = rng.sample(variables, k)
            clause = tuple((v, rng.random() < 0.5) for v in vs)
            if clause_satisfied(clause, sigma_s) and clause_satisfied(clause, sigma_t):
                clauses.append(clause)
                break
        else:
            raise GenerationError("could not plant a clause satisfied by both endpoints")
    formula = CnfFormula(variables, tuple(clauses))
    return ReconfigInstance(ProblemKind.SAT, formula, sigma_s, sigma_t)


def random_eksat(rng: random.Random, n_vars=5, n_clauses=4, k=4) -> ReconfigInstance:
    if k < 4:
        raise DomainError("random_eksat generates width k >= 4")
    return _random_planted_cnf(rng, n_vars, n_clauses, k)


def random_e3sat(rng: random.Random, n_vars=5, n_clauses=5) -> ReconfigInstance:
    return _random_planted_cnf(rng, n_vars, n_clauses, 3)


def random_ncl_andor(rng: random.Random, n_and=2, n_or=2, max_tries=400) -> ReconfigInstance:
    """Random 3-regular AND/OR multigraph with a satisfying endpoint pair.

    Red links pair up AND stubs (two per AND node); blue links pair the
    remaining stubs (one per AND, three per OR).  Parallel links are allowed,
    loops are not.  The instance's endpoints are sampled from the exhaustive
    list of satisfying orientations.
    """
    if (n_and + n_or) % 2:
        raise DomainError("n_AND + n_OR must be even")
    and_nodes = [f"A{i}" for i in range(n_and)]
    or_nodes = [f"O{i}" for i in range(n_or)]
    nodes = tuple([(n, NodeKind.AND) for n in and_nodes] +
                  [(n, NodeKind.OR) for n in or_nodes])
    for _ in range(max_tries):
        red_stubs = [n for n in and_nodes for _ in range(2)]
        blue_stubs = [n for n in and_nodes] + [n for n in or_nodes for _ in range(3)]
        rng.shuffle(red_stubs)
        rng.shuffle(blue_stubs)
        links = []
        ok = True
        for i in range(0, len(red_stubs), 2):
            if red_stubs[i] == red_stubs[i + 1]:
                ok = False
                break
            links.append((red_stubs[i], red_stubs[i + 1], LinkColor.RED))
        if not ok:
            continue
        for i in range(0, len(blue_stubs), 2):
            if blue_stubs[i] == blue_stubs[i + 1]:
                ok = False
                break
            links.append((blue_stubs[i], blue_stubs[i + 1], LinkColor.BLUE))
        if not ok:
            continue
        graph = NclGraph(nodes, tuple(links))
        satisfying = []
        endpoints = [(u, v) for u, v, _ in links]
        for mask in range(1 << len(links)):
            orientation = tuple(endpoints[i][mask >> i & 1] for i in range(len(links)))
            if ncl_value(graph, orientation) == 1:
                satisfying.append(orientation)
        if not satisfying:
            continue
        o_s = rng.choice(satisfying)
        o_t = rng.choice(satisfying)
        return ReconfigInstance(ProblemKind.NCL, graph, o_s, o_t)
    raise GenerationError("no satisfiable AND/OR graph found within the budget")


def random_isr(rng: random.Random, n_vertices=10, edge_prob=0.3) -> ReconfigInstance:
    """Random graph with alpha >= 2 and random independent endpoints."""
    for _ in range(200):
        vertices = tuple(f"u{i}" for i in range(n_vertices))
        edges = tuple((vertices[i], vertices[j])
                      for i, j in combinations(range(n_vertices), 2)
                      if rng.random() < edge_prob)
        graph = SimpleGraph(vertices, edges)
        a = oracle.alpha(graph)
        if a < 2:
            continue

        def sample_set():
            members = set()
            for v in rng.sample(vertices, n_vertices):
                if rng.random() < 0.7 and is_independent_set(graph, members | {v}):
                    members.add(v)
            return frozenset(members)

        return ReconfigInstance(ProblemKind.ISR, graph, sample_set(), sample_set(),
                                opt_size=a)
    raise GenerationError("could not generate an ISR instance with alpha >= 2")


_GENERATORS = {
    "qcsp": random_qcsp,
    "eksat": random_eksat,
    "e3sat": random_e3sat,
    "ncl_andor": random_ncl_andor,
    "isr": random_isr,
}


def generate_instance(kind: str, params: Optional[dict] = None, seed: int = 0,
                      require_value_one: bool = False, state_cap: int = 10 ** 6,
                      max_tries: int = 200) -> ReconfigInstance:
    """Seeded random instance of the requested kind.

    With require_value_one the pair is resampled until the oracle confirms
    maxmin value 1 (VCR: minmax value at most 1).
    """
    if kind not in _GENERATORS:
        raise DomainError(f"unknown instance kind {kind!r}; choose from {sorted(_GENERATORS)}")
    params = dict(params or {})
    rng = random.Random(seed)
    for _ in range(max_tries):
        instance = _GENERATORS[kind](rng, **params)
        if not require_value_one:
            return instance
        try:
            if _oracle_value_is_one(instance, state_cap):
                return instance
        except DomainError:
            continue
    raise GenerationError(f"no value-1 {kind} instance found in {max_tries} tries")
