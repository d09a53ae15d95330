"""Regular graphs, adjacency spectra, expander certificates, mixing checks.

Floating point is confined to this module.  Certificates are conservative:
the eigensolver residual is added to the measured bound before any
comparison, and the top eigenvalue is checked against the degree as a
self-test of the solve.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt
from typing import Iterable, Optional

import networkx as nx
import numpy as np

from .errors import CertificationError, DomainError, GenerationError

DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class RegularGraph:
    """Simple d-regular graph on vertices 0..n-1."""

    n: int
    d: int
    edges: tuple  # of (i, j) with i < j

    def __post_init__(self):
        if self.n < 1 or self.d < 0:
            raise DomainError("need n >= 1 and d >= 0")
        if self.n * self.d % 2 != 0:
            raise DomainError("n*d must be even")
        deg = [0] * self.n
        seen = set()
        for (i, j) in self.edges:
            if i == j:
                raise DomainError("self-loop")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise DomainError("edge endpoint out of range")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise DomainError("multi-edge")
            seen.add(key)
            deg[i] += 1
            deg[j] += 1
        if any(x != self.d for x in deg):
            raise DomainError("graph is not d-regular")


@dataclass(frozen=True)
class ExpanderCertificate:
    """Upper bound on max(lambda_2, |lambda_n|) of the adjacency matrix.

    ``lam`` is the certified bound: the measured value plus the residual
    tolerance.  ``lam < d`` is required of any certificate.
    """

    lam: float
    measured: float
    method: str
    tolerance: float


@dataclass(frozen=True)
class MixingCheck:
    lhs: float
    rhs: float
    holds: bool
    edge_count: int


@dataclass(frozen=True)
class CloudGraph:
    graph: RegularGraph
    complete: bool
    certificate: Optional[ExpanderCertificate]


def complete_graph(n: int) -> RegularGraph:
    edges = tuple((i, j) for i in range(n) for j in range(i + 1, n))
    return RegularGraph(n, n - 1 if n > 1 else 0, edges)


def cycle_graph(n: int) -> RegularGraph:
    if n < 3:
        raise DomainError("cycle needs n >= 3")
    return RegularGraph(n, 2, tuple((i, (i + 1) % n) for i in range(n - 1)) + ((0, n - 1),))


def random_regular(n: int, d: int, seed: int) -> RegularGraph:
    """Random simple d-regular graph via the pairing model, deterministic per seed."""
    if d < 3:
        raise DomainError("random_regular needs d >= 3")
    if d >= n:
        raise DomainError("random_regular needs d < n")
    if n * d % 2 != 0:
        raise DomainError("n*d must be even")
    try:
        g = nx.random_regular_graph(d, n, seed=seed)
    except nx.NetworkXError as exc:
        raise GenerationError(f"regular graph generation failed: {exc}") from exc
    edges = tuple(sorted((min(u, v), max(u, v)) for u, v in g.edges()))
    return RegularGraph(n, d, edges)


def _adjacency(graph: RegularGraph) -> np.ndarray:
    a = np.zeros((graph.n, graph.n))
    for (i, j) in graph.edges:
        a[i, j] = 1.0
        a[j, i] = 1.0
    return a


def spectral_bound(graph: RegularGraph, tolerance: float = DEFAULT_TOLERANCE) -> ExpanderCertificate:
    """Measure max(lambda_2, |lambda_n|) with a dense symmetric eigensolver.

    The top eigenvalue is verified to equal d within the tolerance as a
    solver self-check.
    """
    if graph.n == 1:
        return ExpanderCertificate(tolerance, 0.0, "trivial single vertex", tolerance)
    eigs = np.linalg.eigvalsh(_adjacency(graph))  # ascending
    lam1 = float(eigs[-1])
    if abs(lam1 - graph.d) > tolerance:
        raise CertificationError(
            f"top eigenvalue {lam1} deviates from degree {graph.d} beyond {tolerance}")
    measured = max(float(eigs[-2]), abs(float(eigs[0])))
    return ExpanderCertificate(measured + tolerance, measured,
                               "numpy.linalg.eigvalsh dense symmetric", tolerance)


def mixing_check(graph: RegularGraph, lam: float, s: Iterable, t: Iterable) -> MixingCheck:
    """Check |e(S,T) - d|S||T|/n| <= lam * sqrt(|S||T|).

    e(S,T) counts each edge once when one endpoint lies in S and the other
    in T; the degree-reduction use is on disjoint S, T.
    """
    ss, ts = set(s), set(t)
    e_st = 0
    for (i, j) in graph.edges:
        if (i in ss and j in ts) or (j in ss and i in ts):
            e_st += 1
    lhs = abs(e_st - graph.d * len(ss) * len(ts) / graph.n)
    rhs = lam * sqrt(len(ss) * len(ts))
    return MixingCheck(lhs, rhs, lhs <= rhs, e_st)


def make_cloud(size: int, d0: int, cloud_threshold: Optional[int] = None,
               expander_source: str = "complete_only", seed: int = 0,
               retries: int = 5) -> CloudGraph:
    """Cloud graph for a vertex of the given degree.

    Complete graph when the expander branch is off, the size is below the
    threshold, or a d0-regular graph cannot exist; otherwise a random
    d0-regular graph regenerated until certified lam <= 2*sqrt(d0).
    """
    if size < 1:
        raise DomainError("cloud size must be >= 1")
    use_expander = (expander_source == "verified_random_regular"
                    and cloud_threshold is not None
                    and size >= cloud_threshold
                    and size > d0)
    if not use_expander:
        return CloudGraph(complete_graph(size), True, None)
    if size * d0 % 2 != 0:
        return CloudGraph(complete_graph(size), True, None)
    target = 2.0 * sqrt(d0)
    last = None
    for attempt in range(retries):
        g = random_regular(size, d0, seed + attempt)
        cert = spectral_bound(g)
        last = cert
        if cert.lam <= target:
            return CloudGraph(g, False, cert)
    raise CertificationError(
        f"no certified ({size},{d0},{target:.4f})-expander in {retries} attempts"
        f" (last bound {last.lam if last else 'n/a'})")
