"""Independent-set constructions, each returning a verified certificate.

Ties are always broken toward the lowest vertex id.
"""

from __future__ import annotations

import heapq
import logging
import math
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, NamedTuple

from .errors import GraphInputError, ParameterError, ValidationError
from .graph import (
    Graph,
    closed_neighborhood,
    induced_subgraph,
    is_triangle_free,
    neighborhood_ball,
    remove_vertices,
    vertex_set,
)
from .minor_engine import DEFAULT_TRIALS, dense_minor_via_balls
from .short_paths import count_disjoint_short_paths

__all__ = [
    "PROVENANCES",
    "IndependentSetCertificate",
    "PeelParams",
    "PeelResult",
    "G3kResult",
    "turan_greedy",
    "peel_low_degree",
    "maximum_bipartite_matching",
    "bipartite_min_vertex_cover",
    "g3k_construction",
    "g3k_certificate",
    "sparse_neighborhood_set",
    "recursive_independent_set",
    "strip_high_degree",
]

log = logging.getLogger(__name__)

PROVENANCES = ("turan", "peel_centers", "g3k_certificate", "recursion", "manual")


@dataclass(frozen=True)
class IndependentSetCertificate:
    """An independent set of ``host``, checked when the object is created."""

    host: Graph = field(repr=False)
    members: tuple[int, ...]
    provenance: str = "manual"

    def __post_init__(self):
        object.__setattr__(self, "members", vertex_set(self.members))
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        self.verify()

    def verify(self) -> None:
        for v in self.members:
            if not 0 <= v < self.host.n:
                raise ValidationError(f"member {v} out of range for n={self.host.n}")
        members = set(self.members)
        for v in self.members:
            clash = self.host.neighbor_set(v) & members
            if clash:
                raise ValidationError(f"members {v} and {min(clash)} are adjacent")

    @property
    def size(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def to_dict(self) -> dict[str, Any]:
        return {"size": self.size, "members": list(self.members), "provenance": self.provenance}


def turan_greedy(G: Graph) -> IndependentSetCertificate:
    """Minimum-degree greedy: take a vertex of least current degree, delete its closed neighbourhood.

    The result has at least ``n / (average degree + 1)`` vertices.
    """
    if G.n == 0:
        raise GraphInputError("turan_greedy needs a nonempty graph")
    deg = G.degrees()
    alive = [True] * G.n
    heap = [(deg[v], v) for v in G.vertices()]
    heapq.heapify(heap)
    chosen = []
    while heap:
        dv, v = heapq.heappop(heap)
        if not alive[v] or dv != deg[v]:
            continue
        chosen.append(v)
        removed = [v] + [u for u in G.neighbors(v) if alive[u]]
        for u in removed:
            alive[u] = False
        for u in removed:
            for w in G.neighbors(u):
                if alive[w]:
                    deg[w] -= 1
                    heapq.heappush(heap, (deg[w], w))
    return IndependentSetCertificate(G, tuple(chosen), "turan")


@dataclass(frozen=True)
class PeelParams:
    beta: float
    gamma: float
    d: float

    @property
    def d0(self) -> int:
        return math.floor(self.d ** (1 - self.beta - self.gamma))

    @property
    def preconditions_met(self) -> bool:
        return 7 * self.beta + 6 * self.gamma < 1


class PeelResult(NamedTuple):
    core: Graph
    core_vertices: tuple[int, ...]
    centers: IndependentSetCertificate


def peel_low_degree(G: Graph, d0: int) -> PeelResult:
    """Delete ``N[v]`` for the lowest-id vertex of current degree below ``d0`` until none is left.

    ``core`` is the remaining induced subgraph (minimum degree at least ``d0``,
    possibly empty); ``core_vertices`` maps its vertices back to ``G``. The
    removed centres form an independent set of ``G``.
    """
    if d0 < 0:
        raise ParameterError(f"d0 must be non-negative, got {d0}")
    deg = G.degrees()
    alive = [True] * G.n
    heap = [v for v in G.vertices() if deg[v] < d0]
    heapq.heapify(heap)
    centers = []
    while heap:
        v = heapq.heappop(heap)
        if not alive[v]:
            continue
        centers.append(v)
        removed = [v] + [u for u in G.neighbors(v) if alive[u]]
        for u in removed:
            alive[u] = False
        for u in removed:
            for w in G.neighbors(u):
                if alive[w]:
                    deg[w] -= 1
                    if deg[w] == d0 - 1:
                        heapq.heappush(heap, w)
    core, core_vertices = induced_subgraph(G, (v for v in G.vertices() if alive[v]))
    return PeelResult(core, core_vertices, IndependentSetCertificate(G, tuple(centers), "peel_centers"))


# -- bipartite matching and Koenig covers --------------------------------------


def _check_bipartition(B: Graph, left: Iterable[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    L = vertex_set(left)
    B.check_vertices(L)
    in_left = set(L)
    R = tuple(v for v in B.vertices() if v not in in_left)
    for u, v in B.edges():
        if (u in in_left) == (v in in_left):
            side = "left" if u in in_left else "right"
            raise GraphInputError(f"edge ({u}, {v}) lies inside the {side} part")
    return L, R


def maximum_bipartite_matching(B: Graph, left: Iterable[int]) -> dict[int, int]:
    """Hopcroft-Karp; returns the matching as ``{left vertex: right vertex}``."""
    L, _ = _check_bipartition(B, left)
    match_l: dict[int, int] = {}
    match_r: dict[int, int] = {}
    inf = len(L) + 1
    while True:
        # BFS layers from free left vertices
        dist = {}
        queue = deque()
        for u in L:
            if u not in match_l:
                dist[u] = 0
                queue.append(u)
        found = inf
        while queue:
            u = queue.popleft()
            if dist[u] >= found:
                continue
            for v in B.neighbors(u):
                w = match_r.get(v)
                if w is None:
                    found = min(found, dist[u] + 1)
                elif w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if found == inf:
            return match_l

        def augment(u: int) -> bool:
            for v in B.neighbors(u):
                w = match_r.get(v)
                if (w is None and dist[u] + 1 == found) or (
                    w is not None and dist.get(w) == dist[u] + 1 and augment(w)
                ):
                    match_l[u] = v
                    match_r[v] = u
                    return True
            dist[u] = inf
            return False

        for u in L:
            if u not in match_l:
                augment(u)


def bipartite_min_vertex_cover(B: Graph, left: Iterable[int]) -> tuple[int, ...]:
    """Minimum vertex cover of a bipartite graph by Koenig's construction.

    ``left`` declares one side; every other vertex is on the right. An edge
    inside either side raises :class:`GraphInputError`.
    """
    L, R = _check_bipartition(B, left)
    match_l = maximum_bipartite_matching(B, L)
    match_r = {v: u for u, v in match_l.items()}
    # alternating reachability from free left vertices
    reach_l = {u for u in L if u not in match_l}
    reach_r: set[int] = set()
    queue = deque(sorted(reach_l))
    while queue:
        u = queue.popleft()
        for v in B.neighbors(u):
            if v not in reach_r:
                reach_r.add(v)
                w = match_r.get(v)
                if w is not None and w not in reach_l:
                    reach_l.add(w)
                    queue.append(w)
    cover = vertex_set([u for u in L if u not in reach_l] + sorted(reach_r))
    if len(cover) != len(match_l):
        raise ValidationError(f"cover size {len(cover)} differs from matching size {len(match_l)}")
    covered = set(cover)
    for u, v in B.edges():
        if u not in covered and v not in covered:
            raise ValidationError(f"edge ({u}, {v}) is not covered")
    return cover


# -- certificate from an independent set of the short-path power graph ----------


class G3kResult(NamedTuple):
    members: tuple[int, ...]
    z1: tuple[int, ...]
    z2: tuple[int, ...]
    covers: dict[tuple[int, int], tuple[int, ...]]


def g3k_construction(H: Graph, k: int, Y: Iterable[int]) -> G3kResult:
    """Build ``N(Y) - (Z1 | Z2)`` together with the removed sets.

    ``Z1`` holds vertices with two or more neighbours in ``Y``. For each pair
    ``x, y`` of ``Y``, the neighbourhoods of ``x`` and ``y`` minus ``Z1`` span a
    bipartite graph with no matching of size ``k``; ``Z2`` is the union of
    their minimum vertex covers.
    """
    if k < 1:
        raise ParameterError(f"k must be a positive integer, got {k}")
    Y = vertex_set(Y)
    if not Y:
        raise GraphInputError("Y must be nonempty")
    H.check_vertices(Y)
    if not is_triangle_free(H):
        raise GraphInputError("H must be triangle-free")
    for x, y in combinations(Y, 2):
        if H.has_edge(x, y):
            raise GraphInputError(f"Y is not independent: {x} and {y} are adjacent in H")
        if count_disjoint_short_paths(H, x, y, at_least=k) >= k:
            raise GraphInputError(f"Y is not independent in the power graph: {x} and {y} have at least {k} short paths")
    hits: dict[int, int] = {}
    for x in Y:
        for w in H.neighbors(x):
            hits[w] = hits.get(w, 0) + 1
    z1 = frozenset(w for w, c in hits.items() if c >= 2)
    covers = {}
    z2: set[int] = set()
    for x, y in combinations(Y, 2):
        left = [w for w in H.neighbors(x) if w not in z1]
        right = [w for w in H.neighbors(y) if w not in z1]
        sub, old = induced_subgraph(H, left + right)
        pos = {v: i for i, v in enumerate(old)}
        cover = tuple(old[i] for i in bipartite_min_vertex_cover(sub, [pos[w] for w in left]))
        if len(cover) > k - 1:
            raise ValidationError(f"cover for pair ({x}, {y}) has size {len(cover)} > k-1")
        covers[(x, y)] = cover
        z2.update(cover)
    if len(z2) > (k - 1) * len(Y) ** 2:
        raise ValidationError(f"|Z2| = {len(z2)} exceeds (k-1)|Y|^2")
    members = vertex_set(w for w in hits if w not in z1 and w not in z2)
    return G3kResult(members, vertex_set(z1), vertex_set(z2), covers)


def g3k_certificate(H: Graph, k: int, Y: Iterable[int]) -> IndependentSetCertificate:
    return IndependentSetCertificate(H, g3k_construction(H, k, Y).members, "g3k_certificate")


# -- sparse neighbourhoods and the recursion ------------------------------------


def sparse_neighborhood_set(
    G: Graph, v: int, tau: float, max_size: int = 8
) -> tuple[int, ...] | None:
    """Look for a nonempty independent ``A`` inside ``N^2[v]`` with ``|N[A]| <= tau |A|``.

    Singletons are tried first in ascending degree. Failing that, ``A`` is
    grown greedily from the lowest-degree candidate, each step adding the
    vertex that keeps ``A`` independent and minimises ``|N[A]|``, up to
    ``max_size`` members. This is a heuristic: a None result does not prove
    that no such set exists.
    """
    if not tau > 0:
        raise ParameterError(f"tau must be positive, got {tau}")
    G.check_vertex(v)
    pool = sorted(neighborhood_ball(G, v, 2), key=lambda u: (G.degree(u), u))
    first = pool[0]
    if G.degree(first) + 1 <= tau:
        return (first,)
    A = [first]
    # covered = N[A]; a vertex outside it keeps A independent
    covered = set(G.neighbors(first)) | {first}
    while len(A) < max_size:
        best, best_gain = None, None
        for w in pool:
            if w in covered:
                continue
            gain = 1 + sum(1 for u in G.neighbors(w) if u not in covered)
            if best_gain is None or gain < best_gain:
                best, best_gain = w, gain
        if best is None:
            break
        A.append(best)
        covered.add(best)
        covered.update(G.neighbors(best))
        if len(covered) <= tau * len(A):
            return vertex_set(A)
    return None


def recursive_independent_set(
    G: Graph,
    d: float,
    epsilon: float,
    tau: float | None = None,
    minor_trials: int = DEFAULT_TRIALS,
    rng_seed: int = 0,
    *,
    max_size: int = 8,
    c_ball: float = 2800.0,
    witness_scan: int = 16,
    trace: list[dict[str, Any]] | None = None,
) -> IndependentSetCertificate:
    """Peel off sparse independent sets ``A`` and recurse on ``G - N[A]``.

    ``tau`` defaults to ``2800 d^{1-epsilon}``. Each step first tries the
    lowest-degree residual vertex as a singleton. Otherwise the radius-3 ball
    test of :func:`dense_minor_via_balls` ranks candidate centres (smallest
    balls first) and :func:`sparse_neighborhood_set` is run around up to
    ``witness_scan`` of them. When no ``A`` turns up, the residual graph is
    finished with :func:`turan_greedy`. The answer is never smaller than
    ``turan_greedy(G)``, which is returned instead if it is larger.
    """
    if not is_triangle_free(G):
        raise GraphInputError("recursive_independent_set needs a triangle-free graph")
    if G.n == 0:
        return IndependentSetCertificate(G, (), "recursion")
    if tau is None:
        tau = c_ball * d ** (1 - epsilon)
    deg = G.degrees()
    alive = [True] * G.n
    heap = [(deg[v], v) for v in G.vertices()]
    heapq.heapify(heap)
    chosen: list[int] = []
    dense_steps = 0

    def delete(removed: list[int]) -> None:
        for u in removed:
            alive[u] = False
        for u in removed:
            for w in G.neighbors(u):
                if alive[w]:
                    deg[w] -= 1
                    heapq.heappush(heap, (deg[w], w))

    while heap:
        dv, v = heap[0]
        if not alive[v] or dv != deg[v]:
            heapq.heappop(heap)
            continue
        if dv + 1 <= tau:
            heapq.heappop(heap)
            chosen.append(v)
            delete([v] + [u for u in G.neighbors(v) if alive[u]])
            continue
        # every residual vertex has |N[u]| > tau: search around small balls
        R, old = induced_subgraph(G, (u for u in G.vertices() if alive[u]))
        check = dense_minor_via_balls(R, d, epsilon, minor_trials, rng_seed + dense_steps, c_ball=c_ball)
        if check.certificate is not None:
            log.info(
                "residual graph has a minor of average degree %.3f",
                check.certificate.achieved_average_degree,
            )
        ranked = sorted(R.vertices(), key=lambda u: (check.sizes[u], u))
        A = None
        for centre in [check.witness_vertex] + ranked[:witness_scan]:
            A = sparse_neighborhood_set(R, centre, tau, max_size)
            if A is not None:
                break
        if trace is not None:
            trace.append(
                {
                    "step": dense_steps,
                    "residual_n": R.n,
                    "min_ball": check.min_ball_size,
                    "witness": old[check.witness_vertex],
                    "minor_found": check.certificate is not None,
                    "found_A": A is not None,
                }
            )
        dense_steps += 1
        if A is None:
            rest = turan_greedy(R)
            chosen.extend(old[u] for u in rest.members)
            if trace is not None:
                trace.append({"fallback": "turan", "residual_n": R.n, "added": rest.size})
            break
        chosen.extend(old[u] for u in A)
        delete([old[u] for u in closed_neighborhood(R, A)])
    result = IndependentSetCertificate(G, tuple(chosen), "recursion")
    baseline = turan_greedy(G)
    if baseline.size > result.size:
        return IndependentSetCertificate(G, baseline.members, "recursion")
    return result


def strip_high_degree(G: Graph, d: float) -> tuple[Graph, tuple[int, ...], tuple[int, ...]]:
    """Remove every vertex of degree at least ``2d``.

    Returns ``(G - Z, kept, Z)`` where ``kept[i]`` is the original id of vertex
    ``i`` of ``G - Z``.
    """
    if not d > 0:
        raise ParameterError(f"d must be positive, got {d}")
    Z = tuple(v for v in G.vertices() if G.degree(v) >= 2 * d)
    H, kept = remove_vertices(G, Z)
    return H, kept, Z
