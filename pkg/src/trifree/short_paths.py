"""Internally vertex-disjoint u-v paths of length at most three.

A maximum packing is computed exactly, without a general flow solver.
Every common neighbour ``c`` of ``u`` and ``v`` can be routed as ``u-c-v``
in some maximum packing: any path through ``c`` can be shortened to
``u-c-v`` without touching other paths. What remains is a unit-capacity
flow through the layered network ``u -> A -> B -> v`` with
``A = N(u) - N[v]`` and ``B = N(v) - N[u]``. These sets are disjoint,
so the flow is a bipartite matching between ``A`` and ``B`` along edges of
the graph, found here with BFS augmenting paths.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

from .errors import GraphInputError, ValidationError
from .graph import Graph, neighborhood_ball

__all__ = [
    "PathPacking",
    "PowerGraph",
    "max_disjoint_short_paths",
    "count_disjoint_short_paths",
    "short_path_power",
    "distance3_pairs",
]


@dataclass(frozen=True)
class PathPacking:
    """Witness list of internally disjoint u-v paths, each with 1 to 3 edges."""

    endpoints: tuple[int, int]
    paths: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.paths)

    @property
    def size(self) -> int:
        return len(self.paths)

    def validate(self, G: Graph, blocked: Iterable[int] = ()) -> None:
        """Raise :class:`ValidationError` unless this is a valid packing in ``G``."""
        u, v = self.endpoints
        blocked = set(blocked)
        used: set[int] = set()
        direct = 0
        for path in self.paths:
            if not 2 <= len(path) <= 4:
                raise ValidationError(f"path {path} has {len(path) - 1} edges, need 1 to 3")
            if path[0] != u or path[-1] != v:
                raise ValidationError(f"path {path} does not run from {u} to {v}")
            if len(set(path)) != len(path):
                raise ValidationError(f"path {path} repeats a vertex")
            for a, b in zip(path, path[1:]):
                if not G.has_edge(a, b):
                    raise ValidationError(f"path {path} uses non-edge ({a}, {b})")
            inner = path[1:-1]
            if not inner:
                direct += 1
            for w in inner:
                if w in used:
                    raise ValidationError(f"internal vertex {w} shared between paths")
                if w in blocked:
                    raise ValidationError(f"internal vertex {w} of path {path} is blocked")
                used.add(w)
        if direct > 1:
            raise ValidationError("direct edge listed more than once")


def _layers(G: Graph, u: int, v: int, blocked: frozenset[int] | set[int]):
    nu, nv = G.neighbor_set(u), G.neighbor_set(v)
    common = sorted(w for w in nu & nv if w not in blocked)
    left = sorted(w for w in nu if w != v and w not in nv and w not in blocked)
    right = set(w for w in nv if w != u and w not in nu and w not in blocked)
    return common, left, right


def _matching(G: Graph, left: list[int], right: set[int], limit: int | None = None) -> dict[int, int]:
    """Maximum matching ``left -> right`` along edges of ``G`` (augmenting paths).

    Left vertices are tried in ascending order and their neighbours scanned in
    ascending order, so the result is deterministic. Stops early once
    ``limit`` pairs are matched.
    """
    match_l: dict[int, int] = {}
    match_r: dict[int, int] = {}
    options = {x: [y for y in G.neighbors(x) if y in right] for x in left}
    for root in left:
        if limit is not None and len(match_l) >= limit:
            break
        if not options[root]:
            continue
        # BFS over alternating paths from root
        parent: dict[int, int] = {}
        queue = deque([root])
        seen_l = {root}
        end = None
        while queue and end is None:
            x = queue.popleft()
            for y in options[x]:
                if y in parent:
                    continue
                parent[y] = x
                nxt = match_r.get(y)
                if nxt is None:
                    end = y
                    break
                if nxt not in seen_l:
                    seen_l.add(nxt)
                    queue.append(nxt)
        if end is None:
            continue
        y = end
        while True:
            x = parent[y]
            prev = match_l.get(x)
            match_l[x] = y
            match_r[y] = x
            if prev is None:
                break
            y = prev
    return match_l


def max_disjoint_short_paths(G: Graph, u: int, v: int, blocked: Iterable[int] = ()) -> PathPacking:
    """Maximum packing of internally disjoint u-v paths of length at most 3.

    Internal vertices must avoid ``blocked``; the endpoints themselves may be
    blocked. The direct edge ``uv``, when present, counts as one path.
    """
    G.check_vertex(u)
    G.check_vertex(v)
    if u == v:
        raise GraphInputError("path endpoints must differ")
    blocked = frozenset(blocked)
    common, left, right = _layers(G, u, v, blocked)
    paths: list[tuple[int, ...]] = []
    if G.has_edge(u, v):
        paths.append((u, v))
    paths.extend((u, c, v) for c in common)
    match = _matching(G, left, right)
    paths.extend((u, x, match[x], v) for x in left if x in match)
    return PathPacking((u, v), tuple(paths))


def count_disjoint_short_paths(
    G: Graph, u: int, v: int, blocked: Iterable[int] = (), at_least: int | None = None
) -> int:
    """Size of a maximum packing; with ``at_least`` it may stop once that many are found."""
    if u == v:
        raise GraphInputError("path endpoints must differ")
    blocked = blocked if isinstance(blocked, (set, frozenset)) else frozenset(blocked)
    common, left, right = _layers(G, u, v, blocked)
    count = int(G.has_edge(u, v)) + len(common)
    if at_least is not None and count >= at_least:
        return count
    if not left or not right:
        return count
    limit = None if at_least is None else at_least - count
    return count + len(_matching(G, left, right, limit))


def distance3_pairs(G: Graph, blocked: Iterable[int] = (), among: Iterable[int] | None = None):
    """Pairs ``u < v`` joined by a path of length at most 3 with unblocked interior.

    Only these pairs can carry a short path, so the power graph only needs to
    examine them. ``among`` restricts both endpoints to a vertex subset.
    """
    blocked = frozenset(blocked)
    targets = None if among is None else frozenset(among)
    sources = range(G.n) if targets is None else sorted(targets)
    for u in sources:
        reach: set[int] = set(G.neighbors(u))
        first = [a for a in G.neighbors(u) if a not in blocked]
        for a in first:
            reach.update(G.neighbors(a))
            for b in G.neighbors(a):
                if b != u and b not in blocked:
                    reach.update(G.neighbors(b))
        for v in sorted(reach):
            if v > u and (targets is None or v in targets):
                yield u, v


@dataclass(frozen=True)
class PowerGraph:
    """``G^k_{<=3}``: ``uv`` is an edge when ``uv`` is in ``G`` or ``k`` clean short paths exist."""

    base: Graph
    k: int
    blocked: tuple[int, ...]
    power_edges: frozenset[tuple[int, int]]

    def as_graph(self) -> Graph:
        return Graph.from_edges(self.base.n, sorted(self.power_edges))


def short_path_power(G: Graph, k: int, blocked: Iterable[int] = ()) -> PowerGraph:
    if k < 1:
        raise GraphInputError(f"k must be a positive integer, got {k}")
    blocked = frozenset(blocked)
    G.check_vertices(blocked)
    edges = set()
    for u, v in distance3_pairs(G, blocked):
        if G.has_edge(u, v) or count_disjoint_short_paths(G, u, v, blocked, at_least=k) >= k:
            edges.add((u, v))
    return PowerGraph(G, k, tuple(sorted(blocked)), frozenset(edges))


def distance_power(G: Graph, radius: int) -> set[tuple[int, int]]:
    """Edge set of the graph joining vertices at distance ``1..radius`` (BFS based)."""
    out = set()
    for u in G.vertices():
        for v in neighborhood_ball(G, u, radius):
            if v > u:
                out.add((u, v))
    return out
