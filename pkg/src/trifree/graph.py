"""Immutable simple undirected graphs on vertices ``0..n-1``.

Vertex sets are plain sorted tuples of ints throughout the package, so
every result that contains vertices has one canonical form.
"""

from __future__ import annotations

import hashlib
from collections import deque
from collections.abc import Iterable
from pathlib import Path

from .errors import GraphInputError

__all__ = [
    "Graph",
    "vertex_set",
    "neighborhood_ball",
    "closed_neighborhood",
    "is_triangle_free",
    "find_triangle",
    "average_degree",
    "induced_subgraph",
    "ball_sizes",
    "remove_vertices",
    "bfs_distances",
    "is_independent",
    "parse_edge_list",
    "format_edge_list",
    "read_edge_list",
    "write_edge_list",
    "graph_hash",
]


def vertex_set(vertices: Iterable[int]) -> tuple[int, ...]:
    """Canonical vertex set: sorted, duplicate-free tuple."""
    return tuple(sorted(set(vertices)))


class Graph:
    """Simple undirected graph with sorted adjacency lists.

    Instances are immutable; build them with :meth:`from_edges`.
    """

    __slots__ = ("_n", "_adj", "_nbr", "_m")

    def __init__(self, n: int, adjacency: Iterable[Iterable[int]]):
        if n < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {n}")
        adj = tuple(tuple(sorted(nb)) for nb in adjacency)
        if len(adj) != n:
            raise GraphInputError(f"expected {n} adjacency lists, got {len(adj)}")
        nbr = tuple(frozenset(nb) for nb in adj)
        total = 0
        for v, nb in enumerate(adj):
            if len(nbr[v]) != len(nb):
                raise GraphInputError(f"duplicate edge at vertex {v}")
            for u in nb:
                if not 0 <= u < n:
                    raise GraphInputError(f"neighbor {u} of vertex {v} out of range")
                if u == v:
                    raise GraphInputError(f"self-loop at vertex {v}")
                if v not in nbr[u]:
                    raise GraphInputError(f"asymmetric adjacency between {v} and {u}")
            total += len(nb)
        self._n = n
        self._adj = adj
        self._nbr = nbr
        self._m = total // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from an edge iterable; rejects loops and repeated edges."""
        if n < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise GraphInputError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, [()] * n)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def __len__(self) -> int:
        return self._n

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._nbr[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self._adj]

    def max_degree(self) -> int:
        return max((len(nb) for nb in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self._n) for v in self._adj[u] if u < v]

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphInputError(f"vertex {v} out of range for n={self._n}")

    def check_vertices(self, vertices: Iterable[int]) -> None:
        for v in vertices:
            self.check_vertex(v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"


def neighborhood_ball(G: Graph, v: int, radius: int) -> tuple[int, ...]:
    """Closed ball of the given radius around ``v`` (all vertices within that distance)."""
    G.check_vertex(v)
    if radius < 0:
        raise GraphInputError(f"radius must be non-negative, got {radius}")
    seen = {v}
    frontier = [v]
    for _ in range(radius):
        nxt = []
        for x in frontier:
            for y in G.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if not nxt:
            break
        frontier = nxt
    return tuple(sorted(seen))


def ball_sizes(G: Graph, radius: int) -> list[int]:
    """``|N^radius[v]|`` for every vertex ``v``."""
    return [len(neighborhood_ball(G, v, radius)) for v in G.vertices()]


def closed_neighborhood(G: Graph, S: Iterable[int]) -> tuple[int, ...]:
    out: set[int] = set()
    for s in S:
        G.check_vertex(s)
        out.add(s)
        out.update(G.neighbors(s))
    return tuple(sorted(out))


def find_triangle(G: Graph) -> tuple[int, int, int] | None:
    """Lexicographically smallest triangle ``(a, b, c)`` with ``a < b < c``, or None."""
    for a in range(G.n):
        na = G.neighbor_set(a)
        for b in G.neighbors(a):
            if b <= a:
                continue
            for c in G.neighbors(b):
                if c > b and c in na:
                    return (a, b, c)
    return None


def is_triangle_free(G: Graph) -> bool:
    return find_triangle(G) is None


def average_degree(G: Graph) -> float:
    if G.n == 0:
        raise GraphInputError("average degree of the empty graph is undefined")
    return 2.0 * G.m / G.n


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``S``.

    Returns ``(H, old_ids)``: vertex ``i`` of ``H`` is vertex ``old_ids[i]`` of ``G``.
    ``old_ids`` is sorted, so the relabelling preserves vertex order.
    """
    old_ids = vertex_set(S)
    G.check_vertices(old_ids)
    new_id = {v: i for i, v in enumerate(old_ids)}
    adj = [[new_id[u] for u in G.neighbors(v) if u in new_id] for v in old_ids]
    return Graph(len(old_ids), adj), old_ids


def remove_vertices(G: Graph, removed: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    gone = set(removed)
    return induced_subgraph(G, (v for v in G.vertices() if v not in gone))


def is_independent(G: Graph, S: Iterable[int]) -> bool:
    members = set(S)
    return all(not (G.neighbor_set(v) & members) for v in members)


def bfs_distances(G: Graph, source: int, limit: int | None = None) -> dict[int, int]:
    """Hop distances from ``source``, optionally truncated at ``limit``."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        if limit is not None and dist[x] >= limit:
            continue
        for y in G.neighbors(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


# ---------------------------------------------------------------------------
# edge-list text format: "n m" header, then one "u v" line per edge (u < v)
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphInputError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphInputError(f"line {lineno}: non-integer token in {raw!r}") from None
    if not rows:
        raise GraphInputError("missing 'n m' header line")
    (n, m), edges = rows[0], rows[1:]
    if n < 0 or m < 0:
        raise GraphInputError(f"negative header values n={n} m={m}")
    if len(edges) != m:
        raise GraphInputError(f"header declares {m} edges but {len(edges)} were given")
    return Graph.from_edges(n, edges)


def format_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def write_edge_list(G: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(G))


def graph_hash(G: Graph) -> str:
    """SHA-256 of the canonical edge list; independent of input edge order."""
    return hashlib.sha256(format_edge_list(G).encode()).hexdigest()
