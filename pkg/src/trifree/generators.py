"""Seeded generators for triangle-free graph families and named small graphs.

Randomness comes from numpy's Philox counter-based generator. Each family
draws from its own stream, keyed by ``(seed, family tag)``, so a seed means
the same thing on every platform and numpy build that ships Philox.
"""

from __future__ import annotations

import math
import zlib
from dataclasses import asdict, dataclass
from typing import Any

import numpy as np

from .errors import GraphInputError
from .graph import Graph

__all__ = [
    "FAMILIES",
    "GenSpec",
    "generate",
    "rng_stream",
    "erdos_edge_budget",
    "cycle_graph",
    "path_graph",
    "star_graph",
    "complete_graph",
    "complete_bipartite_graph",
    "petersen_graph",
    "empty_graph",
    "disjoint_union",
    "bipartite_random",
    "gnm_triangle_deleted",
    "delete_triangles",
]

FAMILIES = ("cycle", "complete_bipartite", "petersen", "bipartite_random", "gnm_triangle_deleted")

_SEED_MASK = (1 << 64) - 1


def rng_stream(seed: int, tag: str, *extra: int) -> np.random.Generator:
    """Independent Philox stream for ``(seed, tag, *extra)``."""
    entropy = [seed & _SEED_MASK, zlib.crc32(tag.encode())] + [e & _SEED_MASK for e in extra]
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy)))


def erdos_edge_budget(n: int, A: float = 2.0) -> int:
    """Edge budget ``floor(n^{3/2} / sqrt(A))`` of the random triangle-free construction."""
    if A <= 0:
        raise GraphInputError(f"constant A must be positive, got {A}")
    return math.floor(n**1.5 / math.sqrt(A))


# -- named graphs ------------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph.empty(n)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}; vertex 0 is the hub."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """K_{a,b} with parts ``0..a-1`` and ``a..a+b-1``."""
    if a < 0 or b < 0:
        raise GraphInputError(f"part sizes must be non-negative, got {a}, {b}")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    # outer 5-cycle 0..4, spokes i -> i+5, inner pentagram
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for G in graphs:
        edges.extend((u + offset, v + offset) for u, v in G.edges())
        offset += G.n
    return Graph.from_edges(offset, edges)


# -- random families ---------------------------------------------------------


def bipartite_random(a: int, b: int, p: float, seed: int) -> Graph:
    """Random bipartite graph: each of the ``a*b`` cross pairs kept with probability ``p``."""
    if not 0.0 <= p <= 1.0:
        raise GraphInputError(f"probability must lie in [0, 1], got {p}")
    rng = rng_stream(seed, "bipartite_random")
    keep = rng.random((a, b)) < p
    rows, cols = np.nonzero(keep)
    return Graph.from_edges(a + b, zip(rows.tolist(), (cols + a).tolist()))


def delete_triangles(n: int, edges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Destroy every triangle, always hitting the lexicographically first one.

    Repeatedly takes the smallest remaining triangle ``a < b < c`` and deletes
    its smallest edge ``ab``. Deleting edges never creates triangles, so one
    ordered sweep over ``(a, b)`` visits the triangles in exactly that order.
    """
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    for a in range(n):
        for b in sorted(x for x in adj[a] if x > a):
            if any(c > b for c in adj[a] & adj[b]):
                adj[a].discard(b)
                adj[b].discard(a)
    return [(u, v) for u in range(n) for v in sorted(adj[u]) if u < v]


def gnm_triangle_deleted(n: int, m: int, seed: int) -> Graph:
    """Uniform G(n, m) followed by :func:`delete_triangles`."""
    total = n * (n - 1) // 2
    if m < 0 or m > total:
        raise GraphInputError(f"edge budget {m} outside [0, {total}] for n={n}")
    rng = rng_stream(seed, "gnm_triangle_deleted")
    picks = np.sort(rng.choice(total, size=m, replace=False)) if m else np.empty(0, dtype=np.int64)
    # pair index -> (u, v): row u of the strict upper triangle starts at offsets[u]
    rows = np.arange(n, dtype=np.int64)
    offsets = rows * (2 * n - rows - 1) // 2
    u = np.searchsorted(offsets, picks, side="right") - 1
    v = u + 1 + picks - offsets[u]
    return Graph.from_edges(n, delete_triangles(n, list(zip(u.tolist(), v.tolist()))))


# -- GenSpec dispatch -----------------------------------------------------------


@dataclass(frozen=True)
class GenSpec:
    """Description of one generated graph.

    ``bipartite_random`` uses parts ``a`` and ``b`` when given, otherwise splits
    ``n`` in half. ``gnm_triangle_deleted`` uses edge budget ``m`` when given,
    otherwise :func:`erdos_edge_budget` with constant ``A``.
    """

    family: str
    n: int | None = None
    a: int | None = None
    b: int | None = None
    p: float | None = None
    m: int | None = None
    A: float = 2.0
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise GraphInputError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if self.p is not None and not 0.0 <= self.p <= 1.0:
            raise GraphInputError(f"probability must lie in [0, 1], got {self.p}")
        if self.n is not None and self.n < 0:
            raise GraphInputError(f"n must be non-negative, got {self.n}")
        if self.n is not None and self.m is not None and self.m > self.n * (self.n - 1) // 2:
            raise GraphInputError(f"edge budget {self.m} exceeds C({self.n}, 2)")

    def to_dict(self) -> dict[str, Any]:
        return {k: v for k, v in asdict(self).items() if v is not None}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> GenSpec:
        return cls(**data)


def _need(value, name: str, family: str):
    if value is None:
        raise GraphInputError(f"family {family!r} requires parameter {name!r}")
    return value


def generate(spec: GenSpec) -> Graph:
    fam = spec.family
    if fam == "cycle":
        return cycle_graph(_need(spec.n, "n", fam))
    if fam == "complete_bipartite":
        return complete_bipartite_graph(_need(spec.a, "a", fam), _need(spec.b, "b", fam))
    if fam == "petersen":
        return petersen_graph()
    if fam == "bipartite_random":
        if spec.a is not None or spec.b is not None:
            a, b = _need(spec.a, "a", fam), _need(spec.b, "b", fam)
        else:
            n = _need(spec.n, "n", fam)
            a, b = n // 2, n - n // 2
        return bipartite_random(a, b, _need(spec.p, "p", fam), spec.seed)
    n = _need(spec.n, "n", fam)
    m = spec.m if spec.m is not None else erdos_edge_budget(n, spec.A)
    return gnm_triangle_deleted(n, m, spec.seed)
