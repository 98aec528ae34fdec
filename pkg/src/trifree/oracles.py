"""Exhaustive reference implementations for checking the fast paths on small inputs.

Nothing in the production modules calls into here. Every oracle takes an
explicit :class:`OracleBudget` and refuses inputs beyond it instead of
running for an unbounded time.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import GraphInputError, OracleBudgetError
from .graph import Graph, vertex_set
from .minor_engine import MinorModel

__all__ = [
    "OracleBudget",
    "ALPHA_HARD_CAP",
    "max_independent_set_exact",
    "max_independent_set_enumerate",
    "disjoint_short_paths_exact",
    "short_path_power_exact",
    "exact_binomial_tail",
    "binomial_tail_fraction",
    "has_clique_minor_exact",
    "min_vertex_cover_exhaustive",
    "triangles_exhaustive",
]

ALPHA_HARD_CAP = 40
MINOR_HARD_CAP = 12


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 10
    max_paths: int = 10_000
    time_limit: float | None = None

    def check_vertices(self, n: int, cap: int | None = None, what: str = "oracle") -> None:
        limit = self.max_vertices if cap is None else min(self.max_vertices, cap)
        if n > limit:
            raise OracleBudgetError(f"{what}: {n} vertices exceeds the budget of {limit}")

    def deadline(self) -> float | None:
        return None if self.time_limit is None else time.monotonic() + self.time_limit


def _tick(deadline: float | None, what: str) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise OracleBudgetError(f"{what}: time limit exceeded")


def triangles_exhaustive(G: Graph) -> list[tuple[int, int, int]]:
    return [t for t in combinations(range(G.n), 3) if G.has_edge(t[0], t[1]) and G.has_edge(t[1], t[2]) and G.has_edge(t[0], t[2])]


# -- independence number ------------------------------------------------------


def max_independent_set_exact(G: Graph, budget: OracleBudget = OracleBudget()) -> tuple[int, ...]:
    """Maximum independent set by branch and bound.

    Branches on a maximum-degree vertex (exclude it, or take it and drop its
    neighbours). The incumbent starts from a min-degree greedy solution; a
    branch is cut when ``chosen + r - ceil(e / maxdeg)`` cannot beat it, since
    any independent set leaves a vertex cover of size at least ``e / maxdeg``.
    """
    budget.check_vertices(G.n, ALPHA_HARD_CAP, "max_independent_set_exact")
    deadline = budget.deadline()
    adj = [set(G.neighbors(v)) for v in G.vertices()]

    def greedy(verts: set[int]) -> list[int]:
        rest = set(verts)
        out = []
        while rest:
            v = min(rest, key=lambda x: (len(adj[x] & rest), x))
            out.append(v)
            rest -= adj[v] | {v}
        return out

    best = greedy(set(G.vertices()))

    def search(verts: frozenset[int], chosen: list[int]) -> None:
        nonlocal best
        _tick(deadline, "max_independent_set_exact")
        if not verts:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        degs = {v: len(adj[v] & verts) for v in verts}
        edges = sum(degs.values()) // 2
        top = max(verts, key=lambda x: (degs[x], -x))
        if degs[top] == 0:
            if len(chosen) + len(verts) > len(best):
                best = chosen + sorted(verts)
            return
        bound = len(chosen) + len(verts) - math.ceil(edges / degs[top])
        if bound <= len(best):
            return
        search(verts - adj[top] - {top}, chosen + [top])
        search(verts - {top}, chosen)

    search(frozenset(G.vertices()), [])
    return vertex_set(best)


def max_independent_set_enumerate(G: Graph, budget: OracleBudget = OracleBudget()) -> tuple[int, ...]:
    """Largest independent set by scanning subsets from the largest size down."""
    budget.check_vertices(G.n, 20, "max_independent_set_enumerate")
    for size in range(G.n, 0, -1):
        for S in combinations(range(G.n), size):
            if all(not G.has_edge(a, b) for a, b in combinations(S, 2)):
                return S
    return ()


def min_vertex_cover_exhaustive(G: Graph, budget: OracleBudget = OracleBudget()) -> int:
    budget.check_vertices(G.n, 20, "min_vertex_cover_exhaustive")
    edges = G.edges()
    for size in range(G.n + 1):
        for S in combinations(range(G.n), size):
            s = set(S)
            if all(u in s or v in s for u, v in edges):
                return size
    return G.n


# -- short path packings --------------------------------------------------------


def _short_paths(G: Graph, u: int, v: int) -> list[tuple[int, ...]]:
    paths = []
    if G.has_edge(u, v):
        paths.append((u, v))
    for a in G.neighbors(u):
        if a == v:
            continue
        if G.has_edge(a, v):
            paths.append((u, a, v))
        for b in G.neighbors(a):
            if b not in (u, v) and G.has_edge(b, v):
                paths.append((u, a, b, v))
    return paths


def disjoint_short_paths_exact(G: Graph, u: int, v: int, budget: OracleBudget = OracleBudget()) -> int:
    """Maximum number of internally disjoint u-v paths with at most 3 edges, by exhaustive packing."""
    budget.check_vertices(G.n, what="disjoint_short_paths_exact")
    if u == v:
        raise GraphInputError("path endpoints must differ")
    paths = _short_paths(G, u, v)
    if len(paths) > budget.max_paths:
        raise OracleBudgetError(f"{len(paths)} candidate paths exceed the budget of {budget.max_paths}")
    interiors = [frozenset(p[1:-1]) for p in paths]
    deadline = budget.deadline()
    best = 0

    def search(i: int, used: frozenset[int], count: int) -> None:
        nonlocal best
        _tick(deadline, "disjoint_short_paths_exact")
        best = max(best, count)
        if count + (len(interiors) - i) <= best:
            return
        for j in range(i, len(interiors)):
            if not (interiors[j] & used):
                search(j + 1, used | interiors[j], count + 1)

    search(0, frozenset(), 0)
    return best


def short_path_power_exact(G: Graph, k: int, budget: OracleBudget = OracleBudget()) -> set[tuple[int, int]]:
    if k < 1:
        raise GraphInputError(f"k must be a positive integer, got {k}")
    budget.check_vertices(G.n, what="short_path_power_exact")
    out = set()
    for u, v in combinations(range(G.n), 2):
        if G.has_edge(u, v) or disjoint_short_paths_exact(G, u, v, budget) >= k:
            out.add((u, v))
    return out


# -- binomial tails ----------------------------------------------------------------


def binomial_tail_fraction(p: float, m: int, threshold: float) -> Fraction:
    """``P[Bin(m, p) > threshold]`` as an exact rational.

    ``p`` is taken as the exact rational value of the float.
    """
    if not 0 <= p <= 1:
        raise GraphInputError(f"p must lie in [0, 1], got {p}")
    if m < 0 or m > 10_000:
        raise OracleBudgetError(f"m={m} outside the supported range [0, 10000]")
    start = max(0, math.floor(threshold) + 1)
    if start > m:
        return Fraction(0)
    q = Fraction(p)
    num, den = q.numerator, q.denominator
    rest = den - num
    # integer sum of C(m,j) num^j rest^(m-j), scaled by den^m at the end
    total = sum(math.comb(m, j) * num**j * rest ** (m - j) for j in range(start, m + 1))
    return Fraction(total, den**m)


def exact_binomial_tail(p: float, m: int, threshold: float) -> float:
    """``P[Bin(m, p) > threshold]``, summed exactly and rounded once at the end."""
    return float(binomial_tail_fraction(p, m, threshold))


# -- clique minors ------------------------------------------------------------------


def _connected_sets(G: Graph, root: int, allowed: frozenset[int]):
    """All connected vertex sets whose minimum element is ``root``, drawn from ``allowed``.

    Each frontier vertex is decided once (taken or excluded for good), so
    every set is produced exactly once.
    """
    allowed = frozenset(w for w in allowed if w > root)

    def grow(current: frozenset[int], frontier: frozenset[int], excluded: frozenset[int]):
        if not frontier:
            yield current
            return
        w = min(frontier)
        yield from grow(current, frontier - {w}, excluded | {w})
        reach = (G.neighbor_set(w) & allowed) - current - excluded - {w}
        yield from grow(current | {w}, (frontier | reach) - {w}, excluded)

    yield from grow(frozenset({root}), G.neighbor_set(root) & allowed, frozenset())


def has_clique_minor_exact(
    G: Graph, t: int, budget: OracleBudget = OracleBudget(max_vertices=MINOR_HARD_CAP)
) -> tuple[bool, MinorModel | None]:
    """Decide whether ``K_t`` is a minor of ``G``, returning a witness model when it is.

    Branch sets are placed one at a time, each a connected set whose minimum
    vertex exceeds that of the previous branch, and each touching every
    earlier branch.
    """
    budget.check_vertices(G.n, MINOR_HARD_CAP, "has_clique_minor_exact")
    if t < 0 or t > G.n:
        raise GraphInputError(f"t must lie in [0, n], got {t}")
    if t == 0:
        return True, None
    if G.m < t * (t - 1) // 2:
        return False, None
    deadline = budget.deadline()
    found: list[frozenset[int]] | None = None

    def place(branches: list[frozenset[int]], free: frozenset[int], last_root: int) -> bool:
        nonlocal found
        _tick(deadline, "has_clique_minor_exact")
        if len(branches) == t:
            found = list(branches)
            return True
        if len(free) < t - len(branches):
            return False
        for root in sorted(free):
            if root <= last_root:
                continue
            for S in _connected_sets(G, root, free):
                touch = set()
                for w in S:
                    touch |= G.neighbor_set(w)
                if all(touch & B for B in branches):
                    if place(branches + [S], free - S, root):
                        return True
        return False

    if place([], frozenset(G.vertices()), -1):
        return True, MinorModel.from_branches(G, found)
    return False, None
