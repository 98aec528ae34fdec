"""Randomized extraction of dense minors from graphs with many short paths.

One round samples an anchor set ``X`` (each vertex with probability ``p``),
marks blocked vertices, and contracts every unblocked vertex with a neighbour
in ``X`` into one such neighbour chosen uniformly. Each branch set is a star
around its anchor. Rounds are repeated with independent seeds and the result
is only ever reported after :func:`validate_minor_model` has recomputed it.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import Any

from .errors import GraphInputError, ParameterError, ValidationError
from .generators import rng_stream
from .graph import Graph, average_degree, neighborhood_ball, vertex_set
from .short_paths import count_disjoint_short_paths, distance3_pairs

__all__ = [
    "Params",
    "MinorModel",
    "MinorCertificate",
    "BallCheck",
    "derive_params",
    "chernoff_tail_bound",
    "blocking_threshold",
    "sample_anchors",
    "viable_edge_graph",
    "randomized_contraction",
    "validate_minor_model",
    "identity_model",
    "extract_dense_minor",
    "dense_minor_via_balls",
    "ball_threshold",
]

log = logging.getLogger(__name__)

DEFAULT_TRIALS = 50


@dataclass(frozen=True)
class Params:
    """Constants driving one application of the contraction argument."""

    epsilon: float
    d: float
    k: int
    p: float
    b: float
    regime: str
    preconditions_met: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "epsilon": self.epsilon,
            "d": self.d,
            "k": self.k,
            "p": self.p,
            "b": self.b,
            "regime": self.regime,
            "preconditions_met": self.preconditions_met,
        }


def derive_params(
    d: float,
    epsilon: float,
    k: int,
    *,
    c_regime: float = 324.0,
    c_small: float = 2700.0,
    c_large: float = 150.0,
    c_prob: float = 18.0,
    p_override: float | None = None,
) -> Params:
    """Sampling probability, density threshold ``b`` and regime for ``(d, epsilon, k)``.

    The guarantee needs ``d >= max(288^{1/(1-epsilon)}, 16 sqrt(k))``. A violation
    is reported in ``preconditions_met`` rather than raised, because small
    experiments run far below that range on purpose. ``p_override`` replaces
    the derived sampling probability, which lets such experiments proceed
    when the formula would exceed 1.
    """
    if not d > 0:
        raise ParameterError(f"d must be positive, got {d}")
    if not 0 < epsilon < 1:
        raise ParameterError(f"epsilon must lie in (0, 1), got {epsilon}")
    if k < 1 or int(k) != k:
        raise ParameterError(f"k must be a positive integer, got {k}")
    p = max(c_prob / d ** (1 - epsilon), math.sqrt(k) / d) if p_override is None else p_override
    if p_override is not None and not 0 <= p_override <= 1:
        raise ParameterError(f"p_override must lie in [0, 1], got {p_override}")
    if p > 1:
        raise ParameterError(f"sampling probability exceeds 1 (p={p:.6g} for d={d}, epsilon={epsilon}, k={k})")
    if k <= c_regime * d ** (2 * epsilon):
        regime, b = "small_k", c_small * d ** (2 + epsilon) / k
    else:
        regime, b = "large_k", c_large * d**2 / math.sqrt(k)
    ok = d >= max(288 ** (1 / (1 - epsilon)), 16 * math.sqrt(k))
    if not ok:
        log.debug("derive_params: d=%g below the proven range for epsilon=%g, k=%d", d, epsilon, k)
    return Params(epsilon=epsilon, d=d, k=int(k), p=p, b=b, regime=regime, preconditions_met=ok)


def chernoff_tail_bound(p: float, m: int) -> float:
    """Upper bound ``exp(-pm/3)`` on ``P[Bin(m, p) > 2pm]``."""
    if not 0 <= p <= 1:
        raise ParameterError(f"p must lie in [0, 1], got {p}")
    if m < 1:
        raise ParameterError(f"m must be positive, got {m}")
    return math.exp(-p * m / 3)


def blocking_threshold(p: float, degree: int) -> float:
    """A vertex with more anchor neighbours than this is blocked."""
    return 2 * p * (degree - 2) + 2


def sample_anchors(G: Graph, p: float, rng_seed: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Sample anchors ``X`` i.i.d. with probability ``p`` and derive the blocked set.

    ``z`` is blocked when ``z`` is an anchor or has more than
    :func:`blocking_threshold` anchor neighbours.
    """
    if not 0 <= p <= 1:
        raise ParameterError(f"p must lie in [0, 1], got {p}")
    rng = rng_stream(rng_seed, "sample_anchors")
    draws = rng.random(G.n)
    X = tuple(v for v in range(G.n) if draws[v] < p)
    anchors = frozenset(X)
    blocked = [
        z
        for z in range(G.n)
        if z in anchors or len(G.neighbor_set(z) & anchors) > blocking_threshold(p, G.degree(z))
    ]
    return X, tuple(blocked)


def viable_edge_graph(
    G: Graph, k: int, X: Sequence[int], blocked: Iterable[int]
) -> Graph:
    """Auxiliary graph on the anchors; vertex ``i`` stands for ``X[i]``.

    Anchors ``u, v`` are joined when ``uv`` is an edge of ``G`` or at least
    ``ceil(k/2)`` internally disjoint paths of length at most 3 with unblocked
    interiors connect them.
    """
    if k < 1:
        raise ParameterError(f"k must be a positive integer, got {k}")
    X = vertex_set(X)
    blocked = frozenset(blocked)
    need = -(-k // 2)
    index = {x: i for i, x in enumerate(X)}
    edges = []
    for u, v in distance3_pairs(G, blocked, among=X):
        if G.has_edge(u, v) or count_disjoint_short_paths(G, u, v, blocked, at_least=need) >= need:
            edges.append((index[u], index[v]))
    return Graph.from_edges(len(X), edges)


@dataclass(frozen=True)
class MinorModel:
    """Disjoint branch sets in ``host``; vertices outside every branch are deleted."""

    host: Graph
    branches: tuple[tuple[int, ...], ...]
    branch_of: dict[int, int] = field(compare=False, repr=False, default_factory=dict)

    @classmethod
    def from_branches(cls, host: Graph, branches: Iterable[Iterable[int]]) -> MinorModel:
        """Normalise branch sets; overlaps are left for the validator to report."""
        norm = tuple(tuple(sorted(set(b))) for b in branches)
        branch_of: dict[int, int] = {}
        for i, b in enumerate(norm):
            for v in b:
                branch_of.setdefault(v, i)
        return cls(host, norm, branch_of)

    def to_dict(self) -> dict[str, Any]:
        return {"branches": [list(b) for b in self.branches]}


@dataclass(frozen=True)
class MinorCertificate:
    model: MinorModel
    quotient_n: int
    quotient_m: int
    achieved_average_degree: float

    def revalidate(self) -> MinorCertificate:
        """Recheck from scratch; raises if any stored number disagrees."""
        fresh = validate_minor_model(self.model.host, self.model)
        if (fresh.quotient_n, fresh.quotient_m) != (self.quotient_n, self.quotient_m) or not math.isclose(
            fresh.achieved_average_degree, self.achieved_average_degree, rel_tol=0, abs_tol=1e-9
        ):
            raise ValidationError("stored quotient statistics do not match the model")
        return fresh

    def to_dict(self) -> dict[str, Any]:
        return {
            "branches": [list(b) for b in self.model.branches],
            "quotient_n": self.quotient_n,
            "quotient_m": self.quotient_m,
            "achieved_average_degree": self.achieved_average_degree,
        }


def _branch_connected(G: Graph, branch: tuple[int, ...]) -> bool:
    members = set(branch)
    stack = [branch[0]]
    seen = {branch[0]}
    while stack:
        x = stack.pop()
        for y in G.neighbors(x):
            if y in members and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(members)


def validate_minor_model(G: Graph, model: MinorModel) -> MinorCertificate:
    """Check a minor model and compute its simple quotient graph.

    Raises :class:`ValidationError` naming the offending branch if branches
    overlap, a branch is empty or disconnected, or a vertex id is out of range.
    """
    if model.host != G:
        raise ValidationError("model refers to a different host graph")
    if not model.branches:
        raise ValidationError("model has no branch sets")
    owner: dict[int, int] = {}
    for i, branch in enumerate(model.branches):
        if not branch:
            raise ValidationError(f"branch {i} is empty")
        for v in branch:
            if not 0 <= v < G.n:
                raise ValidationError(f"branch {i} contains dangling vertex id {v}")
            if v in owner:
                raise ValidationError(f"branch {i} overlaps branch {owner[v]} at vertex {v}")
            owner[v] = i
        if not _branch_connected(G, branch):
            raise ValidationError(f"branch {i} {list(branch)} is not connected")
    pairs = set()
    for u, v in G.edges():
        a, b = owner.get(u), owner.get(v)
        if a is not None and b is not None and a != b:
            pairs.add((min(a, b), max(a, b)))
    qn, qm = len(model.branches), len(pairs)
    return MinorCertificate(model, qn, qm, 2.0 * qm / qn)


def identity_model(G: Graph) -> MinorModel:
    """Every vertex its own branch: the graph as a minor of itself."""
    return MinorModel.from_branches(G, ((v,) for v in G.vertices()))


def randomized_contraction(
    G: Graph, X: Sequence[int], blocked: Iterable[int], rng_seed: int
) -> MinorModel:
    """Contract each unblocked vertex into a uniformly chosen anchor neighbour.

    Vertices that are neither anchors nor assigned are left out of the model.
    """
    X = vertex_set(X)
    if not X:
        raise ParameterError("anchor set must be nonempty")
    G.check_vertices(X)
    anchors = frozenset(X)
    blocked = frozenset(blocked)
    rng = rng_stream(rng_seed, "randomized_contraction")
    members: dict[int, list[int]] = {x: [x] for x in X}
    for z in range(G.n):
        if z in anchors or z in blocked:
            continue
        choices = [x for x in G.neighbors(z) if x in anchors]
        if choices:
            members[choices[int(rng.integers(len(choices)))]].append(z)
    return MinorModel.from_branches(G, (members[x] for x in X))


def extract_dense_minor(
    G: Graph,
    params: Params,
    trials: int = DEFAULT_TRIALS,
    rng_seed: int = 0,
    trace: list[dict[str, Any]] | None = None,
) -> MinorCertificate | None:
    """Search for a minor of average degree at least ``params.d``.

    Checks the graph itself first, then runs up to ``trials`` independent rounds
    of anchor sampling, viable-edge construction and random contraction.
    Returns the first validated certificate that reaches ``params.d``, or None.
    Per-round statistics are appended to ``trace`` when one is supplied.
    """
    if trials < 1:
        raise ParameterError(f"trials must be positive, got {trials}")
    if G.n == 0:
        raise GraphInputError("graph must be nonempty")
    if average_degree(G) >= params.d:
        cert = validate_minor_model(G, identity_model(G))
        if trace is not None:
            trace.append({"round": "identity", "achieved_average_degree": cert.achieved_average_degree})
        return cert
    for t in range(trials):
        seed = _round_seed(rng_seed, t)
        X, blocked = sample_anchors(G, params.p, seed)
        record: dict[str, Any] = {"round": t, "seed": seed, "anchors": len(X), "blocked": len(blocked)}
        if not X:
            record["achieved_average_degree"] = None
            if trace is not None:
                trace.append(record)
            continue
        H = viable_edge_graph(G, params.k, X, blocked)
        record["viable_average_degree"] = average_degree(H)
        cert = validate_minor_model(G, randomized_contraction(G, X, blocked, seed))
        record["achieved_average_degree"] = cert.achieved_average_degree
        if trace is not None:
            trace.append(record)
        if cert.achieved_average_degree >= params.d:
            return cert
    return None


def _round_seed(seed: int, index: int) -> int:
    return int(rng_stream(seed, "round", index).integers(1 << 62))


def ball_threshold(d: float, epsilon: float, c_ball: float = 2800.0) -> float:
    return c_ball * d ** (2 + epsilon)


@dataclass(frozen=True)
class BallCheck:
    """Outcome of the radius-3 ball test.

    ``witness_vertex`` is the vertex with the smallest ball (lowest id on
    ties). ``certificate`` is set only when every ball was large enough and
    the delegated search succeeded.
    """

    certificate: MinorCertificate | None
    witness_vertex: int
    min_ball_size: int
    threshold: float
    balls_large: bool
    note: str = ""
    sizes: tuple[int, ...] = field(default=(), compare=False, repr=False)


def dense_minor_via_balls(
    G: Graph,
    d: float,
    epsilon: float,
    trials: int = DEFAULT_TRIALS,
    rng_seed: int = 0,
    *,
    c_ball: float = 2800.0,
    trace: list[dict[str, Any]] | None = None,
) -> BallCheck:
    """Single-path (``k = 1``) variant gated on the sizes of radius-3 balls.

    If some ball ``N^3[v]`` is below ``c_ball * d^{2+epsilon}`` the search is
    skipped and that vertex is returned as the witness for the
    independent-set side. Otherwise :func:`extract_dense_minor` runs with
    ``k = 1``.
    """
    if trials < 1:
        raise ParameterError(f"trials must be positive, got {trials}")
    if G.n == 0:
        raise GraphInputError("graph must be nonempty")
    threshold = ball_threshold(d, epsilon, c_ball)
    sizes = [len(neighborhood_ball(G, v, 3)) for v in G.vertices()]
    smallest = min(sizes)
    witness = sizes.index(smallest)
    sizes = tuple(sizes)
    if smallest < threshold:
        return BallCheck(None, witness, smallest, threshold, False, sizes=sizes)
    try:
        params = derive_params(d, epsilon, 1)
    except ParameterError as exc:
        return BallCheck(None, witness, smallest, threshold, True, note=str(exc), sizes=sizes)
    cert = extract_dense_minor(G, params, trials, rng_seed, trace)
    return BallCheck(cert, witness, smallest, threshold, True, sizes=sizes)
