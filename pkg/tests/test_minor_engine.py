import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trifree.errors import GraphInputError, ParameterError, ValidationError
from trifree.generators import (
    bipartite_random,
    complete_bipartite_graph,
    cycle_graph,
    gnm_triangle_deleted,
    path_graph,
    star_graph,
)
from trifree.graph import Graph, ball_sizes
from trifree.minor_engine import (
    MinorModel,
    ball_threshold,
    blocking_threshold,
    chernoff_tail_bound,
    dense_minor_via_balls,
    derive_params,
    extract_dense_minor,
    identity_model,
    randomized_contraction,
    sample_anchors,
    validate_minor_model,
    viable_edge_graph,
)
from trifree.oracles import binomial_tail_fraction

from conftest import graphs, random_graph

C5 = cycle_graph(5)


def quotient_by_hand(G, branches):
    owner = {v: i for i, b in enumerate(branches) for v in b}
    pairs = {
        tuple(sorted((owner[u], owner[v])))
        for u, v in G.edges()
        if u in owner and v in owner and owner[u] != owner[v]
    }
    return len(pairs)


# -- parameters ------------------------------------------------------------------


def test_params_small_k():
    P = derive_params(10000, 0.05, 1)
    assert P.regime == "small_k"
    assert P.p == pytest.approx(18 / 10000**0.95, rel=1e-12)
    assert P.b == pytest.approx(2700 * 10000**2.05, rel=1e-12)
    assert P.preconditions_met


def test_params_large_k():
    P = derive_params(400, 0.1, 10000)
    assert 18 / 400**0.9 < 0.25
    assert P.p == pytest.approx(0.25, rel=1e-12)
    assert P.regime == "large_k"
    assert P.b == pytest.approx(240000, rel=1e-12)


def test_p_continuous_at_crossover():
    d, eps = 5000.0, 0.1
    k_star = (18 * d**eps) ** 2  # sqrt(k)/d == 18/d^(1-eps)
    lo = derive_params(d, eps, math.floor(k_star))
    hi = derive_params(d, eps, math.ceil(k_star))
    assert lo.p == pytest.approx(18 / d ** (1 - eps), rel=1e-12)
    assert hi.p == pytest.approx(math.sqrt(math.ceil(k_star)) / d, rel=1e-12)
    assert abs(hi.p - lo.p) < 1e-3 * lo.p


def test_regime_boundary():
    d, eps = 1000.0, 0.2
    edge = 324 * d ** (2 * eps)
    assert derive_params(d, eps, math.floor(edge)).regime == "small_k"
    assert derive_params(d, eps, math.floor(edge) + 1).regime == "large_k"


def test_precondition_flag_only_warns():
    P = derive_params(100, 0.1, 1)
    assert not P.preconditions_met
    assert 0 < P.p <= 1


@pytest.mark.parametrize("args", [(10, 0.1, 1), (0, 0.1, 1), (100, 0.0, 1), (100, 1.0, 1), (100, 0.1, 0)])
def test_params_errors(args):
    with pytest.raises(ParameterError):
        derive_params(*args)


# -- Chernoff bound ---------------------------------------------------------------


def test_chernoff_examples():
    assert chernoff_tail_bound(0, 17) == 1.0
    assert chernoff_tail_bound(3 / 40, 40) == pytest.approx(math.exp(-1), abs=1e-12)
    bound = chernoff_tail_bound(0.05, 100)
    assert bound == pytest.approx(0.18888, abs=1e-5)
    assert binomial_tail_fraction(0.05, 100, 10) <= bound


@pytest.mark.parametrize("p", [0.05, 0.1, 0.2])
@pytest.mark.parametrize("m", [50, 100, 200])
def test_chernoff_dominates_exact_tail(p, m):
    assert float(binomial_tail_fraction(p, m, 2 * p * m)) <= chernoff_tail_bound(p, m)


# -- anchors ----------------------------------------------------------------------


def test_anchor_extremes(petersen):
    assert sample_anchors(petersen, 0.0, 1) == ((), ())
    everything = tuple(range(10))
    assert sample_anchors(petersen, 1.0, 1) == (everything, everything)


def test_c5_blocked_equals_anchors():
    X, blocked = sample_anchors(C5, 0.5, 7)
    assert blocking_threshold(0.5, 2) == 2
    assert blocked == X


def test_anchor_determinism():
    G = random_graph(40, 0.2, 1)
    assert sample_anchors(G, 0.3, 11) == sample_anchors(G, 0.3, 11)
    assert sample_anchors(G, 0.3, 11) != sample_anchors(G, 0.3, 12)


def test_blocked_rule_recomputed_1000_times():
    rng = np.random.default_rng(2024)
    for trial in range(1000):
        n = int(rng.integers(1, 30))
        G = random_graph(n, float(rng.uniform(0.05, 0.6)), trial)
        p = float(rng.uniform(0, 1))
        X, blocked = sample_anchors(G, p, trial)
        anchors = set(X)
        expected = []
        for z in range(n):
            hits = sum(1 for w in G.neighbors(z) if w in anchors)
            if z in anchors or hits > 2 * p * (G.degree(z) - 2) + 2:
                expected.append(z)
        assert list(blocked) == expected


# -- viable edges ------------------------------------------------------------------


def test_viable_examples():
    H = viable_edge_graph(path_graph(3), 7, [0, 1], [0, 1, 2])
    assert H.n == 2 and H.has_edge(0, 1)

    K23 = complete_bipartite_graph(2, 3)
    assert viable_edge_graph(K23, 4, [0, 1], []).has_edge(0, 1)
    assert not viable_edge_graph(K23, 4, [0, 1], [2, 3]).has_edge(0, 1)


# -- contraction and validation -------------------------------------------------------


def test_all_anchors_give_identity():
    G = random_graph(12, 0.3, 4)
    model = randomized_contraction(G, range(12), range(12), 0)
    cert = validate_minor_model(G, model)
    assert all(len(b) == 1 for b in model.branches)
    assert cert.quotient_m == G.m


def test_star_collapses_to_one_branch():
    S = star_graph(5)
    model = randomized_contraction(S, [0], [], 0)
    assert model.branches == (tuple(range(6)),)
    cert = validate_minor_model(S, model)
    assert cert.quotient_n == 1 and cert.quotient_m == 0


def test_c5_two_anchor_trace():
    model = randomized_contraction(C5, [0, 2], [], 3)
    anchor_of = {v: next(x for x in model.branches[i] if x in (0, 2)) for v, i in model.branch_of.items()}
    assert anchor_of[4] == 0 and anchor_of[3] == 2
    assert anchor_of[1] in (0, 2)
    cert = validate_minor_model(C5, model)
    assert cert.quotient_n == 2 and cert.quotient_m == 1


def test_validation_examples():
    cert = validate_minor_model(C5, identity_model(C5))
    assert cert.achieved_average_degree == 2.0
    with pytest.raises(ValidationError, match="branch 0"):
        validate_minor_model(C5, MinorModel.from_branches(C5, [[0, 2], [1]]))
    with pytest.raises(ValidationError, match="overlaps"):
        validate_minor_model(C5, MinorModel.from_branches(C5, [[0, 1], [1, 2]]))
    with pytest.raises(ValidationError, match="dangling"):
        validate_minor_model(C5, MinorModel.from_branches(C5, [[0], [7]]))


def test_tampered_certificate_rejected():
    from dataclasses import replace

    cert = validate_minor_model(C5, identity_model(C5))
    with pytest.raises(ValidationError):
        replace(cert, achieved_average_degree=3.0).revalidate()


@settings(max_examples=100)
@given(graphs(max_n=12, min_n=1), st.floats(0.05, 1.0), st.integers(0, 2**31))
def test_contraction_always_valid(G, p, seed):
    X, blocked = sample_anchors(G, p, seed)
    if not X:
        return
    model = randomized_contraction(G, X, blocked, seed)
    cert = validate_minor_model(G, model)
    # every branch is a star around its anchor
    assert len(model.branches) == len(X)
    for branch in model.branches:
        (x,) = set(branch) & set(X)
        assert all(v == x or G.has_edge(v, x) for v in branch)
    assert cert.quotient_m == quotient_by_hand(G, model.branches)
    assert cert.achieved_average_degree == pytest.approx(2 * cert.quotient_m / cert.quotient_n, abs=1e-12)


# -- extraction --------------------------------------------------------------------------


def test_single_edge_cannot_reach_ten():
    K2 = Graph.from_edges(2, [(0, 1)])
    params = derive_params(10, 0.5, 1, p_override=0.5)
    assert extract_dense_minor(K2, params, trials=5) is None


def test_dense_input_returns_identity():
    G = complete_bipartite_graph(6, 6)
    params = derive_params(6, 0.5, 1, p_override=0.5)
    cert = extract_dense_minor(G, params, trials=3)
    assert cert is not None and cert.quotient_n == 12
    assert cert.achieved_average_degree >= 6


def test_extract_rejects_zero_trials():
    with pytest.raises(ParameterError):
        extract_dense_minor(C5, derive_params(2, 0.5, 1, p_override=0.5), trials=0)


def test_extract_soundness_on_bipartite_2000():
    G = bipartite_random(1000, 1000, 0.04, 1)
    params = derive_params(10, 0.1, 1, p_override=0.1)
    cert = extract_dense_minor(G, params, trials=50, rng_seed=5)
    if cert is not None:
        again = validate_minor_model(G, cert.model)
        assert again.achieved_average_degree >= 10
        assert again == cert.revalidate()


def test_contraction_finds_dense_minor_in_sparse_graph():
    # average degree about 6, below the target of 8; only a genuine contraction helps
    G = gnm_triangle_deleted(600, 1900, 3)
    assert 2 * G.m / G.n < 8
    params = derive_params(8, 0.1, 1, p_override=0.15)
    cert = extract_dense_minor(G, params, trials=50, rng_seed=1)
    assert cert is not None
    assert cert.quotient_n < G.n
    assert cert.revalidate().achieved_average_degree >= 8


def test_extract_deterministic():
    G = gnm_triangle_deleted(300, 900, 8)
    params = derive_params(7, 0.1, 1, p_override=0.2)
    a = extract_dense_minor(G, params, trials=10, rng_seed=4)
    b = extract_dense_minor(G, params, trials=10, rng_seed=4)
    assert a == b


# -- radius-3 balls ------------------------------------------------------------------------


def test_ball_gate_on_c5():
    check = dense_minor_via_balls(C5, 2, 0.1, trials=5, rng_seed=0)
    assert check.certificate is None
    assert check.witness_vertex == 0
    assert check.min_ball_size == 5
    assert check.threshold == pytest.approx(2800 * 2**2.1)
    assert not check.balls_large


def test_ball_gate_on_petersen(petersen):
    assert ball_sizes(petersen, 3) == [10] * 10
    check = dense_minor_via_balls(petersen, 1, 0.01, trials=5, rng_seed=0)
    assert check.certificate is None and check.min_ball_size == 10
    assert check.threshold == pytest.approx(ball_threshold(1, 0.01)) and check.threshold == pytest.approx(2800)


def test_ball_gate_delegates_when_large():
    # p <= 1 needs d^(1-eps) >= 18
    G = complete_bipartite_graph(20, 20)
    check = dense_minor_via_balls(G, 19, 0.01, trials=5, rng_seed=0, c_ball=0.001)
    assert check.balls_large and check.note == ""
    assert check.certificate is not None
    assert check.certificate.revalidate().achieved_average_degree >= 19


def test_ball_gate_rejects_empty_graph():
    with pytest.raises(GraphInputError):
        dense_minor_via_balls(Graph.from_edges(0, []), 2, 0.1)
