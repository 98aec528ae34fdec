import numpy as np
import pytest
from hypothesis import strategies as st

from trifree.generators import delete_triangles
from trifree.graph import Graph


def random_graph(n, density, seed, triangle_free=False):
    """Seeded G(n, p) on ``n`` vertices, optionally with triangles swept out."""
    rng = np.random.default_rng(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
    if triangle_free:
        edges = delete_triangles(n, edges)
    return Graph.from_edges(n, edges)


def random_bipartite(a, b, density, seed):
    rng = np.random.default_rng(seed)
    edges = [(u, a + w) for u in range(a) for w in range(b) if rng.random() < density]
    return Graph.from_edges(a + b, edges)


@st.composite
def graphs(draw, max_n=8, min_n=1, triangle_free=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, keep in zip(pairs, mask) if keep]
    if triangle_free:
        edges = delete_triangles(n, edges)
    return Graph.from_edges(n, edges)


@pytest.fixture
def petersen():
    from trifree.generators import petersen_graph

    return petersen_graph()


# acceptance tests record "criterion -> (passed, detail)" here; printed at the end of the run
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
