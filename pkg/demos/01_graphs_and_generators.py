# %% [markdown]
# Graphs and the test families.
# Every family is seeded and triangle-free, and the edge-list text format round-trips exactly.

# %%
import numpy as np

from trifree.generators import GenSpec, erdos_edge_budget, generate, petersen_graph
from trifree.graph import ball_sizes, format_edge_list, is_triangle_free, neighborhood_ball, parse_edge_list

P = petersen_graph()
print(P, "triangle-free:", is_triangle_free(P))
print("closed ball of radius 1 around 0:", neighborhood_ball(P, 0, 1))

# %% the triangle-deleted random graph
n = 300
budget = erdos_edge_budget(n)  # floor(n^1.5 / sqrt(A)), A = 2
G = generate(GenSpec("gnm_triangle_deleted", n=n, m=budget, seed=1))
print(f"asked for {budget} edges, kept {G.m} after deleting triangles")

deg = np.array(G.degrees())
print("degree mean / max:", deg.mean().round(2), deg.max())

# radius-3 balls grow fast in these graphs
sizes = np.array(ball_sizes(G, 3))
print("radius-3 ball sizes, min / median / max:", sizes.min(), int(np.median(sizes)), sizes.max())

# %% same seed, same bytes
a = format_edge_list(generate(GenSpec("bipartite_random", a=20, b=20, p=0.2, seed=9)))
b = format_edge_list(generate(GenSpec("bipartite_random", a=20, b=20, p=0.2, seed=9)))
assert a == b and parse_edge_list(a).m == parse_edge_list(b).m
print(a.splitlines()[0], "... identical on rerun")
