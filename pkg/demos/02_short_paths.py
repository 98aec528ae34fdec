# %% [markdown]
# Packing short paths and building the power graph.
# Two vertices are joined in the power graph when they are adjacent, or when k internally
# disjoint paths of at most three edges run between them.

# %%
from trifree.generators import complete_bipartite_graph, cycle_graph, gnm_triangle_deleted
from trifree.short_paths import distance_power, max_disjoint_short_paths, short_path_power

K = complete_bipartite_graph(2, 3)
packing = max_disjoint_short_paths(K, 0, 1)
print("K_{2,3}, small side:", packing.paths)
packing.validate(K)

C6 = cycle_graph(6)
print("C6, opposite vertices:", max_disjoint_short_paths(C6, 0, 3).paths)

# %% blocking interior vertices removes paths
print("C6 with 1 blocked:", max_disjoint_short_paths(C6, 0, 3, blocked=[1]).paths)

# %% the power graph thins out as k grows
G = gnm_triangle_deleted(150, 700, seed=2)
print(f"base graph: {G.m} edges")
for k in (1, 2, 3, 4):
    power = short_path_power(G, k)
    print(f"  k={k}: {len(power.power_edges)} power edges, average degree {2 * len(power.power_edges) / G.n:.1f}")

# with k = 1 it is exactly the graph cube
assert set(short_path_power(G, 1).power_edges) == distance_power(G, 3)
