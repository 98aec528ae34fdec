# %% [markdown]
# Independent sets: greedy baseline, peeling, the power-graph certificate, and the recursion.

# %%
from trifree.generators import bipartite_random, cycle_graph, gnm_triangle_deleted, petersen_graph
from trifree.indep_engine import (
    g3k_certificate,
    peel_low_degree,
    recursive_independent_set,
    sparse_neighborhood_set,
    strip_high_degree,
    turan_greedy,
)
from trifree.oracles import max_independent_set_exact

P = petersen_graph()
print("greedy on Petersen:", turan_greedy(P).members, "exact alpha:", len(max_independent_set_exact(P)))

# %% peeling low-degree vertices leaves a core of large minimum degree
G = gnm_triangle_deleted(400, 1800, seed=3)
peel = peel_low_degree(G, 4)
print(f"peel with d0=4: {peel.centers.size} centers, core on {peel.core.n} vertices")

# %% a set Y that is independent in the power graph yields an independent set around it
C6 = cycle_graph(6)
print("C6, k=3, Y={0,3}:", g3k_certificate(C6, 3, [0, 3]).members)

# %% sparse neighbourhoods: an independent A near v with |N[A]| <= tau |A|
print("Petersen, tau=3.5:", sparse_neighborhood_set(P, 0, 3.5))
print("Petersen, tau=3.0:", sparse_neighborhood_set(P, 0, 3.0))

# %% the recursion never does worse than the greedy baseline
B = bipartite_random(250, 250, 0.08, seed=1)
rec = recursive_independent_set(B, 20, 0.1, rng_seed=0)
print(f"bipartite n=500: recursion {rec.size}, greedy {turan_greedy(B).size}")

# %% stripping high-degree vertices
H, kept, Z = strip_high_degree(G, d=6)
print(f"strip at d=6: removed {len(Z)} of {G.n}, max degree now {max(H.degrees())}")
