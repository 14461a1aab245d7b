"""True network structures of the bundled 10x10 market truth.

Walks the whole "truth side" of the toolkit: load a correlation matrix,
derive the sign-probability matrix from it, threshold both into market
graphs, and extract every supported characteristic.
"""

import numpy as np

import netstab as ns

scale = ns.load_scale_matrix(ns.fixture_path("uk2010"))
print("truth matrix: 10x10, min/max off-diagonal", scale.min(), "/", scale[~np.eye(10, dtype=bool)].max())

truth_pearson = ns.pearson_true(scale)
truth_sign = ns.sign_true(truth_pearson)
print("\narcsine map sends correlation 0.49 to sign probability",
      round(float(ns.sign_probability(0.49)), 4))

# Market graphs keep edges with weight strictly above the threshold.  The
# sign-scale threshold is the arcsine image of the correlation threshold,
# which makes both graphs identical by construction.
gamma0 = 0.3
graph_p = ns.market_graph(truth_pearson, gamma0)
graph_s = ns.market_graph(truth_sign, float(ns.sign_probability(gamma0)))
print(f"\nmarket graph at threshold {gamma0}:")
print("  edges:", sorted(graph_p.edges))
print("  same under the mapped sign threshold:", graph_p.edges == graph_s.edges)

degrees = ns.degree_distribution(graph_p)
print("  degree counts (index = degree):", degrees.counts.tolist())

clique = ns.max_clique(graph_p)
independent = ns.max_independent_set(graph_p)
print("  maximum clique:", clique.members)
print("  maximum independent set:", independent.members)

# The number of candidate structures explains why identification is hard:
print("\nhypothesis counts for N=10:")
print("  market graphs:", ns.hypothesis_count_market_graph(10))
print("  spanning trees:", ns.spanning_tree_count(10))

tree = ns.maximum_spanning_tree(truth_pearson)
print("\nmaximum spanning tree (edge, weight):")
for (i, j), w in zip(tree.edges, tree.edge_weights):
    print(f"  ({i}, {j})  {w:+.2f}")
print("  total weight:", round(tree.total_weight, 2))
print("  topology (sorted degrees):", ns.tree_topology(tree).degrees)

hist = ns.edge_histogram(truth_pearson)
print("\nedge-weight histogram (20 bins over [-1, 1]):")
print("  counts:", hist.counts.tolist())
