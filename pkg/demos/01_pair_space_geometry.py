"""Tour of the pair-space geometry on a toy graph.

Every clustering of n vertices becomes a +/-1 vector indexed by the
n*(n-1)/2 vertex pairs, so all clusterings live on a hypersphere of radius
sqrt(N).  The all-singletons clustering sits at the fine pole (-1), the
single-cluster clustering at the coarse pole (+1), and every other vector is
pinned down by a latitude (granularity) and a meridian (everything else).
"""

import math

import pairsphere as ps

n = 5
fine = ps.Clustering.singletons(n)
coarse = ps.Clustering.single_cluster(n)
mid = ps.Clustering([0, 0, 0, 1, 1])

for name, c in (("singletons", fine), ("one cluster", coarse), ("3+2", mid)):
    b = ps.to_pair_vector(c)
    print(f"{name:12s} m_C={c.intra_pairs:2d} "
          f"latitude={ps.clustering_latitude(c) / math.pi:.3f}pi "
          f"norm={ps.norm(b):.3f} (sqrt(N)={math.sqrt(b.num_pairs):.3f})")

# The meridian angle at the fine pole equals the correlation distance: two
# independent formulas, one number.
graph = ps.Graph.from_edges([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
e = ps.edge_vector(graph)
b = ps.to_pair_vector(mid)
print("\nmeridian angle :", ps.meridian_angle(e, b) / math.pi, "pi")
print("corr. distance :", ps.correlation_distance(e, b) / math.pi, "pi")

# Parallel projection moves a vector along its meridian to a chosen latitude
# without changing what it says about relative pair affinities.
for lam in (0.25, 0.5, 0.75):
    q = ps.parallel_project(e, lam * math.pi)
    print(f"project e(G) to {lam:.2f}pi -> latitude "
          f"{ps.latitude(q) / math.pi:.2f}pi, "
          f"distance to original meridian "
          f"{ps.correlation_distance(q, e):.2e}")

# Ground-truth communities of bounded size concentrate near the fine pole as
# the graph grows; the latitude shrinks like 2*sqrt((s-1)/(n-1)).
print("\ntruth latitude for communities of size 20:")
for size in (100, 1000, 10000):
    est = ps.concentration_approx(20, size)
    print(f"  n={size:6d} exact={est.exact / math.pi:.4f}pi "
          f"approx={est.approximation / math.pi:.4f}pi")
