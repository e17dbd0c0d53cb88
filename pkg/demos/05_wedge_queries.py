"""Common-neighbor (wedge) queries versus plain edge queries.

When communities are much larger than the average degree, the edge vector is
a poor witness of co-membership: a vertex connects to only a handful of its
many community mates.  Counting common neighbors per pair (the wedge vector)
links each vertex to far more of its community, and the sweep below shows the
resulting gap in achievable correlation distance.  The wedge vector also
encodes the global clustering coefficient through its angle to the edge
vector.
"""

import math

import numpy as np

import pairsphere as ps
from pairsphere.experiments import run_sweep
from pairsphere.louvain import LouvainConfig

# communities of 100 with mean degree 10: each vertex sees only ~5 of its 99
# community mates directly, but ~25 of them through common neighbors
graph, truth = ps.planted_partition(ps.PPMSpec(10, 100, 5.0, 5.0, seed=1))
print(f"planted partition: n={graph.n} m={graph.m} "
      f"truth latitude {ps.clustering_latitude(truth) / math.pi:.3f}pi "
      f"edge latitude "
      f"{ps.latitude(ps.edge_vector(graph)) / math.pi:.3f}pi")

gc = ps.global_clustering(graph)
print(f"global clustering coefficient (from the edge/wedge angle): {gc:.4f}")

lats = np.linspace(0.06, 0.94, 12) * math.pi
config = LouvainConfig(aggregate=False)
for family in ("edge_meridian", "wedge_meridian"):
    records, summary = run_sweep(graph, truth, family, lats, config=config)
    print(f"{family:15s} best dcc to truth "
          f"{summary['best']['dcc_t_c']:.3f}pi "
          f"at query latitude {summary['best']['query_latitude']:.3f}pi")

print("\nThe wedge meridian reaches a noticeably smaller correlation "
      "distance: more of each community is visible per pair.")
