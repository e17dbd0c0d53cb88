"""Community detection as projection on the hypersphere of pair vectors."""

from .clusterings import (Clustering, PairCounts, clustering_latitude,
                          correlation_coefficient, from_pair_vector,
                          hubert_index, is_clustering_vector, jaccard_index,
                          pair_counts, rand_index, read_clustering,
                          to_pair_vector, write_clustering)
from .generators import (PPMSpec, RingOfCliquesSpec, planted_partition,
                         ring_of_cliques)
from .graphs import (Graph, edge_vector, global_clustering, load_dataset,
                     load_edge_list, wedge_vector)
from .louvain import (LouvainConfig, LouvainResult, clustering_objective,
                      exact_project, iter_partitions, louvain_project,
                      modularity_value)
from .pairvectors import (GeometrySummary, PairVector, PoleError,
                          ProductKernel, ZeroVectorError, angular_distance,
                          concentration_approx, correlation_distance,
                          hypersphere_project, inner, inner_with_ones,
                          latitude, meridian_angle, norm, parallel_project,
                          summarize)
from .queries import (QuerySpec, build_query, gamma_for_latitude,
                      heatmap_coordinates, linear_combo_vector,
                      modularity_latitude, modularity_vector,
                      null_expectation)

__version__ = "0.1.0"
