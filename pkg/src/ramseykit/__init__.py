"""Exact Ramsey-style calculus for small graphs and linear hypergraphs.

The package builds and checks the objects behind sparse Ramsey
constructions: rational 2-densities, forests and cycles of copies,
edge-glued amalgams, sum hypergraphs and their derived graphs, several
families of copy-avoiding edge colourings, and a brute-force arrowing
oracle.  Everything is exact (``fractions.Fraction``), deterministic in
its seeds, and either certifies its answer or raises
:class:`~ramseykit.errors.BudgetExceededError`.
"""

from .arrowing import ArrowingResult, arrows, arrows_system, verify_colouring
from .colouring import (EdgeColouring, PartiteSplit, SetMapping,
                        cycle_free_colouring, free_partition,
                        multipartite_free_colouring, partite_split,
                        set_mapping)
from .constructions import (Amalgam, amalgam, amalgam_packing_at,
                            balanced_multipartite, derived_graph,
                            find_amalgam, is_balanced_complete_multipartite,
                            is_strongly_edge_transitive, kernel_subgraph,
                            sum_hypergraph)
from .density import (DensityReport, density_report,
                      is_strictly_two_balanced, max_two_density, two_density)
from .errors import (BudgetExceededError, CorrespondenceWarning,
                     ForestLocalityError, FormatError, UndecidedError)
from .forests import (CopySystem, ForestCertificate, ForestVerdict,
                      build_cycle_of_copies, copy_system, is_edgy_forest,
                      is_forest_of_copies, locate_inseparable_subgraph,
                      union_graph, union_support, verify_certificate)
from .generators import (amalgam_free_host, inseparable_template,
                         random_forest_of_copies, random_graph,
                         random_hypergraph_forest, random_ordered_host,
                         random_set_mapping_images)
from .graphs import (CopyEmbedding, DisjointPaths, Edge, Graph, Hypergraph,
                     InseparabilityReport, OrderedGraph, as_graph,
                     complete_graph, cycle_graph, disjoint_paths_threshold,
                     enumerate_copies, graph, hypergraph, is_connected,
                     is_ev_inseparable, is_linear, linearity_conflict,
                     max_disjoint_paths, path_graph, vertex_connectivity)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
