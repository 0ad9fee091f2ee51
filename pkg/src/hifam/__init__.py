"""Toolkit for pattern-intersecting families of graph edge sets.

Small immutable graphs on edge bitsets, non-induced containment tests,
host-class enumeration, exact maximum clique over compatibility graphs,
multipartite family constructions with exact dyadic densities, and a
search driver with JSONL persistence.
"""

from .clique import (
    CliqueResult,
    CompatibilityGraph,
    brute_force_clique,
    build_compatibility,
    max_clique,
)
from .construct import (
    ConstructionSpec,
    MultipartiteFamily,
    SeedCheck,
    SubgraphFamily,
    check_seeds,
    improvement_margin,
    lifted_count_string,
    multipartite_family,
    trivial_density,
    verify_intersecting,
)
from .density import DyadicDensity, density_string
from .detect import (
    MultipartiteTarget,
    contains_multipartite,
    contains_p4,
    contains_subgraph,
    intersection,
)
from .enumeration import HostClass, candidate_subgraphs, connected_graphs, is_connected
from .graphs import (
    CanonicalKey,
    Graph,
    Graph6Error,
    apply_permutation,
    canonical_key,
    christofides_host,
    complete,
    complete_multipartite,
    cycle,
    edge_index,
    edge_pair,
    emit_edge_list,
    emit_graph6,
    from_edges,
    parse_edge_list,
    parse_graph6,
    path,
)
from .search import (
    SearchRecord,
    SearchSummary,
    load_records,
    search_hosts,
    summarize,
    verify_records,
    write_records,
)

__all__ = [
    "CanonicalKey",
    "CliqueResult",
    "CompatibilityGraph",
    "ConstructionSpec",
    "DyadicDensity",
    "Graph",
    "Graph6Error",
    "HostClass",
    "MultipartiteFamily",
    "MultipartiteTarget",
    "SearchRecord",
    "SearchSummary",
    "SeedCheck",
    "SubgraphFamily",
    "apply_permutation",
    "brute_force_clique",
    "build_compatibility",
    "candidate_subgraphs",
    "canonical_key",
    "check_seeds",
    "christofides_host",
    "complete",
    "complete_multipartite",
    "connected_graphs",
    "contains_multipartite",
    "contains_p4",
    "contains_subgraph",
    "cycle",
    "density_string",
    "edge_index",
    "edge_pair",
    "emit_edge_list",
    "emit_graph6",
    "from_edges",
    "improvement_margin",
    "intersection",
    "is_connected",
    "lifted_count_string",
    "load_records",
    "max_clique",
    "multipartite_family",
    "parse_edge_list",
    "parse_graph6",
    "path",
    "search_hosts",
    "summarize",
    "trivial_density",
    "verify_intersecting",
    "verify_records",
    "write_records",
]

__version__ = "0.1.0"
