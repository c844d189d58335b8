"""Matching book embeddings of Halin graphs.

Constructs optimal matching book embeddings (4 pages for maximum degree 3,
max-degree pages otherwise), validates candidate embeddings, and checks the
page-count formula against an exact brute-force oracle on small instances.
"""

from ._kernels import active_name as kernel_backend
from .embedding import (
    BookEmbedding,
    embed_halin,
    embed_wheel,
    expand_embedding,
    normalize_for_expansion,
    repair_pages,
)
from .exceptions import (
    ConstructionError,
    GuardExceededError,
    HalinBookError,
    InvalidHalinError,
    RepairError,
)
from .graphs import (
    CircularOrder,
    Edge,
    Graph,
    chromatic_index,
    complete_graph,
    cycle_graph,
    edge,
    interleaves,
    is_bipartite,
)
from .halin import (
    ExpansionRecord,
    HalinGraph,
    canonical_form,
    contract_fan,
    enumerate_halin,
    expand_fan,
    fan_at,
    make_halin,
    pick_fan_center,
    random_halin,
    wheel,
)
from .verification import (
    ConflictGraph,
    ValidationReport,
    build_conflict_graph,
    exact_mbt,
    is_dispersable,
    min_pages_for_spine,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "BookEmbedding",
    "CircularOrder",
    "ConflictGraph",
    "ConstructionError",
    "Edge",
    "ExpansionRecord",
    "Graph",
    "GuardExceededError",
    "HalinBookError",
    "HalinGraph",
    "InvalidHalinError",
    "RepairError",
    "ValidationReport",
    "build_conflict_graph",
    "canonical_form",
    "chromatic_index",
    "complete_graph",
    "contract_fan",
    "cycle_graph",
    "edge",
    "embed_halin",
    "embed_wheel",
    "enumerate_halin",
    "exact_mbt",
    "expand_embedding",
    "expand_fan",
    "fan_at",
    "interleaves",
    "is_bipartite",
    "is_dispersable",
    "kernel_backend",
    "make_halin",
    "min_pages_for_spine",
    "normalize_for_expansion",
    "pick_fan_center",
    "random_halin",
    "repair_pages",
    "validate",
    "wheel",
]
