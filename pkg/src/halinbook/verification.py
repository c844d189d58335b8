"""Certification: the embedding validator, the fixed-spine page minimum,
and the exact matching book thickness oracle.

The oracle is deliberately independent of the constructive embedder: it
minimizes, over every circular spine (one vertex pinned, reflections
halved), the chromatic number of the conflict graph whose nodes are edges
and whose conflicts are shared endpoints or interleaving chords.  Guards
keep the factorial search at desk scale; HALIN_BOOK_ORACLE_LIMIT raises
them for bigger CI tiers.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import permutations
from types import ModuleType

from . import _kernels
from ._kernels import _pykernel
from .embedding import BookEmbedding
from .exceptions import GuardExceededError
from .graphs import CircularOrder, Edge, Graph, interleaves

DEFAULT_ORACLE_VERTEX_LIMIT = 10
DEFAULT_SPINE_EDGE_LIMIT = 24
ORACLE_LIMIT_ENV = "HALIN_BOOK_ORACLE_LIMIT"


def oracle_vertex_limit(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get(ORACLE_LIMIT_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ValueError(f"{ORACLE_LIMIT_ENV} must be an integer, got {env!r}") from exc
    return DEFAULT_ORACLE_VERTEX_LIMIT


@dataclass
class ValidationReport:
    """Itemized violations of a candidate embedding; empty means valid."""

    crossings: list[tuple[int, Edge, Edge]] = field(default_factory=list)
    matching_violations: list[tuple[int, int, int]] = field(default_factory=list)
    missing_or_duplicate_edges: list[Edge] = field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        return not (
            self.crossings or self.matching_violations or self.missing_or_duplicate_edges
        )

    def lines(self) -> list[str]:
        out = []
        for page, e1, e2 in self.crossings:
            out.append(f"crossing on page {page}: {e1} x {e2}")
        for page, vertex, count in self.matching_violations:
            out.append(f"matching violation on page {page}: vertex {vertex} has {count} edges")
        for e in self.missing_or_duplicate_edges:
            out.append(f"edge {e} missing from or duplicated across pages")
        return out


def validate(g: Graph, emb: BookEmbedding) -> ValidationReport:
    """Exhaustive check of the three embedding invariants for g.

    Raises if the spine is not a permutation of g's vertices; everything
    else lands in the report.
    """
    if frozenset(emb.spine) != g.vertices:
        raise ValueError(
            f"spine is not a permutation of the graph's vertices: "
            f"spine has {sorted(emb.spine)}, graph has {sorted(g.vertices)}"
        )
    report = ValidationReport()

    counts: dict[Edge, int] = {e: 0 for e in g.edges}
    for page in emb.pages:
        for e in page:
            if e in counts:
                counts[e] += 1
            else:
                report.missing_or_duplicate_edges.append(e)
    for e in sorted(counts):
        if counts[e] != 1:
            report.missing_or_duplicate_edges.append(e)

    for page_index, page in enumerate(emb.pages):
        degree: dict[int, int] = {}
        for a, b in page:
            degree[a] = degree.get(a, 0) + 1
            degree[b] = degree.get(b, 0) + 1
        for vertex in sorted(degree):
            if degree[vertex] > 1:
                report.matching_violations.append((page_index, vertex, degree[vertex]))
        edges = sorted(page)
        for i, e1 in enumerate(edges):
            for e2 in edges[i + 1 :]:
                if set(e1) & set(e2):
                    continue
                if interleaves(emb.spine, e1, e2):
                    report.crossings.append((page_index, e1, e2))
    return report


@dataclass(frozen=True)
class ConflictGraph:
    """Edges of the subject graph as nodes; conflicts as adjacency bitmasks.

    Two edges conflict when they share an endpoint or interleave on the
    fixed spine, so a proper coloring of this graph is exactly a legal page
    assignment.
    """

    nodes: tuple[Edge, ...]
    adjacency: tuple[int, ...]

    def conflicts(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] >> j & 1)


def build_conflict_graph(g: Graph, spine: CircularOrder) -> ConflictGraph:
    if frozenset(spine) != g.vertices:
        raise ValueError("spine is not a permutation of the graph's vertices")
    nodes = tuple(sorted(g.edges))
    pos_u = [spine.position(a) for a, _ in nodes]
    pos_v = [spine.position(b) for _, b in nodes]
    return ConflictGraph(nodes, tuple(_pykernel.conflict_masks(pos_u, pos_v)))


def min_pages_for_spine(
    g: Graph,
    spine: CircularOrder,
    max_edges: int = DEFAULT_SPINE_EDGE_LIMIT,
    kernel: ModuleType | None = None,
) -> int:
    """Exact minimum page count for g on this fixed circular spine."""
    if frozenset(spine) != g.vertices:
        raise ValueError("spine is not a permutation of the graph's vertices")
    m = len(g.edges)
    if m > max_edges:
        raise GuardExceededError(f"min_pages_for_spine guard: {m} edges exceeds {max_edges}")
    if m == 0:
        return 0
    kern = kernel if kernel is not None else _kernels.ACTIVE
    nodes = sorted(g.edges)
    pos_u = [spine.position(a) for a, _ in nodes]
    pos_v = [spine.position(b) for _, b in nodes]
    count, _colors = kern.min_pages(pos_u, pos_v, g.max_degree(), None)
    return count


def exact_mbt(
    g: Graph,
    limit: int | None = None,
    kernel: ModuleType | None = None,
) -> tuple[int, BookEmbedding]:
    """Exact matching book thickness with a witness embedding.

    Minimizes over circular spines: the smallest vertex is pinned to
    position 0 and reflected spines are skipped (neither rotation nor
    reflection can change any page count).  The maximum degree is a global
    lower bound, so the search stops as soon as it is attained; otherwise
    the best count so far prunes each spine's coloring search.
    """
    n = len(g.vertices)
    cap = oracle_vertex_limit(limit)
    if n > cap:
        raise GuardExceededError(
            f"exact_mbt guard: {n} vertices exceeds {cap} "
            f"(raise with the limit argument or {ORACLE_LIMIT_ENV})"
        )
    if n == 0:
        raise ValueError("exact_mbt of a graph with no vertices")
    nodes = sorted(g.edges)
    m = len(nodes)
    if m > _pykernel.MAX_NODES:
        raise GuardExceededError(f"exact_mbt kernel cap: {m} edges exceeds {_pykernel.MAX_NODES}")
    verts = sorted(g.vertices)
    if m == 0:
        return 0, BookEmbedding(CircularOrder(verts), ())
    kern = kernel if kernel is not None else _kernels.ACTIVE

    lower = g.max_degree()
    best = m + 1
    best_spine: tuple[int, ...] | None = None
    best_colors: list[int] | None = None
    first, rest = verts[0], verts[1:]
    for tail in permutations(rest):
        if len(tail) > 1 and tail[0] > tail[-1]:
            continue  # the reflection of an already-visited spine
        position = {first: 0}
        for i, v in enumerate(tail):
            position[v] = i + 1
        pos_u = [position[a] for a, _ in nodes]
        pos_v = [position[b] for _, b in nodes]
        count, colors = kern.min_pages(pos_u, pos_v, lower, best)
        if count < best:
            best = count
            best_spine = (first,) + tail
            best_colors = colors
            if best <= lower:
                break
    assert best_spine is not None and best_colors is not None
    pages = [set() for _ in range(best)]
    for e, color in zip(nodes, best_colors):
        pages[color].add(e)
    witness = BookEmbedding(CircularOrder(best_spine), tuple(frozenset(p) for p in pages))
    return best, witness


def is_dispersable(g: Graph, limit: int | None = None) -> bool:
    """Whether the matching book thickness meets its degree lower bound."""
    value, _witness = exact_mbt(g, limit=limit)
    return value == g.max_degree()
