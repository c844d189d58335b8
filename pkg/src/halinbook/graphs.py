"""Simple graphs, circular vertex orders, and exact edge coloring.

Vertices are small non-negative integers.  Edges are canonical tuples
(smaller endpoint first), so edge sets and edge-to-page maps are
well-defined.  Circular orders model the printing cycle: the spine of a
book embedding read cyclically, where rotation and reflection are the
two operations that never change the crossing structure.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .exceptions import GuardExceededError

Edge = tuple[int, int]

CHROMATIC_INDEX_EDGE_GUARD = 40


def edge(a: int, b: int) -> Edge:
    """Canonical undirected edge: endpoints distinct, smaller label first."""
    if a == b:
        raise ValueError(f"loop edge at vertex {a}")
    if a < 0 or b < 0:
        raise ValueError(f"negative vertex label in edge ({a}, {b})")
    return (a, b) if a < b else (b, a)


class Graph:
    """Immutable simple graph on integer vertices."""

    __slots__ = ("vertices", "edges", "_adj")

    def __init__(self, vertices: Iterable[int], edges: Iterable[Edge | tuple[int, int]]):
        es = frozenset(edge(a, b) for a, b in edges)
        vs = frozenset(vertices) | frozenset(v for e in es for v in e)
        if any(v < 0 for v in vs):
            raise ValueError("vertex labels must be non-negative")
        self.vertices: frozenset[int] = vs
        self.edges: frozenset[Edge] = es
        adj: dict[int, set[int]] = {v: set() for v in vs}
        for a, b in es:
            adj[a].add(b)
            adj[b].add(a)
        self._adj = {v: frozenset(nb) for v, nb in adj.items()}

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls((), edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        """Maximum vertex degree; undefined (error) on an empty vertex set."""
        if not self.vertices:
            raise ValueError("max_degree of a graph with no vertices")
        return max(len(nb) for nb in self._adj.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"Graph({sorted(self.vertices)}, {sorted(self.edges)})"


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n)])


class CircularOrder:
    """A cyclic permutation of vertices (the printing cycle).

    Stored as a concrete tuple; two orders compare equal only if their
    sequences match position by position.  Use :meth:`rotate` and
    :meth:`reflect` to move between representatives of the same cycle.
    """

    __slots__ = ("sequence", "_pos")

    def __init__(self, sequence: Iterable[int]):
        seq = tuple(sequence)
        if len(set(seq)) != len(seq):
            raise ValueError("circular order repeats a vertex")
        self.sequence = seq
        self._pos = {v: i for i, v in enumerate(seq)}

    def position(self, v: int) -> int:
        return self._pos[v]

    def __contains__(self, v: int) -> bool:
        return v in self._pos

    def __len__(self) -> int:
        return len(self.sequence)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sequence)

    def __getitem__(self, i: int) -> int:
        return self.sequence[i % len(self.sequence)]

    def rotate(self, shift: int) -> "CircularOrder":
        """Same cycle, read starting ``shift`` positions later."""
        n = len(self.sequence)
        if n == 0:
            return CircularOrder(())
        shift %= n
        return CircularOrder(self.sequence[shift:] + self.sequence[:shift])

    def reflect(self) -> "CircularOrder":
        """Same cycle traversed in the opposite direction."""
        return CircularOrder(tuple(reversed(self.sequence)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CircularOrder):
            return NotImplemented
        return self.sequence == other.sequence

    def __hash__(self) -> int:
        return hash(self.sequence)

    def __repr__(self) -> str:
        return f"CircularOrder{self.sequence}"


def interleaves(order: CircularOrder, e1: Edge, e2: Edge) -> bool:
    """True iff the chords of e1 and e2 cross in the circular order.

    Equivalently: exactly one endpoint of e2 lies strictly inside one of
    the two arcs cut by e1.  Defined only for vertex-disjoint edges; a
    shared endpoint raises, because "crossing" is meaningless there (the
    matching condition owns that case).
    """
    a, b = e1
    c, d = e2
    if len({a, b, c, d}) < 4:
        raise ValueError(f"interleaves requires vertex-disjoint edges, got {e1} and {e2}")
    n = len(order)
    pa, pb = order.position(a), order.position(b)
    pc, pd = order.position(c), order.position(d)
    span = (pb - pa) % n
    in_arc_c = 0 < (pc - pa) % n < span
    in_arc_d = 0 < (pd - pa) % n < span
    return in_arc_c != in_arc_d


def is_bipartite(g: Graph) -> bool:
    """2-colorability by breadth-first traversal over every component."""
    color: dict[int, int] = {}
    for start in g.vertices:
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for nb in g.neighbors(v):
                if nb not in color:
                    color[nb] = color[v] ^ 1
                    queue.append(nb)
                elif color[nb] == color[v]:
                    return False
    return True


def chromatic_index(g: Graph, max_edges: int = CHROMATIC_INDEX_EDGE_GUARD) -> int:
    """Exact chromatic index by backtracking inside the Vizing envelope.

    Tries a proper edge coloring with max_degree colors; on failure the
    answer is max_degree + 1 (Vizing guarantees that many suffice for a
    simple graph, and the backtracking confirms it by construction).
    Edges are colored in descending degree-sum order with colors tried in
    ascending index, failing as early as possible.
    """
    m = len(g.edges)
    if m > max_edges:
        raise GuardExceededError(
            f"chromatic_index guard: {m} edges exceeds limit {max_edges}"
        )
    if m == 0:
        return 0
    delta = g.max_degree()
    for k in (delta, delta + 1):
        if _edge_coloring(g, k) is not None:
            return k
    raise AssertionError("no proper edge coloring within the Vizing bound")


def _edge_coloring(g: Graph, colors: int) -> list[int] | None:
    """A proper edge coloring with at most ``colors`` colors, or None."""
    order = sorted(g.edges, key=lambda e: (-(g.degree(e[0]) + g.degree(e[1])), e))
    used: dict[int, int] = {v: 0 for v in g.vertices}  # bitmask per vertex
    assignment = [-1] * len(order)

    def place(i: int) -> bool:
        if i == len(order):
            return True
        a, b = order[i]
        blocked = used[a] | used[b]
        for c in range(colors):
            bit = 1 << c
            if blocked & bit:
                continue
            used[a] |= bit
            used[b] |= bit
            assignment[i] = c
            if place(i + 1):
                return True
            used[a] ^= bit
            used[b] ^= bit
            assignment[i] = -1
        return False

    return assignment if place(0) else None
