"""Halin graphs: an interior tree without degree-2 vertices plus the cycle
through its leaves in planar order.

The tree/cycle pair is the native input everywhere in this package; we never
recover it from a bare edge list.  The planarity of the pair is captured
combinatorially: for every tree edge, the leaves on each side must occupy a
contiguous arc of the leaf cycle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from .exceptions import GuardExceededError, InvalidHalinError
from .graphs import CircularOrder, Edge, Graph, edge

ENUMERATION_VERTEX_GUARD = 10


class HalinGraph:
    """A validated Halin graph.  Construct via :func:`make_halin` (or the
    constructor directly; both validate and raise :class:`InvalidHalinError`
    with the full list of violations)."""

    __slots__ = ("tree_edges", "leaf_cycle", "vertices", "leaves", "interior", "_tree_adj")

    def __init__(self, tree_edges: Iterable[tuple[int, int]], leaf_cycle: Iterable[int]):
        violations: list[str] = []
        try:
            edges = frozenset(edge(a, b) for a, b in tree_edges)
        except ValueError as exc:
            raise InvalidHalinError([str(exc)]) from exc
        try:
            cycle = CircularOrder(leaf_cycle)
        except ValueError as exc:
            raise InvalidHalinError([str(exc)]) from exc

        vertices = frozenset(v for e in edges for v in e)
        if len(vertices) < 4:
            violations.append(f"interior tree needs at least 4 vertices, got {len(vertices)}")

        adj: dict[int, set[int]] = {v: set() for v in vertices}
        for a, b in edges:
            adj[a].add(b)
            adj[b].add(a)

        if vertices and not _is_tree(vertices, edges, adj):
            violations.append("tree_edges do not form a tree spanning their vertices")
            raise InvalidHalinError(violations)

        leaves = frozenset(v for v in vertices if len(adj[v]) == 1)
        interior = vertices - leaves
        for v in sorted(interior):
            if len(adj[v]) == 2:
                violations.append(f"interior vertex {v} has tree degree 2 (not a HIT)")

        if frozenset(cycle) != leaves:
            violations.append(
                f"leaf_cycle must contain exactly the tree leaves; "
                f"expected {sorted(leaves)}, got {sorted(cycle)}"
            )
            raise InvalidHalinError(violations)

        # Planarity of the pair: each side of every tree edge owns one arc.
        for te in sorted(edges):
            side = _component_leaves(adj, leaves, te[0], banned=te[1])
            if not _is_contiguous_arc(cycle, side):
                violations.append(
                    f"leaves {sorted(side)} of the subtree cut off by tree edge {te} "
                    f"do not form a contiguous arc of the leaf cycle"
                )
        cycle_edges = _cycle_edges(cycle)
        overlap = edges & cycle_edges
        if overlap:
            violations.append(f"tree edges duplicate cycle edges: {sorted(overlap)}")

        if violations:
            raise InvalidHalinError(violations)

        self.tree_edges = edges
        self.leaf_cycle = cycle
        self.vertices = vertices
        self.leaves = leaves
        self.interior = interior
        self._tree_adj = {v: frozenset(nb) for v, nb in adj.items()}

    # ------------------------------------------------------------------
    # Derived structure
    # ------------------------------------------------------------------

    @property
    def interior_count(self) -> int:
        return len(self.interior)

    @property
    def cycle_edges(self) -> frozenset[Edge]:
        return _cycle_edges(self.leaf_cycle)

    def tree_neighbors(self, v: int) -> frozenset[int]:
        return self._tree_adj[v]

    def graph(self) -> Graph:
        """The full Halin graph: tree plus leaf cycle."""
        return Graph(self.vertices, self.tree_edges | self.cycle_edges)

    def degree(self, v: int) -> int:
        return len(self._tree_adj[v]) + (2 if v in self.leaves else 0)

    def max_degree(self) -> int:
        return max(self.degree(v) for v in self.vertices)

    def is_cubic(self) -> bool:
        return self.max_degree() == 3

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HalinGraph):
            return NotImplemented
        return self.tree_edges == other.tree_edges and _dihedral_normal(
            self.leaf_cycle
        ) == _dihedral_normal(other.leaf_cycle)

    def __hash__(self) -> int:
        return hash((self.tree_edges, _dihedral_normal(self.leaf_cycle)))

    def __repr__(self) -> str:
        return f"HalinGraph(tree={sorted(self.tree_edges)}, cycle={self.leaf_cycle.sequence})"


def make_halin(tree_edges: Iterable[tuple[int, int]], leaf_cycle: Iterable[int]) -> HalinGraph:
    """Validating constructor; raises InvalidHalinError listing every violation."""
    return HalinGraph(tree_edges, leaf_cycle)


@dataclass
class ExpansionRecord:
    """Everything needed to undo one fan contraction.

    The three page indices are unknown at contraction time; the embedder
    fills them in once the contracted graph has been embedded (they record
    where the edges contracted-to-u / -to-x / -to-y ended up).
    """

    contracted_vertex: int
    fan_center: int
    fan_leaves: tuple[int, ...]  # in leaf_cycle order, x side first
    third_neighbor: int
    cycle_predecessor: int
    cycle_successor: int
    pages_of: tuple[int, int, int] | None = None

    def __post_init__(self) -> None:
        if self.cycle_predecessor == self.cycle_successor:
            raise ValueError("fan must leave at least two other leaves on the cycle")
        if len(self.fan_leaves) < 2:
            raise ValueError("a fan has at least two leaves")


# ----------------------------------------------------------------------
# Construction helpers
# ----------------------------------------------------------------------


def wheel(m: int) -> HalinGraph:
    """The wheel on m vertices: hub 0, rim 1..m-1."""
    if m < 4:
        raise ValueError(f"wheel needs at least 4 vertices, got {m}")
    return HalinGraph([(0, i) for i in range(1, m)], range(1, m))


def pick_fan_center(h: HalinGraph) -> int:
    """The contraction site: neighbor of an endpoint of a longest tree path.

    Such a vertex has exactly one interior tree neighbor; all its other
    neighbors are leaves, consecutive on the cycle.  Ties between longest
    paths are broken by the smallest (endpoint, neighbor) label pair so the
    recursion is reproducible.  Raises on stars (wheel base case).
    """
    if h.interior_count < 2:
        raise ValueError("underlying tree is a star; embed it as a wheel instead")
    diameter = -1
    best_endpoint = -1
    for leaf in sorted(h.leaves):
        ecc = max(_tree_distances(h, leaf).values())
        if ecc > diameter:
            diameter = ecc
            best_endpoint = leaf
    (w,) = h.tree_neighbors(best_endpoint)
    interior_nbs = [nb for nb in h.tree_neighbors(w) if nb in h.interior]
    if len(interior_nbs) != 1:
        raise AssertionError(
            f"fan center {w} should have exactly one interior neighbor, has {interior_nbs}"
        )
    return w


def fan_at(h: HalinGraph, w: int) -> tuple[int, tuple[int, ...], int, int]:
    """(third_neighbor, fan leaves in cycle order, predecessor x, successor y).

    Requires w to be shaped like a fan center: one interior tree neighbor,
    the rest leaves.  The leaves occupy a contiguous cycle arc by the
    planarity invariant; x and y are the arc's outside neighbors.
    """
    if w not in h.interior:
        raise ValueError(f"{w} is not an interior vertex")
    nbs = h.tree_neighbors(w)
    interior_nbs = sorted(nb for nb in nbs if nb in h.interior)
    if len(interior_nbs) != 1:
        raise ValueError(
            f"vertex {w} has {len(interior_nbs)} interior neighbors; "
            f"a fan center has exactly one"
        )
    u = interior_nbs[0]
    fan = frozenset(nbs) - {u}
    cycle = h.leaf_cycle
    n = len(cycle)
    if len(fan) >= n:
        raise ValueError("fan would swallow the whole cycle")
    start = next(
        i for i, v in enumerate(cycle.sequence) if v in fan and cycle[i - 1] not in fan
    )
    run = [cycle[start + j] for j in range(len(fan))]
    if set(run) != fan:
        raise ValueError(f"fan leaves of {w} are not consecutive on the cycle")
    x = cycle[start - 1]
    y = cycle[start + len(fan)]
    return u, tuple(run), x, y


def contract_fan(h: HalinGraph, w: int) -> tuple[HalinGraph, ExpansionRecord]:
    """Contract w and its fan leaves to a single new leaf hanging off u.

    The new leaf takes the smallest unused label and sits on the cycle
    between x and y, exactly where the fan was.  The result is a Halin
    graph with one interior vertex fewer.
    """
    u, fan, x, y = fan_at(h, w)
    w_new = _smallest_unused_label(h.vertices)
    dropped = {edge(w, nb) for nb in h.tree_neighbors(w)}
    new_tree = (h.tree_edges - dropped) | {edge(w_new, u)}
    seq = [v for v in h.leaf_cycle.sequence if v not in fan]
    insert_at = next(i for i, v in enumerate(seq) if v == x)
    seq.insert(insert_at + 1, w_new)
    contracted = HalinGraph(new_tree, seq)
    record = ExpansionRecord(
        contracted_vertex=w_new,
        fan_center=w,
        fan_leaves=fan,
        third_neighbor=u,
        cycle_predecessor=x,
        cycle_successor=y,
    )
    return contracted, record


def expand_fan(h: HalinGraph, record: ExpansionRecord) -> HalinGraph:
    """Inverse of :func:`contract_fan` at the graph level (labels restored)."""
    w_new = record.contracted_vertex
    if w_new not in h.leaves:
        raise ValueError(f"contracted vertex {w_new} is not a leaf of the given graph")
    w = record.fan_center
    new_tree = (h.tree_edges - {edge(w_new, record.third_neighbor)}) | {
        edge(w, record.third_neighbor)
    } | {edge(w, v) for v in record.fan_leaves}
    seq: list[int] = []
    for v in h.leaf_cycle.sequence:
        if v == w_new:
            seq.extend(record.fan_leaves)
        else:
            seq.append(v)
    return HalinGraph(new_tree, seq)


# ----------------------------------------------------------------------
# Generation
# ----------------------------------------------------------------------


def random_halin(interior_count: int, max_child: int, seed: int) -> HalinGraph:
    """A reproducible pseudo-random Halin graph.

    Grows a random interior tree, then pads every interior vertex with
    enough leaves to reach tree degree 3 (plus random slack up to
    ``max_child``).  Leaves are ordered by a planar traversal, so the
    contiguity invariant holds by construction; leaf labels are shuffled so
    they carry no positional information.
    """
    if interior_count < 1:
        raise ValueError("interior_count must be at least 1")
    if max_child < 3:
        raise ValueError("max_child must be at least 3")
    rng = random.Random(seed)

    parents: dict[int, int] = {}
    children: dict[int, list[int]] = {v: [] for v in range(interior_count)}
    for v in range(1, interior_count):
        p = rng.randrange(v)
        parents[v] = p
        children[p].append(v)

    leaf_counts: dict[int, int] = {}
    for v in range(interior_count):
        interior_degree = len(children[v]) + (1 if v in parents else 0)
        lo = max(3, interior_degree)
        hi = max(max_child, lo)
        leaf_counts[v] = rng.randint(lo, hi) - interior_degree

    # Planar traversal: children (interior and leaf slots alike) in a
    # shuffled order per vertex; leaves appear on the cycle in visit order.
    slot_order: dict[int, list[int | None]] = {}
    for v in range(interior_count):
        slots: list[int | None] = list(children[v]) + [None] * leaf_counts[v]
        rng.shuffle(slots)
        slot_order[v] = slots

    total_leaves = sum(leaf_counts.values())
    leaf_labels = list(range(interior_count, interior_count + total_leaves))
    rng.shuffle(leaf_labels)

    tree_edges: list[tuple[int, int]] = [(v, parents[v]) for v in parents]
    cycle: list[int] = []
    next_leaf = 0

    def visit(v: int) -> None:
        nonlocal next_leaf
        for slot in slot_order[v]:
            if slot is None:
                label = leaf_labels[next_leaf]
                next_leaf += 1
                tree_edges.append((v, label))
                cycle.append(label)
            else:
                visit(slot)

    visit(0)
    return HalinGraph(tree_edges, cycle)


# ----------------------------------------------------------------------
# Exhaustive enumeration
# ----------------------------------------------------------------------


def enumerate_halin(
    max_vertices: int, guard: int = ENUMERATION_VERTEX_GUARD
) -> Iterator[HalinGraph]:
    """All Halin graphs with at most ``max_vertices`` vertices, one per
    equivalence class of the plane structure (leaf cycle quotiented by
    rotation and reflection).

    Works by enumerating rooted ordered trees, filtering out degree-2
    vertices, reading the leaf cycle off the plane traversal, and
    deduplicating by a canonical form.  Distinct plane embeddings of the
    same abstract graph are distinct outputs by design.
    """
    if max_vertices > guard:
        raise GuardExceededError(
            f"enumeration guard: {max_vertices} vertices exceeds limit {guard}"
        )
    seen: set[tuple] = set()
    for n in range(4, max_vertices + 1):
        for shape in _ordered_trees(n):
            if not _hit_shape(shape):
                continue
            h = _shape_to_halin(shape)
            key = canonical_form(h)
            if key not in seen:
                seen.add(key)
                yield h


def canonical_form(h: HalinGraph) -> tuple:
    """Canonical encoding of the plane structure of a Halin graph.

    Relabels the graph once per rotation and direction of the leaf cycle
    (leaves first in cycle order, then interior vertices in a traversal
    order determined by the leaf labels) and keeps the lexicographically
    smallest edge list.  Two Halin graphs get the same form iff some
    rotation/reflection of one's leaf cycle maps it onto the other.
    """
    leaves = h.leaf_cycle.sequence
    n_leaves = len(leaves)
    best: tuple | None = None
    for direction in (1, -1):
        for shift in range(n_leaves):
            ordered = [leaves[(shift + direction * i) % n_leaves] for i in range(n_leaves)]
            encoded = _encode_with_leaf_order(h, ordered)
            if best is None or encoded < best:
                best = encoded
    assert best is not None
    return best


def _encode_with_leaf_order(h: HalinGraph, ordered_leaves: list[int]) -> tuple:
    label = {v: i for i, v in enumerate(ordered_leaves)}
    queue = list(ordered_leaves)
    i = 0
    while i < len(queue):
        v = queue[i]
        i += 1
        pending = [nb for nb in h.tree_neighbors(v) if nb not in label]
        pending.sort(key=lambda nb: _leaf_fingerprint(h, v, nb, label))
        for nb in pending:
            label[nb] = len(label)
            queue.append(nb)
    edges = tuple(sorted(edge(label[a], label[b]) for a, b in h.tree_edges))
    return (len(h.vertices), len(ordered_leaves), edges)


def _leaf_fingerprint(h: HalinGraph, v: int, nb: int, label: dict[int, int]) -> tuple:
    """Sorted canonical labels of the leaves behind nb, looking away from v."""
    stack = [nb]
    seen = {v, nb}
    found = []
    while stack:
        cur = stack.pop()
        if cur in h.leaves:
            found.append(label[cur])
        for nxt in h.tree_neighbors(cur):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return tuple(sorted(found))


# ----------------------------------------------------------------------
# Internals
# ----------------------------------------------------------------------


def _is_tree(vertices: frozenset[int], edges: frozenset[Edge], adj: dict[int, set[int]]) -> bool:
    if len(edges) != len(vertices) - 1:
        return False
    if not vertices:
        return True
    start = next(iter(vertices))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for nb in adj[v]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(vertices)


def _component_leaves(
    adj: dict[int, set[int]], leaves: frozenset[int], root: int, banned: int
) -> set[int]:
    """Leaves in the component of root when the edge to ``banned`` is cut."""
    seen = {root, banned}
    stack = [root]
    out = set()
    while stack:
        v = stack.pop()
        if v in leaves:
            out.add(v)
        for nb in adj[v]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return out


def _is_contiguous_arc(cycle: CircularOrder, subset: set[int]) -> bool:
    n = len(cycle)
    if not subset or len(subset) >= n:
        return True
    boundaries = 0
    for i, v in enumerate(cycle.sequence):
        if v in subset and cycle[(i + 1) % n] not in subset:
            boundaries += 1
    return boundaries == 1


def _cycle_edges(cycle: CircularOrder) -> frozenset[Edge]:
    n = len(cycle)
    if n < 3:
        return frozenset()
    return frozenset(edge(cycle[i], cycle[(i + 1) % n]) for i in range(n))


def _dihedral_normal(cycle: CircularOrder) -> tuple[int, ...]:
    seq = cycle.sequence
    n = len(seq)
    if n == 0:
        return ()
    candidates = []
    for base in (seq, tuple(reversed(seq))):
        for s in range(n):
            candidates.append(base[s:] + base[:s])
    return min(candidates)


def _tree_distances(h: HalinGraph, start: int) -> dict[int, int]:
    dist = {start: 0}
    queue = [start]
    while queue:
        nxt: list[int] = []
        for v in queue:
            for nb in h.tree_neighbors(v):
                if nb not in dist:
                    dist[nb] = dist[v] + 1
                    nxt.append(nb)
        queue = nxt
    return dist


def _smallest_unused_label(used: frozenset[int]) -> int:
    v = 0
    while v in used:
        v += 1
    return v


# Rooted ordered trees as nested tuples: a tree is the tuple of its child
# trees, a leaf is ().


def _ordered_trees(n: int, _cache: dict[int, list[tuple]] = {}) -> list[tuple]:
    if n in _cache:
        return _cache[n]
    if n == 1:
        result = [()]
    else:
        result = []
        for first_size in range(1, n):
            for first in _ordered_trees(first_size):
                for rest in _ordered_trees(n - first_size):
                    result.append((first,) + rest)
    # The recursion treats "rest" as a tree; reinterpreting its children as
    # siblings of "first" enumerates exactly the ordered forests we need.
    _cache[n] = result
    return result


def _hit_shape(shape: tuple) -> bool:
    """Rooted at an interior vertex (>= 3 children) with no degree-2 vertex.

    Rooting at a leaf would only repeat plane structures already produced by
    an interior rooting, so those shapes are skipped rather than deduplicated.
    """
    if len(shape) < 3:
        return False

    def ok(sub: tuple) -> bool:
        if len(sub) == 1:
            return False
        return all(ok(child) for child in sub)

    return all(ok(child) for child in shape)


def _shape_to_halin(shape: tuple) -> HalinGraph:
    tree_edges: list[tuple[int, int]] = []
    cycle: list[int] = []
    counter = [0]

    def build(sub: tuple, parent: int | None) -> None:
        me = counter[0]
        counter[0] += 1
        if parent is not None:
            tree_edges.append((parent, me))
        if not sub:
            cycle.append(me)
            return
        for child in sub:
            build(child, me)

    build(shape, None)
    return HalinGraph(tree_edges, cycle)
