"""Constructive matching book embeddings of Halin graphs.

The construction is recursive: a star-tree Halin graph (a wheel) gets an
explicit page table; anything else contracts one fan (an interior vertex
whose tree neighbors are one interior vertex plus consecutive leaves) to a
single leaf, embeds the smaller graph, then splices the fan back into the
spine and routes the new edges through the pages recorded for the
contracted vertex.  Page counts follow the target formula: 4 pages when the
maximum degree is 3, otherwise exactly the maximum degree.

Every expansion step re-checks itself; a conflicting page table would first
be repaired edge by edge and, failing that, raise with the offending
instance attached.  In practice the tables are conflict-free and the repair
never fires.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exceptions import ConstructionError, RepairError
from .graphs import CircularOrder, Edge, edge, interleaves
from .halin import ExpansionRecord, HalinGraph, contract_fan, pick_fan_center, wheel


@dataclass(frozen=True)
class BookEmbedding:
    """A circular spine order plus a page assignment for every edge."""

    spine: CircularOrder
    pages: tuple[frozenset[Edge], ...]

    @property
    def page_count(self) -> int:
        return len(self.pages)

    @property
    def edges(self) -> frozenset[Edge]:
        out: set[Edge] = set()
        for page in self.pages:
            out |= page
        return frozenset(out)

    def page_of(self, e: Edge) -> int:
        for i, page in enumerate(self.pages):
            if e in page:
                return i
        raise KeyError(f"edge {e} is on no page")

    def rotate(self, shift: int) -> "BookEmbedding":
        """Read the printing cycle from a different starting point."""
        return BookEmbedding(self.spine.rotate(shift), self.pages)

    def reflect(self) -> "BookEmbedding":
        """Traverse the printing cycle in the opposite direction."""
        return BookEmbedding(self.spine.reflect(), self.pages)


def embed_wheel(m: int) -> BookEmbedding:
    """The explicit wheel embedding: m-1 pages for m >= 5, 4 pages for m = 4."""
    return _embed_star(wheel(m))


def _embed_star(h: HalinGraph) -> BookEmbedding:
    """Embedding for a Halin graph whose interior tree is a star.

    For m >= 5 rim vertices v_1..v_{m-1} (cycle order, smallest label
    first), the spine folds the first half of the rim back over the hub:
    v_c, ..., v_1, hub, v_{c+1}, ..., v_{m-1} with c = floor((m-1)/2), and
    page i pairs spoke i with the rim chord v_{i+1}v_{i+2} (wrapping at the
    end).  m = 4 is the one size where that table self-intersects, so it
    gets a fixed four-page assignment instead.
    """
    if h.interior_count != 1:
        raise ValueError("star embedding requires a single interior vertex")
    (hub,) = h.interior
    rim_cycle = h.leaf_cycle
    rim_cycle = rim_cycle.rotate(rim_cycle.position(min(rim_cycle.sequence)))
    v = (None,) + rim_cycle.sequence  # 1-indexed rim
    m = len(h.vertices)

    if m == 4:
        spine = CircularOrder((v[1], hub, v[2], v[3]))
        pages = (
            frozenset({edge(hub, v[1]), edge(v[2], v[3])}),
            frozenset({edge(hub, v[2]), edge(v[1], v[3])}),
            frozenset({edge(v[1], v[2])}),
            frozenset({edge(hub, v[3])}),
        )
        return BookEmbedding(spine, pages)

    c = (m - 1) // 2
    spine_seq = [v[i] for i in range(c, 0, -1)] + [hub] + [v[i] for i in range(c + 1, m)]
    pages = []
    for i in range(1, m - 2):
        pages.append(frozenset({edge(hub, v[i]), edge(v[i + 1], v[i + 2])}))
    pages.append(frozenset({edge(hub, v[m - 2]), edge(v[m - 1], v[1])}))
    pages.append(frozenset({edge(hub, v[m - 1]), edge(v[1], v[2])}))
    return BookEmbedding(CircularOrder(spine_seq), tuple(pages))


def normalize_for_expansion(
    emb: BookEmbedding, x: int, w_new: int, y: int
) -> tuple[BookEmbedding, int]:
    """Rotate the spine so x leads, and report the cyclic orientation.

    Orientation 1 means the spine reads x ... w_new ... y in cycle
    direction, orientation 2 the mirror image.  Rotation never changes
    validity or page count, so the caller may expand either way; the tag
    exists so tests and traces can tell the two cases apart.
    """
    for vertex in (x, w_new, y):
        if vertex not in emb.spine:
            raise ValueError(f"vertex {vertex} is not on the spine")
    rotated = emb.rotate(emb.spine.position(x))
    orientation = 1 if rotated.spine.position(w_new) < rotated.spine.position(y) else 2
    return rotated, orientation


def expand_embedding(
    emb: BookEmbedding, record: ExpansionRecord, target_pages: int
) -> BookEmbedding:
    """Undo one fan contraction inside an embedding of the contracted graph.

    The contracted leaf is replaced on the spine by the block
    v_c, ..., v_1, w, v_{c+1}, ..., v_k (c = ceil(k/2)); the three edges at
    the contracted leaf hand their pages to wu, v_1 x and v_k y; the fan
    spokes and rim chords ride along in pairs, one pair per page, with the
    pair pages chosen greedily among pages other than the three inherited
    ones.  For k = 2 the pairing degenerates: wv_2 and wv_1 join pages two
    and three and the single chord v_1 v_2 takes a page of its own.
    """
    k = len(record.fan_leaves)
    w = record.fan_center
    u = record.third_neighbor
    x = record.cycle_predecessor
    y = record.cycle_successor
    w_new = record.contracted_vertex
    vs = record.fan_leaves

    p1 = emb.page_of(edge(w_new, u))
    p2 = emb.page_of(edge(w_new, x))
    p3 = emb.page_of(edge(w_new, y))
    if len({p1, p2, p3}) != 3:
        raise ValueError("contracted-leaf edges share a page; embedding is not a matching")
    if target_pages < max(emb.page_count, k + 1):
        raise ValueError(
            f"target_pages={target_pages} below max(page_count={emb.page_count}, k+1={k + 1})"
        )
    record.pages_of = (p1, p2, p3)

    c = (k + 1) // 2  # ceil(k/2)
    block = [vs[j] for j in range(c - 1, -1, -1)] + [w] + list(vs[c:])
    at = emb.spine.position(w_new)
    seq = emb.spine.sequence
    spine = CircularOrder(seq[:at] + tuple(block) + seq[at + 1 :])

    pages: list[set[Edge]] = [set(p) for p in emb.pages]
    pages.extend(set() for _ in range(target_pages - len(pages)))
    pages[p1].remove(edge(w_new, u))
    pages[p2].remove(edge(w_new, x))
    pages[p3].remove(edge(w_new, y))

    if k == 2:
        placed = {
            edge(w, u): p1,
            edge(vs[0], x): p2,
            edge(w, vs[1]): p2,
            edge(vs[1], y): p3,
            edge(w, vs[0]): p3,
        }
        groups: list[tuple[Edge, ...]] = [(edge(vs[0], vs[1]),)]
    else:
        placed = {
            edge(w, u): p1,
            edge(vs[0], vs[1]): p1,
            edge(w, vs[k - 1]): p2,
            edge(vs[0], x): p2,
            edge(w, vs[k - 2]): p3,
            edge(vs[k - 1], y): p3,
        }
        groups = [
            (edge(w, vs[i - 4]), edge(vs[i - 3], vs[i - 2])) for i in range(4, k + 2)
        ]
    for e, p in placed.items():
        pages[p].add(e)

    hosts = _assign_host_pages(spine, pages, groups, banned={p1, p2, p3})
    if hosts is None:
        raise ConstructionError(
            "no conflict-free host pages for the fan pairs",
            instance=_instance_payload(emb, record, target_pages),
        )
    for group, host in zip(groups, hosts):
        pages[host].update(group)

    new_edges = set(placed) | {e for group in groups for e in group}

    # Block locality: edges inside the spliced block never cross edges that
    # avoid the block entirely.
    block_set = set(block)
    old_edges = [e for page in emb.pages for e in page if not (set(e) & {w_new})]
    for e in new_edges:
        if set(e) <= block_set:
            for f in old_edges:
                if not set(f) & block_set:
                    assert not interleaves(spine, e, f), (e, f)

    candidate = BookEmbedding(spine, tuple(frozenset(p) for p in pages))
    if _conflicts(candidate):
        try:
            candidate = repair_pages(candidate, new_edges)
        except RepairError as exc:
            raise ConstructionError(
                f"expansion produced an irreparable page table: {exc}",
                instance=_instance_payload(emb, record, target_pages),
            ) from exc
    return candidate


def repair_pages(emb: BookEmbedding, movable: set[Edge]) -> BookEmbedding:
    """Reassign the movable edges across the existing pages until clean.

    The page count never changes and edges outside ``movable`` never move;
    if the untouched part already conflicts, or no placement of the movable
    edges exists, this raises RepairError with the edges it could not seat.
    A clean embedding comes back unchanged.
    """
    if not _conflicts(emb):
        return emb
    movable_set = frozenset(movable)
    base = [set(p) - movable_set for p in emb.pages]
    stripped = BookEmbedding(emb.spine, tuple(frozenset(p) for p in base))
    if _conflicts(stripped):
        raise RepairError("conflicts persist outside the movable edge set")

    todo = sorted(movable_set & emb.edges)

    def place(i: int) -> bool:
        if i == len(todo):
            return True
        e = todo[i]
        for p, page in enumerate(base):
            if _fits(emb.spine, page, e):
                page.add(e)
                if place(i + 1):
                    return True
                page.remove(e)
        return False

    if not place(0):
        raise RepairError("movable edges do not fit in the page count", unplaced=todo)
    return BookEmbedding(emb.spine, tuple(frozenset(p) for p in base))


def embed_halin(h: HalinGraph, trace: list | None = None) -> BookEmbedding:
    """A matching book embedding of h with the optimal page count.

    Produces 4 pages when the maximum degree is 3 and max-degree pages
    otherwise.  ``trace``, if given, collects (graph, embedding) pairs for
    every level of the contraction recursion, innermost first.
    """
    delta = h.max_degree()
    target = 4 if delta == 3 else delta
    if h.interior_count == 1:
        emb = _embed_star(h)
    else:
        w = pick_fan_center(h)
        contracted, record = contract_fan(h, w)
        sub = embed_halin(contracted, trace=trace)
        sub, _orientation = normalize_for_expansion(
            sub, record.cycle_predecessor, record.contracted_vertex, record.cycle_successor
        )
        emb = expand_embedding(sub, record, target)
    if trace is not None:
        trace.append((h, emb))
    return emb


# ----------------------------------------------------------------------
# Page-conflict helpers (shared by expansion and repair)
# ----------------------------------------------------------------------


def _fits(spine: CircularOrder, page: set[Edge] | frozenset[Edge], e: Edge) -> bool:
    for f in page:
        if set(e) & set(f):
            return False
        if interleaves(spine, e, f):
            return False
    return True


def _conflicts(emb: BookEmbedding) -> bool:
    for page in emb.pages:
        edges = sorted(page)
        for i, e in enumerate(edges):
            for f in edges[i + 1 :]:
                if set(e) & set(f) or interleaves(emb.spine, e, f):
                    return True
    return False


def _assign_host_pages(
    spine: CircularOrder,
    pages: list[set[Edge]],
    groups: list[tuple[Edge, ...]],
    banned: set[int],
) -> list[int] | None:
    """First conflict-free page for each group, backtracking if stuck."""
    chosen: list[int] = []

    def attempt(i: int) -> bool:
        if i == len(groups):
            return True
        for p in range(len(pages)):
            if p in banned or p in chosen:
                continue
            scratch = set(pages[p])
            ok = True
            for e in groups[i]:
                if not _fits(spine, scratch, e):
                    ok = False
                    break
                scratch.add(e)
            if not ok:
                continue
            chosen.append(p)
            if attempt(i + 1):
                return True
            chosen.pop()
        return False

    return chosen if attempt(0) else None


def _instance_payload(
    emb: BookEmbedding, record: ExpansionRecord, target_pages: int
) -> dict:
    return {
        "spine": list(emb.spine.sequence),
        "pages": [sorted(map(list, page)) for page in emb.pages],
        "target_pages": target_pages,
        "record": {
            "contracted_vertex": record.contracted_vertex,
            "fan_center": record.fan_center,
            "fan_leaves": list(record.fan_leaves),
            "third_neighbor": record.third_neighbor,
            "cycle_predecessor": record.cycle_predecessor,
            "cycle_successor": record.cycle_successor,
        },
    }
