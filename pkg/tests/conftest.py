"""Shared fixtures and independent reference oracles for the test suite.

The reference implementations here deliberately use different algorithms
from the package (geometry instead of index arithmetic, exhaustive recursion
instead of branch and bound) so that agreement between the two is evidence,
not tautology.
"""

from __future__ import annotations

import math
from itertools import combinations

import pytest

from halinbook import CircularOrder, Edge, Graph, HalinGraph, make_halin

# ----------------------------------------------------------------------
# Named instances
# ----------------------------------------------------------------------

PRISM_TREE = ((0, 1), (0, 2), (0, 3), (1, 4), (1, 5))
PRISM_CYCLE = (2, 4, 5, 3)


@pytest.fixture
def prism() -> HalinGraph:
    return make_halin(PRISM_TREE, PRISM_CYCLE)


@pytest.fixture
def cubic_caterpillar() -> HalinGraph:
    """8-vertex cubic Halin graph: interior path 0-1-2 with leaf fan 2,1,2."""
    return make_halin(
        [(0, 1), (1, 2), (0, 3), (0, 4), (1, 5), (2, 6), (2, 7)], [3, 4, 5, 6, 7]
    )


@pytest.fixture
def double_hub_5_4() -> HalinGraph:
    """Two interior vertices of degree 5 and 4 (9 vertices)."""
    return make_halin(
        [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 6), (1, 7), (1, 8)],
        [2, 3, 4, 5, 6, 7, 8],
    )


# ----------------------------------------------------------------------
# Independent crossing predicate: straight chords on the unit circle
# ----------------------------------------------------------------------


def geometric_cross(order: CircularOrder, e1: Edge, e2: Edge) -> bool:
    n = len(order)

    def point(v: int) -> tuple[float, float]:
        angle = 2.0 * math.pi * order.position(v) / n
        return math.cos(angle), math.sin(angle)

    p1, p2 = point(e1[0]), point(e1[1])
    q1, q2 = point(e2[0]), point(e2[1])

    def side(a, b, c) -> float:
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    d1 = side(p1, p2, q1)
    d2 = side(p1, p2, q2)
    d3 = side(q1, q2, p1)
    d4 = side(q1, q2, p2)
    return d1 * d2 < 0 and d3 * d4 < 0


# ----------------------------------------------------------------------
# Independent page-count oracle: exhaustive assignment, no bounds
# ----------------------------------------------------------------------


def conflict_pairs(g: Graph, spine: CircularOrder) -> tuple[list[Edge], set[tuple[int, int]]]:
    nodes = sorted(g.edges)
    pairs = set()
    for i, j in combinations(range(len(nodes)), 2):
        e, f = nodes[i], nodes[j]
        if set(e) & set(f) or geometric_cross(spine, e, f):
            pairs.add((i, j))
    return nodes, pairs


def naive_min_pages(g: Graph, spine: CircularOrder) -> int:
    """Smallest k admitting a conflict-free k-page assignment, by plain
    exhaustive recursion in edge order."""
    nodes, pairs = conflict_pairs(g, spine)
    m = len(nodes)
    if m == 0:
        return 0

    def assignable(k: int) -> bool:
        colors = [-1] * m

        def place(i: int) -> bool:
            if i == m:
                return True
            for c in range(k):
                if all((j, i) not in pairs for j in range(i) if colors[j] == c):
                    colors[i] = c
                    if place(i + 1):
                        return True
                    colors[i] = -1
            return False

        return place(0)

    k = 1
    while not assignable(k):
        k += 1
    return k


def naive_chromatic_index(g: Graph) -> int:
    """Smallest k admitting a proper edge coloring, by plain recursion."""
    nodes = sorted(g.edges)
    m = len(nodes)
    if m == 0:
        return 0

    def colorable(k: int) -> bool:
        colors = [-1] * m

        def place(i: int) -> bool:
            if i == m:
                return True
            for c in range(k):
                if all(
                    not set(nodes[i]) & set(nodes[j])
                    for j in range(i)
                    if colors[j] == c
                ):
                    colors[i] = c
                    if place(i + 1):
                        return True
                    colors[i] = -1
            return False

        return place(0)

    k = 1
    while not colorable(k):
        k += 1
    return k
