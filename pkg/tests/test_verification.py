"""Tests for the validator, conflict graph, fixed-spine minimum, and the
exact oracle, including backend equivalence."""

from __future__ import annotations

from itertools import permutations

import pytest

from halinbook import (
    BookEmbedding,
    CircularOrder,
    GuardExceededError,
    build_conflict_graph,
    complete_graph,
    cycle_graph,
    edge,
    embed_halin,
    embed_wheel,
    enumerate_halin,
    exact_mbt,
    is_dispersable,
    min_pages_for_spine,
    random_halin,
    validate,
    wheel,
)
from halinbook import _kernels
from halinbook._kernels import _pykernel
from halinbook.verification import ORACLE_LIMIT_ENV

from conftest import naive_min_pages

COMPILED = _kernels.available().get("compiled")

needs_compiled = pytest.mark.skipif(COMPILED is None, reason="compiled kernel not built")


# ----------------------------------------------------------------------
# validate
# ----------------------------------------------------------------------


def test_validate_wheel_7_clean():
    report = validate(wheel(7).graph(), embed_wheel(7))
    assert report.is_valid
    assert report.lines() == []


def test_validate_k4_with_broken_wheel_table():
    # The m >= 5 page table instantiated at m = 4: exactly one crossing,
    # on the last page.
    spine = CircularOrder((1, 0, 2, 3))
    pages = (
        frozenset({edge(0, 1), edge(2, 3)}),
        frozenset({edge(0, 2), edge(3, 1)}),
        frozenset({edge(0, 3), edge(1, 2)}),
    )
    report = validate(wheel(4).graph(), BookEmbedding(spine, pages))
    assert report.crossings == [(2, edge(0, 3), edge(1, 2))]
    assert report.matching_violations == []
    assert report.missing_or_duplicate_edges == []


def test_validate_two_spokes_one_page():
    emb = embed_wheel(5)
    pages = [set(p) for p in emb.pages]
    pages[0].discard(edge(2, 3))
    pages[0].add(edge(0, 2))
    pages[1].discard(edge(0, 2))
    pages[1].add(edge(2, 3))
    report = validate(wheel(5).graph(), BookEmbedding(emb.spine, tuple(map(frozenset, pages))))
    assert (0, 0, 2) in report.matching_violations  # hub 0 twice on page 0


def test_validate_reports_missing_and_duplicate():
    emb = embed_wheel(5)
    pages = [set(p) for p in emb.pages]
    pages[0].discard(edge(2, 3))  # missing
    pages[1].add(edge(0, 1))  # duplicated (also on page 0)
    pages[2].add(edge(1, 3))  # foreign edge, not in W_5
    report = validate(
        wheel(5).graph(), BookEmbedding(emb.spine, tuple(map(frozenset, pages)))
    )
    assert edge(2, 3) in report.missing_or_duplicate_edges
    assert edge(0, 1) in report.missing_or_duplicate_edges
    assert edge(1, 3) in report.missing_or_duplicate_edges


def test_validate_spine_mismatch_raises():
    emb = embed_wheel(5)
    with pytest.raises(ValueError):
        validate(wheel(6).graph(), emb)


# ----------------------------------------------------------------------
# conflict graph
# ----------------------------------------------------------------------


def test_conflict_graph_structure(prism):
    g = prism.graph()
    spine = CircularOrder(sorted(g.vertices))
    cg = build_conflict_graph(g, spine)
    assert cg.nodes == tuple(sorted(g.edges))
    for i in range(len(cg.nodes)):
        assert not cg.conflicts(i, i)
        for j in range(len(cg.nodes)):
            assert cg.conflicts(i, j) == cg.conflicts(j, i)
    # edges sharing the hub of vertex 0 must conflict
    i = cg.nodes.index(edge(0, 1))
    j = cg.nodes.index(edge(0, 2))
    assert cg.conflicts(i, j)


# ----------------------------------------------------------------------
# min_pages_for_spine
# ----------------------------------------------------------------------


def test_min_pages_even_cycle_natural_spine():
    g = cycle_graph(4)
    assert min_pages_for_spine(g, CircularOrder((0, 1, 2, 3))) == 2


def test_min_pages_k4_every_spine_is_4():
    g = complete_graph(4)
    for perm in permutations(range(4)):
        assert min_pages_for_spine(g, CircularOrder(perm)) == 4


def test_min_pages_star_any_spine():
    from halinbook import Graph

    star = Graph(range(5), [(0, i) for i in range(1, 5)])  # S_5: hub plus 4 spokes
    assert min_pages_for_spine(star, CircularOrder((0, 1, 2, 3, 4))) == 4
    assert min_pages_for_spine(star, CircularOrder((3, 1, 0, 4, 2))) == 4


def test_min_pages_matches_naive_oracle(prism):
    cases = [
        (complete_graph(4), list(permutations(range(4)))),
        (cycle_graph(5), [(0, 1, 2, 3, 4), (2, 0, 3, 1, 4)]),
        (prism.graph(), [(0, 1, 2, 3, 4, 5), (2, 4, 0, 5, 3, 1)]),
        (wheel(5).graph(), [(0, 1, 2, 3, 4), (2, 1, 0, 3, 4)]),
    ]
    for g, spines in cases:
        for seq in spines:
            spine = CircularOrder(seq)
            assert min_pages_for_spine(g, spine) == naive_min_pages(g, spine)


def test_min_pages_guard():
    g = complete_graph(8)  # 28 edges
    with pytest.raises(GuardExceededError):
        min_pages_for_spine(g, CircularOrder(range(8)))
    assert min_pages_for_spine(g, CircularOrder(range(8)), max_edges=28) == 8


def test_min_pages_rotation_reflection_invariance(prism):
    for g in (prism.graph(), wheel(5).graph(), cycle_graph(5)):
        base = CircularOrder(sorted(g.vertices))
        value = min_pages_for_spine(g, base)
        for shift in range(len(base)):
            assert min_pages_for_spine(g, base.rotate(shift)) == value
        assert min_pages_for_spine(g, base.reflect()) == value


# ----------------------------------------------------------------------
# exact_mbt
# ----------------------------------------------------------------------


def test_exact_mbt_known_small_values(prism):
    assert exact_mbt(complete_graph(4))[0] == 4
    assert exact_mbt(cycle_graph(5))[0] == 3
    assert exact_mbt(prism.graph())[0] == 4


def test_exact_mbt_witness_is_sound(prism, cubic_caterpillar):
    graphs = [
        complete_graph(4),
        complete_graph(5),
        cycle_graph(6),
        prism.graph(),
        cubic_caterpillar.graph(),
        wheel(7).graph(),
    ]
    for g in graphs:
        value, witness = exact_mbt(g)
        assert witness.page_count == value
        assert validate(g, witness).is_valid


def test_exact_mbt_guard_and_env_override(monkeypatch):
    from halinbook import Graph

    edgeless_11 = Graph(range(11), [])
    with pytest.raises(GuardExceededError):
        exact_mbt(edgeless_11)
    monkeypatch.setenv(ORACLE_LIMIT_ENV, "11")
    assert exact_mbt(edgeless_11)[0] == 0
    monkeypatch.setenv(ORACLE_LIMIT_ENV, "not-a-number")
    with pytest.raises(ValueError):
        exact_mbt(edgeless_11)
    monkeypatch.delenv(ORACLE_LIMIT_ENV)
    assert exact_mbt(edgeless_11, limit=11)[0] == 0


def test_exact_mbt_monotone_under_edge_addition():
    from halinbook import Graph

    base_edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
    value = exact_mbt(Graph(range(5), base_edges))[0]
    for extra in [(0, 2), (1, 3), (1, 4)]:
        grown = exact_mbt(Graph(range(5), base_edges + [extra]))[0]
        assert grown >= value
    two_chords = exact_mbt(Graph(range(5), base_edges + [(0, 2), (1, 3)]))[0]
    assert two_chords >= value


def test_is_dispersable():
    assert is_dispersable(cycle_graph(6)) is True
    assert is_dispersable(complete_graph(4)) is False
    assert is_dispersable(wheel(6).graph()) is True


def test_regular_non_bipartite_exceeds_degree_bound(prism, cubic_caterpillar):
    # Regular + non-bipartite forces mbt strictly above the degree.
    from halinbook import is_bipartite

    regular = [
        cycle_graph(5),
        cycle_graph(7),
        cycle_graph(9),
        complete_graph(4),
        complete_graph(5),
        prism.graph(),
        cubic_caterpillar.graph(),
    ]
    for g in regular:
        degrees = {g.degree(v) for v in g.vertices}
        assert len(degrees) == 1
        if not is_bipartite(g):
            assert exact_mbt(g)[0] > g.max_degree()


# ----------------------------------------------------------------------
# backend equivalence
# ----------------------------------------------------------------------


@needs_compiled
def test_backends_agree_on_exact_mbt(prism, cubic_caterpillar):
    graphs = [
        complete_graph(5),
        cycle_graph(7),
        prism.graph(),
        cubic_caterpillar.graph(),
        wheel(8).graph(),
    ]
    for g in graphs:
        v_py, w_py = exact_mbt(g, kernel=_pykernel)
        v_c, w_c = exact_mbt(g, kernel=COMPILED)
        assert v_py == v_c
        assert w_py.spine == w_c.spine
        assert w_py.pages == w_c.pages


@needs_compiled
def test_backends_agree_on_min_pages_random_spines():
    import random

    rng = random.Random(4)
    for seed in range(10):
        h = random_halin(2, 4, seed=seed)
        g = h.graph()
        verts = sorted(g.vertices)
        for _ in range(5):
            rng.shuffle(verts)
            spine = CircularOrder(tuple(verts))
            a = min_pages_for_spine(g, spine, max_edges=64, kernel=_pykernel)
            b = min_pages_for_spine(g, spine, max_edges=64, kernel=COMPILED)
            assert a == b


@needs_compiled
def test_kernels_agree_on_random_instances():
    # Raw kernel parity: random endpoint positions, random cutoffs.
    import random

    rng = random.Random(12)
    for trial in range(300):
        n = rng.randint(4, 12)
        m = rng.randint(1, min(20, n * (n - 1) // 2))
        chosen = rng.sample(
            [(i, j) for i in range(n) for j in range(i + 1, n)], m
        )
        perm = list(range(n))
        rng.shuffle(perm)
        pu = [perm[a] for a, _ in chosen]
        pv = [perm[b] for _, b in chosen]
        cutoff = rng.choice([None, 2, 3, 4, m + 1])
        lower = rng.choice([0, 1])  # always genuine lower bounds for m >= 1
        v_py, c_py = _pykernel.min_pages(pu, pv, lower, cutoff)
        v_c, c_c = COMPILED.min_pages(pu, pv, lower, cutoff)
        assert v_py == v_c, (trial, pu, pv, lower, cutoff)
        assert (c_py is None) == (c_c is None)
        if c_py is not None:
            masks = _pykernel.conflict_masks(pu, pv)
            for colors in (c_py, c_c):
                assert len(set(colors)) == v_py
                for i in range(m):
                    for j in range(i + 1, m):
                        if masks[i] >> j & 1:
                            assert colors[i] != colors[j]


def test_kernel_cutoff_contract():
    # cutoff equal to the true value reports "no improvement" (value, None);
    # cutoff one higher returns the exact value and a coloring.
    g = complete_graph(4)
    spine = CircularOrder(range(4))
    nodes = sorted(g.edges)
    pu = [spine.position(a) for a, _ in nodes]
    pv = [spine.position(b) for _, b in nodes]
    for kern in _kernels.available().values():
        value, colors = kern.min_pages(pu, pv, 0, None)
        assert value == 4 and colors is not None
        pruned, nothing = kern.min_pages(pu, pv, 0, 4)
        assert (pruned, nothing) == (4, None)
        exact, coloring = kern.min_pages(pu, pv, 0, 5)
        assert exact == 4 and len(coloring) == len(nodes)


def test_enumerated_corpus_oracle_witnesses():
    for h in enumerate_halin(7):
        g = h.graph()
        value, witness = exact_mbt(g)
        assert validate(g, witness).is_valid
        assert value == (4 if h.max_degree() == 3 else h.max_degree())
