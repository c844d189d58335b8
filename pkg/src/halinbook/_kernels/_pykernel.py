"""Pure-Python conflict-coloring kernel (fallback for the C extension).

The chromatic number of the conflict graph of a fixed circular spine equals
the minimum page count for that spine, so this one routine is the oracle's
entire hot path.  The compiled kernel in _ckernel.pyx mirrors this logic
bit for bit (same orderings, same tie-breaks) so that both backends return
identical values.
"""

from __future__ import annotations

NAME = "python"

MAX_NODES = 64


def conflict_masks(pos_u: list[int], pos_v: list[int]) -> list[int]:
    """Adjacency bitmasks of the conflict graph.

    Nodes are edges of the subject graph, given by spine positions of their
    endpoints.  Two edges conflict when they share an endpoint (matching
    rule) or their chords interleave on the circle (crossing rule).
    """
    m = len(pos_u)
    adj = [0] * m
    for i in range(m):
        a, b = pos_u[i], pos_v[i]
        if a > b:
            a, b = b, a
        for j in range(i + 1, m):
            c, d = pos_u[j], pos_v[j]
            if c > d:
                c, d = d, c
            if a == c or a == d or b == c or b == d:
                conflict = True
            else:
                conflict = (a < c < b) != (a < d < b)
            if conflict:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def min_pages(
    pos_u: list[int],
    pos_v: list[int],
    lower_bound: int = 0,
    cutoff: int | None = None,
) -> tuple[int, list[int] | None]:
    """Exact chromatic number of the conflict graph, with branch and bound.

    Returns (k, coloring) with k < cutoff when a proper coloring with fewer
    than ``cutoff`` colors exists, else (cutoff, None) meaning "no better
    than cutoff" (the search is pruned as soon as that is proven, so a
    cutoff equal to the best page count found so far makes the oracle's
    spine loop cheap).  With the default cutoff the result is always exact.
    """
    m = len(pos_u)
    if m > MAX_NODES:
        raise ValueError(f"kernel supports at most {MAX_NODES} edges, got {m}")
    if cutoff is None:
        cutoff = m + 1
    if m == 0:
        return 0, []
    adj = conflict_masks(pos_u, pos_v)
    degrees = [a.bit_count() for a in adj]

    # Greedy clique on high-degree nodes: a strong lower bound here, since
    # all edges at one spine vertex are mutually conflicting.
    order = sorted(range(m), key=lambda i: (-degrees[i], i))
    clique: list[int] = []
    clique_mask = 0
    for v in order:
        if clique_mask & adj[v] == clique_mask:
            clique.append(v)
            clique_mask |= 1 << v
    lb = max(lower_bound, len(clique), 1)
    if lb >= cutoff:
        return cutoff, None

    colors = [-1] * m
    neighbor_colors = [0] * m
    for idx, v in enumerate(clique):
        colors[v] = idx
        bit = 1 << idx
        nb = adj[v]
        while nb:
            low = nb & -nb
            j = low.bit_length() - 1
            nb ^= low
            if colors[j] == -1:
                neighbor_colors[j] |= bit

    best = cutoff
    best_colors: list[int] | None = None

    def dfs(uncolored: int, used: int) -> None:
        nonlocal best, best_colors
        if used >= best:
            return
        if uncolored == 0:
            best = used
            best_colors = colors[:]
            return
        # DSATUR selection: most saturated, then highest degree, then index.
        pick = -1
        pick_sat = -1
        pick_deg = -1
        for v in range(m):
            if colors[v] == -1:
                sat = neighbor_colors[v].bit_count()
                if sat > pick_sat or (sat == pick_sat and degrees[v] > pick_deg):
                    pick = v
                    pick_sat = sat
                    pick_deg = degrees[v]
        allowed = min(used + 1, best - 1)
        blocked = neighbor_colors[pick]
        for c in range(allowed):
            bit = 1 << c
            if blocked & bit:
                continue
            colors[pick] = c
            touched = []
            nb = adj[pick]
            while nb:
                low = nb & -nb
                j = low.bit_length() - 1
                nb ^= low
                if colors[j] == -1 and not neighbor_colors[j] & bit:
                    neighbor_colors[j] |= bit
                    touched.append(j)
            dfs(uncolored - 1, used + 1 if c == used else used)
            for j in touched:
                neighbor_colors[j] ^= bit
            colors[pick] = -1
            if best <= lb:
                return

    dfs(m - len(clique), len(clique))
    if best < cutoff:
        return best, best_colors
    return cutoff, None
