# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled conflict-coloring kernel.

Same algorithm, orderings, and tie-breaks as _pykernel.min_pages; the two
backends must return identical page counts on identical inputs (the test
suite enforces this).  Node count is capped at 64 so adjacency fits one
machine word per node.
"""

from libc.stdint cimport uint64_t
from libc.string cimport memset

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

NAME = "compiled"

MAX_NODES = 64

DEF MAXN = 64


cdef struct Search:
    int m
    int lb
    int best
    uint64_t adj[MAXN]
    int degree[MAXN]
    signed char colors[MAXN]
    uint64_t neighbor_colors[MAXN]
    signed char best_colors[MAXN]


cdef void _dfs(Search* s, int uncolored, int used) noexcept nogil:
    cdef int v, pick, pick_sat, pick_deg, sat, c, allowed, j
    cdef uint64_t bit, nb, blocked
    cdef uint64_t touched
    if used >= s.best:
        return
    if uncolored == 0:
        s.best = used
        for v in range(s.m):
            s.best_colors[v] = s.colors[v]
        return
    pick = -1
    pick_sat = -1
    pick_deg = -1
    for v in range(s.m):
        if s.colors[v] == -1:
            sat = __builtin_popcountll(s.neighbor_colors[v])
            if sat > pick_sat or (sat == pick_sat and s.degree[v] > pick_deg):
                pick = v
                pick_sat = sat
                pick_deg = s.degree[v]
    allowed = used + 1
    if s.best - 1 < allowed:
        allowed = s.best - 1
    blocked = s.neighbor_colors[pick]
    for c in range(allowed):
        bit = (<uint64_t>1) << c
        if blocked & bit:
            continue
        s.colors[pick] = c
        touched = 0
        nb = s.adj[pick]
        while nb:
            j = __builtin_ctzll(nb)
            nb &= nb - 1
            if s.colors[j] == -1 and not (s.neighbor_colors[j] & bit):
                s.neighbor_colors[j] |= bit
                touched |= (<uint64_t>1) << j
        _dfs(s, uncolored - 1, used + 1 if c == used else used)
        while touched:
            j = __builtin_ctzll(touched)
            touched &= touched - 1
            s.neighbor_colors[j] ^= bit
        s.colors[pick] = -1
        if s.best <= s.lb:
            return


def min_pages(pos_u, pos_v, int lower_bound=0, cutoff=None):
    """See _pykernel.min_pages; identical contract."""
    cdef int m = len(pos_u)
    cdef int cut
    if m > MAX_NODES:
        raise ValueError(f"kernel supports at most {MAX_NODES} edges, got {m}")
    cut = m + 1 if cutoff is None else <int>cutoff
    if m == 0:
        return 0, []

    cdef Search s
    cdef int i, j, a, b, c, d, v, t
    cdef bint conflict
    cdef int pu[MAXN]
    cdef int pv[MAXN]
    for i in range(m):
        pu[i] = pos_u[i]
        pv[i] = pos_v[i]
    s.m = m
    memset(s.adj, 0, sizeof(s.adj))
    for i in range(m):
        a = pu[i]
        b = pv[i]
        if a > b:
            a, b = b, a
        for j in range(i + 1, m):
            c = pu[j]
            d = pv[j]
            if c > d:
                c, d = d, c
            if a == c or a == d or b == c or b == d:
                conflict = True
            else:
                conflict = (a < c < b) != (a < d < b)
            if conflict:
                s.adj[i] |= (<uint64_t>1) << j
                s.adj[j] |= (<uint64_t>1) << i
    for i in range(m):
        s.degree[i] = __builtin_popcountll(s.adj[i])

    # Stable sort of node indices by (-degree, index), then greedy clique.
    cdef int order[MAXN]
    for i in range(m):
        order[i] = i
    for i in range(1, m):
        v = order[i]
        j = i - 1
        while j >= 0 and s.degree[order[j]] < s.degree[v]:
            order[j + 1] = order[j]
            j -= 1
        order[j + 1] = v

    cdef uint64_t clique_mask = 0
    cdef int clique[MAXN]
    cdef int clique_size = 0
    for i in range(m):
        v = order[i]
        if (clique_mask & s.adj[v]) == clique_mask:
            clique[clique_size] = v
            clique_size += 1
            clique_mask |= (<uint64_t>1) << v

    cdef int lb = lower_bound
    if clique_size > lb:
        lb = clique_size
    if lb < 1:
        lb = 1
    if lb >= cut:
        return cut, None

    s.lb = lb
    s.best = cut
    cdef uint64_t bit, nb
    for i in range(m):
        s.colors[i] = -1
        s.neighbor_colors[i] = 0
    for i in range(clique_size):
        v = clique[i]
        s.colors[v] = i
        bit = (<uint64_t>1) << i
        nb = s.adj[v]
        while nb:
            j = __builtin_ctzll(nb)
            nb &= nb - 1
            if s.colors[j] == -1:
                s.neighbor_colors[j] |= bit

    with nogil:
        _dfs(&s, m - clique_size, clique_size)

    if s.best < cut:
        return s.best, [s.best_colors[i] for i in range(m)]
    return cut, None
