"""Naive reference implementations used to cross-check the library.

The exhaustive oracles work on edge codes: bit ``b`` of a code is the
``b``-th pair of ``itertools.combinations(range(n), 2)``, which matches
``heavyham.harness.labeled_graph``.  They are vectorized over numpy arrays of
codes so a whole ``n <= 7`` sweep takes seconds.
"""

from __future__ import annotations

from itertools import combinations, permutations

import networkx as nx
import numpy as np

from heavyham.graph import Graph


def pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: b for b, p in enumerate(combinations(range(n), 2))}


def all_codes(n: int) -> np.ndarray:
    return np.arange(1 << (n * (n - 1) // 2), dtype=np.uint64)


def sample_codes(n: int, count: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    m = n * (n - 1) // 2
    return rng.integers(0, 1 << m, size=count, dtype=np.uint64)


def graph_from_code(n: int, code: int) -> Graph:
    rows = [0] * n
    for b, (i, j) in enumerate(combinations(range(n), 2)):
        if code >> b & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, rows)


def _edge_bit(codes: np.ndarray, idx: dict, a: int, b: int) -> np.ndarray:
    return (codes >> np.uint64(idx[(min(a, b), max(a, b))])) & np.uint64(1)


# -- Hamiltonicity ------------------------------------------------------------


def hamilton_cycle_masks(n: int) -> list[int]:
    """Edge masks of every Hamilton cycle of K_n (vertex 0 first, one direction)."""
    idx = pair_index(n)
    out = []
    for perm in permutations(range(1, n)):
        if perm[0] > perm[-1]:
            continue
        cyc = (0, *perm)
        m = 0
        for i in range(n):
            a, b = cyc[i], cyc[(i + 1) % n]
            m |= 1 << idx[(min(a, b), max(a, b))]
        out.append(m)
    return out


def hamiltonian_codes(n: int, codes: np.ndarray) -> np.ndarray:
    """Boolean array: does each coded graph contain a Hamilton cycle?"""
    res = np.zeros(codes.shape, dtype=bool)
    if n < 3:
        return res
    for m in hamilton_cycle_masks(n):
        mm = np.uint64(m)
        res |= (codes & mm) == mm
    return res


def is_hamiltonian_bruteforce(g: Graph) -> bool:
    if g.n < 3:
        return False
    for perm in permutations(range(1, g.n)):
        cyc = (0, *perm)
        if all(g.has_edge(cyc[i], cyc[(i + 1) % g.n]) for i in range(g.n)):
            return True
    return False


# -- connectivity ---------------------------------------------------------------


def _rows(n: int, codes: np.ndarray) -> list[np.ndarray]:
    idx = pair_index(n)
    rows = [np.zeros(codes.shape, dtype=np.uint64) for _ in range(n)]
    for (a, b), bit in idx.items():
        e = (codes >> np.uint64(bit)) & np.uint64(1)
        rows[a] |= e << np.uint64(b)
        rows[b] |= e << np.uint64(a)
    return rows


def _connected_without(n: int, rows: list[np.ndarray], removed: int | None) -> np.ndarray:
    keep = [v for v in range(n) if v != removed]
    allowed = np.uint64(sum(1 << v for v in keep))
    start = keep[0]
    reach = np.full(rows[0].shape, np.uint64(1 << start))
    for _ in range(len(keep)):
        new = reach.copy()
        for v in keep:
            has = ((reach >> np.uint64(v)) & np.uint64(1)).astype(bool)
            new[has] |= rows[v][has]
        reach = new & allowed
    return reach == allowed


def two_connected_codes(n: int, codes: np.ndarray) -> np.ndarray:
    """Delete each vertex in turn and check connectivity of the rest."""
    if n < 3:
        return np.zeros(codes.shape, dtype=bool)
    rows = _rows(n, codes)
    ok = _connected_without(n, rows, None)
    for v in range(n):
        ok &= _connected_without(n, rows, v)
    return ok


# -- induced copies ---------------------------------------------------------------


def iso_codes(h: Graph) -> np.ndarray:
    """Lookup table over k-vertex edge codes: True for labelings of ``h``."""
    k = h.n
    idx = pair_index(k)
    table = np.zeros(1 << (k * (k - 1) // 2), dtype=bool)
    for perm in permutations(range(k)):
        c = 0
        for a, b in h.edges():
            x, y = perm[a], perm[b]
            c |= 1 << idx[(min(x, y), max(x, y))]
        table[c] = True
    return table


def induced_subset_matrix(n: int, codes: np.ndarray, h: Graph) -> tuple[np.ndarray, list[tuple]]:
    """Boolean matrix, one row per graph and one column per subset of
    ``combinations(range(n), k)``, marking the subsets that induce ``h``."""
    k = h.n
    subsets = list(combinations(range(n), k)) if k <= n else []
    table = iso_codes(h)
    idx = pair_index(n)
    local = pair_index(k)
    out = np.zeros((len(codes), len(subsets)), dtype=bool)
    for s_i, sub in enumerate(subsets):
        lc = np.zeros(codes.shape, dtype=np.int64)
        for (a, b), lb in local.items():
            e = (codes >> np.uint64(idx[(sub[a], sub[b])])) & np.uint64(1)
            lc |= e.astype(np.int64) << lb
        out[:, s_i] = table[lc]
    return out, subsets


def induced_subsets_bruteforce(g: Graph, h: Graph) -> list[tuple[int, ...]]:
    table = iso_codes(h)
    local = pair_index(h.n)
    out = []
    for sub in combinations(range(g.n), h.n):
        c = 0
        for (a, b), lb in local.items():
            if g.has_edge(sub[a], sub[b]):
                c |= 1 << lb
        if table[c]:
            out.append(sub)
    return out


# -- composed graphs ---------------------------------------------------------------


def composed_codes(n: int, codes: np.ndarray, u: int, v: int, w: int) -> np.ndarray:
    """Is each coded graph (u, v, w)-composed?

    For every placement of the vertices on offsets ``-k..l`` (``u`` at ``-k``,
    ``v`` at 0, ``w`` at ``l``) run a reachability DP over the windows
    ``[-a, b]``: a window grows by a 1-extension on either side (new vertex
    adjacent to the extreme and to some other window vertex) or by a
    2-extension (two new adjacent vertices, each adjacent to its extreme).
    """
    idx = pair_index(n)
    res = np.zeros(codes.shape, dtype=bool)
    if n < 3:
        return res
    others = [x for x in range(n) if x not in (u, v, w)]

    def E(a, b):
        return _edge_bit(codes, idx, a, b).astype(bool)

    for k in range(1, n - 1):
        ell = n - 1 - k
        for perm in permutations(others):
            at = {-k: u, 0: v, ell: w}
            free = iter(perm)
            for o in range(-k, ell + 1):
                if o not in at:
                    at[o] = next(free)
            reach = {(1, 1): E(at[-1], at[0]) & E(at[0], at[1]) & E(at[-1], at[1])}
            for total in range(3, k + ell + 1):
                for a in range(1, k + 1):
                    b = total - a
                    if not 1 <= b <= ell:
                        continue
                    cur = np.zeros(codes.shape, dtype=bool)
                    if a > 1 and (a - 1, b) in reach:
                        y, ext = at[-a], at[-a + 1]
                        other = np.zeros(codes.shape, dtype=bool)
                        for o in range(-a + 2, b + 1):
                            other |= E(y, at[o])
                        cur |= reach[(a - 1, b)] & E(y, ext) & other
                    if b > 1 and (a, b - 1) in reach:
                        y, ext = at[b], at[b - 1]
                        other = np.zeros(codes.shape, dtype=bool)
                        for o in range(-a, b - 1):
                            other |= E(y, at[o])
                        cur |= reach[(a, b - 1)] & E(y, ext) & other
                    if a > 1 and b > 1 and (a - 1, b - 1) in reach:
                        cur |= (reach[(a - 1, b - 1)] & E(at[-a], at[-a + 1])
                                & E(at[b], at[b - 1]) & E(at[-a], at[b]))
                    reach[(a, b)] = cur
            res |= reach[(k, ell)]
    return res


def hamilton_paths(g: Graph, a: int, b: int) -> set[tuple[int, ...]]:
    out = set()
    for perm in permutations([x for x in range(g.n) if x not in (a, b)]):
        p = (a, *perm, b)
        if all(g.has_edge(x, y) for x, y in zip(p, p[1:])):
            out.add(p)
    return out


def spanning_pairs(g: Graph, o1: int, o2: int, t1: int, t2: int) -> set[tuple]:
    """All (path from o1, path from o2) covering V(g), ending in {t1, t2}."""
    out = set()
    verts = set(range(g.n))

    def paths_from(a, avoid):
        stack = [(a,)]
        while stack:
            p = stack.pop()
            yield p
            for y in g.neighbors(p[-1]):
                if y not in p and y not in avoid:
                    stack.append(p + (y,))

    for p in paths_from(o1, {o2}):
        if p[-1] not in (t1, t2):
            continue
        other_end = t2 if p[-1] == t1 else t1
        rest = verts - set(p)
        for q in paths_from(o2, set(p)):
            if q[-1] == other_end and set(q) == rest:
                out.add((p, q))
    return out


# -- longest cycle -------------------------------------------------------------------


def circumference_nx(g: Graph) -> int:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return max((len(c) for c in nx.simple_cycles(h) if len(c) >= 3), default=0)
