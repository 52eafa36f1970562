"""Exact Hamiltonian-cycle and longest-cycle search for desk-scale graphs.

The Hamiltonian solver grows a set of vertex-disjoint path segments by
deciding edges one at a time.  After every decision it propagates:

* a vertex with two chosen edges loses every other candidate edge;
* a vertex left with exactly two usable edges gets both (degree-2 forcing);
* an edge joining the two ends of one segment is dropped unless it closes
  a Hamilton cycle;

and prunes any state whose usable-edge graph is disconnected or has a cut
vertex.  Degree-2 forcing settles graphs like the pendant-triangle
constructions in a handful of nodes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError, articulation_points, bits, reach

DEFAULT_BUDGET = 10**8


class Status(enum.Enum):
    FOUND = "found"
    NOT_HAMILTONIAN = "not_hamiltonian"
    ACYCLIC = "acyclic"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class SearchResult:
    status: Status
    cycle: tuple[int, ...] | None
    expansions: int

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND

    @property
    def length(self) -> int:
        return len(self.cycle) if self.cycle else 0


def verify_cycle(g: Graph, c: Sequence[int]) -> bool:
    if len(c) < 3 or len(set(c)) != len(c):
        return False
    if any(not 0 <= v < g.n for v in c):
        return False
    return all(g.has_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c)))


def verify_path(g: Graph, p: Sequence[int]) -> bool:
    if not p or len(set(p)) != len(p):
        return False
    if any(not 0 <= v < g.n for v in p):
        return False
    return all(g.has_edge(a, b) for a, b in zip(p, p[1:]))


class _BudgetExceeded(Exception):
    pass


class _Dead(Exception):
    pass


class _Closed(Exception):
    """A Hamilton cycle was completed during propagation."""

    def __init__(self, chosen):
        self.chosen = chosen


class _HamSearch:
    def __init__(self, g: Graph, budget: int):
        self.n = g.n
        self.full = (1 << g.n) - 1
        self.budget = budget
        self.expansions = 0

    # state: [avail rows, chosen rows, segment other-end, chosen edge count]

    def _choose(self, st, a, b, queue):
        avail, chosen, other = st[0], st[1], st[2]
        if chosen[a] & (chosen[a] - 1) or chosen[b] & (chosen[b] - 1):
            raise _Dead
        ba, bb = 1 << a, 1 << b
        avail[a] &= ~bb
        avail[b] &= ~ba
        if other[a] == b:
            if st[3] == self.n - 1:
                chosen[a] |= bb
                chosen[b] |= ba
                raise _Closed(chosen)
            raise _Dead
        chosen[a] |= bb
        chosen[b] |= ba
        st[3] += 1
        ea, eb = other[a], other[b]
        other[ea] = eb
        other[eb] = ea
        for v in (a, b):
            if chosen[v] & (chosen[v] - 1):
                rest = avail[v]
                avail[v] = 0
                bv = 1 << v
                for u in bits(rest):
                    avail[u] &= ~bv
                    queue.append(u)
                other[v] = -1
        if st[3] < self.n - 1 and avail[ea] >> eb & 1:
            avail[ea] &= ~(1 << eb)
            avail[eb] &= ~(1 << ea)
        queue.extend((a, b, ea, eb))

    def _propagate(self, st, queue):
        avail, chosen = st[0], st[1]
        while queue:
            v = queue.pop()
            c = chosen[v]
            if c & (c - 1):
                continue
            total = bin(c | avail[v]).count("1")
            if total < 2:
                raise _Dead
            if total == 2 and avail[v]:
                for u in bits(avail[v]):
                    if avail[v] >> u & 1:
                        self._choose(st, v, u, queue)

    def _prune(self, st) -> bool:
        avail, chosen = st[0], st[1]
        union = [a | c for a, c in zip(avail, chosen)]
        full = self.full
        if reach(union, 0, full) != full:
            return True
        return articulation_points(union, full) != 0

    def run(self, g: Graph):
        n = self.n
        st = [list(g.rows), [0] * n, list(range(n)), 0]
        try:
            self._propagate(st, list(range(n)))
        except _Dead:
            return None
        except _Closed as done:
            return done.chosen
        return self._dfs(st)

    def _dfs(self, st):
        self.expansions += 1
        if self.expansions > self.budget:
            raise _BudgetExceeded
        if self._prune(st):
            return None
        avail, chosen = st[0], st[1]
        # branch at a segment end with fewest options, else lowest-degree vertex
        best = -1
        best_key = None
        for v in range(self.n):
            a = avail[v]
            if not a:
                continue
            c = chosen[v]
            key = (0 if c else 1, bin(a).count("1"), v)
            if best_key is None or key < best_key:
                best_key, best = key, v
        if best < 0:
            return None
        v = best
        u = (avail[v] & -avail[v]).bit_length() - 1
        # branch 1: take edge vu
        child = [list(avail), list(chosen), list(st[2]), st[3]]
        try:
            q = []
            self._choose(child, v, u, q)
            self._propagate(child, q)
        except _Closed as done:
            return done.chosen
        except _Dead:
            pass
        else:
            res = self._dfs(child)
            if res is not None:
                return res
        # branch 2: forbid edge vu
        child = [list(avail), list(chosen), list(st[2]), st[3]]
        child[0][v] &= ~(1 << u)
        child[0][u] &= ~(1 << v)
        try:
            self._propagate(child, [v, u])
        except _Closed as done:
            return done.chosen
        except _Dead:
            return None
        return self._dfs(child)


def _cycle_from_rows(chosen: Sequence[int]) -> tuple[int, ...]:
    n = len(chosen)
    cyc = [0]
    prev, cur = -1, 0
    for _ in range(n - 1):
        nxt = [w for w in bits(chosen[cur]) if w != prev]
        prev, cur = cur, min(nxt) if prev < 0 else nxt[0]
        cyc.append(cur)
    return tuple(cyc)


def find_hamiltonian_cycle(g: Graph, budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Exact Hamilton cycle search; budget counts search-tree node expansions."""
    if g.n < 3:
        raise GraphError("Hamiltonicity is defined here for n >= 3")
    search = _HamSearch(g, budget)
    try:
        chosen = search.run(g)
    except _BudgetExceeded:
        return SearchResult(Status.BUDGET_EXCEEDED, None, search.expansions)
    if chosen is None:
        return SearchResult(Status.NOT_HAMILTONIAN, None, search.expansions)
    cyc = _cycle_from_rows(chosen)
    if not verify_cycle(g, cyc) or len(cyc) != g.n:
        raise AssertionError("solver produced an invalid Hamilton cycle")
    return SearchResult(Status.FOUND, cyc, search.expansions)


# -- longest cycle -------------------------------------------------------------


def biconnected_blocks(g: Graph) -> list[int]:
    """Vertex masks of the blocks (2-connected components or bridges) of ``g``."""
    rows = g.rows
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks = []
    counter = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, rows[root])]
        edge_stack: list[tuple[int, int]] = []
        while stack:
            v, parent, todo = stack[-1]
            if todo:
                wb = todo & -todo
                stack[-1] = (v, parent, todo ^ wb)
                w = wb.bit_length() - 1
                if w == parent:
                    continue
                if disc[w] < 0:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, rows[w]))
                elif disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if low[v] >= disc[parent]:
                        mask = 0
                        while edge_stack:
                            a, b = edge_stack.pop()
                            mask |= 1 << a | 1 << b
                            if (a, b) == (parent, v):
                                break
                        blocks.append(mask)
    return blocks


def longest_cycle(g: Graph, budget: int = DEFAULT_BUDGET) -> SearchResult:
    """A cycle of maximum length (exact within ``budget`` expansions).

    Cycles live inside blocks, so each block is searched separately: first
    for a Hamilton cycle of the block, then by branch-and-bound over simple
    cycles whose smallest vertex is fixed.
    """
    spent = 0
    best: tuple[int, ...] | None = None
    for block in sorted(biconnected_blocks(g), key=lambda m: -bin(m).count("1")):
        size = bin(block).count("1")
        if size < 3 or (best is not None and size <= len(best)):
            continue
        verts = list(bits(block))
        sub_rows = []
        index = {v: i for i, v in enumerate(verts)}
        for v in verts:
            r = 0
            for w in bits(g.rows[v] & block):
                r |= 1 << index[w]
            sub_rows.append(r)
        sub = Graph(size, sub_rows)
        res = find_hamiltonian_cycle(sub, budget - spent)
        spent += res.expansions
        if res.status is Status.BUDGET_EXCEEDED:
            return SearchResult(Status.BUDGET_EXCEEDED, None, spent)
        if res.found:
            best = tuple(verts[i] for i in res.cycle)
            continue
        cyc, used, exceeded = _bounded_cycle_search(
            sub, len(best) if best else 2, size - 1, budget - spent
        )
        spent += used
        if exceeded:
            return SearchResult(Status.BUDGET_EXCEEDED, None, spent)
        if cyc is not None:
            best = tuple(verts[i] for i in cyc)
    if best is None:
        return SearchResult(Status.ACYCLIC, None, spent)
    return SearchResult(Status.FOUND, best, spent)


def _bounded_cycle_search(g: Graph, lower: int, upper: int, budget: int):
    """Longest cycle longer than ``lower`` (and at most ``upper``), or None."""
    rows = g.rows
    n = g.n
    best_len = lower
    best = None
    expansions = 0

    class Stop(Exception):
        pass

    def dfs(path, visited, start, allowed):
        nonlocal best_len, best, expansions
        expansions += 1
        if expansions > budget:
            raise _BudgetExceeded
        end = path[-1]
        if len(path) > best_len and len(path) >= 3 and rows[end] >> start & 1:
            best_len = len(path)
            best = tuple(path)
            if best_len >= upper:
                raise Stop
        free = allowed & ~visited
        # vertices still able to join: reachable from the end through free vertices
        # and able to get back to the start
        reachable = reach(rows, end, free | (1 << end)) & free
        if len(path) + bin(reachable).count("1") <= best_len:
            return
        if not (rows[start] & (reachable | (1 << end))):
            return
        for w in bits(rows[end] & free):
            path.append(w)
            dfs(path, visited | (1 << w), start, allowed)
            path.pop()

    try:
        for start in range(n):
            allowed = ((1 << n) - 1) & ~((1 << start) - 1)
            if bin(allowed).count("1") <= best_len:
                break
            dfs([start], 1 << start, start, allowed)
    except Stop:
        pass
    except _BudgetExceeded:
        return None, expansions, True
    return best, expansions, False


def circumference(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    res = longest_cycle(g, budget)
    if res.status is Status.BUDGET_EXCEEDED:
        raise RuntimeError("circumference search exceeded its budget")
    return res.length
