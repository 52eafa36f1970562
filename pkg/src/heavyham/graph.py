"""Immutable simple graphs stored as one adjacency bit row per vertex.

Vertex ``v`` of an ``n``-vertex graph is bit ``1 << v``; ``rows[v]`` is the
bitmask of its neighbours.  Everything downstream (pattern search, the
Hamiltonian solver, the survey harness) works on these rows directly.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input (self-loops, bad vertex ids, ...)."""


class _Unreachable:
    __slots__ = ()

    def __repr__(self) -> str:
        return "Unreachable"

    def __reduce__(self):
        return "UNREACHABLE"


#: Returned by :func:`distance` when no path joins the two vertices.
UNREACHABLE = _Unreachable()


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are immutable; build new graphs instead of editing.
    """

    __slots__ = ("n", "rows", "_degrees")

    def __init__(self, n: int, rows: Sequence[int]):
        self.n = n
        self.rows = tuple(rows)
        self._degrees = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return new_graph(n, edges)

    @property
    def degrees(self) -> tuple[int, ...]:
        if self._degrees is None:
            self._degrees = tuple(bin(r).count("1") for r in self.rows)
        return self._degrees

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.degrees[v]

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(bits(self.rows[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in bits(self.rows[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def num_edges(self) -> int:
        return sum(self.degrees) // 2

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range [0, {self.n})")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"

    def __getstate__(self):
        return (self.n, self.rows)

    def __setstate__(self, state):
        self.n, self.rows = state
        self._degrees = None


def new_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges are merged."""
    if n < 1:
        raise GraphError("a graph needs at least one vertex")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside [0, {n})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def distance(g: Graph, u: int, v: int):
    """BFS distance between ``u`` and ``v``, or :data:`UNREACHABLE`."""
    g._check_vertex(u)
    g._check_vertex(v)
    target = 1 << v
    seen = frontier = 1 << u
    d = 0
    rows = g.rows
    while frontier:
        if frontier & target:
            return d
        nxt = 0
        for w in bits(frontier):
            nxt |= rows[w]
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
    return UNREACHABLE


def reach(rows: Sequence[int], start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from ``start`` inside ``allowed``."""
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for w in bits(frontier):
            nxt |= rows[w]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    return reach(g.rows, 0, g.full_mask) == g.full_mask


def articulation_points(rows: Sequence[int], allowed: int) -> int:
    """Cut vertices of the subgraph induced by ``allowed``, as a bitmask.

    Iterative Hopcroft-Tarjan lowpoint search; only the component containing
    the lowest allowed vertex is explored.
    """
    if not allowed:
        return 0
    root = (allowed & -allowed).bit_length() - 1
    disc = {root: 0}
    low = {root: 0}
    cut = 0
    root_children = 0
    counter = 1
    stack = [(root, -1, rows[root] & allowed)]
    while stack:
        v, parent, todo = stack[-1]
        if todo:
            w_bit = todo & -todo
            stack[-1] = (v, parent, todo ^ w_bit)
            w = w_bit.bit_length() - 1
            if w == parent:
                continue
            if w in disc:
                if disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                disc[w] = low[w] = counter
                counter += 1
                stack.append((w, v, rows[w] & allowed))
        else:
            stack.pop()
            if parent < 0:
                continue
            if low[v] < low[parent]:
                low[parent] = low[v]
            if parent == root:
                root_children += 1
            elif low[v] >= disc[parent]:
                cut |= 1 << parent
    if root_children > 1:
        cut |= 1 << root
    return cut


def is_two_connected(g: Graph) -> bool:
    """True iff ``n >= 3``, ``g`` is connected and has no cut vertex."""
    n = g.n
    if n < 3:
        return False
    rows = g.rows
    for r in rows:
        # a vertex of degree < 2 is either isolated or makes its neighbour a cut vertex
        if r & (r - 1) == 0:
            return False
    full = (1 << n) - 1
    if reach(rows, 0, full) != full:
        return False
    return articulation_points(rows, full) == 0


def in_closure_relation(g: Graph, u: int, v: int) -> bool:
    """Membership of ``uv`` in the closure relation: an edge, or ``d(u)+d(v) >= n``."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise GraphError("closure relation is defined on distinct vertices")
    return g.has_edge(u, v) or g.degrees[u] + g.degrees[v] >= g.n


def heavy_rows(g: Graph) -> list[int]:
    """Per vertex, the non-neighbours whose degree sum with it is at least n."""
    n = g.n
    deg = g.degrees
    rows = g.rows
    by_degree = [0] * (n + 1)
    for v, d in enumerate(deg):
        by_degree[d] |= 1 << v
    # suffix[d] = vertices of degree >= d
    suffix = [0] * (n + 2)
    for d in range(n, -1, -1):
        suffix[d] = suffix[d + 1] | by_degree[d]
    out = []
    for v in range(n):
        need = n - deg[v]
        partners = suffix[need] if need >= 0 else suffix[0]
        out.append(partners & ~rows[v] & ~(1 << v))
    return out


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``vertices``; also returns new-index -> old-vertex map."""
    order = sorted(set(vertices))
    if not order:
        raise GraphError("induced subgraph of an empty vertex set")
    for v in order:
        g._check_vertex(v)
    index = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        r = 0
        for w in bits(g.rows[v]):
            i = index.get(w)
            if i is not None:
                r |= 1 << i
        rows.append(r)
    return Graph(len(order), rows), order


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    rows = [0] * g.n
    for v in range(g.n):
        r = 0
        for w in bits(g.rows[v]):
            r |= 1 << perm[w]
        rows[perm[v]] = r
    return Graph(g.n, rows)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def cycle_graph(n: int) -> Graph:
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])
