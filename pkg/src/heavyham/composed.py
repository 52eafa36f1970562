"""Composed graphs and the path constructions built on them.

A carrier is grown from the triangle on offsets ``{-1, 0, 1}`` by
extension steps at the current extremes ``-k_i`` and ``l_i``:

* ``ExtensionStep.one("left", z)`` adds ``-k_i - 1`` adjacent to ``-k_i`` and ``z``;
* ``ExtensionStep.one("right", z)`` adds ``l_i + 1`` adjacent to ``l_i`` and ``z``;
* ``ExtensionStep.two()`` adds ``-k_i - 1`` and ``l_i + 1``, adjacent to each
  other and to their respective extremes.

Offsets are the currency of this module; ``CanonicalSequence.vertex_of`` maps
them to host vertex ids.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .graph import Graph, GraphError, bits, new_graph
from . import ore
from .cycles import verify_cycle


class CompositionError(GraphError):
    """Invalid extension step, canonical sequence or good-pair witness."""


@dataclass(frozen=True)
class ExtensionStep:
    kind: str
    end: str | None = None
    attach: int | None = None

    @classmethod
    def one(cls, end: str, attach: int) -> "ExtensionStep":
        if end not in ("left", "right"):
            raise CompositionError(f"1-extension end must be 'left' or 'right', not {end!r}")
        return cls("one", end, attach)

    @classmethod
    def two(cls) -> "ExtensionStep":
        return cls("two")

    def __str__(self) -> str:
        if self.kind == "two":
            return "2-ext"
        return f"1-ext {self.end} attach={self.attach}"


@dataclass
class CanonicalSequence:
    steps: tuple[ExtensionStep, ...] = ()
    vertex_of: dict[int, int] | None = None

    def __post_init__(self):
        self.steps = tuple(self.steps)
        k = 1 + sum(1 for s in self.steps if s.kind == "two" or s.end == "left")
        ell = 1 + sum(1 for s in self.steps if s.kind == "two" or s.end == "right")
        self._k, self._ell = k, ell
        if self.vertex_of is None:
            self.vertex_of = {o: o + k for o in range(-k, ell + 1)}
        elif sorted(self.vertex_of) != list(range(-k, ell + 1)):
            raise CompositionError("vertex_of must cover exactly the offsets [-k, l]")

    @property
    def k(self) -> int:
        return self._k

    @property
    def ell(self) -> int:
        return self._ell

    @property
    def size(self) -> int:
        return self._k + self._ell + 1

    def ordering(self) -> list[int]:
        """Host ids in canonical order ``v_{-k} .. v_0 .. v_l``."""
        return [self.vertex_of[o] for o in range(-self._k, self._ell + 1)]

    def host(self, offsets: Iterable[int]) -> tuple[int, ...]:
        return tuple(self.vertex_of[o] for o in offsets)


@dataclass(frozen=True)
class PathPair:
    """Two vertex-disjoint paths, each listed from its origin."""

    first: tuple[int, ...]
    second: tuple[int, ...]

    @property
    def vertices(self) -> set[int]:
        return set(self.first) | set(self.second)


# -- replay ------------------------------------------------------------------


class _View:
    """Offset-level carrier: adjacency plus the window of every stage."""

    def __init__(self, adj: dict[int, set[int]], stages: list[tuple[int, int]]):
        self.adj = adj
        self.stages = stages
        self.first_stage: dict[int, int] = {}
        for i, (k, ell) in enumerate(stages):
            for o in range(-k, ell + 1):
                self.first_stage.setdefault(o, i)
        self._mirror = None
        self._cache: dict[int, list[int]] = {}

    @property
    def mirror(self) -> "_View":
        if self._mirror is None:
            adj = {-o: {-x for x in nb} for o, nb in self.adj.items()}
            m = _View(adj, [(ell, k) for k, ell in self.stages])
            m._mirror = self
            self._mirror = m
        return self._mirror


def _replay_offsets(steps: Sequence[ExtensionStep]) -> _View:
    adj: dict[int, set[int]] = {-1: {0, 1}, 0: {-1, 1}, 1: {-1, 0}}
    k, ell = 1, 1
    stages = [(k, ell)]

    def link(a, b):
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)

    for idx, step in enumerate(steps):
        if step.kind == "one":
            extreme = -k if step.end == "left" else ell
            z = step.attach
            if z is None or not -k <= z <= ell:
                raise CompositionError(f"step {idx}: attach {z} outside the window [{-k}, {ell}]")
            if z == extreme:
                raise CompositionError(f"step {idx}: attach vertex equals the extended extreme")
            if step.end == "left":
                k += 1
                new = -k
            else:
                ell += 1
                new = ell
            link(new, extreme)
            link(new, z)
        elif step.kind == "two":
            link(-k - 1, -k)
            link(ell + 1, ell)
            link(-k - 1, ell + 1)
            k += 1
            ell += 1
        else:
            raise CompositionError(f"step {idx}: unknown kind {step.kind!r}")
        stages.append((k, ell))
    return _View(adj, stages)


def _view(seq: CanonicalSequence) -> _View:
    return _replay_offsets(seq.steps)


def carrier_offset_edges(seq: CanonicalSequence) -> set[tuple[int, int]]:
    adj = _view(seq).adj
    return {(a, b) for a, nb in adj.items() for b in nb if a < b}


def replay(seq: CanonicalSequence) -> Graph:
    """The carrier, with vertices named by ``seq.vertex_of``."""
    view = _view(seq)
    vo = seq.vertex_of
    n = seq.size
    if sorted(vo.values()) != list(range(n)):
        raise CompositionError("vertex_of must be a bijection onto 0..k+l")
    edges = [(vo[a], vo[b]) for a, nb in view.adj.items() for b in nb if a < b]
    return new_graph(n, edges)


# -- Hamilton paths and spanning pairs ------------------------------------------


def _q(a: int, b: int) -> list[int]:
    """Canonical-path segment from offset a to offset b (inclusive)."""
    step = 1 if b >= a else -1
    return list(range(a, b + step, step))


def _path_edges(path: Sequence[int]) -> set[frozenset]:
    return {frozenset(e) for e in zip(path, path[1:])}


def _components_as_paths(vertices: set[int], edges: set[frozenset]) -> dict[int, list[int]]:
    """Split a linear forest into paths; maps each endpoint to the path starting there."""
    nbr: dict[int, list[int]] = {v: [] for v in vertices}
    for e in edges:
        a, b = tuple(e)
        nbr[a].append(b)
        nbr[b].append(a)
    if any(len(x) > 2 for x in nbr.values()):
        raise CompositionError("assembled subgraph is not a linear forest")
    out: dict[int, list[int]] = {}
    seen: set[int] = set()
    for v in sorted(vertices):
        if v in seen or len(nbr[v]) == 2:
            continue
        path = [v]
        prev = None
        cur = v
        while True:
            nxt = [w for w in nbr[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            path.append(cur)
        seen.update(path)
        out[path[0]] = path
        out[path[-1]] = path[::-1]
    if seen != vertices:
        raise CompositionError("assembled subgraph contains a cycle")
    return out


def _ham_left(view: _View, i: int) -> list[int]:
    """Hamilton path of stage ``i`` from offset 0 to its left extreme."""
    cached = view._cache.get(i)
    if cached is not None:
        return cached
    k, ell = view.stages[i]
    if i == 0:
        path = [0, 1, -1]
    else:
        kp, lp = view.stages[i - 1]
        if k == kp + 1 and ell == lp:
            path = _ham_left(view, i - 1) + [-k]
        else:
            others = [s for s in view.adj[ell] if -k <= s <= ell and s != ell - 1]
            if len(others) != 1:
                raise AssertionError("newest right vertex must have degree 2 in its stage")
            s = others[0]
            if s <= -2:
                j = view.first_stage[s + 1]
                t = view.stages[j][1]
                path = _ham_right(view, j) + _q(t + 1, ell) + _q(s, -k)
            elif s == -1:
                path = _q(0, ell) + _q(-1, -k)
            else:
                j = view.first_stage[s + 1]
                t = -view.stages[j][0]
                inner = _ham_left(view, j)
                edges = _path_edges(inner)
                edges.discard(frozenset((s, s + 1)))
                edges |= _path_edges(_q(s + 1, ell))
                edges.add(frozenset((ell, s)))
                edges |= _path_edges(_q(t, -k))
                paths = _components_as_paths(set(range(-k, ell + 1)), edges)
                path = paths[0]
    if path[0] != 0 or path[-1] != -k or len(path) != k + ell + 1:
        raise AssertionError("Hamilton path construction broke its postcondition")
    view._cache[i] = path
    return path


def _ham_right(view: _View, i: int) -> list[int]:
    """Hamilton path of stage ``i`` from offset 0 to its right extreme."""
    return [-o for o in _ham_left(view.mirror, i)]


def hamilton_path_left(seq: CanonicalSequence) -> tuple[int, ...]:
    """Hamilton path of the carrier from ``v_0`` to ``v_{-k}`` (host ids)."""
    view = _view(seq)
    return seq.host(_ham_left(view, len(view.stages) - 1))


def hamilton_path_right(seq: CanonicalSequence) -> tuple[int, ...]:
    view = _view(seq)
    return seq.host(_ham_right(view, len(view.stages) - 1))


def _spanning_pair_offsets(view: _View, s: int) -> tuple[list[int], list[int]]:
    k, ell = view.stages[-1]
    if not -k + 1 <= s <= ell:
        raise CompositionError(f"s={s} outside [{-k + 1}, {ell}]")
    if s <= 0:
        j = view.first_stage[s - 1]
        t = view.stages[j][1]
        edges = _path_edges(_ham_right(view, j))
        if frozenset((s - 1, s)) not in edges:
            raise AssertionError("degree-2 vertex edge missing from the Hamilton path")
        edges.discard(frozenset((s - 1, s)))
        edges |= _path_edges(_q(t, ell)) | _path_edges(_q(s - 1, -k))
        paths = _components_as_paths(set(range(-k, ell + 1)), edges)
        first, second = paths[0], paths[ell]
    elif s == 1:
        first, second = _q(0, -k), _q(ell, 1)
    else:
        j = view.first_stage[s - 1]
        t = -view.stages[j][0]
        first = _ham_left(view, j) + (_q(t - 1, -k) if t > -k else [])
        second = _q(ell, s)
    return first, second


def spanning_pair(seq: CanonicalSequence, s: int) -> PathPair:
    """Spanning pair of the carrier joining ``{v_0, v_l}`` to ``{v_s, v_{-k}}``.

    ``first`` starts at ``v_0``, ``second`` at ``v_l``.
    """
    first, second = _spanning_pair_offsets(_view(seq), s)
    return PathPair(seq.host(first), seq.host(second))


# -- recognition -------------------------------------------------------------------


def recognize_composed(g: Graph, u: int, v: int, w: int) -> CanonicalSequence | None:
    """A canonical sequence of a spanning carrier with ``v_{-k}=u, v_0=v, v_l=w``.

    Returns None when ``g`` is not ``(u, v, w)``-composed.  Depth-first over
    extension choices (1-ext left, 1-ext right, 2-ext; new vertices
    ascending), memoising dead ``(used, left end, right end)`` states.  The
    attach vertex of a 1-extension never influences later moves, so the
    smallest valid one is taken.
    """
    if len({u, v, w}) != 3:
        raise GraphError("u, v, w must be distinct")
    for x in (u, v, w):
        g._check_vertex(x)
    rows = g.rows
    full = g.full_mask
    bu, bw = 1 << u, 1 << w
    dead: set[tuple[int, int, int]] = set()
    steps: list[ExtensionStep] = []
    left: list[int] = []
    right: list[int] = []

    def attach_of(y: int, extreme: int, used: int, pos: dict[int, int]) -> int | None:
        cand = rows[y] & used & ~(1 << extreme)
        if not cand:
            return None
        return (cand & -cand).bit_length() - 1

    def dfs(used: int, lo: int, hi: int, pos: dict[int, int]) -> bool:
        if used == full:
            return lo == u and hi == w
        key = (used, lo, hi)
        if key in dead:
            return False
        free = full & ~used
        k, ell = len(left), len(right)
        if lo != u:
            for y in bits(rows[lo] & free & ~bw):
                z = attach_of(y, lo, used, pos)
                if z is None:
                    continue
                left.append(y)
                pos[y] = -(k + 1)
                steps.append(ExtensionStep.one("left", pos[z]))
                if dfs(used | 1 << y, y, hi, pos):
                    return True
                steps.pop()
                left.pop()
                del pos[y]
        if hi != w:
            for y in bits(rows[hi] & free & ~bu):
                z = attach_of(y, hi, used, pos)
                if z is None:
                    continue
                right.append(y)
                pos[y] = ell + 1
                steps.append(ExtensionStep.one("right", pos[z]))
                if dfs(used | 1 << y, lo, y, pos):
                    return True
                steps.pop()
                right.pop()
                del pos[y]
        if lo != u and hi != w:
            for y1 in bits(rows[lo] & free & ~bw):
                for y2 in bits(rows[hi] & rows[y1] & free & ~bu):
                    left.append(y1)
                    right.append(y2)
                    pos[y1] = -(k + 1)
                    pos[y2] = ell + 1
                    steps.append(ExtensionStep.two())
                    if dfs(used | 1 << y1 | 1 << y2, y1, y2, pos):
                        return True
                    steps.pop()
                    left.pop()
                    right.pop()
                    del pos[y1], pos[y2]
        dead.add(key)
        return False

    for a in bits(rows[v]):
        if a == w:
            continue
        for b in bits(rows[v] & rows[a]):
            if b == u:
                continue
            left[:] = [a]
            right[:] = [b]
            steps.clear()
            pos = {v: 0, a: -1, b: 1}
            if dfs(1 << v | 1 << a | 1 << b, a, b, pos):
                vertex_of = {o: x for x, o in pos.items()}
                return CanonicalSequence(tuple(steps), vertex_of)
    return None


def is_spanning_subgraph(seq: CanonicalSequence, g: Graph) -> bool:
    d = replay(seq)
    return d.n == g.n and all(g.has_edge(a, b) for a, b in d.edges())


# -- good pairs ------------------------------------------------------------------


@dataclass(frozen=True)
class GoodPairWitness:
    """Certificate that ``(x1, x2)`` is x-good on a cycle.

    ``path`` runs from ``x`` to ``x_{3-j}`` over ``X - {x_j}``; ``pair.first``
    starts at ``x`` and ``pair.second`` at ``x_{3-j}``, together covering ``X``
    and ending at ``{x_prime, x_j}``; ``d(x_j) + d(x_prime) >= n``.
    """

    x: int
    x1: int
    x2: int
    j: int
    x_prime: int
    path: tuple[int, ...]
    pair: PathPair

    @property
    def heavy_end(self) -> int:
        return self.x1 if self.j == 1 else self.x2

    @property
    def light_end(self) -> int:
        return self.x2 if self.j == 1 else self.x1

    def flipped(self) -> "GoodPairWitness":
        """The same witness with the roles of x1 and x2 exchanged."""
        return GoodPairWitness(self.x, self.x2, self.x1, 3 - self.j, self.x_prime, self.path, self.pair)


def arc_through(c: Sequence[int], a: int, b: int, through: int) -> list[int]:
    """Vertices of the ``(a, b)``-arc of cycle ``c`` containing ``through``, from a to b."""
    pos = {v: i for i, v in enumerate(c)}
    for z in (a, b, through):
        if z not in pos:
            raise CompositionError(f"vertex {z} is not on the cycle")
    if len({a, b, through}) != 3:
        raise CompositionError("arc endpoints and interior vertex must be distinct")
    L = len(c)
    for step in (1, -1):
        arc = [a]
        i = pos[a]
        while c[i] != b:
            i = (i + step) % L
            arc.append(c[i])
        if through in arc:
            return arc
    raise AssertionError("unreachable")


def _ham_paths(rows: Sequence[int], allowed: int, a: int, b: int) -> Iterator[list[int]]:
    """All Hamilton (a, b)-paths of the subgraph induced by ``allowed``."""
    if not (allowed >> a & 1 and allowed >> b & 1):
        return
    if a == b:
        if allowed == 1 << a:
            yield [a]
        return
    path = [a]

    def rec(cur: int, used: int):
        if used == allowed:
            if cur == b:
                yield list(path)
            return
        for y in bits(rows[cur] & allowed & ~used):
            if y == b and (used | 1 << b) != allowed:
                continue
            path.append(y)
            yield from rec(y, used | 1 << y)
            path.pop()

    yield from rec(a, 1 << a)


def _simple_paths(rows: Sequence[int], allowed: int, a: int, b: int) -> Iterator[list[int]]:
    if not (allowed >> a & 1 and allowed >> b & 1):
        return
    if a == b:
        yield [a]
        return
    path = [a]

    def rec(cur: int, used: int):
        for y in bits(rows[cur] & allowed & ~used):
            path.append(y)
            if y == b:
                yield list(path)
            else:
                yield from rec(y, used | 1 << y)
            path.pop()

    yield from rec(a, 1 << a)


def find_spanning_pair(
    rows: Sequence[int], allowed: int, origins: tuple[int, int], termini: tuple[int, int]
) -> PathPair | None:
    """Two disjoint paths covering ``allowed``, from ``origins`` into ``termini``."""
    a1, a2 = origins
    t1, t2 = termini
    if a1 == a2 or t1 == t2:
        return None
    for e1, e2 in ((t1, t2), (t2, t1)):
        if a1 == e2 or a2 == e1:
            continue
        for p1 in _simple_paths(rows, allowed & ~(1 << a2) & ~(1 << e2), a1, e1):
            used = 0
            for z in p1:
                used |= 1 << z
            p2 = next(_ham_paths(rows, allowed & ~used, a2, e2), None)
            if p2 is not None:
                return PathPair(tuple(p1), tuple(p2))
    return None


def find_good_pair(
    g: Graph, c: Sequence[int], x: int, x1: int, x2: int
) -> GoodPairWitness | None:
    """Search for a witness that ``(x1, x2)`` is x-good on ``c`` (both j = 1, 2)."""
    arc = arc_through(c, x1, x2, x)
    X = 0
    for z in arc:
        X |= 1 << z
    rows = g.rows
    deg = g.degrees
    for j in (1, 2):
        xj, xo = (x1, x2) if j == 1 else (x2, x1)
        heavy = [z for z in sorted(arc) if z != xj and deg[xj] + deg[z] >= g.n]
        if not heavy:
            continue
        p = next(_ham_paths(rows, X & ~(1 << xj), x, xo), None)
        if p is None:
            continue
        for xp in heavy:
            d = find_spanning_pair(rows, X, (x, xo), (xp, xj))
            if d is not None:
                return GoodPairWitness(x, x1, x2, j, xp, tuple(p), d)
    return None


def check_good_pair(g: Graph, c: Sequence[int], w: GoodPairWitness) -> None:
    """Raise CompositionError unless ``w`` satisfies the three good-pair conditions."""
    arc = set(arc_through(c, w.x1, w.x2, w.x))
    if w.j not in (1, 2):
        raise CompositionError("j must be 1 or 2")
    xj, xo = w.heavy_end, w.light_end
    if w.x_prime not in arc or w.x_prime == xj:
        raise CompositionError("x' must lie in X - {x_j}")
    p = w.path
    if not _is_path(g, p) or p[0] != w.x or p[-1] != xo or set(p) != arc - {xj}:
        raise CompositionError("condition (1) fails: bad covering path")
    f, s = w.pair.first, w.pair.second
    if not (_is_path(g, f) and _is_path(g, s)) or set(f) & set(s):
        raise CompositionError("condition (2) fails: pair components are not disjoint paths")
    if f[0] != w.x or s[0] != xo or {f[-1], s[-1]} != {w.x_prime, xj}:
        raise CompositionError("condition (2) fails: wrong origins or termini")
    if set(f) | set(s) != arc:
        raise CompositionError("condition (2) fails: pair does not cover X")
    if g.degrees[xj] + g.degrees[w.x_prime] < g.n:
        raise CompositionError("condition (3) fails: degree sum below n")


def _is_path(g: Graph, p: Sequence[int]) -> bool:
    return bool(p) and len(set(p)) == len(p) and all(g.has_edge(a, b) for a, b in zip(p, p[1:]))


# -- merge -----------------------------------------------------------------------


def _assemble(segments: Iterable[Sequence[int]], target: set[int]):
    """Union of path segments; returns ('path', seq) or ('cycle', seq)."""
    verts: set[int] = set()
    edges: set[frozenset] = set()
    for seg in segments:
        verts.update(seg)
        edges |= _path_edges(seg)
    if verts != target:
        raise CompositionError("assembled segments do not cover V(C) + V(R)")
    if len(edges) == len(verts):
        nbr: dict[int, list[int]] = {v: [] for v in verts}
        for e in edges:
            a, b = tuple(e)
            nbr[a].append(b)
            nbr[b].append(a)
        if all(len(x) == 2 for x in nbr.values()):
            start = min(verts)
            cyc = [start]
            prev, cur = None, start
            while True:
                nxt = [w for w in nbr[cur] if w != prev][0]
                if nxt == start:
                    break
                cyc.append(nxt)
                prev, cur = cur, nxt
            if len(cyc) == len(verts):
                return "cycle", cyc
        raise CompositionError("assembled segments do not form a path")
    paths = _components_as_paths(verts, edges)
    ends = {p[0] for p in paths.values()}
    if len(ends) > 2 or len({tuple(sorted(p)) for p in paths.values()}) != 1:
        raise CompositionError("assembled segments do not form a single path")
    return "path", next(iter(paths.values()))


@dataclass
class MergeReport:
    cycle: tuple[int, ...]
    case: str
    closing_path: tuple[int, ...] = field(default=())


def merge_via_good_pairs(
    g: Graph,
    c: Sequence[int],
    r: Sequence[int],
    wx: GoodPairWitness,
    wy: GoodPairWitness,
    report: bool = False,
):
    """Cycle through ``V(c) + V(r)`` from an ear ``r`` and two good pairs.

    ``c`` is oriented by its listing order, ``r`` runs from ``x = r[0]`` to
    ``y = r[-1]``, and ``x2, x, x1, y1, y, y2`` must appear in that order along
    ``c`` (``x1 = y1`` or ``x2 = y2`` allowed).  Builds the two covering paths
    of the applicable case; one of them has ends in the closure relation and
    is closed into an o-cycle and repaired.
    """
    c = list(c)
    r = list(r)
    if len(r) < 2 or not _is_path(g, r):
        raise CompositionError("r must be a path of g with at least one edge")
    x, y = r[0], r[-1]
    on_c = set(c)
    if not verify_cycle(g, c):
        raise CompositionError("c is not a cycle of g")
    if x not in on_c or y not in on_c or x == y:
        raise CompositionError("r must join two distinct vertices of c")
    if set(r[1:-1]) & on_c:
        raise CompositionError("r must be internally disjoint from c")
    if wx.x != x or wy.x != y:
        raise CompositionError("witnesses must be anchored at the ends of r")
    check_good_pair(g, c, wx)
    check_good_pair(g, c, wy)
    if wx.j == 1:
        c = c[::-1]
        wx, wy = wx.flipped(), wy.flipped()
    x1, x2, y1, y2 = wx.x1, wx.x2, wy.x1, wy.x2
    if {x1, x2, y1, y2} & {x, y}:
        raise CompositionError("x1, x2, y1, y2 must avoid x and y")
    L = len(c)
    pos = {v: i for i, v in enumerate(c)}

    def rel(v: int) -> int:
        return (pos[v] - pos[x2]) % L

    py2 = rel(y2) if y2 != x2 else L
    if not (0 < rel(x) < rel(x1) <= rel(y1) < rel(y) < py2):
        raise CompositionError("x2, x, x1, y1, y, y2 are not in order along c")
    q1 = [c[(pos[x1] + i) % L] for i in range(rel(y1) - rel(x1) + 1)]
    q2 = [c[(pos[x2] - i) % L] for i in range(L - py2 + 1)]
    p1, d1 = list(wx.path), wx.pair
    p2, d2 = list(wy.path), wy.pair
    xp, yp = wx.x_prime, wy.x_prime
    target = on_c | set(r)

    if wy.j == 2:
        case = "1"
        candidates = [(q2, *_parts(d2), r, p1, q1), (q2, *_parts(d1), r, p2, q1)]
    elif d1.first[-1] == x2:
        case = "2.1"
        candidates = [(q2, p2, r, p1, q1), (*_parts(d1), q1, q2, r, *_parts(d2))]
    elif d2.first[-1] == y1:
        case = "2.2.1"
        candidates = [(q2, p2, r, p1, q1), (*_parts(d2), q2, q1, r, *_parts(d1))]
    else:
        case = "2.2.2"
        candidates = [(q2, *_parts(d2), r, p1, q1), (q2, *_parts(d1), r, p2, q1)]

    deg = g.degrees
    for segs in candidates:
        kind, seq = _assemble(segs, target)
        if kind == "cycle":
            out = tuple(seq)
        else:
            a, b = seq[0], seq[-1]
            if not (g.has_edge(a, b) or deg[a] + deg[b] >= g.n):
                continue
            out = ore.repair(g, ore.OreSequence(seq))
        if not set(out) >= target:
            raise AssertionError("repaired cycle lost vertices")
        if report:
            return MergeReport(out, case, tuple(seq))
        return out
    raise AssertionError(
        f"case {case}: neither covering path closes into an o-cycle (x'={xp}, y'={yp})"
    )


def _parts(d: PathPair) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return d.first, d.second
