"""The small pattern graphs and induced-embedding / heaviness predicates.

Labeling of every built pattern (the "triangle" is always vertices 0, 1, 2):

========  =====================================================================
K13       centre 0, end vertices 1, 2, 3
P(i)      path 0-1-...-(i-1)
C3        triangle 0, 1, 2
Z(i)      triangle; pendant path 0-3-4-...-(i+2) hanging off vertex 0
B         triangle; pendants 3 at 0 and 4 at 1
N         triangle; pendants 3 at 0, 4 at 1, 5 at 2
W         triangle; pendant 3 at 0, pendant path 1-4-5
D         triangle; pendant paths 0-3-4 and 1-5-6
H         triangles {0, 1, 2} and {0, 3, 4} sharing vertex 0
N112      triangle; pendants 3 at 0 and 4 at 1, pendant path 2-5-6
H11       H with pendants 5 at 1 and 6 at 2 (both on the triangle {0, 1, 2})
========  =====================================================================
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .graph import Graph, GraphError, bits, heavy_rows, new_graph


@dataclass(frozen=True)
class PatternId:
    name: str
    param: int | None = None

    def __post_init__(self):
        if self.name in ("P", "Z"):
            if self.param is None or self.param < 1:
                raise GraphError(f"pattern {self.name} needs a parameter i >= 1")
        elif self.name in _FIXED:
            if self.param is not None:
                raise GraphError(f"pattern {self.name} takes no parameter")
        else:
            raise GraphError(f"unknown pattern {self.name!r}")

    def __str__(self) -> str:
        if self.name == "K13":
            return "K1,3"
        return f"{self.name}{self.param}" if self.param is not None else self.name

    @property
    def graph(self) -> Graph:
        return build_pattern(self)


def _triangle_plus(n: int, extra: Sequence[tuple[int, int]]) -> Graph:
    return new_graph(n, [(0, 1), (1, 2), (0, 2), *extra])


_FIXED = {
    "K13": lambda: new_graph(4, [(0, 1), (0, 2), (0, 3)]),
    "C3": lambda: _triangle_plus(3, []),
    "B": lambda: _triangle_plus(5, [(0, 3), (1, 4)]),
    "N": lambda: _triangle_plus(6, [(0, 3), (1, 4), (2, 5)]),
    "W": lambda: _triangle_plus(6, [(0, 3), (1, 4), (4, 5)]),
    "D": lambda: _triangle_plus(7, [(0, 3), (3, 4), (1, 5), (5, 6)]),
    "H": lambda: _triangle_plus(5, [(0, 3), (0, 4), (3, 4)]),
    "N112": lambda: _triangle_plus(7, [(0, 3), (1, 4), (2, 5), (5, 6)]),
    "H11": lambda: _triangle_plus(7, [(0, 3), (0, 4), (3, 4), (1, 5), (2, 6)]),
}

_ALIASES = {"K1,3": "K13", "CLAW": "K13", "K_{1,3}": "K13", "N1,1,2": "N112", "H1,1": "H11"}


def parse_pattern(text: str) -> PatternId:
    """Parse names such as ``K1,3``, ``P6``, ``Z2``, ``N112`` (case-insensitive)."""
    s = text.strip().upper()
    s = _ALIASES.get(s, s)
    m = re.fullmatch(r"([PZ])(\d+)", s)
    if m:
        return PatternId(m.group(1), int(m.group(2)))
    if s in _FIXED:
        return PatternId(s)
    raise GraphError(f"unknown pattern {text!r}")


def parse_pattern_list(text: str) -> list[PatternId]:
    """Split a comma-separated list, keeping ``K1,3`` (and ``N1,1,2``) intact."""
    s = re.sub(r"(?i)K1,3", "K13", text)
    s = re.sub(r"(?i)N1,1,2", "N112", s)
    s = re.sub(r"(?i)H1,1", "H11", s)
    return [parse_pattern(tok) for tok in s.split(",") if tok.strip()]


@lru_cache(maxsize=None)
def build_pattern(pid: PatternId) -> Graph:
    if pid.name == "P":
        i = pid.param
        return new_graph(i, [(v, v + 1) for v in range(i - 1)])
    if pid.name == "Z":
        i = pid.param
        path = [0] + list(range(3, i + 3))
        return _triangle_plus(i + 3, list(zip(path, path[1:])))
    return _FIXED[pid.name]()


def as_graph(h: Graph | PatternId | str) -> Graph:
    if isinstance(h, Graph):
        return h
    if isinstance(h, str):
        h = parse_pattern(h)
    return build_pattern(h)


# -- induced embedding search ------------------------------------------------


@dataclass(frozen=True)
class Embedding:
    """Host vertex subset plus one witness map (pattern vertex i -> witness[i])."""

    subset: tuple[int, ...]
    witness: tuple[int, ...]

    @property
    def mask(self) -> int:
        m = 0
        for v in self.subset:
            m |= 1 << v
        return m


class _Plan:
    """Search order and per-step constraints for one pattern."""

    __slots__ = ("k", "order", "degree", "forward")

    def __init__(self, h: Graph):
        k = h.n
        deg = h.degrees
        # connected search order: start at max degree, then greedily the vertex
        # with most already-placed neighbours
        start = max(range(k), key=lambda v: (deg[v], -v))
        order = [start]
        placed = 1 << start
        while len(order) < k:
            best = max(
                (v for v in range(k) if not placed >> v & 1),
                key=lambda v: (bin(h.rows[v] & placed).count("1"), deg[v], -v),
            )
            order.append(best)
            placed |= 1 << best
        twin_less = set(_twin_constraints(h))
        self.k = k
        self.order = order
        self.degree = [deg[v] for v in order]
        # forward[i]: for each later step j, (j, adjacent?, +1 if img[j] must
        # exceed img[i], -1 if it must be smaller, 0 otherwise)
        self.forward = []
        for i, v in enumerate(order):
            fw = []
            for j in range(i + 1, k):
                u = order[j]
                rel = 1 if (v, u) in twin_less else -1 if (u, v) in twin_less else 0
                fw.append((j, h.has_edge(v, u), rel))
            self.forward.append(tuple(fw))


def _twin_constraints(h: Graph) -> list[tuple[int, int]]:
    """Pairs (a, b), a < b, of twins whose images are forced ascending.

    Any permutation inside a twin class is an automorphism, so ordering the
    images inside each class only removes duplicate witnesses of one subset.
    """
    classes: dict[tuple[str, int], list[int]] = {}
    for v in range(h.n):
        classes.setdefault(("open", h.rows[v]), []).append(v)
        classes.setdefault(("closed", h.rows[v] | 1 << v), []).append(v)
    taken = 0
    pairs = []
    for members in classes.values():
        if len(members) < 2 or any(taken >> v & 1 for v in members):
            continue
        for v in members:
            taken |= 1 << v
        for a, b in zip(members, members[1:]):
            pairs.append((a, b))
    return pairs


@lru_cache(maxsize=256)
def _plan_for(n: int, rows: tuple[int, ...]) -> _Plan:
    return _Plan(Graph(n, rows))


def _plan(h: Graph) -> _Plan:
    return _plan_for(h.n, h.rows)


def _search(g: Graph, plan: _Plan, heavy: list[int] | None, first_only: bool):
    """Backtracking with forward checking over bitset candidate domains.

    Placing a vertex narrows the domain of every later pattern vertex
    (adjacency, non-adjacency, twin order); an emptied domain cuts the branch.
    With ``heavy`` given, no two chosen vertices may form a heavy pair (used
    to look for a non-heavy copy).
    """
    rows = g.rows
    deg = g.degrees
    n = g.n
    k = plan.k
    found: dict[int, tuple[int, ...]] = {}
    if k > n:
        return found
    full = (1 << n) - 1
    max_pd = max(plan.degree) if k else 0
    at_least = [0] * (max_pd + 1)
    for v in range(n):
        d = deg[v]
        for t in range(min(d, max_pd) + 1):
            at_least[t] |= 1 << v
    forward = plan.forward
    img = [0] * k

    def rec(i: int, doms: list[int], used: int) -> bool:
        if i == k:
            if used not in found:
                found[used] = tuple(img)
            return first_only
        cand = doms[i]
        fw = forward[i]
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            img[i] = v
            keep = ~low if heavy is None else ~(low | heavy[v])
            nb = rows[v]
            below = (1 << v) - 1
            nd = list(doms)
            for j, adj, rel in fw:
                d = nd[j] & keep
                d &= nb if adj else ~nb
                if rel > 0:
                    d &= ~(below | low)
                elif rel < 0:
                    d &= below
                if not d:
                    break
                nd[j] = d
            else:
                if rec(i + 1, nd, used | low):
                    return True
        return False

    rec(0, [at_least[d] & full for d in plan.degree], 0)
    return found


def _to_embedding(order: Sequence[int], mask: int, img: Sequence[int]) -> Embedding:
    witness = [0] * len(order)
    for pos, pv in enumerate(order):
        witness[pv] = img[pos]
    return Embedding(tuple(bits(mask)), tuple(witness))


def enumerate_induced(g: Graph, h: Graph | PatternId | str) -> list[Embedding]:
    """All vertex subsets of ``g`` inducing a copy of ``h``, one witness each."""
    h = as_graph(h)
    plan = _plan(h)
    found = _search(g, plan, None, first_only=False)
    embs = [_to_embedding(plan.order, m, img) for m, img in found.items()]
    embs.sort(key=lambda e: e.subset)
    return embs


def is_free(g: Graph, h: Graph | PatternId | str) -> bool:
    h = as_graph(h)
    return not _search(g, _plan(h), None, first_only=True)


def is_heavy_embedding(g: Graph, e: Embedding) -> bool:
    """Does the subset contain a non-adjacent pair with degree sum >= n in ``g``?"""
    deg = g.degrees
    n = g.n
    s = e.subset
    for a in range(len(s)):
        for b in range(a + 1, len(s)):
            u, v = s[a], s[b]
            if not g.has_edge(u, v) and deg[u] + deg[v] >= n:
                return True
    return False


def find_light_embedding(
    g: Graph, h: Graph | PatternId | str, heavy: list[int] | None = None
) -> Embedding | None:
    """An induced copy of ``h`` that is not heavy, or None if ``g`` is h-heavy."""
    h = as_graph(h)
    plan = _plan(h)
    if heavy is None:
        heavy = heavy_rows(g)
    found = _search(g, plan, heavy, first_only=True)
    if not found:
        return None
    mask, img = next(iter(found.items()))
    return _to_embedding(plan.order, mask, img)


def is_h_heavy(g: Graph, h: Graph | PatternId | str, heavy: list[int] | None = None) -> bool:
    return find_light_embedding(g, h, heavy) is None


def is_family_heavy(g: Graph, hs: Iterable[Graph | PatternId | str]) -> bool:
    heavy = heavy_rows(g)
    return all(is_h_heavy(g, h, heavy) for h in hs)


CLAW_PARTNERS = ("P4", "P5", "C3", "Z1", "Z2", "B", "N", "W")
CLI_PATTERN_NAMES = ("K1,3", "P4", "P5", "P6", "P7", "C3", "Z1", "Z2", "Z3",
                     "B", "N", "W", "D", "H", "N112", "H11")
