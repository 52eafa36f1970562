"""Ore-cycles (o-cycles): vertex sequences whose consecutive pairs are edges
or have degree sum at least n, and their repair into genuine cycles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .graph import Graph, GraphError


class NotOreSequence(GraphError):
    """A consecutive pair lies outside the closure relation (or the sequence is malformed)."""


@dataclass(frozen=True)
class OreSequence:
    vertices: tuple[int, ...]
    cyclic: bool = True

    def __init__(self, vertices: Sequence[int], cyclic: bool = True):
        object.__setattr__(self, "vertices", tuple(vertices))
        object.__setattr__(self, "cyclic", cyclic)

    def pairs(self) -> list[tuple[int, int]]:
        vs = self.vertices
        out = list(zip(vs, vs[1:]))
        if self.cyclic and len(vs) > 2:
            out.append((vs[-1], vs[0]))
        return out


def _as_seq(s, cyclic: bool) -> OreSequence:
    return s if isinstance(s, OreSequence) else OreSequence(s, cyclic)


def certify(g: Graph, s: OreSequence) -> int:
    """Check ``s`` is an o-cycle/o-path of ``g``; returns its deficit."""
    vs = s.vertices
    if len(set(vs)) != len(vs):
        raise NotOreSequence("repeated vertex in sequence")
    if s.cyclic and len(vs) < 3:
        raise NotOreSequence("an o-cycle needs at least 3 vertices")
    for v in vs:
        if not 0 <= v < g.n:
            raise NotOreSequence(f"vertex {v} out of range")
    deg = g.degrees
    deficit = 0
    for u, v in s.pairs():
        if g.has_edge(u, v):
            continue
        if deg[u] + deg[v] < g.n:
            raise NotOreSequence(
                f"pair ({u}, {v}) is neither an edge nor heavy: {deg[u]} + {deg[v]} < {g.n}"
            )
        deficit += 1
    return deficit


def deficit(g: Graph, s: OreSequence | Sequence[int], cyclic: bool = True) -> int:
    return certify(g, _as_seq(s, cyclic))


def _first_virtual(g: Graph, seq: list[int]) -> int | None:
    k = len(seq)
    for i in range(k):
        if not g.has_edge(seq[i], seq[(i + 1) % k]):
            return i
    return None


def repair(
    g: Graph,
    c: OreSequence | Sequence[int],
    trace: Callable[[list[int], int], None] | None = None,
) -> tuple[int, ...]:
    """Turn an o-cycle into a genuine cycle of ``g`` containing all its vertices.

    Repeatedly fixes the first non-edge pair ``(v_k, v_1)`` (rotated so the
    sequence reads ``v_1 .. v_k``): splice in the smallest common neighbour
    outside the sequence if there is one, otherwise reroute at the smallest
    crossing index ``i`` with ``v_i ~ v_1`` and ``v_{i-1} ~ v_k``.  Each round
    lowers the deficit by at least one.  ``trace`` sees every intermediate
    sequence together with its deficit.
    """
    s = _as_seq(c, True)
    if not s.cyclic:
        raise NotOreSequence("repair needs a cyclic sequence")
    current = certify(g, s)
    seq = list(s.vertices)
    if trace:
        trace(list(seq), current)
    rows = g.rows
    while current:
        i = _first_virtual(g, seq)
        # rotate so that the virtual pair is (last, first)
        seq = seq[i + 1:] + seq[: i + 1]
        v1, vk = seq[0], seq[-1]
        inside = 0
        for v in seq:
            inside |= 1 << v
        common = rows[v1] & rows[vk] & ~inside
        if common:
            x = (common & -common).bit_length() - 1
            seq.append(x)
        else:
            k = len(seq)
            for j in range(1, k - 1):
                if rows[v1] >> seq[j] & 1 and rows[vk] >> seq[j - 1] & 1:
                    seq = seq[:j] + seq[j:][::-1]
                    break
            else:
                raise AssertionError("no crossing index; the degree-sum argument failed")
        new = certify(g, OreSequence(seq))
        if new >= current:
            raise AssertionError("deficit did not decrease")
        current = new
        if trace:
            trace(list(seq), current)
    return tuple(seq)


def no_long_opath_edge(
    g: Graph, p: OreSequence | Sequence[int], circumference: int
) -> bool:
    """Cross-check: an o-path longer than the circumference has endpoints
    outside the closure relation.  Returns True when that consequence holds
    (vacuously for paths that are not longer than the circumference or that
    have fewer than 3 vertices, which cannot close into a cycle).
    """
    s = _as_seq(p, False)
    certify(g, OreSequence(s.vertices, cyclic=False))
    vs = s.vertices
    if len(vs) <= circumference or len(vs) < 3:
        return True
    x, y = vs[0], vs[-1]
    deg = g.degrees
    return not g.has_edge(x, y) and deg[x] + deg[y] < g.n


def closure_rows(g: Graph) -> list[int]:
    """Adjacency rows of the closure relation (edges plus heavy pairs)."""
    deg = g.degrees
    n = g.n
    out = []
    for v in range(n):
        r = g.rows[v]
        for u in range(n):
            if u != v and deg[u] + deg[v] >= n:
                r |= 1 << u
        out.append(r)
    return out

