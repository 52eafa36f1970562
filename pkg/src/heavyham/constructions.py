"""The two non-Hamiltonian witness families.

``build_F(r)``: a clique ``W = {w_1..w_r}``; three satellite triangles
``x_i y_i z_i``; every ``x_i`` joined to all of ``W``; the ``z_i`` form a
triangle.  Vertex ids: ``W = 0..r-1``, then ``x_1, y_1, z_1, x_2, ..., z_3``.

``build_G_prime(r)``: ``F(r)`` with ``x_i`` cut off from the i-th third of ``W``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, new_graph


@dataclass(frozen=True)
class FamilyInstance:
    graph: Graph
    labels: dict[str, int]

    @property
    def clique(self) -> list[int]:
        return [v for k, v in self.labels.items() if k.startswith("w")]

    def vertex(self, name: str) -> int:
        return self.labels[name]


def _labels(r: int) -> dict[str, int]:
    labels = {f"w{i + 1}": i for i in range(r)}
    for i in range(3):
        base = r + 3 * i
        labels[f"x{i + 1}"] = base
        labels[f"y{i + 1}"] = base + 1
        labels[f"z{i + 1}"] = base + 2
    return labels


def _edges_F(r: int, labels: dict[str, int]) -> set[tuple[int, int]]:
    edges = set(combinations(range(r), 2))
    for i in (1, 2, 3):
        x, y, z = labels[f"x{i}"], labels[f"y{i}"], labels[f"z{i}"]
        edges.update((w, x) for w in range(r))
        edges.update({(x, y), (x, z), (y, z)})
    z1, z2, z3 = labels["z1"], labels["z2"], labels["z3"]
    edges.update({(z1, z2), (z2, z3), (z1, z3)})
    return edges


def build_F(r: int) -> FamilyInstance:
    """{K_{1,3}, P_6}-heavy, 2-connected, non-Hamiltonian for r >= 5."""
    if r < 3:
        raise GraphError("build_F needs r >= 3")
    labels = _labels(r)
    return FamilyInstance(new_graph(r + 9, _edges_F(r, labels)), labels)


def build_G_prime(r: int) -> FamilyInstance:
    """Claw-free variant; P_6-heavy and non-Hamiltonian for r >= 15."""
    if r < 3 or r % 3:
        raise GraphError("build_G_prime needs r >= 3 divisible by 3")
    labels = _labels(r)
    edges = _edges_F(r, labels)
    third = r // 3
    for i in range(3):
        x = labels[f"x{i + 1}"]
        for w in range(i * third, (i + 1) * third):
            edges.discard((w, x))
    return FamilyInstance(new_graph(r + 9, edges), labels)


FAMILIES = {"F": build_F, "GPRIME": build_G_prime, "G'": build_G_prime}


def build_family(name: str, r: int) -> FamilyInstance:
    key = name.strip().upper()
    if key not in FAMILIES:
        raise GraphError(f"unknown family {name!r} (expected F or Gprime)")
    return FAMILIES[key](r)
