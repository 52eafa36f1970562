import pytest

from heavyham.constructions import build_F, build_G_prime, build_family
from heavyham.cycles import Status, find_hamiltonian_cycle
from heavyham.graph import GraphError, is_two_connected
from heavyham.patterns import enumerate_induced, is_free, is_h_heavy


def test_f5_counts_and_degrees():
    f = build_F(5)
    g = f.graph
    assert (g.n, g.num_edges()) == (14, 37)
    for i in (1, 2, 3):
        assert g.degrees[f.vertex(f"x{i}")] == 7
        assert g.degrees[f.vertex(f"y{i}")] == 2
        assert g.degrees[f.vertex(f"z{i}")] == 4
    assert all(g.degrees[w] == 7 for w in f.clique)


def test_labels_are_a_bijection():
    f = build_F(6)
    assert sorted(f.labels.values()) == list(range(15))
    assert f.clique == list(range(6))
    assert (f.vertex("x1"), f.vertex("y1"), f.vertex("z3")) == (6, 7, 14)


@pytest.mark.parametrize("r", [5, 6, 7, 8])
def test_f_pipeline(r):
    g = build_F(r).graph
    assert g.num_edges() == r * (r - 1) // 2 + 3 * r + 12
    assert is_two_connected(g)
    assert is_h_heavy(g, "K1,3") and is_h_heavy(g, "P6")
    assert find_hamiltonian_cycle(g).status is Status.NOT_HAMILTONIAN


def test_f4_not_claw_heavy():
    g = build_F(4).graph
    assert not is_h_heavy(g, "K1,3")


def test_every_induced_p6_of_f5_holds_two_xs():
    f = build_F(5)
    xs = {f.vertex(f"x{i}") for i in (1, 2, 3)}
    embs = enumerate_induced(f.graph, "P6")
    assert embs
    assert all(len(set(e.subset) & xs) >= 2 for e in embs)


@pytest.mark.parametrize("r", [15, 18])
def test_g_prime_pipeline(r):
    f = build_G_prime(r)
    g = f.graph
    assert g.n == r + 9
    assert all(g.degrees[f.vertex(f"x{i}")] == 2 * r // 3 + 2 for i in (1, 2, 3))
    assert is_two_connected(g)
    assert is_free(g, "K1,3")
    assert is_h_heavy(g, "P6")
    assert find_hamiltonian_cycle(g).status is Status.NOT_HAMILTONIAN


def test_g_prime_below_threshold_not_p6_heavy():
    # the x-pairs reach degree sum n exactly from r = 15 on
    assert not is_h_heavy(build_G_prime(12).graph, "P6")


def test_forced_edges_at_degree_two_vertices():
    f = build_F(5)
    g = f.graph
    for i in (1, 2, 3):
        y = f.vertex(f"y{i}")
        assert sorted(g.neighbors(y)) == sorted([f.vertex(f"x{i}"), f.vertex(f"z{i}")])


def test_errors_and_lookup():
    with pytest.raises(GraphError):
        build_F(2)
    with pytest.raises(GraphError):
        build_G_prime(16)
    with pytest.raises(GraphError):
        build_family("Q", 5)
    assert build_family("gprime", 15).graph == build_G_prime(15).graph
    assert build_family("F", 5).graph == build_F(5).graph
