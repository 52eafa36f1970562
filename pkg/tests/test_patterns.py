import itertools
import random

import pytest

from heavyham.constructions import build_F, build_G_prime
from heavyham.graph import GraphError, cycle_graph, induced_subgraph, new_graph
from heavyham.patterns import (
    CLAW_PARTNERS,
    CLI_PATTERN_NAMES,
    Embedding,
    PatternId,
    build_pattern,
    enumerate_induced,
    find_light_embedding,
    is_family_heavy,
    is_free,
    is_h_heavy,
    is_heavy_embedding,
    parse_pattern,
    parse_pattern_list,
)

from instances import random_graph
from oracles import induced_subsets_bruteforce, iso_codes

CLAW = parse_pattern("K1,3")

# (vertices, edges) from the structural definitions
SIZES = {
    "K1,3": (4, 3), "C3": (3, 3), "B": (5, 5), "N": (6, 6), "W": (6, 6), "D": (7, 7),
    "H": (5, 6), "N112": (7, 7), "H11": (7, 8),
}


@pytest.mark.parametrize("name,size", SIZES.items())
def test_fixed_pattern_sizes(name, size):
    g = build_pattern(parse_pattern(name))
    assert (g.n, g.num_edges()) == size


@pytest.mark.parametrize("i", range(1, 8))
def test_parameterized_sizes(i):
    p = build_pattern(PatternId("P", i))
    z = build_pattern(PatternId("Z", i))
    assert (p.n, p.num_edges()) == (i, i - 1)
    assert (z.n, z.num_edges()) == (i + 3, i + 3)


def test_z2_and_claw_shape():
    z2 = build_pattern(parse_pattern("Z2"))
    assert (z2.n, z2.num_edges()) == (5, 5)
    claw = build_pattern(CLAW)
    assert sorted(claw.degrees) == [1, 1, 1, 3] and claw.degrees[0] == 3


def test_triangle_based_degree_sequences():
    deg = lambda name: sorted(build_pattern(parse_pattern(name)).degrees)
    assert deg("B") == [1, 1, 2, 3, 3]
    assert deg("N") == [1, 1, 1, 3, 3, 3]
    assert deg("W") == [1, 1, 2, 2, 3, 3]
    assert deg("D") == [1, 1, 2, 2, 2, 3, 3]
    assert deg("H") == [2, 2, 2, 2, 4]
    assert deg("N112") == [1, 1, 1, 2, 3, 3, 3]
    assert deg("H11") == [1, 1, 2, 2, 3, 3, 4]


def test_parse_and_errors():
    assert [str(p) for p in parse_pattern_list("K1,3,P6,n1,1,2,H1,1,z3")] == ["K1,3", "P6", "N112", "H11", "Z3"]
    for name in CLI_PATTERN_NAMES:
        assert parse_pattern(name.lower()) == parse_pattern(name)
    with pytest.raises(GraphError):
        parse_pattern("Q7")
    with pytest.raises(GraphError):
        PatternId("P", 0)
    with pytest.raises(GraphError):
        PatternId("B", 2)


def test_enumerate_examples():
    claw = build_pattern(CLAW)
    assert [e.subset for e in enumerate_induced(claw, CLAW)] == [(0, 1, 2, 3)]
    assert enumerate_induced(cycle_graph(6), CLAW) == []
    f = build_F(5)
    embs = enumerate_induced(f.graph, CLAW)
    xs = {f.vertex(f"x{i}") for i in (1, 2, 3)}
    assert len(embs) == 5
    assert all(set(e.subset) - xs <= set(f.clique) and len(set(e.subset) & xs) == 3 for e in embs)


def test_witness_is_an_isomorphism():
    rng = random.Random(4)
    for _ in range(200):
        g = random_graph(rng, rng.randint(4, 9), rng.uniform(0.2, 0.8))
        for name in ("K1,3", "P4", "B", "W", "H"):
            h = build_pattern(parse_pattern(name))
            for e in enumerate_induced(g, h):
                assert sorted(e.witness) == list(e.subset)
                for a, b in itertools.combinations(range(h.n), 2):
                    assert h.has_edge(a, b) == g.has_edge(e.witness[a], e.witness[b])


def test_free_examples():
    assert is_free(cycle_graph(5), CLAW)
    assert not is_free(build_F(5).graph, CLAW)
    assert is_free(build_G_prime(15).graph, CLAW)


def test_heavy_embedding_examples():
    f = build_F(5)
    emb = enumerate_induced(f.graph, CLAW)[0]
    assert is_heavy_embedding(f.graph, emb)
    k4 = new_graph(4, itertools.combinations(range(4), 2))
    assert not is_heavy_embedding(k4, Embedding((0, 1, 2), (0, 1, 2)))
    claw = build_pattern(CLAW)
    assert not is_heavy_embedding(claw, enumerate_induced(claw, CLAW)[0])


def test_heavy_examples():
    g = build_F(5).graph
    assert is_h_heavy(g, CLAW)
    assert is_h_heavy(g, "P6")
    assert is_h_heavy(cycle_graph(6), "P6")
    assert is_family_heavy(g, ["K1,3", "P6"])
    assert is_family_heavy(g, [])
    assert not is_family_heavy(build_pattern(CLAW), [CLAW])


def test_light_embedding_is_really_light():
    rng = random.Random(8)
    for _ in range(300):
        g = random_graph(rng, rng.randint(4, 10), rng.uniform(0.3, 0.8))
        for name in ("K1,3", "P4", "Z2", "W"):
            light = find_light_embedding(g, name)
            embs = enumerate_induced(g, name)
            heavy_all = all(is_heavy_embedding(g, e) for e in embs)
            assert (light is None) == heavy_all
            if light is not None:
                assert not is_heavy_embedding(g, light)
                assert light.subset in {e.subset for e in embs}


def test_heaviness_monotone_into_w():
    # W contains induced P4, P5, C3, Z1, Z2 and B, so heaviness of those forces W-heaviness
    w = build_pattern(parse_pattern("W"))
    for name in ("P4", "P5", "C3", "Z1", "Z2", "B"):
        assert enumerate_induced(w, name)
    rng = random.Random(21)
    for _ in range(400):
        g = random_graph(rng, rng.randint(6, 11), rng.uniform(0.3, 0.9))
        if not is_h_heavy(g, "W"):
            for name in ("P4", "P5", "C3", "Z1", "Z2", "B"):
                assert not is_h_heavy(g, name)


def test_free_implies_heavy():
    rng = random.Random(5)
    for _ in range(300):
        g = random_graph(rng, rng.randint(3, 9), rng.uniform(0.1, 0.9))
        for name in CLI_PATTERN_NAMES:
            if is_free(g, name):
                assert is_h_heavy(g, name)


def test_enumerate_matches_bruteforce_random():
    rng = random.Random(12)
    pats = [build_pattern(parse_pattern(n)) for n in CLI_PATTERN_NAMES]
    for _ in range(120):
        g = random_graph(rng, rng.randint(3, 8), rng.uniform(0.2, 0.8))
        for h in pats:
            if h.n > g.n:
                continue
            got = [e.subset for e in enumerate_induced(g, h)]
            assert got == induced_subsets_bruteforce(g, h)


def test_claw_partner_list():
    assert CLAW_PARTNERS == ("P4", "P5", "C3", "Z1", "Z2", "B", "N", "W")


def test_iso_table_counts_automorphisms():
    # number of labelings of K1,3 on 4 vertices is 4!/|Aut| = 24/6
    assert iso_codes(build_pattern(CLAW)).sum() == 4
    sub, _ = induced_subgraph(build_pattern(parse_pattern("H11")), range(5))
    assert sub == build_pattern(parse_pattern("H"))
