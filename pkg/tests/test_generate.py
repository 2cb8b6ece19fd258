import pytest

from hgo.canonical import canonical_graph, canonical_orbit
from hgo.config import Limits
from hgo.errors import TypeTooLarge
from hgo.generate import (brute_force_graphs, expand_edge_color, expand_vertex,
                          expand_vertex_colors, generate_graphs, generate_orbits, orbit_keys_of)
from hgo.graph import deserialize, is_connected

from conftest import ref_catalog

SMALL_TYPES = [(n, v, e) for n in (1, 2, 3, 4) for v in (1, 2) for e in (1, 2)]


def test_example_graph_catalog_4_1_1():
    cat = generate_graphs(4, 1, 1)
    assert len(cat) == 11
    assert cat.keys[:4] == (
        (0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, 0, 0, 0, 0, 1, 0),
        (0, 0, 0, 0, 0, 0, 0, 1, 1, 0),
        (0, 0, 0, 0, 0, 0, 1, 1, 1, 0),
    )


def test_directed_triples():
    cat = generate_graphs(3, 1, 1, directed=True)
    assert len(cat) == 16
    assert list(cat.keys) == ref_catalog(3, 1, 1, True)


def test_directed_pairs_orbits():
    cat = generate_orbits(2, 1, 1, directed=True)
    # empty pair, tail of an arc, head of an arc, vertex of a 2-cycle
    assert cat.keys == ((0, 0, 0, 0), (0, 0, 1, 0), (0, 1, 0, 0), (0, 1, 1, 0))


def test_orbits_3_1_1():
    assert len(generate_orbits(3, 1, 1)) == 6


def test_expansions():
    base = brute_force_graphs(3, 1, 1)
    assert len(base) == 4
    four = expand_vertex(base)
    assert four == generate_graphs(4, 1, 1)
    assert len(expand_edge_color(base)) == 10
    colored = expand_vertex_colors(base, 2)
    assert len(colored) == 20
    assert colored.descriptor.max_vertex_colors == 2


@pytest.mark.parametrize("n, v, e", SMALL_TYPES)
def test_catalog_invariants(n, v, e):
    graphs = generate_graphs(n, v, e)
    orbits = generate_orbits(n, v, e)
    assert list(graphs.keys) == sorted(set(graphs.keys))
    for key in graphs:
        g = deserialize(key, False)
        assert g.order == n
        assert canonical_graph(g) == key
        assert max(g.vertex_color) < v
        assert max((c for row in g.edge_color for c in row), default=0) <= e
    for key in orbits:
        assert canonical_orbit(deserialize(key, False), 0) == key
    assert sum(len(orbit_keys_of(k, False)) for k in graphs) == len(orbits)
    conn = generate_graphs(n, v, e, connected_only=True)
    assert conn.keys == tuple(k for k in graphs if is_connected(deserialize(k, False)))
    assert set(generate_graphs(n, v + 1, e).keys) >= set(graphs.keys)
    assert set(generate_graphs(n, v, e + 1).keys) >= set(graphs.keys)
    assert set(generate_orbits(n, v + 1, e).keys) >= set(orbits.keys)


def test_connected_orbits_follow_host_connectivity():
    conn = generate_orbits(4, 1, 1, connected_only=True)
    assert len(conn) == 11
    for key in conn:
        assert is_connected(deserialize(key, False))


def test_guards():
    with pytest.raises(TypeTooLarge):
        generate_graphs(6, 1, 1)
    with pytest.raises(TypeTooLarge):
        generate_graphs(4, 1, 1, limits=Limits(max_catalog_size=5))
    assert len(generate_graphs(6, 1, 1, limits=Limits(max_generate_order=6))) == 156


def test_brute_force_and_pruned_methods_agree():
    assert generate_orbits(4, 2, 1, method="pruned") == generate_orbits(4, 2, 1, method="brute")


# Graph and orbit counts of every type at most (n, v_c, e_c) from the literature.
SIZES = {
    (3, 1, 1): (4, 6), (3, 1, 2): (10, 18), (3, 1, 3): (20, 40), (3, 1, 4): (35, 75),
    (3, 1, 5): (56, 126), (3, 2, 1): (20, 40), (3, 2, 2): (56, 126), (3, 2, 3): (120, 288),
    (3, 2, 4): (220, 550), (3, 2, 5): (364, 936), (3, 3, 1): (56, 126), (3, 3, 2): (165, 405),
    (3, 3, 3): (364, 936), (3, 3, 4): (680, 1800), (3, 3, 5): (1140, 3078),
    (4, 1, 1): (11, 20), (4, 1, 2): (66, 165), (4, 1, 3): (276, 816), (4, 1, 4): (900, 2925),
    (4, 1, 5): (2451, 8436), (4, 2, 1): (90, 240), (4, 2, 2): (705, 2280),
    (4, 2, 3): (3400, 11968), (4, 3, 1): (357, 1092), (4, 3, 2): (3132, 10962),
    (5, 1, 1): (34, 90), (5, 1, 2): (792, 3132), (5, 2, 1): (544, 1992), (5, 3, 1): (3258, 13338),
}
SLOW_SIZES = {
    (4, 2, 4): (12025, 44200), (4, 2, 5): (34410, 129648), (4, 3, 3): (15900, 58800),
    (4, 3, 4): (57750, 219450), (4, 3, 5): (167805, 647460),
    (5, 1, 3): (10688, 48400), (5, 2, 2): (19548, 88452),
}


@pytest.mark.parametrize("cell", list(SIZES))
def test_published_sizes(cell):
    assert (len(generate_graphs(*cell)), len(generate_orbits(*cell))) == SIZES[cell]


@pytest.mark.slow
@pytest.mark.parametrize("cell", list(SLOW_SIZES))
def test_published_sizes_large(cell):
    assert (len(generate_graphs(*cell)), len(generate_orbits(*cell))) == SLOW_SIZES[cell]
