from itertools import permutations

import pytest

from homcx.counterexample import parse_grid
from homcx.flip import UnionFind, build_flip_graph, components, is_edge, shortest_path
from homcx.graph import complete, cycle, path
from homcx.homs import enumerate_homs

from oracles import brute_components, brute_flip_edges


def flip(g, h):
    return build_flip_graph(enumerate_homs(g, h))


def test_k2_k3_is_a_six_cycle():
    fg = flip(complete(2), complete(3))
    assert len(fg) == 6 and fg.edge_count == 6
    assert all(len(a) == 2 for a in fg.adjacency)
    assert components(fg).component_count == 1


def test_k2_k2_has_no_edges():
    fg = flip(complete(2), complete(2))
    assert fg.edge_count == 0
    rep = components(fg)
    assert rep.component_count == 2 and rep.component_sizes == (1, 1)
    assert shortest_path(fg, (0, 1), (1, 0)) is None


def test_empty_homset():
    rep = components(flip(complete(3), complete(2)))
    assert rep.component_count == 0 and rep.component_sizes == ()


def test_g9_connected(g9_flip):
    rep = components(g9_flip)
    assert rep.component_count == 1 and rep.component_sizes == (4080,)


def test_h1234a_square_is_a_path(g9_flip):
    rows = ["514", "515", "545", "541"]
    cols = [parse_grid(f"132 {r} 423") for r in rows]
    for a, b in zip(cols, cols[1:]):
        assert is_edge(g9_flip, a, b)
    idx = {g9_flip.homset.position(c) for c in cols}
    internal = sum(1 for i in idx for j in g9_flip.adjacency[i] if j in idx) // 2
    assert internal == 3


def test_is_edge_examples(g9_flip):
    a = parse_grid("132 514 423")
    assert is_edge(g9_flip, a, parse_grid("132 515 423"))
    assert not is_edge(g9_flip, a, parse_grid("132 545 423"))
    assert not is_edge(g9_flip, a, a)
    with pytest.raises(KeyError):
        is_edge(g9_flip, a, (0,) * 9)


def test_shortest_path_s_to_t(g9_flip):
    s, t = parse_grid("132 254 413"), parse_grid("142 351 423")
    p = shortest_path(g9_flip, s, t)
    assert p[0] == s and p[-1] == t
    for a, b in zip(p, p[1:]):
        assert sum(x != y for x, y in zip(a, b)) == 1
    assert shortest_path(g9_flip, s, s) == [s]


def test_shortest_path_is_minimal():
    fg = flip(complete(2), complete(3))
    p = shortest_path(fg, (0, 1), (1, 0))
    assert len(p) == 4  # antipodal on the 6-cycle


PAIRS = [
    (complete(2), complete(3)),
    (complete(2), complete(4)),
    (cycle(5), complete(3)),
    (cycle(4), complete(3)),
    (path(3), complete(3)),
    (path(4), cycle(5)),
    (cycle(6), complete(3)),
]


@pytest.mark.parametrize("g, h", PAIRS)
def test_oracle_adjacency(g, h):
    fg = flip(g, h)
    assert set(fg.edges()) == brute_flip_edges(list(fg.homset))
    assert components(fg).component_count == brute_components(len(fg), list(fg.edges()))


@pytest.mark.parametrize("g, h", PAIRS[:4])
def test_color_permutation_invariance(g, h):
    base = flip(g, h)
    degrees = sorted(len(a) for a in base.adjacency)
    sizes = components(base).component_sizes
    for perm in permutations(range(h.n)):
        fg = flip(g, h.relabel(list(perm)))
        assert fg.edge_count == base.edge_count
        assert sorted(len(a) for a in fg.adjacency) == degrees
        assert components(fg).component_sizes == sizes


def test_threads_match_serial(g9_homs, g9_flip):
    assert build_flip_graph(g9_homs, threads=4).adjacency == g9_flip.adjacency


def test_dot_export():
    dot = flip(complete(2), complete(3)).to_dot()
    assert dot.startswith("graph flip {")
    assert dot.count(" -- ") == 6
    assert '[label="1 2"]' in dot


def test_union_find():
    uf = UnionFind(5)
    assert uf.union(0, 1) and uf.union(3, 4) and not uf.union(1, 0)
    assert uf.count == 3
    assert uf.find(0) == uf.find(1) != uf.find(2)
