import pytest
from hypothesis import given, settings, strategies as st

from homcx.errors import CapExceeded
from homcx.graph import complete, cycle, path
from homcx.homs import (
    count_homs, elimination_order, enumerate_homs, format_coloring, is_homomorphism, parse_coloring,
)

from oracles import brute_homs
from test_graph import graphs


def test_k2_to_k3():
    hs = enumerate_homs(complete(2), complete(3))
    assert len(hs) == 6 == len(brute_homs(complete(2), complete(3)))
    assert list(hs)[0] == (0, 1)


def test_k3_to_k2_is_empty():
    assert len(enumerate_homs(complete(3), complete(2))) == 0


def test_g9_to_k5(g9_homs):
    assert len(g9_homs) == 4080


@pytest.mark.parametrize(
    "g, h, n",
    [(complete(2), complete(2), 2), (cycle(5), complete(3), 30)],
)
def test_count_examples(g, h, n):
    assert count_homs(g, h) == n == len(brute_homs(g, h))


def test_count_g9(g9):
    assert count_homs(g9, complete(5)) == 4080


def test_sorted_and_indexed(g9_homs):
    cols = list(g9_homs)
    assert cols == sorted(set(cols))
    assert all(g9_homs.position(c) == i for i, c in enumerate(cols))
    assert all(is_homomorphism(g9_homs.g, g9_homs.h, c) for c in cols)


def test_position_rejects_non_member(g9_homs):
    with pytest.raises(KeyError):
        g9_homs.position((0,) * 9)


def test_threads_match_serial(g9):
    assert enumerate_homs(g9, complete(5), threads=4).colorings == enumerate_homs(g9, complete(5)).colorings


def test_cap():
    with pytest.raises(CapExceeded):
        enumerate_homs(path(4), complete(4), max_colorings=10)
    with pytest.raises(CapExceeded):
        enumerate_homs(path(4), complete(4), max_colorings=10, threads=3)


def test_elimination_order(g9):
    order = elimination_order(g9)
    assert order[-1] == 8 and order[:8] == list(range(8))


def test_coloring_text_form():
    assert format_coloring((0, 4, 2)) == "1 5 3"
    assert parse_coloring("1 5 3") == (0, 4, 2)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=5), graphs(max_n=4))
def test_oracle_equivalence(g, h):
    assert list(enumerate_homs(g, h)) == brute_homs(g, h)
    assert count_homs(g, h) == len(brute_homs(g, h))


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6), st.randoms(use_true_random=False))
def test_count_invariant_under_relabeling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = cycle(5)
    hperm = [2, 4, 1, 0, 3]
    assert count_homs(g.relabel(perm), h) == count_homs(g, h) == count_homs(g, h.relabel(hperm))
