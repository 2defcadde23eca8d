import random

import pytest

from dicrit.core import (
    DigraphError,
    biorient,
    complement,
    complete_graph,
    cycle_graph,
    degrees,
    delete_arc,
    delete_vertex,
    digraph_from_rows,
    induced,
    is_acyclic,
    make_digraph,
    make_graph,
    relabel,
    transpose_rows,
)
from dicrit.extremal import all_digraph_rows

from helpers import has_cycle_brute, random_digraph


def test_directed_triangle():
    d = make_digraph(3, [(0, 1), (1, 2), (2, 0)])
    assert d.num_arcs == 3
    assert degrees(d) == [(1, 1)] * 3


def test_single_vertex_and_digon():
    assert make_digraph(1, []).num_arcs == 0
    digon = make_digraph(2, [(0, 1), (1, 0)])
    assert digon.num_arcs == 2
    assert not is_acyclic(digon)


def test_construction_errors():
    with pytest.raises(DigraphError, match=r"duplicate arc \(0,1\)"):
        make_digraph(2, [(0, 1), (0, 1)])
    with pytest.raises(DigraphError, match=r"loop"):
        make_digraph(2, [(1, 1)])
    with pytest.raises(DigraphError, match=r"outside"):
        make_digraph(2, [(0, 2)])
    with pytest.raises(DigraphError, match=r"exceeds"):
        make_digraph(65, [])


def test_biorient():
    assert biorient(complete_graph(2)).arcs() == [(0, 1), (1, 0)]
    assert biorient(complete_graph(1)).num_arcs == 0
    d = biorient(cycle_graph(5))
    assert d.num_arcs == 10
    assert degrees(d) == [(2, 2)] * 5


def test_complement_complete_and_empty():
    assert complement(biorient(complete_graph(3))).num_arcs == 0
    no_arcs = make_digraph(4, [])
    assert complement(no_arcs) == biorient(complete_graph(4))


def test_complement_directed_triangle_reversed():
    c3 = make_digraph(3, [(0, 1), (1, 2), (2, 0)])
    assert complement(c3).arcs() == [(0, 2), (1, 0), (2, 1)]


def test_complement_involution_and_arc_count_exhaustive_n3():
    for rows in all_digraph_rows(3):
        d = digraph_from_rows(3, rows)
        assert complement(complement(d)) == d
        assert d.num_arcs + complement(d).num_arcs == 3 * 2


def test_induced():
    c3 = make_digraph(3, [(0, 1), (1, 2), (2, 0)])
    sub, old = induced(c3, {0, 1})
    assert old == (0, 1) and sub.arcs() == [(0, 1)]
    assert induced(c3, range(3))[0] == c3
    k4 = biorient(complete_graph(4))
    assert induced(k4, {1, 3})[0].arcs() == [(0, 1), (1, 0)]


def test_delete_arc_and_vertex():
    c3 = make_digraph(3, [(0, 1), (1, 2), (2, 0)])
    assert is_acyclic(delete_arc(c3, (0, 1)))
    with pytest.raises(DigraphError):
        delete_arc(c3, (1, 0))
    gone, old = delete_vertex(make_digraph(1, []), 0)
    assert gone.n == 0 and old == ()
    k3 = biorient(complete_graph(3))
    assert delete_arc(k3, (0, 1)).num_arcs == 5
    sub, old = delete_vertex(c3, 1)
    assert sub.n == 2 and old == (0, 2) and sub.arcs() == [(1, 0)]
    with pytest.raises(DigraphError):
        delete_vertex(c3, 3)


def test_is_acyclic_examples():
    assert not is_acyclic(make_digraph(2, [(0, 1), (1, 0)]))
    tournament = make_digraph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert is_acyclic(tournament)
    assert is_acyclic(make_digraph(3, [(1, 2), (2, 0)]))


def test_is_acyclic_against_brute_cycle_search_n_le_4():
    for n in range(5):
        for rows in all_digraph_rows(n):
            d = digraph_from_rows(n, rows)
            assert is_acyclic(d) == (not has_cycle_brute(d))


def test_degrees_examples():
    cyc = make_digraph(6, [(v, (v + 1) % 6) for v in range(6)])
    assert degrees(cyc) == [(1, 1)] * 6
    assert degrees(biorient(complete_graph(4))) == [(3, 3)] * 4
    assert degrees(make_digraph(2, [(0, 1)])) == [(1, 0), (0, 1)]


def test_transpose_consistency_random():
    rng = random.Random(11)
    for _ in range(50):
        d = random_digraph(rng, rng.randint(1, 8))
        assert d.in_adj == transpose_rows(d.n, d.out_adj)
        assert d.num_arcs == sum(r.bit_count() for r in d.in_adj)


def test_relabel_roundtrip():
    rng = random.Random(13)
    for _ in range(25):
        d = random_digraph(rng, 6)
        perm = list(range(6))
        rng.shuffle(perm)
        inverse = [0] * 6
        for old, new in enumerate(perm):
            inverse[new] = old
        assert relabel(relabel(d, perm), inverse) == d


def test_graph_errors():
    with pytest.raises(DigraphError):
        make_graph(3, [(0, 0)])
    with pytest.raises(DigraphError):
        make_graph(3, [(0, 1), (1, 0)])
    g = make_graph(3, [(0, 1)])
    assert g.num_edges == 1 and g.has_edge(1, 0)
