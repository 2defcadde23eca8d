import random

import pytest

from dicrit.core import (
    biorient,
    complete_graph,
    cycle_graph,
    delete_arc,
    digraph_from_rows,
    make_digraph,
    make_graph,
)
from dicrit.coloring import (
    Coloring,
    brute_force_dichromatic,
    chromatic_number,
    dichromatic_number,
    exists_acyclic_k_coloring,
    is_acyclic_coloring,
)
from dicrit.constructions import bidirected_complete, bidirected_cycle, dirac_join, directed_cycle
from dicrit.extremal import all_digraph_rows

from helpers import random_digraph, random_graph_edges

C3 = directed_cycle(3)


def test_acyclic_coloring_predicate():
    assert is_acyclic_coloring(C3, Coloring((1, 1, 2), 2))
    assert not is_acyclic_coloring(C3, Coloring((1, 1, 1), 1))
    assert is_acyclic_coloring(bidirected_complete(3), Coloring((1, 2, 3), 3))


def test_predicate_rejects_bad_cover():
    with pytest.raises(ValueError):
        is_acyclic_coloring(C3, Coloring((1, 2), 2))
    with pytest.raises(ValueError):
        Coloring((1, 3), 2)


def test_decision_examples():
    assert not exists_acyclic_k_coloring(C3, 1).satisfiable
    assert exists_acyclic_k_coloring(C3, 2).satisfiable
    assert not exists_acyclic_k_coloring(bidirected_complete(4), 3).satisfiable


def test_witness_soundness_and_determinism():
    rng = random.Random(5)
    for _ in range(80):
        d = random_digraph(rng, rng.randint(0, 7), p=rng.choice([0.2, 0.4, 0.6]))
        for k in range(0, d.n + 2):
            first = exists_acyclic_k_coloring(d, k)
            again = exists_acyclic_k_coloring(d, k)
            assert first == again
            if first.satisfiable:
                assert is_acyclic_coloring(d, first.witness)
                assert first.witness.k == k


def test_dichromatic_examples():
    assert dichromatic_number(make_digraph(0, [])) == 0
    assert dichromatic_number(make_digraph(3, [])) == 1
    assert dichromatic_number(bidirected_cycle(5)) == 3
    assert dichromatic_number(bidirected_complete(5)) == 5


def test_chromatic_examples():
    assert chromatic_number(cycle_graph(5)) == 3
    assert chromatic_number(complete_graph(4)) == 4
    assert chromatic_number(make_graph(4, [(0, 1), (1, 2), (2, 3)])) == 2


def test_brute_force_examples():
    assert brute_force_dichromatic(directed_cycle(4)) == 2
    assert brute_force_dichromatic(bidirected_complete(3)) == 3
    assert brute_force_dichromatic(dirac_join(C3, C3)) == 4
    with pytest.raises(ValueError):
        brute_force_dichromatic(digraph_from_rows(9, (0,) * 9))


def test_solver_agrees_with_brute_force_exhaustive_n3():
    for n in range(4):
        for rows in all_digraph_rows(n):
            d = digraph_from_rows(n, rows)
            assert dichromatic_number(d) == brute_force_dichromatic(d)


def test_solver_agrees_with_brute_force_random():
    rng = random.Random(17)
    for _ in range(120):
        d = random_digraph(rng, rng.randint(5, 7), p=rng.choice([0.2, 0.35, 0.5]))
        assert dichromatic_number(d) == brute_force_dichromatic(d)


def test_chromatic_equals_dichromatic_of_biorientation():
    rng = random.Random(23)
    for _ in range(80):
        n = rng.randint(0, 7)
        g = make_graph(n, random_graph_edges(rng, n, p=rng.choice([0.3, 0.5, 0.7])))
        assert chromatic_number(g) == dichromatic_number(biorient(g))


def test_arc_deletion_monotonicity():
    rng = random.Random(29)
    for _ in range(40):
        d = random_digraph(rng, rng.randint(2, 6), p=0.5)
        chi = dichromatic_number(d)
        for arc in d.arcs()[:4]:
            assert dichromatic_number(delete_arc(d, arc)) in (chi - 1, chi)
