import json
import random

import pytest

from dicrit.core import delete_vertex, digraph_from_rows, make_digraph
from dicrit.coloring import Coloring, brute_force_dichromatic, dichromatic_number
from dicrit.criticality import (
    BIDIRECTED_COMPLETE,
    BIDIRECTED_ODD_CYCLE,
    DIRECTED_CYCLE,
    ContradictionError,
    certificate_from_dict,
    certificate_to_dict,
    check_neumann_lara,
    classify_regular_critical,
    critical_raw,
    is_k_critical,
    verify_certificate,
)
from dicrit.constructions import bidirected_complete, bidirected_cycle, directed_cycle
from dicrit.extremal import all_digraph_rows

from helpers import oracle_critical, oracle_critical_all_subdigraphs, random_digraph


def test_examples():
    assert is_k_critical(directed_cycle(5), 2) is not None
    assert is_k_critical(bidirected_cycle(5), 3) is not None
    assert is_k_critical(bidirected_cycle(4), 3) is None
    assert is_k_critical(bidirected_cycle(4), 2) is None  # chi is 2 but an arc is slack


def test_level_one():
    assert is_k_critical(make_digraph(1, []), 1) is not None
    assert is_k_critical(make_digraph(2, []), 1) is None
    assert is_k_critical(directed_cycle(2), 1) is None
    with pytest.raises(ValueError):
        is_k_critical(directed_cycle(2), 0)


def test_certificate_contents_verify():
    d = bidirected_cycle(5)
    cert = is_k_critical(d, 3)
    assert cert.k == 3
    assert not cert.negative.satisfiable
    assert len(cert.per_arc_witnesses) == d.num_arcs
    assert verify_certificate(d, cert)


def test_certificate_detects_tampering():
    d = directed_cycle(5)
    cert = is_k_critical(d, 2)
    arc, witness = cert.per_arc_witnesses[0]
    bad = cert.per_arc_witnesses[1:] + ((arc, Coloring((1,) * 5, 1)),)
    from dicrit.criticality import CriticalityCertificate

    assert not verify_certificate(d, CriticalityCertificate(2, cert.negative, bad))


def test_certificate_json_round_trip():
    d = bidirected_cycle(5)
    cert = is_k_critical(d, 3)
    doc = json.loads(json.dumps(certificate_to_dict(d, cert)))
    d2, cert2 = certificate_from_dict(doc)
    assert d2 == d
    assert cert2.per_arc_witnesses == cert.per_arc_witnesses
    assert verify_certificate(d2, cert2)
    doc["witnesses"][0]["colors"][0] = doc["witnesses"][0]["colors"][0] % 2 + 1
    d3, cert3 = certificate_from_dict(doc)
    assert not verify_certificate(d3, cert3)


def _chi_table_up_to_4():
    table = {}
    for n in range(5):
        for rows in all_digraph_rows(n):
            if rows not in table:
                table[rows] = brute_force_dichromatic(digraph_from_rows(n, rows))
    return table


def test_agreement_with_definition_oracle_exhaustive():
    # all digraphs up to order 4, checked at their own chi and one above
    table = _chi_table_up_to_4()
    for n in range(5):
        for rows in all_digraph_rows(n):
            d = digraph_from_rows(n, rows)
            chi = table[rows]
            for k in {chi, chi + 1} - {0}:
                expected = oracle_critical(d, k, chi_table=table)
                assert (is_k_critical(d, k) is not None) == expected
                assert critical_raw(d.n, d.out_adj, d.in_adj, k) == expected


def test_agreement_with_literal_subdigraph_sweep_n3():
    for rows in all_digraph_rows(3):
        d = digraph_from_rows(3, rows)
        chi = brute_force_dichromatic(d)
        if chi == 0:
            continue
        assert (is_k_critical(d, chi) is not None) == oracle_critical_all_subdigraphs(d, chi)


def test_neumann_lara_bidirected_complete():
    d = bidirected_complete(4)
    report = check_neumann_lara(d, 4, is_k_critical(d, 4))
    assert report.ok
    by_clause = {c.clause: c for c in report.checks}
    assert "equality branch" in by_clause["d"].detail
    assert by_clause["a (sampled)"].ok


def test_neumann_lara_directed_triangle():
    report = check_neumann_lara(directed_cycle(3), 2, is_k_critical(directed_cycle(3), 2))
    assert report.ok
    assert {c.clause: c.ok for c in report.checks}["b"]


def test_neumann_lara_return_paths():
    d = bidirected_cycle(5)
    report = check_neumann_lara(d, 3, is_k_critical(d, 3))
    assert report.ok
    assert "return path" in {c.clause: c.detail for c in report.checks}["c"]


def test_neumann_lara_flags_broken_witness():
    d = directed_cycle(4)
    cert = is_k_critical(d, 2)
    from dicrit.criticality import CriticalityCertificate

    arc, _ = cert.per_arc_witnesses[0]
    # color the arc's endpoints apart: no monochromatic return path exists
    colors = tuple(1 if v == arc.tail else 1 if v == arc.head else 1 for v in range(4))
    forged = (( arc, Coloring((1, 1, 1, 1), 1)),) + cert.per_arc_witnesses[1:]
    report = check_neumann_lara(d, 2, CriticalityCertificate(2, cert.negative, forged))
    assert not report.ok


def test_classify_regular_critical():
    assert classify_regular_critical(directed_cycle(7), 2) == DIRECTED_CYCLE
    assert classify_regular_critical(bidirected_cycle(7), 3) == BIDIRECTED_ODD_CYCLE
    assert classify_regular_critical(bidirected_complete(5), 5) == BIDIRECTED_COMPLETE
    with pytest.raises(ValueError):
        classify_regular_critical(directed_cycle(4), 3)  # not (2,2)-regular
    with pytest.raises(ContradictionError):
        classify_regular_critical(bidirected_cycle(6), 3)  # even, so never critical


def test_certified_criticals_meet_degree_and_arc_bounds():
    rng = random.Random(31)
    found = 0
    for _ in range(200):
        d = random_digraph(rng, rng.randint(2, 5), p=0.5)
        chi = dichromatic_number(d)
        if chi < 2:
            continue
        cert = is_k_critical(d, chi)
        if cert is None:
            continue
        found += 1
        assert all(
            d.out_adj[v].bit_count() >= chi - 1 and d.in_adj[v].bit_count() >= chi - 1
            for v in range(d.n)
        )
        assert d.num_arcs >= (chi - 1) * d.n
    assert found > 0


def test_vertex_deletions_drop_for_certified():
    d = bidirected_cycle(5)
    assert is_k_critical(d, 3) is not None
    for v in range(d.n):
        assert dichromatic_number(delete_vertex(d, v)[0]) == 2
