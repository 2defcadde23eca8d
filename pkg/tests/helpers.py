"""Shared test utilities: random instances and definition-level oracles."""

from itertools import combinations, permutations

from dicrit.core import Digraph, delete_arc, delete_vertex, digraph_from_rows, make_digraph
from dicrit.coloring import brute_force_dichromatic


def random_rows(rng, n, p=0.35):
    rows = []
    for u in range(n):
        row = 0
        for v in range(n):
            if u != v and rng.random() < p:
                row |= 1 << v
        rows.append(row)
    return tuple(rows)


def random_digraph(rng, n, p=0.35) -> Digraph:
    return digraph_from_rows(n, random_rows(rng, n, p))


def random_graph_edges(rng, n, p=0.5):
    return [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]


def has_cycle_brute(d: Digraph) -> bool:
    """Directed-cycle search by trying every vertex sequence."""
    for length in range(2, d.n + 1):
        for seq in permutations(range(d.n), length):
            if seq[0] != min(seq):
                continue  # one rotation per cycle is enough
            if all(d.has_arc(seq[i], seq[(i + 1) % length]) for i in range(length)):
                return True
    return False


def oracle_critical(d: Digraph, k: int, chi_table=None) -> bool:
    """Definition-level criticality: brute chi of d and of every maximal
    proper subdigraph (each D-a and each D-v); every proper subdigraph is
    contained in one of those and brute chi is monotone."""

    def chi(sub: Digraph) -> int:
        if chi_table is not None:
            return chi_table[sub.out_adj]
        return brute_force_dichromatic(sub)

    if chi(d) != k:
        return False
    for arc in d.arcs():
        if chi(delete_arc(d, arc)) >= k:
            return False
    for v in range(d.n):
        if chi(delete_vertex(d, v)[0]) >= k:
            return False
    return True


def oracle_critical_all_subdigraphs(d: Digraph, k: int) -> bool:
    """Literal sweep over every proper subdigraph (kept vertex set times
    kept arc subset). Exponential; for orders <= 3 only."""
    if brute_force_dichromatic(d) != k:
        return False
    arcs = d.arcs()
    for size in range(d.n + 1):
        for kept in combinations(range(d.n), size):
            pos = {v: i for i, v in enumerate(kept)}
            inside = [a for a in arcs if a.tail in pos and a.head in pos]
            for r in range(len(inside) + 1):
                for subset in combinations(inside, r):
                    if size == d.n and len(subset) == len(arcs):
                        continue  # the digraph itself is not proper
                    sub = make_digraph(size, [(pos[a.tail], pos[a.head]) for a in subset])
                    if brute_force_dichromatic(sub) >= k:
                        return False
    return True
