"""Digraph families: cycles, bidirected cliques, joins, and the
split-clique graphs behind the extremal characterization.

The split-clique family DG(k) consists of graphs of order 2k-1 built
from a clique X of size k-2, a clique Y1 u Y2 with |Y1|+|Y2| = k-1, no
edges between X and the Y side, and two extra vertices v1, v2 with
N(vi) = X u Yi. Its digraph analogue is the directed triangle for
level 2 and the biorientation of a DG(k) graph for levels k >= 3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Arc,
    Digraph,
    DigraphError,
    Graph,
    biorient,
    complete_graph,
    digraph_from_rows,
    make_digraph,
    make_graph,
)


def directed_cycle(n: int) -> Digraph:
    """The directed n-cycle; n = 2 gives the digon."""
    if n < 2:
        raise DigraphError(f"directed cycle needs at least 2 vertices, got {n}")
    return make_digraph(n, [(v, (v + 1) % n) for v in range(n)])


def bidirected_cycle(n: int) -> Digraph:
    if n < 3:
        raise DigraphError(f"bidirected cycle needs at least 3 vertices, got {n}")
    return biorient(make_graph(n, [(v, (v + 1) % n) for v in range(n)]))


def bidirected_complete(k: int) -> Digraph:
    if k < 1:
        raise DigraphError(f"bidirected complete digraph needs at least 1 vertex, got {k}")
    return biorient(complete_graph(k))


def empty_digraph() -> Digraph:
    return make_digraph(0, [])


def is_directed_cycle(d: Digraph) -> bool:
    """Is d exactly one directed cycle through all its vertices?"""
    if d.n < 2 or any(row.bit_count() != 1 for row in d.out_adj) or any(
        row.bit_count() != 1 for row in d.in_adj
    ):
        return False
    cur, steps = 0, 0
    while True:
        cur = d.out_adj[cur].bit_length() - 1
        steps += 1
        if cur == 0:
            return steps == d.n
        if steps > d.n:
            return False


def is_bidirected_cycle(d: Digraph) -> bool:
    """Is d the complete biorientation of one cycle through all vertices?"""
    if d.n < 3 or d.out_adj != d.in_adj or any(row.bit_count() != 2 for row in d.out_adj):
        return False
    prev, cur, steps = 0, d.out_adj[0].bit_length() - 1, 1
    while cur != 0:
        nxt = d.out_adj[cur] & ~(1 << prev)
        prev, cur = cur, nxt.bit_length() - 1
        steps += 1
        if steps > d.n:
            return False
    return steps == d.n


def is_bidirected_complete(d: Digraph) -> bool:
    full = (1 << d.n) - 1
    return all(d.out_adj[v] == full ^ (1 << v) for v in range(d.n))


def dirac_join(d1: Digraph, d2: Digraph) -> Digraph:
    """Disjoint union plus all digons between the parts.

    d1 keeps its labels 0..n1-1; d2 is shifted by n1. Dichromatic
    numbers add over this join.
    """
    n1, n2 = d1.n, d2.n
    n = n1 + n2
    left_mask = (1 << n1) - 1
    right_mask = ((1 << n2) - 1) << n1
    rows = []
    for v in range(n1):
        rows.append(d1.out_adj[v] | right_mask)
    for v in range(n2):
        rows.append((d2.out_adj[v] << n1) | left_mask)
    return digraph_from_rows(n, tuple(rows))


def hajos_join(d1: Digraph, a1, d2: Digraph, a2) -> Digraph:
    """Hajos join: drop one arc per factor, merge an endpoint pair, bridge.

    a1 = (u1, v1) must be an arc of d1 and a2 = (v2, u2) an arc of d2;
    the head v1 and the tail v2 are identified. Both chosen arcs are
    deleted and the arc u1 -> u2 is added, so the join has n1 + n2 - 1
    vertices and |A1| + |A2| - 1 arcs. This orientation convention is
    the one that preserves directed cycles and k-criticality.
    """
    u1, v1 = a1
    if not d1.has_arc(u1, v1):
        raise DigraphError(f"arc ({u1},{v1}) not present in the first factor")
    v2, u2 = a2
    if not d2.has_arc(v2, u2):
        raise DigraphError(f"arc ({v2},{u2}) not present in the second factor")

    # d1 keeps its labels; d2's vertices except v2 follow, in label order.
    fwd2 = {}
    nxt = d1.n
    for w in range(d2.n):
        if w == v2:
            fwd2[w] = v1
        else:
            fwd2[w] = nxt
            nxt += 1

    arcs = [a for a in d1.arcs() if a != Arc(u1, v1)]
    arcs.extend(
        Arc(fwd2[a.tail], fwd2[a.head]) for a in d2.arcs() if a != Arc(v2, u2)
    )
    arcs.append(Arc(u1, fwd2[u2]))
    return make_digraph(d1.n + d2.n - 1, arcs)


@dataclass(frozen=True)
class DGParams:
    """Shape of a split-clique graph: level k and the Y-side split sizes."""

    k: int
    y1: int
    y2: int

    def __post_init__(self):
        if self.k < 3:
            raise DigraphError(f"split-clique level must be at least 3, got {self.k}")
        if self.y1 < 1 or self.y2 < 1:
            raise DigraphError(f"split sizes must be positive, got ({self.y1},{self.y2})")
        if self.y1 > self.y2:
            raise DigraphError(f"split sizes must satisfy y1 <= y2, got ({self.y1},{self.y2})")
        if self.y1 + self.y2 != self.k - 1:
            raise DigraphError(
                f"split sizes must sum to {self.k - 1}, got {self.y1}+{self.y2}"
            )


def dg_graph(params: DGParams) -> Graph:
    """Split-clique graph of order 2k-1, labeled X, Y1, Y2, v1, v2."""
    k = params.k
    x = list(range(k - 2))
    y1 = list(range(k - 2, k - 2 + params.y1))
    y2 = list(range(k - 2 + params.y1, 2 * k - 3))
    va, vb = 2 * k - 3, 2 * k - 2
    edges = []
    for i, u in enumerate(x):
        edges.extend((u, w) for w in x[i + 1 :])
    ys = y1 + y2
    for i, u in enumerate(ys):
        edges.extend((u, w) for w in ys[i + 1 :])
    edges.extend((va, w) for w in x + y1)
    edges.extend((vb, w) for w in x + y2)
    return make_graph(2 * k - 1, edges)


def dg_digraph(k: int, params: DGParams | None = None) -> Digraph:
    """Digraph split-clique family: the directed triangle at level 2,
    biorientations of dg_graph above."""
    if k == 2:
        if params is not None:
            raise DigraphError("level 2 takes no split parameters")
        return directed_cycle(3)
    if k >= 3:
        if params is None:
            raise DigraphError(f"level {k} requires split parameters")
        if params.k != k:
            raise DigraphError(f"split parameters are for level {params.k}, not {k}")
        return biorient(dg_graph(params))
    raise DigraphError(f"split-clique digraph level must be at least 2, got {k}")


def dg_param_choices(k: int) -> list[DGParams | None]:
    """All parameter choices at one level: None for level 2 (the directed
    triangle), otherwise every split y1 <= y2 of k-1."""
    if k == 2:
        return [None]
    if k < 2:
        raise DigraphError(f"split-clique digraph level must be at least 2, got {k}")
    return [DGParams(k, y1, k - 1 - y1) for y1 in range(1, (k - 1) // 2 + 1)]


def extremal_digraph(k: int, p: int, params: DGParams | None = None) -> Digraph:
    """Minimum-arc k-critical digraph of order n = k + p: the join of a
    bidirected K_{k-p-1} with a level-(p+1) split-clique digraph.

    For p = 1 the right factor is the directed triangle and no split
    parameters apply; for p >= 2 omitted parameters default to the
    (1, p-1) split.
    """
    if not 1 <= p <= k - 1:
        raise DigraphError(f"order offset must satisfy 1 <= p <= k-1, got p={p} for k={k}")
    if p == 1:
        if params is not None:
            raise DigraphError("p = 1 takes no split parameters")
        right = dg_digraph(2)
    else:
        if params is None:
            params = DGParams(p + 1, 1, p - 1)
        right = dg_digraph(p + 1, params)
    left = biorient(complete_graph(k - p - 1))
    return dirac_join(left, right)
