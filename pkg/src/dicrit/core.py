"""Digraph and graph value types on dense bitset adjacency.

Vertices are 0..n-1 and every adjacency row is a plain int used as a
bitset, which keeps the subset operations in the solvers cheap. Both
types are immutable: every operation returns a new value, and the
transpose/symmetry invariants are re-checked on each construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

MAX_VERTICES = 64


class DigraphError(ValueError):
    """Invalid construction or operation on a digraph/graph."""


class Arc(NamedTuple):
    tail: int
    head: int


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        mask ^= low
        yield low.bit_length() - 1


def _check_order(n: int) -> None:
    if n < 0:
        raise DigraphError(f"vertex count must be non-negative, got {n}")
    if n > MAX_VERTICES:
        raise DigraphError(f"vertex count {n} exceeds supported maximum {MAX_VERTICES}")


@dataclass(frozen=True)
class Digraph:
    """Simple digraph: digons allowed, no loops, no parallel arcs.

    out_adj[u] holds the out-neighbors of u as a bitset; in_adj is its
    transpose and is validated to stay consistent.
    """

    n: int
    out_adj: tuple[int, ...]
    in_adj: tuple[int, ...]

    def __post_init__(self):
        _check_order(self.n)
        if len(self.out_adj) != self.n or len(self.in_adj) != self.n:
            raise DigraphError("adjacency rows do not match vertex count")
        full = (1 << self.n) - 1
        for v in range(self.n):
            if self.out_adj[v] & ~full or self.in_adj[v] & ~full:
                raise DigraphError(f"adjacency row of vertex {v} mentions out-of-range vertices")
            if (self.out_adj[v] >> v) & 1:
                raise DigraphError(f"loop at vertex {v}")
        for u in range(self.n):
            for v in bits(self.out_adj[u]):
                if not (self.in_adj[v] >> u) & 1:
                    raise DigraphError(f"in_adj is not the transpose of out_adj at arc ({u},{v})")
        if sum(m.bit_count() for m in self.out_adj) != sum(m.bit_count() for m in self.in_adj):
            raise DigraphError("in_adj is not the transpose of out_adj")

    def has_arc(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool((self.out_adj[u] >> v) & 1)

    def arcs(self) -> list[Arc]:
        """All arcs, sorted lexicographically by (tail, head)."""
        return [Arc(u, v) for u in range(self.n) for v in bits(self.out_adj[u])]

    @property
    def num_arcs(self) -> int:
        return sum(m.bit_count() for m in self.out_adj)

    def out_neighbors(self, v: int) -> list[int]:
        return list(bits(self.out_adj[v]))

    def in_neighbors(self, v: int) -> list[int]:
        return list(bits(self.in_adj[v]))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph (no loops, no multi-edges), kept separate
    from Digraph so graph-side formulas cannot be fed digraphs by accident."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        _check_order(self.n)
        if len(self.adj) != self.n:
            raise DigraphError("adjacency rows do not match vertex count")
        full = (1 << self.n) - 1
        for v in range(self.n):
            if self.adj[v] & ~full:
                raise DigraphError(f"adjacency row of vertex {v} mentions out-of-range vertices")
            if (self.adj[v] >> v) & 1:
                raise DigraphError(f"loop at vertex {v}")
        for u in range(self.n):
            for v in bits(self.adj[u]):
                if not (self.adj[v] >> u) & 1:
                    raise DigraphError(f"adjacency not symmetric at ({u},{v})")

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2


def transpose_rows(n: int, rows) -> tuple[int, ...]:
    """Transpose adjacency bitset rows (out-rows <-> in-rows)."""
    cols = [0] * n
    for u in range(n):
        for v in bits(rows[u]):
            cols[v] |= 1 << u
    return tuple(cols)


def digraph_from_rows(n: int, out_rows) -> Digraph:
    """Build a digraph from out-adjacency bitset rows."""
    return Digraph(n, tuple(out_rows), transpose_rows(n, out_rows))


def make_digraph(n: int, arcs) -> Digraph:
    """Digraph on n vertices with exactly the given (tail, head) arcs.

    Rejects loops, duplicate ordered pairs, and out-of-range endpoints,
    naming the offending arc.
    """
    _check_order(n)
    rows = [0] * n
    for a in arcs:
        u, v = a
        if not (0 <= u < n and 0 <= v < n):
            raise DigraphError(f"arc ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise DigraphError(f"arc ({u},{v}) is a loop")
        if (rows[u] >> v) & 1:
            raise DigraphError(f"duplicate arc ({u},{v})")
        rows[u] |= 1 << v
    return digraph_from_rows(n, tuple(rows))


def make_graph(n: int, edges) -> Graph:
    """Graph on n vertices with exactly the given {u, v} edges."""
    _check_order(n)
    rows = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise DigraphError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise DigraphError(f"edge ({u},{v}) is a loop")
        if (rows[u] >> v) & 1:
            raise DigraphError(f"duplicate edge ({u},{v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complete_graph(n: int) -> Graph:
    _check_order(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DigraphError(f"cycle graph needs at least 3 vertices, got {n}")
    return make_graph(n, [(v, (v + 1) % n) for v in range(n)])


def biorient(g: Graph) -> Digraph:
    """Replace every edge of g by the two opposite arcs."""
    return Digraph(g.n, g.adj, g.adj)


def complement(d: Digraph) -> Digraph:
    """Digraph with arc uv exactly when uv is absent from d (u != v)."""
    full = (1 << d.n) - 1
    rows = tuple(~d.out_adj[v] & full & ~(1 << v) for v in range(d.n))
    return digraph_from_rows(d.n, rows)


def induced(d: Digraph, vertices) -> tuple[Digraph, tuple[int, ...]]:
    """Subdigraph induced by a vertex set, relabeled to 0..|X|-1.

    Returns (subdigraph, old_labels) where old_labels[new] is the original
    label of new vertex `new`; new labels follow ascending old labels.
    """
    old = sorted(set(vertices))
    for v in old:
        if not 0 <= v < d.n:
            raise DigraphError(f"vertex {v} not in digraph of order {d.n}")
    pos = {v: i for i, v in enumerate(old)}
    rows = []
    for v in old:
        row = 0
        for w in bits(d.out_adj[v]):
            if w in pos:
                row |= 1 << pos[w]
        rows.append(row)
    return digraph_from_rows(len(old), tuple(rows)), tuple(old)


def induced_mask(d: Digraph, mask: int) -> Digraph:
    """induced() on a vertex bitset, dropping the label map."""
    return induced(d, bits(mask))[0]


def delete_arc(d: Digraph, arc) -> Digraph:
    """d minus one arc; the vertex set is unchanged."""
    u, v = arc
    if not d.has_arc(u, v):
        raise DigraphError(f"arc ({u},{v}) not present")
    out = list(d.out_adj)
    inn = list(d.in_adj)
    out[u] ^= 1 << v
    inn[v] ^= 1 << u
    return Digraph(d.n, tuple(out), tuple(inn))


def delete_vertex(d: Digraph, v: int) -> tuple[Digraph, tuple[int, ...]]:
    """d minus a vertex, relabeled to 0..n-2; returns (digraph, old_labels)."""
    if not 0 <= v < d.n:
        raise DigraphError(f"vertex {v} not in digraph of order {d.n}")
    keep = [u for u in range(d.n) if u != v]
    return induced(d, keep)


def relabel(d: Digraph, perm) -> Digraph:
    """Apply a permutation (perm[old] = new) to the vertex labels."""
    perm = tuple(perm)
    if sorted(perm) != list(range(d.n)):
        raise DigraphError("relabeling is not a permutation of the vertex set")
    rows = [0] * d.n
    for u in range(d.n):
        row = 0
        for v in bits(d.out_adj[u]):
            row |= 1 << perm[v]
        rows[perm[u]] = row
    return digraph_from_rows(d.n, tuple(rows))


def mask_is_acyclic(in_rows, mask: int) -> bool:
    """Is the subdigraph induced by the vertex bitset acyclic?

    Repeatedly peels vertices with no in-neighbor among the survivors
    (topological-sort check on the induced rows).
    """
    alive = mask
    while alive:
        removed = 0
        rest = alive
        while rest:
            low = rest & -rest
            rest ^= low
            if in_rows[low.bit_length() - 1] & alive == 0:
                removed |= low
        if not removed:
            return False
        alive ^= removed
    return True


def is_acyclic(d: Digraph) -> bool:
    """True iff d has a topological order (any digon already forces a cycle)."""
    return mask_is_acyclic(d.in_adj, (1 << d.n) - 1)


def degrees(d: Digraph) -> list[tuple[int, int]]:
    """Per-vertex (out-degree, in-degree)."""
    return [(d.out_adj[v].bit_count(), d.in_adj[v].bit_count()) for v in range(d.n)]
