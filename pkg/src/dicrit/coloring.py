"""Exact acyclic colorings and the dichromatic number.

The solver branches on the lowest-indexed uncolored vertex and tries
each used color class (keeping classes acyclic, re-checked by a
topological-sort peel on the class bitset) plus at most one fresh class,
so interchangeable fresh classes are never tried twice. Vertex and class
order are fixed, which makes witnesses reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import Digraph, Graph, mask_is_acyclic


@dataclass(frozen=True)
class Coloring:
    """Vertex -> color map with colors drawn from 1..k."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        for v, c in enumerate(self.colors):
            if not 1 <= c <= self.k:
                raise ValueError(f"vertex {v} has color {c} outside 1..{self.k}")

    def class_mask(self, c: int) -> int:
        mask = 0
        for v, col in enumerate(self.colors):
            if col == c:
                mask |= 1 << v
        return mask


@dataclass(frozen=True)
class SolveOutcome:
    satisfiable: bool
    witness: Coloring | None
    nodes_explored: int


def is_acyclic_coloring(d: Digraph, coloring: Coloring) -> bool:
    """True iff every color class induces an acyclic subdigraph of d."""
    if len(coloring.colors) != d.n:
        raise ValueError(f"coloring covers {len(coloring.colors)} vertices, digraph has {d.n}")
    for c in range(1, coloring.k + 1):
        if not mask_is_acyclic(d.in_adj, coloring.class_mask(c)):
            return False
    return True


def solve(n: int, out_rows, in_rows, k: int):
    """Decide existence of an acyclic k-coloring on raw adjacency rows.

    Returns (satisfiable, colors tuple or None, nodes explored). Shared
    by the public API and the search engines, which keep candidate
    digraphs as plain row tuples.
    """
    if k < 0:
        raise ValueError(f"color count must be non-negative, got {k}")
    if n == 0:
        return True, (), 0
    if k == 0:
        return False, None, 0
    if k >= n:
        return True, tuple(range(1, n + 1)), 0

    color = [0] * n
    classes: list[int] = []
    nodes = 0

    def extend(v: int) -> bool:
        nonlocal nodes
        bit = 1 << v
        for ci in range(len(classes)):
            grown = classes[ci] | bit
            nodes += 1
            if mask_is_acyclic(in_rows, grown):
                classes[ci] = grown
                color[v] = ci + 1
                if v + 1 == n or extend(v + 1):
                    return True
                classes[ci] = grown ^ bit
        if len(classes) < k:
            nodes += 1
            classes.append(bit)
            color[v] = len(classes)
            if v + 1 == n or extend(v + 1):
                return True
            classes.pop()
        return False

    if extend(0):
        return True, tuple(color), nodes
    return False, None, nodes


def exists_acyclic_k_coloring(d: Digraph, k: int) -> SolveOutcome:
    sat, colors, nodes = solve(d.n, d.out_adj, d.in_adj, k)
    witness = Coloring(colors, k) if sat else None
    return SolveOutcome(sat, witness, nodes)


def dichromatic_number(d: Digraph) -> int:
    """Least k admitting an acyclic k-coloring (0 for the empty digraph)."""
    k = 0
    while True:
        if solve(d.n, d.out_adj, d.in_adj, k)[0]:
            return k
        k += 1


def _independent_k_coloring(g: Graph, k: int) -> bool:
    # Same branching scheme as the digraph solver, but classes must be
    # independent sets; kept separate so chromatic_number is a code path
    # independent of the acyclic solver.
    n = g.n
    if n == 0:
        return True
    if k == 0:
        return False
    if k >= n:
        return True
    classes: list[int] = []

    def extend(v: int) -> bool:
        bit = 1 << v
        for ci in range(len(classes)):
            if g.adj[v] & classes[ci]:
                continue
            classes[ci] |= bit
            if v + 1 == n or extend(v + 1):
                return True
            classes[ci] ^= bit
        if len(classes) < k:
            classes.append(bit)
            if v + 1 == n or extend(v + 1):
                return True
            classes.pop()
        return False

    return extend(0)


def chromatic_number(g: Graph) -> int:
    """Least k such that g has a proper k-coloring.

    Computed on the graph directly; agrees with
    dichromatic_number(biorient(g)) and is cross-checked against it.
    """
    k = 0
    while True:
        if _independent_k_coloring(g, k):
            return k
        k += 1


BRUTE_FORCE_MAX_ORDER = 8


def brute_force_dichromatic(d: Digraph) -> int:
    """Test oracle: try all k**n color assignments for k ascending."""
    if d.n > BRUTE_FORCE_MAX_ORDER:
        raise ValueError(f"brute-force oracle limited to order {BRUTE_FORCE_MAX_ORDER}, got {d.n}")
    if d.n == 0:
        return 0
    k = 0
    while True:
        for assignment in product(range(1, k + 1), repeat=d.n):
            if is_acyclic_coloring(d, Coloring(assignment, k)):
                return k
        k += 1


def color_classes(coloring: Coloring) -> list[int]:
    """Bitmask per color 1..k (possibly empty classes included)."""
    return [coloring.class_mask(c) for c in range(1, coloring.k + 1)]
