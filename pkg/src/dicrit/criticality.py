"""Criticality certificates and the classical necessary conditions.

A digraph is k-critical when its dichromatic number is k and every
proper subdigraph needs fewer colors. Checking all proper subdigraphs
is unnecessary: D-v is a subdigraph of D-a for any arc a at v, so once
isolated vertices are excluded (a critical digraph has none for k >= 2)
the m single-arc deletions decide criticality. The certificate stores a
(k-1)-coloring witness for each arc deletion plus the solver's negative
answer for D itself, so it can be re-verified without a solver.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Arc, Digraph, bits, delete_arc, delete_vertex
from .coloring import (
    Coloring,
    SolveOutcome,
    exists_acyclic_k_coloring,
    is_acyclic_coloring,
    solve,
)
from .constructions import is_bidirected_complete, is_bidirected_cycle, is_directed_cycle


class ContradictionError(RuntimeError):
    """A statement verified elsewhere failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class CriticalityCertificate:
    k: int
    negative: SolveOutcome
    per_arc_witnesses: tuple[tuple[Arc, Coloring], ...]


def critical_raw(n: int, out_rows, in_rows, k: int) -> bool:
    """Early-exit criticality test on raw rows; no witnesses retained.

    Inner loop of the exhaustive searches: rejects on the degree bound
    first, then on a (k-1)-coloring of D, then on the arc deletions.
    """
    if k == 1:
        return n == 1 and out_rows[0] == 0
    for v in range(n):
        if out_rows[v].bit_count() < k - 1 or in_rows[v].bit_count() < k - 1:
            return False
    if solve(n, out_rows, in_rows, k - 1)[0]:
        return False
    out = list(out_rows)
    inn = list(in_rows)
    for u in range(n):
        row = out_rows[u]
        for v in bits(row):
            out[u] ^= 1 << v
            inn[v] ^= 1 << u
            sat = solve(n, out, inn, k - 1)[0]
            out[u] |= 1 << v
            inn[v] |= 1 << u
            if not sat:
                return False
    return True


def is_k_critical(d: Digraph, k: int) -> CriticalityCertificate | None:
    """Certificate that d is k-critical, or None.

    Degree bound and the unsatisfiable (k-1)-solve put chi(d) >= k; every
    arc-deletion witness puts chi of each maximal proper subdigraph at
    k-1, which also caps chi(d) at k (recolor one end of the deleted arc
    with a fresh color).
    """
    if k < 1:
        raise ValueError(f"criticality level must be at least 1, got {k}")
    if k == 1:
        if d.n == 1 and d.num_arcs == 0:
            return CriticalityCertificate(1, exists_acyclic_k_coloring(d, 0), ())
        return None
    for v in range(d.n):
        if d.out_adj[v].bit_count() < k - 1 or d.in_adj[v].bit_count() < k - 1:
            return None
    negative = exists_acyclic_k_coloring(d, k - 1)
    if negative.satisfiable:
        return None
    witnesses = []
    for arc in d.arcs():
        outcome = exists_acyclic_k_coloring(delete_arc(d, arc), k - 1)
        if not outcome.satisfiable:
            return None
        witnesses.append((arc, outcome.witness))
    return CriticalityCertificate(k, negative, tuple(witnesses))


def verify_certificate(d: Digraph, cert: CriticalityCertificate) -> bool:
    """Re-check a certificate with pure predicates (no solver calls).

    Confirms the witnesses cover exactly the arcs of d and that each one
    is an acyclic (k-1)-coloring of the corresponding arc deletion. The
    negative half is the solver's claim and is not re-derivable here.
    """
    if cert.negative.satisfiable:
        return False
    if [arc for arc, _ in cert.per_arc_witnesses] != d.arcs():
        return False
    for arc, witness in cert.per_arc_witnesses:
        if witness.k != cert.k - 1 or len(witness.colors) != d.n:
            return False
        if not is_acyclic_coloring(delete_arc(d, arc), witness):
            return False
    return True


def certificate_to_dict(d: Digraph, cert: CriticalityCertificate) -> dict:
    return {
        "schema": "dicrit/1",
        "kind": "criticality_certificate",
        "k": cert.k,
        "n": d.n,
        "arcs": [[a.tail, a.head] for a in d.arcs()],
        "negative_nodes_explored": cert.negative.nodes_explored,
        "witnesses": [
            {"arc": [arc.tail, arc.head], "colors": list(witness.colors)}
            for arc, witness in cert.per_arc_witnesses
        ],
    }


def certificate_from_dict(doc: dict) -> tuple[Digraph, CriticalityCertificate]:
    from .core import make_digraph

    if doc.get("schema") != "dicrit/1" or doc.get("kind") != "criticality_certificate":
        raise ValueError("not a dicrit/1 criticality certificate")
    k = doc["k"]
    d = make_digraph(doc["n"], [tuple(a) for a in doc["arcs"]])
    negative = SolveOutcome(False, None, doc.get("negative_nodes_explored", 0))
    witnesses = tuple(
        (Arc(*w["arc"]), Coloring(tuple(w["colors"]), k - 1)) for w in doc["witnesses"]
    )
    return d, CriticalityCertificate(k, negative, witnesses)


@dataclass(frozen=True)
class ClauseCheck:
    clause: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class NeumannLaraReport:
    k: int
    checks: tuple[ClauseCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def violations(self) -> list[ClauseCheck]:
        return [c for c in self.checks if not c.ok]


def _class_reaches(out_rows, class_mask: int, source: int, target: int) -> bool:
    # Directed reachability source -> target inside one color class.
    frontier = out_rows[source] & class_mask
    seen = frontier
    goal = 1 << target
    while frontier:
        if frontier & goal:
            return True
        grown = 0
        for w in bits(frontier):
            grown |= out_rows[w]
        frontier = grown & class_mask & ~seen
        seen |= frontier
    return False


def check_neumann_lara(d: Digraph, k: int, cert: CriticalityCertificate) -> NeumannLaraReport:
    """Check the basic necessary conditions of k-critical digraphs.

    Clause (a) samples one solver witness per vertex deletion rather than
    enumerating all (k-1)-colorings, and is labeled accordingly. The other
    clauses are exact. A violation signals a solver or caller bug.
    """
    if cert.k != k:
        raise ValueError(f"certificate is for level {cert.k}, not {k}")
    checks: list[ClauseCheck] = []

    # (a) every color class of a (k-1)-coloring of D-v meets N+(v) and N-(v)
    bad_a = None
    for v in range(d.n):
        sub, old = delete_vertex(d, v)
        outcome = exists_acyclic_k_coloring(sub, k - 1)
        if not outcome.satisfiable:
            bad_a = f"D-{v} admits no {k - 1}-coloring"
            break
        out_nb = {u for u in old if d.has_arc(v, u)}
        in_nb = {u for u in old if d.has_arc(u, v)}
        for c in range(1, k):
            members = {old[i] for i in bits(outcome.witness.class_mask(c))}
            if not members & out_nb or not members & in_nb:
                bad_a = f"vertex {v}, color {c} misses an out- or in-neighbor"
                break
        if bad_a:
            break
    checks.append(ClauseCheck("a (sampled)", bad_a is None, bad_a or "witness colorings checked"))

    # (b) minimum out- and in-degree k-1
    bad_b = next(
        (
            f"vertex {v} has degree ({d.out_adj[v].bit_count()},{d.in_adj[v].bit_count()})"
            for v in range(d.n)
            if d.out_adj[v].bit_count() < k - 1 or d.in_adj[v].bit_count() < k - 1
        ),
        None,
    )
    checks.append(ClauseCheck("b", bad_b is None, bad_b or f"all degrees >= {k - 1}"))

    # (c) each arc witness has a monochromatic return path head -> tail
    bad_c = None
    for arc, witness in cert.per_arc_witnesses:
        u, v = arc
        if witness.colors[u] != witness.colors[v]:
            bad_c = f"arc ({u},{v}): endpoints colored differently"
            break
        reduced = delete_arc(d, arc)
        cls = witness.class_mask(witness.colors[u])
        if not _class_reaches(reduced.out_adj, cls, v, u):
            bad_c = f"arc ({u},{v}): no monochromatic path {v}->{u}"
            break
    checks.append(ClauseCheck("c", bad_c is None, bad_c or "return path found for every arc"))

    # (d) order at least k, equality only for the bidirected complete digraph
    if d.n < k:
        checks.append(ClauseCheck("d", False, f"order {d.n} below {k}"))
    elif d.n == k:
        complete = is_bidirected_complete(d)
        checks.append(
            ClauseCheck(
                "d",
                complete,
                "equality branch: bidirected complete" if complete else "order k but not bidirected complete",
            )
        )
    else:
        checks.append(ClauseCheck("d", True, f"order {d.n} exceeds {k}"))

    # (e) the k <= 2 classifications
    if k == 1:
        ok_e = d.n == 1
        checks.append(ClauseCheck("e", ok_e, "single vertex" if ok_e else f"order {d.n} != 1"))
    elif k == 2:
        ok_e = is_directed_cycle(d)
        checks.append(ClauseCheck("e", ok_e, "directed cycle" if ok_e else "not a directed cycle"))
    else:
        checks.append(ClauseCheck("e", True, "not applicable for k >= 3"))

    return NeumannLaraReport(k, tuple(checks))


DIRECTED_CYCLE = "directed-cycle"
BIDIRECTED_ODD_CYCLE = "bidirected-odd-cycle"
BIDIRECTED_COMPLETE = "bidirected-complete"


def classify_regular_critical(d: Digraph, k: int) -> str:
    """Which shape a (k-1)-diregular k-critical digraph has.

    Exactly one of three shapes can occur: a directed cycle (k=2), a
    bidirected odd cycle (k=3), or the bidirected complete digraph
    (k>=4). The caller asserts criticality; a mismatch here means the
    input was not critical after all, or a checker is broken.
    """
    if k < 2:
        raise ValueError(f"classification applies to k >= 2, got {k}")
    for v in range(d.n):
        if d.out_adj[v].bit_count() != k - 1 or d.in_adj[v].bit_count() != k - 1:
            raise ValueError(f"vertex {v} is not ({k - 1},{k - 1})-regular")
    if k == 2 and is_directed_cycle(d):
        return DIRECTED_CYCLE
    if k == 3 and is_bidirected_cycle(d) and d.n % 2 == 1:
        return BIDIRECTED_ODD_CYCLE
    if k >= 4 and d.n == k and is_bidirected_complete(d):
        return BIDIRECTED_COMPLETE
    raise ContradictionError(
        f"({k - 1},{k - 1})-regular digraph of order {d.n} matches no regular critical shape"
    )
