"""Decomposition of digraphs by complement components.

Two vertices land in the same factor exactly when the complement
connects them, i.e. when they are not joined by a digon; distinct
factors are therefore completely joined by digons and the digraph is
the Dirac join of its factors. Factors are classified P (singletons,
the dominating vertices), Q (directed cycles of order >= 3, the
dominating cycles), and R (everything else), which for critical
digraphs feeds the order/structure bounds checked here. A digon never
forms a factor on its own: its two vertices are dominating vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Digraph, DigraphError, bits, induced
from .coloring import dichromatic_number
from .criticality import ContradictionError, is_k_critical
from .constructions import is_directed_cycle


@dataclass(frozen=True)
class Factor:
    vertices: tuple[int, ...]
    digraph: Digraph
    tag: str  # "P" | "Q" | "R"
    chi: int | None = None


@dataclass(frozen=True)
class DecompositionReport:
    n: int
    k: int | None
    factors: tuple[Factor, ...]
    p: int
    q: int

    @property
    def r(self) -> int:
        return len(self.factors) - self.p - self.q

    def to_dict(self) -> dict:
        return {
            "schema": "dicrit/1",
            "kind": "decomposition_report",
            "n": self.n,
            "k": self.k,
            "p": self.p,
            "q": self.q,
            "r": self.r,
            "factors": [
                {
                    "vertices": list(f.vertices),
                    "tag": f.tag,
                    "arcs": [[a.tail, a.head] for a in f.digraph.arcs()],
                    **({"chi": f.chi} if f.chi is not None else {}),
                }
                for f in self.factors
            ],
        }


def complement_components(d: Digraph) -> list[tuple[int, ...]]:
    """Vertex sets of the connected components of the complement.

    Complement adjacency is used undirected: u and v are related when at
    least one of uv, vu is missing from d, i.e. when u, v are not joined
    by a digon. Components are sorted by smallest vertex.
    """
    full = (1 << d.n) - 1
    digon = [d.out_adj[v] & d.in_adj[v] for v in range(d.n)]
    comp_adj = [full & ~(1 << v) & ~digon[v] for v in range(d.n)]
    seen = 0
    components = []
    for v in range(d.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            grown = 0
            for w in bits(frontier):
                grown |= comp_adj[w]
            frontier = grown & ~comp
            comp |= frontier
        seen |= comp
        components.append(tuple(bits(comp)))
    return components


def is_indecomposable(d: Digraph) -> bool:
    """True iff d is not a Dirac join of two non-empty parts."""
    if d.n == 0:
        raise DigraphError("indecomposability is undefined for the empty digraph")
    return len(complement_components(d)) == 1


def dominating_vertices(d: Digraph) -> tuple[int, ...]:
    """Vertices joined by digons to every other vertex."""
    full = (1 << d.n) - 1
    return tuple(
        v
        for v in range(d.n)
        if d.out_adj[v] & d.in_adj[v] == full ^ (1 << v)
    )


def decompose(d: Digraph, k: int | None = None, compute_chi: bool = False) -> DecompositionReport:
    """Split d into complement-component factors and classify them.

    Criticality of d is not verified; the bound checks that need it are
    separate. With compute_chi, each factor's dichromatic number is
    solved and attached.
    """
    factors = []
    p = q = 0
    for comp in complement_components(d):
        sub = induced(d, comp)[0]
        if len(comp) == 1:
            tag = "P"
            p += 1
        elif is_directed_cycle(sub) and sub.n >= 3:
            tag = "Q"
            q += 1
        else:
            tag = "R"
        chi = dichromatic_number(sub) if compute_chi else None
        factors.append(Factor(comp, sub, tag, chi))
    return DecompositionReport(d.n, k, tuple(factors), p, q)


@dataclass(frozen=True)
class BoundCheck:
    name: str
    lhs: int
    rhs: int
    slack: int
    equality: bool


@dataclass(frozen=True)
class Theorem10Report:
    k: int
    n: int
    p: int
    q: int
    bounds: tuple[BoundCheck, ...]
    equality_notes: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "schema": "dicrit/1",
            "kind": "domination_bound_report",
            "k": self.k,
            "n": self.n,
            "p": self.p,
            "q": self.q,
            "bounds": [
                {
                    "name": b.name,
                    "lhs": b.lhs,
                    "rhs": b.rhs,
                    "slack": b.slack,
                    "equality": b.equality,
                }
                for b in self.bounds
            ],
            "equality_notes": list(self.equality_notes),
        }


def check_theorem10(d: Digraph, k: int, report: DecompositionReport) -> Theorem10Report:
    """Dominating-structure bounds for a k-critical digraph.

    Verifies 0 <= p <= k, 0 <= p + 2q <= k, p >= 3k - 2n and
    2p + q >= 5k - 3n, plus the structure forced in the equality cases
    (all non-singleton factors directed triangles, respectively
    triangles and 3-critical order-5 factors). The caller vouches for
    criticality; a violation here falsifies either that certificate or
    this implementation.
    """
    n, p, q = d.n, report.p, report.q
    bounds = []
    notes = []

    def bound(name: str, lhs: int, rhs: int) -> bool:
        ok = lhs >= rhs
        if not ok:
            raise ContradictionError(f"bound violated on {k}-critical input: {name} ({lhs} < {rhs})")
        bounds.append(BoundCheck(name, lhs, rhs, lhs - rhs, lhs == rhs))
        return lhs == rhs

    bound("p >= 0", p, 0)
    bound("k >= p", k, p)
    bound("p + 2q >= 0", p + 2 * q, 0)
    bound("k >= p + 2q", k, p + 2 * q)
    eq_a = bound("p >= 3k - 2n", p, 3 * k - 2 * n)
    eq_b = bound("2p + q >= 5k - 3n", 2 * p + q, 5 * k - 3 * n)

    non_p = [f for f in report.factors if f.tag != "P"]
    if eq_a:
        for f in non_p:
            if not (f.tag == "Q" and f.digraph.n == 3):
                raise ContradictionError(
                    f"equality p = 3k - 2n but factor {f.vertices} is not a directed triangle"
                )
        notes.append(f"p = 3k - 2n: all {len(non_p)} non-dominating factors are directed triangles")
    if eq_b:
        for f in report.factors:
            if f.tag == "Q" and f.digraph.n != 3:
                raise ContradictionError(
                    f"equality 2p + q = 5k - 3n but cycle factor {f.vertices} has order {f.digraph.n}"
                )
            if f.tag == "R":
                if f.digraph.n != 5 or is_k_critical(f.digraph, 3) is None:
                    raise ContradictionError(
                        f"equality 2p + q = 5k - 3n but factor {f.vertices} is not 3-critical of order 5"
                    )
        notes.append("2p + q = 5k - 3n: cycle factors are triangles, rest 3-critical of order 5")

    return Theorem10Report(k, n, p, q, tuple(bounds), tuple(notes))


def stehlik_check(d: Digraph, k: int) -> bool:
    """Indecomposable critical digraphs have order at least 2k - 1.

    Returns whether the implication holds for d at level k; False on a
    certified-critical input would falsify the decomposition theorem.
    """
    return d.n >= 2 * k - 1 or not is_indecomposable(d)
