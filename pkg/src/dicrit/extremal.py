"""Exhaustive search for minimum-arc critical digraphs, closed-form
arc-count formulas, and lower-bound evaluation.

The search enumerates out-adjacency rows vertex by vertex. Candidates
must reach out- and in-degree k-1 everywhere (critical digraphs do),
so branches whose remaining rows cannot repair a degree deficit are cut,
as are branches that cannot hit the target arc count. Arc counts are
scanned in ascending order, which makes the first hit the minimum.
Isomorphism classes are separated by a brute-force canonical form:
the lexicographically smallest row-major adjacency bit string over all
vertex permutations.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import permutations
from math import comb
from multiprocessing import get_context

from .arclist import format_arclist
from .core import Digraph, digraph_from_rows, make_digraph, transpose_rows
from .constructions import dg_param_choices, extremal_digraph
from .criticality import ContradictionError, critical_raw, is_k_critical

CANONICAL_MAX_ORDER = 9


@dataclass(frozen=True)
class CanonicalForm:
    """Permutation-minimal row-major adjacency bit string."""

    n: int
    bits: str

    def digraph(self) -> Digraph:
        arcs = [
            (i // self.n, i % self.n) for i, ch in enumerate(self.bits) if ch == "1"
        ]
        return make_digraph(self.n, arcs)


def canonical_form(d: Digraph) -> CanonicalForm:
    """Canonical form by minimizing over all n! relabelings (n <= 9)."""
    n = d.n
    if n > CANONICAL_MAX_ORDER:
        raise ValueError(f"canonical form limited to order {CANONICAL_MAX_ORDER}, got {n}")
    if n == 0:
        return CanonicalForm(0, "")
    size = n * n
    top = size - 1
    arcs = d.arcs()
    best = None
    for perm in permutations(range(n)):
        enc = 0
        for u, v in arcs:
            enc |= 1 << (top - (perm[u] * n + perm[v]))
        if best is None or enc < best:
            best = enc
    return CanonicalForm(n, format(best, f"0{size}b"))


def all_digraph_rows(n: int):
    """Out-rows of every digraph on n labeled vertices (4**(n(n-1)/2)).

    Each unordered pair cycles through its four states (none, forward,
    backward, both) odometer-style, so successive digraphs differ in
    O(1) arcs.
    """
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rows = [0] * n
    digits = [0] * len(pairs)
    yield tuple(rows)
    for _ in range(4 ** len(pairs) - 1):
        i = 0
        while digits[i] == 3:
            u, v = pairs[i]
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
            digits[i] = 0
            i += 1
        u, v = pairs[i]
        state = digits[i] = digits[i] + 1
        if state == 1:
            rows[u] |= 1 << v
        elif state == 2:
            rows[u] &= ~(1 << v)
            rows[v] |= 1 << u
        else:
            rows[u] |= 1 << v
        yield tuple(rows)


# ---------------------------------------------------------------------------
# Closed-form arc/edge counts and lower bounds
# ---------------------------------------------------------------------------


def ext_formula_digraph(k: int, n: int) -> int:
    """Minimum arcs of a k-critical digraph of order n = k + p, p in [1, k-1]."""
    p = n - k
    if not 1 <= p <= k - 1:
        raise ValueError(f"order must satisfy k+1 <= n <= 2k-1, got k={k}, n={n}")
    if p == 1:
        return 2 * comb(n, 2) - 3
    return 2 * (comb(n, 2) - (p * p + 1))


def ext_formula_graph(k: int, n: int) -> int:
    """Minimum edges of a k-critical graph of order n = k + p, p in [2, k-1].

    Both closed forms are evaluated and must agree.
    """
    p = n - k
    if not 2 <= p <= k - 1:
        raise ValueError(f"order must satisfy k+2 <= n <= 2k-1, got k={k}, n={n}")
    binom_form = comb(n, 2) - (p * p + 1)
    value, rem = divmod((k - 1) * n + p * (k - p) - 2, 2)
    if rem or value != binom_form:
        raise ContradictionError(
            f"closed forms disagree at k={k}, n={n}: {binom_form} vs {value} (rem {rem})"
        )
    return binom_form


def min_degree_arc_bound(k: int, n: int) -> int:
    """(k-1)n, from the minimum-degree property of critical digraphs."""
    return (k - 1) * n


def min_degree_equality_possible(k: int, n: int) -> bool:
    """Whether a k-critical digraph of order n can have exactly (k-1)n arcs:
    only directed cycles, bidirected odd cycles, and bidirected cliques."""
    return (k == 2 and n >= 2) or (k == 3 and n >= 3 and n % 2 == 1) or (n == k >= 2)


def excess_arc_bound(k: int, n: int) -> int:
    """(k-1)n + k - 3, valid for k-critical digraphs with n > k >= 4."""
    return (k - 1) * n + k - 3


def four_critical_arc_bound(n: int) -> int:
    """ceil((10n-4)/3), valid for 4-critical digraphs with n >= 4."""
    return -((4 - 10 * n) // 3)


def four_critical_edge_count(n: int) -> int:
    """ceil((5n-2)/3): exact minimum edge count of 4-critical graphs."""
    return -((2 - 5 * n) // 3)


@dataclass(frozen=True)
class BoundEntry:
    name: str
    value: int
    met: bool
    note: str = ""


@dataclass(frozen=True)
class BoundReport:
    k: int
    n: int
    m: int
    entries: tuple[BoundEntry, ...]

    @property
    def all_met(self) -> bool:
        return all(e.met for e in self.entries)

    def to_dict(self) -> dict:
        return {
            "schema": "dicrit/1",
            "kind": "bound_report",
            "k": self.k,
            "n": self.n,
            "m": self.m,
            "bounds": [
                {"name": e.name, "value": e.value, "met": e.met, "note": e.note}
                for e in self.entries
            ],
        }


def bound_checks(k: int, n: int, m: int) -> BoundReport:
    """Evaluate every applicable arc lower bound at (k, n) against m."""
    entries = []
    if n >= k >= 2:
        value = min_degree_arc_bound(k, n)
        note = ""
        if m == value:
            allowed = min_degree_equality_possible(k, n)
            note = "equality attained" if allowed else "equality impossible for critical digraphs"
        entries.append(BoundEntry("min-degree", value, m >= value, note))
    if n > k >= 4:
        value = excess_arc_bound(k, n)
        entries.append(BoundEntry("min-degree-excess", value, m >= value))
    if k == 4 and n >= 4:
        value = four_critical_arc_bound(n)
        entries.append(BoundEntry("four-critical-density", value, m >= value))
    return BoundReport(k, n, m, tuple(entries))


# ---------------------------------------------------------------------------
# Exhaustive search
# ---------------------------------------------------------------------------


def _row_choices(n: int, v: int, min_deg: int) -> list[tuple[int, int]]:
    # (mask, popcount) options for vertex v's out-row, ascending masks
    self_bit = 1 << v
    out = []
    for mask in range(1 << n):
        if mask & self_bit:
            continue
        c = mask.bit_count()
        if c >= min_deg:
            out.append((mask, c))
    return out


def _scan_rows(n, k, target, first_choices, collect):
    """DFS over out-rows; calls collect(rows) on full degree-feasible
    candidates (with exactly `target` arcs unless target is None).
    Returns the number of candidates handed to collect."""
    min_deg = max(k - 1, 0)
    choices = [_row_choices(n, v, min_deg) for v in range(n)]
    if first_choices is not None:
        choices[0] = first_choices
    rows = [0] * n
    indeg = [0] * n
    examined = 0

    def place(v: int, placed: int) -> None:
        nonlocal examined
        if v == n:
            if (target is None or placed == target) and all(
                c >= min_deg for c in indeg
            ):
                examined += 1
                collect(tuple(rows))
            return
        rest = n - v
        lo = placed + min_deg * rest
        hi = placed + (n - 1) * rest
        if target is not None and not lo <= target <= hi:
            return
        # rows v..n-1 are unplaced; each can still feed indeg[u] unless it is u
        for u in range(n):
            slack = (n - v) - (1 if u >= v else 0)
            if indeg[u] + slack < min_deg:
                return
        for mask, c in choices[v]:
            if target is not None:
                after = placed + c
                rest2 = rest - 1
                if not after + min_deg * rest2 <= target <= after + (n - 1) * rest2:
                    continue
            rows[v] = mask
            m = mask
            while m:
                low = m & -m
                m ^= low
                indeg[low.bit_length() - 1] += 1
            place(v + 1, placed + c)
            m = mask
            while m:
                low = m & -m
                m ^= low
                indeg[low.bit_length() - 1] -= 1
            rows[v] = 0

    place(0, 0)
    return examined


def _search_chunk(args):
    # multiprocessing worker: run one slice of the vertex-0 options
    n, k, target, first_choices = args
    survivors = []

    def collect(rows):
        in_rows = transpose_rows(n, rows)
        if critical_raw(n, rows, in_rows, k):
            survivors.append(rows)

    examined = _scan_rows(n, k, target, first_choices, collect)
    return examined, survivors


def _scan_critical(n, k, target, threads):
    """All critical candidates at one arc count (or all counts if target
    is None): returns (examined, survivor row tuples)."""
    min_deg = max(k - 1, 0)
    first = _row_choices(n, 0, min_deg)
    if threads <= 1 or len(first) < 2 * threads:
        return _search_chunk((n, k, target, first))
    chunks = [first[i::threads] for i in range(threads)]
    with get_context("fork").Pool(threads) as pool:
        parts = pool.map(_search_chunk, [(n, k, target, chunk) for chunk in chunks])
    examined = sum(e for e, _ in parts)
    survivors = [rows for _, found in parts for rows in found]
    survivors.sort()
    return examined, survivors


def _distinct_classes(n, survivor_rows) -> list[CanonicalForm]:
    seen = {}
    for rows in survivor_rows:
        cf = canonical_form(digraph_from_rows(n, rows))
        seen.setdefault(cf.bits, cf)
    return [seen[b] for b in sorted(seen)]


@dataclass(frozen=True)
class ExtremalSearchResult:
    k: int
    n: int
    ext_value: int | None
    minimizers: tuple[CanonicalForm, ...]
    digraphs_examined: int
    exhaustive: bool
    wall_time_s: float
    budget: int | None = None

    @property
    def found(self) -> bool:
        return self.ext_value is not None

    def minimizer_digraphs(self) -> list[Digraph]:
        return [cf.digraph() for cf in self.minimizers]

    def to_dict(self) -> dict:
        return {
            "schema": "dicrit/1",
            "kind": "extremal_search",
            "k": self.k,
            "n": self.n,
            "ext": self.ext_value,
            "exhaustive": self.exhaustive,
            "digraphs_examined": self.digraphs_examined,
            "wall_time_s": round(self.wall_time_s, 3),
            "budget": self.budget,
            "minimizers": [
                {
                    "arcs": [[a.tail, a.head] for a in d.arcs()],
                    "arclist": format_arclist(d),
                }
                for d in self.minimizer_digraphs()
            ],
        }


EXHAUSTIVE_MAX_ORDER = 6


def compute_ext(k: int, n: int, budget: int | None = None, threads: int = 1) -> ExtremalSearchResult:
    """Minimum arc count over k-critical digraphs of order n, with all
    minimizers up to isomorphism.

    Scans arc counts upward from (k-1)n, enumerating degree-feasible
    digraphs at each count and certifying criticality; the scan stops at
    the first count with a hit, so the result is exact. Orders above 6
    need an explicit arc budget and are reported as non-exhaustive.
    """
    if k < 1:
        raise ValueError(f"criticality level must be at least 1, got {k}")
    if n < 1:
        raise ValueError(f"order must be at least 1, got {n}")
    start = time.perf_counter()
    exhaustive = n <= EXHAUSTIVE_MAX_ORDER
    if not exhaustive and budget is None:
        raise ValueError(f"orders above {EXHAUSTIVE_MAX_ORDER} require an arc budget")
    cap = n * (n - 1) if budget is None else min(budget, n * (n - 1))

    if k == 1:
        # the single vertex is the only 1-critical digraph
        found = n == 1
        minimizers = tuple(_distinct_classes(1, [(0,)])) if found else ()
        return ExtremalSearchResult(
            k, n, 0 if found else None, minimizers, 1 if found else 0,
            exhaustive, time.perf_counter() - start, budget,
        )

    examined = 0
    for m in range((k - 1) * n, cap + 1):
        part, survivors = _scan_critical(n, k, m, threads)
        examined += part
        if survivors:
            classes = _distinct_classes(n, survivors)
            for cf in classes:
                if is_k_critical(cf.digraph(), k) is None:
                    raise ContradictionError(
                        f"survivor of the ({k},{n}) scan failed re-certification"
                    )
            return ExtremalSearchResult(
                k, n, m, tuple(classes), examined, exhaustive,
                time.perf_counter() - start, budget,
            )
    return ExtremalSearchResult(
        k, n, None, (), examined, exhaustive, time.perf_counter() - start, budget
    )


ENUMERATION_MAX_ORDER = 5
ENUMERATION_EXTENDED_ORDER = 6


def enumerate_critical(k: int, n: int, threads: int = 1, extended: bool = False) -> list[CanonicalForm]:
    """All k-critical digraphs of order n, up to isomorphism.

    Orders up to 5 run unconditionally; order 6 scans roughly 16.7M
    degree-feasible candidates and must be requested with extended=True.
    """
    if k < 1:
        raise ValueError(f"criticality level must be at least 1, got {k}")
    if n < 1:
        raise ValueError(f"order must be at least 1, got {n}")
    limit = ENUMERATION_EXTENDED_ORDER if extended else ENUMERATION_MAX_ORDER
    if n > limit:
        raise ValueError(
            f"enumeration at order {n} is not feasible"
            + ("" if extended else f"; orders {ENUMERATION_MAX_ORDER + 1}"
               f"..{ENUMERATION_EXTENDED_ORDER} need extended=True")
        )
    if k == 1:
        return [canonical_form(make_digraph(1, []))] if n == 1 else []
    _, survivors = _scan_critical(n, k, None, threads)
    return _distinct_classes(n, survivors)


@dataclass(frozen=True)
class Theorem14Report:
    """Comparison of a finished search against the closed-form minimum
    and the constructed extremal family."""

    k: int
    n: int
    ok: bool
    formula_value: int
    ext_value: int | None
    expected_classes: tuple[str, ...]
    found_classes: tuple[str, ...]
    missing: tuple[str, ...]
    extra: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def verify_theorem14(k: int, n: int, result: ExtremalSearchResult) -> Theorem14Report:
    """Does an exhaustive search reproduce the extremal characterization?

    Checks the ext value against the closed form and the minimizer set
    against the canonical forms of every parameter choice of the
    constructed family (several split shapes can exist per level; the
    comparison is as sets of isomorphism classes).
    """
    if (result.k, result.n) != (k, n):
        raise ValueError(f"search result is for ({result.k},{result.n}), not ({k},{n})")
    if not result.exhaustive:
        raise ValueError("verification needs an exhaustive search result")
    p = n - k
    formula = ext_formula_digraph(k, n)
    expected = sorted(
        {canonical_form(extremal_digraph(k, p, params)).bits for params in dg_param_choices(p + 1)}
    )
    found = sorted(cf.bits for cf in result.minimizers)
    missing = tuple(b for b in expected if b not in found)
    extra = tuple(b for b in found if b not in expected)
    ok = result.ext_value == formula and not missing and not extra
    return Theorem14Report(
        k, n, ok, formula, result.ext_value, tuple(expected), tuple(found), missing, extra
    )
