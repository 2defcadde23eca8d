"""Text serialization of digraphs.

Primary format "arclist v1": first line `n m`, then m lines `u v`
(0-based, LF). The reader also accepts a 0/1 adjacency-matrix format:
a line holding just n, then n rows of n characters where row u,
column v is 1 exactly when the arc uv is present. The two formats are
told apart by the token count of the first non-blank line. Writers
always emit arclist with arcs sorted lexicographically.
"""

from __future__ import annotations

from .core import Digraph, DigraphError, make_digraph


class ArclistParseError(ValueError):
    """Malformed digraph text; message carries the 1-based line number."""


def format_arclist(d: Digraph) -> str:
    lines = [f"{d.n} {d.num_arcs}"]
    lines.extend(f"{a.tail} {a.head}" for a in d.arcs())
    return "\n".join(lines) + "\n"


def _int_token(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ArclistParseError(f"line {lineno}: {what} is not an integer: {token!r}") from None


def parse_digraph(text: str) -> Digraph:
    """Parse arclist v1 or the adjacency-matrix format."""
    numbered = [(i + 1, line.strip()) for i, line in enumerate(text.splitlines())]
    rows = [(i, line) for i, line in numbered if line]
    if not rows:
        raise ArclistParseError("line 1: empty input")
    first_no, first = rows[0]
    head = first.split()
    if len(head) == 2:
        return _parse_arclist(rows)
    if len(head) == 1:
        return _parse_matrix(rows)
    raise ArclistParseError(
        f"line {first_no}: expected 'n m' (arclist) or 'n' (matrix), got {len(head)} tokens"
    )


def _parse_arclist(rows) -> Digraph:
    first_no, first = rows[0]
    n_tok, m_tok = first.split()
    n = _int_token(n_tok, first_no, "vertex count")
    m = _int_token(m_tok, first_no, "arc count")
    if len(rows) - 1 != m:
        raise ArclistParseError(
            f"line {first_no}: header announces {m} arcs but {len(rows) - 1} arc lines follow"
        )
    arcs = []
    for lineno, line in rows[1:]:
        toks = line.split()
        if len(toks) != 2:
            raise ArclistParseError(f"line {lineno}: expected 'u v', got {len(toks)} tokens")
        u = _int_token(toks[0], lineno, "arc tail")
        v = _int_token(toks[1], lineno, "arc head")
        arcs.append((u, v))
    try:
        return make_digraph(n, arcs)
    except DigraphError as exc:
        raise ArclistParseError(f"line {rows[0][0]}: {exc}") from exc


def _parse_matrix(rows) -> Digraph:
    first_no, first = rows[0]
    n = _int_token(first, first_no, "vertex count")
    if len(rows) - 1 != n:
        raise ArclistParseError(
            f"line {first_no}: matrix of order {n} needs {n} rows, got {len(rows) - 1}"
        )
    arcs = []
    for u, (lineno, line) in enumerate(rows[1:]):
        if len(line) != n or set(line) - {"0", "1"}:
            raise ArclistParseError(f"line {lineno}: expected {n} characters of 0/1")
        for v, ch in enumerate(line):
            if ch == "1":
                arcs.append((u, v))
    try:
        return make_digraph(n, arcs)
    except DigraphError as exc:
        raise ArclistParseError(f"line {first_no}: {exc}") from exc


def read_digraph(path) -> Digraph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_digraph(fh.read())


def write_digraph(path, d: Digraph) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_arclist(d))
