"""Command-line front end.

Every subcommand reads/writes the arclist text format and optionally
emits a machine-readable JSON document (schema tag "dicrit/1") via
--json. Exit codes: 0 success, 1 domain failure (e.g. input is not
critical, or nothing found below the arc budget), 2 usage errors
including malformed files.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arclist import ArclistParseError, format_arclist, read_digraph
from .core import Digraph, DigraphError
from .coloring import dichromatic_number, exists_acyclic_k_coloring
from .criticality import certificate_to_dict, is_k_critical
from .constructions import (
    DGParams,
    bidirected_complete,
    bidirected_cycle,
    dg_digraph,
    dirac_join,
    directed_cycle,
    extremal_digraph,
    hajos_join,
)
from .decomposition import check_theorem10, decompose
from .extremal import (
    EXHAUSTIVE_MAX_ORDER,
    bound_checks,
    compute_ext,
    enumerate_critical,
    ext_formula_digraph,
    ext_formula_graph,
    four_critical_edge_count,
)


def _write_json(path: str, doc: dict) -> None:
    with open(path, "w", encoding="ascii") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _emit_digraph(d: Digraph, path: str | None) -> None:
    text = format_arclist(d)
    if path:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_dichromatic(args) -> int:
    d = read_digraph(args.file)
    chi = dichromatic_number(d)
    print(chi)
    if args.json:
        witness = exists_acyclic_k_coloring(d, chi).witness
        _write_json(
            args.json,
            {
                "schema": "dicrit/1",
                "kind": "dichromatic",
                "n": d.n,
                "m": d.num_arcs,
                "chi": chi,
                "witness": list(witness.colors) if witness else None,
            },
        )
    return 0


def _cmd_critical(args) -> int:
    d = read_digraph(args.file)
    cert = is_k_critical(d, args.k)
    if cert is None:
        print(f"not {args.k}-critical")
        return 1
    print(f"{args.k}-critical: yes ({d.num_arcs} arcs, {len(cert.per_arc_witnesses)} witnesses)")
    if args.json:
        _write_json(args.json, certificate_to_dict(d, cert))
    return 0


def _parse_arc(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise DigraphError(f"arc must be given as 'tail,head', got {text!r}")
    return int(parts[0]), int(parts[1])


def _split_params(k: int, y1, y2) -> DGParams | None:
    if y1 is None and y2 is None:
        return None
    if y1 is None or y2 is None:
        raise DigraphError("give both --y1 and --y2 or neither")
    return DGParams(k, y1, y2)


def _cmd_construct(args) -> int:
    if args.family == "cycle":
        d = directed_cycle(args.n)
    elif args.family == "bicycle":
        d = bidirected_cycle(args.n)
    elif args.family == "biclique":
        d = bidirected_complete(args.k)
    elif args.family == "dg":
        d = dg_digraph(args.k, _split_params(args.k, args.y1, args.y2))
    elif args.family == "extremal":
        d = extremal_digraph(args.k, args.p, _split_params(args.p + 1, args.y1, args.y2))
    elif args.family == "dirac-join":
        d = dirac_join(read_digraph(args.file1), read_digraph(args.file2))
    else:  # hajos-join
        d = hajos_join(
            read_digraph(args.file1),
            _parse_arc(args.a1),
            read_digraph(args.file2),
            _parse_arc(args.a2),
        )
    _emit_digraph(d, args.output)
    return 0


def _cmd_decompose(args) -> int:
    d = read_digraph(args.file)
    report = decompose(d, args.k, compute_chi=args.chi)
    print(f"factors: {len(report.factors)} (p={report.p}, q={report.q}, r={report.r})")
    for f in report.factors:
        members = ",".join(map(str, f.vertices))
        chi = f" chi={f.chi}" if f.chi is not None else ""
        print(f"  {f.tag} {{{members}}} arcs={f.digraph.num_arcs}{chi}")
    doc = report.to_dict()
    if args.k is not None:
        bounds = check_theorem10(d, args.k, report)
        for b in bounds.bounds:
            mark = "=" if b.equality else f"slack {b.slack}"
            print(f"  bound {b.name}: {b.lhs} >= {b.rhs} ({mark})")
        for note in bounds.equality_notes:
            print(f"  {note}")
        doc["bounds"] = bounds.to_dict()
    if args.json:
        _write_json(args.json, doc)
    return 0


def _cmd_ext(args) -> int:
    if args.n > EXHAUSTIVE_MAX_ORDER and args.budget is None:
        raise DigraphError(f"orders above {EXHAUSTIVE_MAX_ORDER} need --budget")
    if args.n >= EXHAUSTIVE_MAX_ORDER and not args.extended:
        raise DigraphError(
            f"searching order {args.n} can take hours; re-run with --extended"
        )
    result = compute_ext(args.k, args.n, budget=args.budget, threads=args.threads)
    if args.json:
        _write_json(args.json, result.to_dict())
    if not result.found:
        cap = args.budget if args.budget is not None else args.n * (args.n - 1)
        print(f"no {args.k}-critical digraph of order {args.n} with at most {cap} arcs")
        return 1
    plural = "classes" if len(result.minimizers) != 1 else "class"
    print(f"ext={result.ext_value}, {len(result.minimizers)} {plural}")
    print(
        f"examined {result.digraphs_examined} digraphs in {result.wall_time_s:.2f}s"
        f" (exhaustive={str(result.exhaustive).lower()})"
    )
    return 0


def _cmd_enumerate(args) -> int:
    classes = enumerate_critical(args.k, args.n, threads=args.threads, extended=args.extended)
    print(f"classes={len(classes)}")
    for cf in classes:
        d = cf.digraph()
        arcs = " ".join(f"({a.tail},{a.head})" for a in d.arcs())
        print(f"  m={d.num_arcs}: {arcs}")
    if args.json:
        _write_json(
            args.json,
            {
                "schema": "dicrit/1",
                "kind": "critical_enumeration",
                "k": args.k,
                "n": args.n,
                "classes": [
                    {
                        "arcs": [[a.tail, a.head] for a in cf.digraph().arcs()],
                        "arclist": format_arclist(cf.digraph()),
                    }
                    for cf in classes
                ],
            },
        )
    return 0


def _cmd_formulas(args) -> int:
    k, n, p = args.k, args.n, args.n - args.k
    doc: dict = {"schema": "dicrit/1", "kind": "formulas", "k": k, "n": n, "p": p}
    if 1 <= p <= k - 1:
        value = ext_formula_digraph(k, n)
        print(f"digraph minimum arcs (n=k+{p}): {value}")
        doc["ext_digraph"] = value
    if 2 <= p <= k - 1:
        value = ext_formula_graph(k, n)
        print(f"graph minimum edges (n=k+{p}): {value}")
        doc["ext_graph"] = value
    if k == 4:
        value = four_critical_edge_count(n)
        print(f"graph minimum edges for k=4 (exact): {value}")
        doc["four_critical_edges"] = value
    report = bound_checks(k, n, args.m if args.m is not None else 0)
    doc["bounds"] = []
    for entry in report.entries:
        if args.m is not None:
            status = "met" if entry.met else "NOT met"
            extra = f" [{entry.note}]" if entry.note else ""
            print(f"bound {entry.name}: {entry.value} ({status} by m={args.m}){extra}")
        else:
            print(f"bound {entry.name}: {entry.value}")
        doc["bounds"].append({"name": entry.name, "value": entry.value})
    if args.json:
        _write_json(args.json, doc)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dicrit",
        description="exact dichromatic-number and critical-digraph computations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dichromatic", help="dichromatic number of a digraph file")
    p.add_argument("file")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=_cmd_dichromatic)

    p = sub.add_parser("critical", help="certify k-criticality of a digraph file")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=_cmd_critical)

    p = sub.add_parser("construct", help="emit a named digraph as an arclist")
    fam = p.add_subparsers(dest="family", required=True)

    f = fam.add_parser("cycle", help="directed cycle")
    f.add_argument("--n", type=int, required=True)
    f = fam.add_parser("bicycle", help="bidirected cycle")
    f.add_argument("--n", type=int, required=True)
    f = fam.add_parser("biclique", help="bidirected complete digraph")
    f.add_argument("--k", type=int, required=True)
    f = fam.add_parser("dg", help="split-clique digraph")
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--y1", type=int)
    f.add_argument("--y2", type=int)
    f = fam.add_parser("extremal", help="minimum-arc critical digraph of order k+p")
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--p", type=int, required=True)
    f.add_argument("--y1", type=int)
    f.add_argument("--y2", type=int)
    f = fam.add_parser("dirac-join", help="join two digraph files with all digons")
    f.add_argument("file1")
    f.add_argument("file2")
    f = fam.add_parser("hajos-join", help="classic join of two digraph files")
    f.add_argument("file1")
    f.add_argument("file2")
    f.add_argument("--a1", required=True, metavar="TAIL,HEAD", help="arc of file1; its head is merged")
    f.add_argument("--a2", required=True, metavar="TAIL,HEAD", help="arc of file2; its tail is merged")
    for f_parser in fam.choices.values():
        f_parser.add_argument("-o", "--output", metavar="PATH")
        f_parser.set_defaults(func=_cmd_construct)

    p = sub.add_parser("decompose", help="complement-component factors of a digraph file")
    p.add_argument("file")
    p.add_argument("--k", type=int, help="criticality level; adds the domination bounds")
    p.add_argument("--chi", action="store_true", help="solve each factor's dichromatic number")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("ext", help="minimum arcs over k-critical digraphs of order n")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--budget", type=int, help="stop after this arc count")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--extended", action="store_true", help="allow long runs (order >= 6)")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=_cmd_ext)

    p = sub.add_parser("enumerate", help="all k-critical digraphs of order n, up to isomorphism")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--extended", action="store_true", help="allow the long order-6 run")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("formulas", help="closed-form values and lower bounds at (k, n)")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--m", type=int, help="arc count to test against the bounds")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=_cmd_formulas)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ArclistParseError, DigraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
