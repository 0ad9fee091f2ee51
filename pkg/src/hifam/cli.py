"""Command-line front end.

Subcommands: enumerate (host classes as graph6 lines), clique (one host,
exact solve), search (a whole host class, JSONL records plus summary),
construct (multipartite family with density comparison), verify (re-check
persisted search records).  Exit codes: 0 success, 1 property violation,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .clique import build_compatibility, max_clique
from .construct import (
    ConstructionSpec,
    improvement_margin,
    lifted_count_string,
    multipartite_family,
    trivial_density,
    verify_intersecting,
)
from .density import density_string
from .detect import MultipartiteTarget
from .enumeration import HostClass, connected_graphs
from .graphs import (
    Graph,
    Graph6Error,
    christofides_host,
    complete,
    complete_multipartite,
    cycle,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
    path,
)
from .search import load_records, search_hosts, verify_records, write_records

JOBS_ENV = "HIFAM_JOBS"

BUILTIN_GRAPHS = {
    "christofides": christofides_host,
}

_SHAPE_RE = re.compile(r"^([pck])(\d+)$", re.IGNORECASE)
_PARTS_RE = re.compile(r"^k(\d+(?:,\d+)+)$", re.IGNORECASE)


class InputError(ValueError):
    """User-supplied graph or flag text that cannot be interpreted."""


def resolve_graph(text: str) -> Graph:
    """Interpret a graph argument.

    Accepted forms: '-' (read stdin), '@path' (read file), a builtin name
    ('christofides'), a shape name ('p4', 'c5', 'k6', 'k2,4'), a graph6
    string, or inline edge-list text ('n m\\ni j\\n...').  Shape names win
    over graph6 when both would parse.
    """
    s = text.strip()
    if s == "-":
        return _graph_from_text(sys.stdin.read())
    if s.startswith("@"):
        try:
            with open(s[1:], "r", encoding="ascii") as fh:
                return _graph_from_text(fh.read())
        except OSError as exc:
            raise InputError(f"cannot read graph file {s[1:]!r}: {exc}") from exc
    name = s.lower()
    if name in BUILTIN_GRAPHS:
        return BUILTIN_GRAPHS[name]()
    match = _SHAPE_RE.match(s)
    if match:
        kind, size = match.group(1).lower(), int(match.group(2))
        try:
            if kind == "p":
                return path(size)
            if kind == "c":
                return cycle(size)
            return complete(size)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    match = _PARTS_RE.match(s)
    if match:
        parts = [int(tok) for tok in match.group(1).split(",")]
        try:
            return complete_multipartite(parts)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    return _graph_from_text(s)


def _graph_from_text(text: str) -> Graph:
    stripped = text.strip()
    if not stripped:
        raise InputError("empty graph input")
    first = stripped.splitlines()[0].strip()
    if " " in first or "\t" in first:
        try:
            return parse_edge_list(stripped)
        except ValueError as exc:
            raise InputError(f"bad edge list: {exc}") from exc
    try:
        return parse_graph6(first)
    except Graph6Error as exc:
        raise InputError(f"bad graph6: {exc}") from exc


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise InputError(f"expected comma-separated integers, got {text!r}") from exc


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_enumerate(args: argparse.Namespace) -> int:
    spec = HostClass(args.vertices, args.edges, args.connected)
    graphs = connected_graphs(spec)
    if args.json:
        print(json.dumps({
            "n": args.vertices,
            "m": args.edges,
            "connected": args.connected,
            "count": len(graphs),
            "graphs": [emit_graph6(g) for g in graphs],
        }))
    else:
        for g in graphs:
            print(emit_graph6(g))
    return 0


def cmd_clique(args: argparse.Namespace) -> int:
    host = resolve_graph(args.host)
    target = resolve_graph(args.target)
    cg = build_compatibility(host, target)
    result = max_clique(cg)
    witness_hex = [hex(cg.labels[i]) for i in result.witness]
    raw_density = density_string(result.size, host.edge_count)
    if args.json:
        print(json.dumps({
            "host_graph6": emit_graph6(host),
            "n": host.n,
            "m": host.edge_count,
            "candidates": cg.size,
            "size": result.size,
            "density": raw_density,
            "witness_hex": witness_hex,
        }))
    else:
        print(f"host: {emit_graph6(host)} (n={host.n}, m={host.edge_count})")
        print(f"candidates: {cg.size}")
        print(f"size: {result.size}")
        print(f"density: {raw_density}")
        print(f"witness: {' '.join(witness_hex)}")
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    target = resolve_graph(args.target)
    edge_counts = _parse_int_list(args.edges)
    records, summary = search_hosts(
        args.vertices, edge_counts, target,
        connected=args.connected, jobs=args.jobs,
    )
    write_records(records, args.out, include_timing=args.timings)
    max_density = density_string(summary.max_density.numerator, summary.max_density.exponent)
    if args.json:
        print(json.dumps({
            "hosts": summary.host_count,
            "max_clique": summary.max_clique_size,
            "max_density": max_density,
            "argmax_hosts": summary.argmax_hosts,
            "out": args.out,
        }))
    else:
        print(f"hosts: {summary.host_count}")
        print(f"max clique: {summary.max_clique_size}")
        print(f"max density: {max_density}")
        print(f"argmax hosts: {' '.join(summary.argmax_hosts) if summary.argmax_hosts else '-'}")
        print(f"wrote {summary.host_count} records to {args.out}")
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    spec = ConstructionSpec(tuple(_parse_int_list(args.parts)), args.t)
    built = multipartite_family(spec)
    host = built.host
    target_parts = spec.parts + (args.target_t if args.target_t is not None else spec.t,)
    target_graph = complete_multipartite(target_parts)
    trivial = trivial_density(target_graph)
    e_host = host.edge_count
    family_str = density_string(len(built.family), e_host)
    trivial_str = density_string(trivial.scaled_numerator(e_host), e_host)
    improved = built.density > trivial
    op = ">" if improved else ("=" if built.density == trivial else "<")
    verdict = f"{family_str} {op} {trivial_str}: {'improved' if improved else 'not improved'}"
    lhs, rhs = improvement_margin(spec)

    verify_failure = None
    if args.verify:
        verify_failure = verify_intersecting(
            built.family, MultipartiteTarget(target_parts), require_self=True
        )

    if args.json:
        obj = {
            "parts": list(spec.parts),
            "t": spec.t,
            "host_parts": list(spec.host_parts),
            "host_graph6": emit_graph6(host),
            "n": host.n,
            "m": e_host,
            "family_size": len(built.family),
            "density": family_str,
            "trivial_density": trivial_str,
            "margin": [lhs, rhs],
            "improved": improved,
            "lifted": lifted_count_string(len(built.family), e_host, host.n),
        }
        if args.verify:
            obj["verified"] = verify_failure is None
        print(json.dumps(obj))
    else:
        host_name = "K_{" + ",".join(str(p) for p in spec.host_parts) + "}"
        print(f"host: {host_name} = {emit_graph6(host)} (n={host.n}, m={e_host})")
        print(f"family size: {len(built.family)}")
        print(f"density: {family_str}")
        print(f"trivial density: {trivial} = {trivial_str}")
        print(f"lifted count at n={host.n}: {lifted_count_string(len(built.family), e_host, host.n)}")
        print(verdict)
        if args.verify:
            target_name = "K_{" + ",".join(str(p) for p in target_parts) + "}"
            if verify_failure is None:
                print(f"verified: every pair intersection contains {target_name}")
            else:
                print(f"VIOLATION: members {verify_failure} lack a {target_name} intersection")
    return 1 if args.verify and verify_failure is not None else 0


def cmd_verify(args: argparse.Namespace) -> int:
    target = resolve_graph(args.target)
    records = load_records(args.records)
    problems = verify_records(records, target, require_self=not args.no_self)
    if args.json:
        print(json.dumps({
            "records": len(records),
            "violations": problems,
        }))
    else:
        if problems:
            for p in problems:
                print(p)
        print(f"{'FAIL' if problems else 'ok'}: {len(records)} records, {len(problems)} violations")
    return 1 if problems else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hifam",
        description="Search and construction toolkit for pattern-intersecting "
                    "families of graph edge sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="host classes as graph6 lines")
    p_enum.add_argument("--vertices", "-n", type=int, required=True)
    p_enum.add_argument("--edges", "-m", type=int, required=True)
    p_enum.add_argument("--connected", action="store_true",
                        help="keep only connected hosts")
    p_enum.add_argument("--json", action="store_true")
    p_enum.set_defaults(func=cmd_enumerate)

    p_clique = sub.add_parser("clique", help="exact maximum clique on one host")
    p_clique.add_argument("--host", required=True,
                          help="builtin name, shape (p4/c5/k6/k2,4), graph6, @file, or -")
    p_clique.add_argument("--target", default="p4", help="target pattern (default p4)")
    p_clique.add_argument("--json", action="store_true")
    p_clique.set_defaults(func=cmd_clique)

    p_search = sub.add_parser("search", help="solve every host in a class")
    p_search.add_argument("--vertices", "-n", type=int, required=True)
    p_search.add_argument("--edges", "-m", required=True,
                          help="comma-separated edge counts, e.g. 7,8")
    p_search.add_argument("--target", default="p4")
    p_search.add_argument("--connected", action="store_true")
    p_search.add_argument("--jobs", "-j", type=int, default=_default_jobs(),
                          help=f"worker processes (default ${JOBS_ENV} or 1)")
    p_search.add_argument("--out", "-o", required=True, help="JSONL output path")
    p_search.add_argument("--timings", action="store_true",
                          help="include per-host elapsed_ms (non-deterministic)")
    p_search.add_argument("--json", action="store_true")
    p_search.set_defaults(func=cmd_search)

    p_construct = sub.add_parser("construct", help="multipartite family and density")
    p_construct.add_argument("--parts", required=True,
                             help="comma-separated fixed part sizes, e.g. 2,2")
    p_construct.add_argument("--t", type=int, required=True, help="final part size")
    p_construct.add_argument("--verify", action="store_true",
                             help="check every pair intersection (quadratic)")
    p_construct.add_argument("--target-t", type=int, default=None,
                             help="final part size of the verification target "
                                  "(default: the construction's t)")
    p_construct.add_argument("--json", action="store_true")
    p_construct.set_defaults(func=cmd_construct)

    p_verify = sub.add_parser("verify", help="re-check persisted search records")
    p_verify.add_argument("--records", required=True, help="JSONL file from search")
    p_verify.add_argument("--target", default="p4")
    p_verify.add_argument("--no-self", action="store_true",
                          help="skip per-member containment checks")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, Graph6Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
