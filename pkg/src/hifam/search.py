"""Exhaustive host-class search driver with JSONL persistence.

Each host graph is an independent job: build its compatibility graph, solve
exact maximum clique, record the result.  Hosts are distributed across
worker processes; records are merged back in deterministic (edge count,
canonical key) order, so output files are byte-identical no matter how many
jobs ran.  Wall-clock timings are kept in memory but only written with
include_timing, since they would break that byte-level determinism.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterable, Sequence

from .clique import build_compatibility, max_clique
from .construct import SubgraphFamily, verify_intersecting
from .density import DyadicDensity, density_string
from .enumeration import HostClass, connected_graphs
from .graphs import Graph, emit_graph6, parse_graph6

RECORD_FIELDS = ("host_graph6", "n", "m", "clique_size", "density", "witness_hex")


@dataclass
class SearchRecord:
    """One result row per host graph."""

    host_graph6: str
    n: int
    m: int
    clique_size: int
    density: str
    witness_hex: list[str]
    elapsed_ms: int = 0

    def to_json(self, include_timing: bool = False) -> str:
        obj = {name: getattr(self, name) for name in RECORD_FIELDS}
        if include_timing:
            obj["elapsed_ms"] = self.elapsed_ms
        return json.dumps(obj, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "SearchRecord":
        obj = json.loads(line)
        return cls(
            host_graph6=obj["host_graph6"],
            n=obj["n"],
            m=obj["m"],
            clique_size=obj["clique_size"],
            density=obj["density"],
            witness_hex=list(obj["witness_hex"]),
            elapsed_ms=obj.get("elapsed_ms", 0),
        )


@dataclass
class SearchSummary:
    host_count: int
    max_clique_size: int
    max_density: DyadicDensity
    argmax_hosts: list[str]


def _solve_host(args: tuple[Graph, Graph]) -> SearchRecord:
    host, target = args
    start = time.perf_counter()
    cg = build_compatibility(host, target)
    result = max_clique(cg)
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    return SearchRecord(
        host_graph6=emit_graph6(host),
        n=host.n,
        m=host.edge_count,
        clique_size=result.size,
        density=density_string(result.size, host.edge_count),
        witness_hex=[hex(cg.labels[i]) for i in result.witness],
        elapsed_ms=elapsed_ms,
    )


def search_hosts(
    n: int,
    edge_counts: Sequence[int],
    target: Graph,
    connected: bool = True,
    jobs: int = 1,
) -> tuple[list[SearchRecord], SearchSummary]:
    """Solve every host class representative; deterministic record order."""
    hosts: list[Graph] = []
    for m in sorted(set(edge_counts)):
        hosts.extend(connected_graphs(HostClass(n, m, connected)))
    tasks = [(host, target) for host in hosts]
    if jobs > 1 and len(tasks) > 1:
        with Pool(processes=jobs) as pool:
            records = pool.map(_solve_host, tasks)
    else:
        records = [_solve_host(t) for t in tasks]
    return records, summarize(records)


def summarize(records: Iterable[SearchRecord]) -> SearchSummary:
    records = list(records)
    best = DyadicDensity(0, 0)
    best_clique = 0
    argmax: list[str] = []
    for rec in records:
        d = DyadicDensity(rec.clique_size, rec.m)
        if not argmax or d > best:
            best = d
            argmax = [rec.host_graph6]
            best_clique = rec.clique_size
        elif d == best:
            argmax.append(rec.host_graph6)
            best_clique = max(best_clique, rec.clique_size)
    return SearchSummary(len(records), best_clique, best, argmax)


def write_records(
    records: Sequence[SearchRecord], path: str, include_timing: bool = False
) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for rec in records:
            fh.write(rec.to_json(include_timing) + "\n")


def load_records(path: str) -> list[SearchRecord]:
    out = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(SearchRecord.from_json(line))
    return out


def verify_records(
    records: Sequence[SearchRecord], target: Graph, require_self: bool = True
) -> list[str]:
    """Re-verify persisted records; returns one message per violation."""
    problems = []
    for rec in records:
        where = f"record {rec.host_graph6}"
        try:
            host = parse_graph6(rec.host_graph6)
        except ValueError as exc:
            problems.append(f"{where}: bad host graph6 ({exc})")
            continue
        if host.n != rec.n or host.edge_count != rec.m:
            problems.append(f"{where}: n/m fields disagree with the host")
            continue
        if rec.density != density_string(rec.clique_size, rec.m):
            problems.append(f"{where}: density string is not clique_size/2^m")
        if len(rec.witness_hex) != rec.clique_size:
            problems.append(f"{where}: witness length != clique_size")
            continue
        try:
            members = [int(h, 16) for h in rec.witness_hex]
            family = SubgraphFamily(host, members)
        except ValueError as exc:
            problems.append(f"{where}: bad witness ({exc})")
            continue
        failure = verify_intersecting(family, target, require_self=require_self)
        if failure is not None:
            problems.append(f"{where}: members {failure} lack the target intersection")
    return problems
