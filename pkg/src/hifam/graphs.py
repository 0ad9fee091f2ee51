"""Compact undirected graphs on up to 64 vertices, stored as edge bitsets.

A graph is a vertex count ``n`` plus a Python integer whose bits index the
n(n-1)/2 unordered vertex pairs.  Pairs are numbered column by column along
the upper triangle of the adjacency matrix -- (0,1), (0,2), (1,2), (0,3),
... -- which makes graph6 emission a straight bit copy.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

MAX_VERTICES = 64
CANONICAL_MAX_VERTICES = 8

GRAPH6_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Raised when a graph6 string cannot be decoded."""


def pair_count(n: int) -> int:
    """Number of unordered vertex pairs on n vertices."""
    return n * (n - 1) // 2


def edge_index(i: int, j: int, n: int) -> int:
    """Bit position of the unordered pair {i, j} in an n-vertex edge bitset.

    With i < j the position is j*(j-1)//2 + i; arguments may be given in
    either order.  The map is a bijection from unordered pairs onto
    [0, n(n-1)/2).
    """
    if i == j:
        raise ValueError(f"self-pair ({i}, {i}) is not an edge")
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"vertex pair ({i}, {j}) out of range for n={n}")
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def edge_pair(index: int, n: int) -> tuple[int, int]:
    """Inverse of edge_index: the pair (i, j), i < j, at a bit position."""
    if not 0 <= index < pair_count(n):
        raise ValueError(f"edge index {index} out of range for n={n}")
    j = (1 + math.isqrt(1 + 8 * index)) // 2
    i = index - j * (j - 1) // 2
    return i, j


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: vertex count plus edge bitset."""

    n: int
    edges: int = 0

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside [1, {MAX_VERTICES}]")
        if self.edges < 0 or self.edges >> pair_count(self.n):
            raise ValueError(f"edge bitset has bits outside [0, {pair_count(self.n)})")

    @property
    def edge_count(self) -> int:
        return self.edges.bit_count()

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.edges >> edge_index(i, j, self.n) & 1)

    def edge_pairs(self) -> list[tuple[int, int]]:
        return [edge_pair(b, self.n) for b in iter_bits(self.edges)]

    def adjacency(self) -> list[int]:
        """Per-vertex neighbor bitmasks (bit v of adjacency()[u] marks edge uv)."""
        adj = [0] * self.n
        for i, j in self.edge_pairs():
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return adj

    def degree(self, v: int) -> int:
        return self.adjacency()[v].bit_count()

    def degree_sequence(self) -> list[int]:
        return sorted(a.bit_count() for a in self.adjacency())

    def incident_edge_mask(self, v: int) -> int:
        """Bitset (over edge slots) of this graph's edges incident to v."""
        mask = 0
        for b in iter_bits(self.edges):
            i, j = edge_pair(b, self.n)
            if v in (i, j):
                mask |= 1 << b
        return mask

    def subgraph_of(self, other: "Graph") -> bool:
        """Edge-subset test on the shared labeled vertex set."""
        return self.n == other.n and self.edges & ~other.edges == 0


def from_edges(n: int, pairs: Sequence[tuple[int, int]]) -> Graph:
    mask = 0
    for i, j in pairs:
        mask |= 1 << edge_index(i, j, n)
    return Graph(n, mask)


def complete(n: int) -> Graph:
    return Graph(n, (1 << pair_count(n)) - 1)


def path(n: int) -> Graph:
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Complete multipartite graph with consecutive vertex blocks per part.

    Vertices are laid out part by part in argument order; an edge is present
    exactly when its endpoints lie in different parts.
    """
    if not parts or any(p < 1 for p in parts):
        raise ValueError(f"part sizes must all be >= 1, got {list(parts)}")
    n = sum(parts)
    if n > MAX_VERTICES:
        raise ValueError(f"{n} vertices exceeds the {MAX_VERTICES}-vertex cap")
    starts = [sum(parts[:k]) for k in range(len(parts))]
    mask = 0
    for a in range(len(parts)):
        for b in range(a + 1, len(parts)):
            for i in range(starts[a], starts[a] + parts[a]):
                for j in range(starts[b], starts[b] + parts[b]):
                    mask |= 1 << edge_index(i, j, n)
    return Graph(n, mask)


def christofides_host() -> Graph:
    """The fixed 6-vertex, 7-edge host of the Christofides construction.

    A K_{2,3} (small side {1, 2}, large side {3, 4, 5}) with a pendant
    vertex 0 attached to 1.  Degree sequence [1, 2, 2, 2, 3, 4].
    """
    return from_edges(6, [(0, 1), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])


# ---------------------------------------------------------------------------
# permutation action and canonicalization
# ---------------------------------------------------------------------------


def apply_permutation(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertices: edge {i, j} maps to {perm[i], perm[j]}."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError(f"{list(perm)} is not a bijection on [0, {g.n})")
    mask = 0
    for i, j in g.edge_pairs():
        mask |= 1 << edge_index(perm[i], perm[j], g.n)
    return Graph(g.n, mask)


@dataclass(frozen=True, order=True)
class CanonicalKey:
    """Permutation-invariant representative of an isomorphism class.

    Two graphs on the same vertex count are isomorphic iff their keys are
    equal; the key is the minimum edge bitset over all vertex relabelings.
    """

    n: int
    key: int


@lru_cache(maxsize=None)
def _edge_slot_maps(n: int) -> list[tuple[int, ...]]:
    """For each permutation of [0, n), the induced permutation of edge slots."""
    pairs = [edge_pair(b, n) for b in range(pair_count(n))]
    maps = []
    for perm in itertools.permutations(range(n)):
        maps.append(tuple(edge_index(perm[i], perm[j], n) for i, j in pairs))
    return maps


@lru_cache(maxsize=1 << 16)
def _canonical_edges(n: int, edges: int) -> int:
    bits = list(iter_bits(edges))
    best = edges
    for slot_map in _edge_slot_maps(n):
        permuted = 0
        for b in bits:
            permuted |= 1 << slot_map[b]
        if permuted < best:
            best = permuted
    return best


def canonical_key(g: Graph) -> CanonicalKey:
    """Exhaustive-minimization canonical form; exact for n <= 8."""
    if g.n > CANONICAL_MAX_VERTICES:
        raise ValueError(
            f"canonical_key supports n <= {CANONICAL_MAX_VERTICES}, got n={g.n}"
        )
    return CanonicalKey(g.n, _canonical_edges(g.n, g.edges))


# ---------------------------------------------------------------------------
# interchange formats
# ---------------------------------------------------------------------------


def emit_graph6(g: Graph) -> str:
    """Encode in graph6 (single-byte size form, n <= 62)."""
    if g.n > 62:
        raise ValueError(f"graph6 single-byte size form needs n <= 62, got {g.n}")
    k = pair_count(g.n)
    out = [chr(63 + g.n)]
    for start in range(0, k, 6):
        value = 0
        for offset in range(6):
            b = start + offset
            bit = (g.edges >> b) & 1 if b < k else 0
            value = value << 1 | bit
        out.append(chr(63 + value))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string (optionally prefixed with '>>graph6<<')."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    if not s:
        raise Graph6Error("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(v < 0 or v > 63 for v in data):
        raise Graph6Error(f"byte outside graph6 range in {s!r}")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise Graph6Error("unsupported graph6 size form")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} outside [1, {MAX_VERTICES}]")
    k = pair_count(n)
    if len(body) != (k + 5) // 6:
        raise Graph6Error(f"expected {(k + 5) // 6} data bytes for n={n}, got {len(body)}")
    edges = 0
    for group, value in enumerate(body):
        for offset in range(6):
            if value >> (5 - offset) & 1:
                b = 6 * group + offset
                if b >= k:
                    raise Graph6Error("nonzero padding bits")
                edges |= 1 << b
    return Graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    """Plain text form: 'n m' header then one 'i j' line per edge (0-based)."""
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{i} {j}" for i, j in g.edge_pairs())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty edge-list text")
    try:
        n, m = (int(tok) for tok in lines[0].split())
    except ValueError as exc:
        raise ValueError(f"bad edge-list header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise ValueError(f"header declares {m} edges, found {len(lines) - 1} lines")
    mask = 0
    for ln in lines[1:]:
        try:
            i, j = (int(tok) for tok in ln.split())
        except ValueError as exc:
            raise ValueError(f"bad edge line {ln!r}") from exc
        mask |= 1 << edge_index(i, j, n)
    g = Graph(n, mask)
    if g.edge_count != m:
        raise ValueError("duplicate edges in edge list")
    return g
