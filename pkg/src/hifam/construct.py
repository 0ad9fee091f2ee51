"""Multipartite constructions of intersecting families, with exact arithmetic.

The central recipe: host the complete multipartite graph whose final part
has two spare vertices, seed one subgraph per final-part vertex w (the host
minus every edge at w), and take all proper supergraphs of every seed plus
the host itself.  Any two members then intersect in some seed or a pair
intersection of seeds, which still holds a complete multipartite pattern
one part-step smaller.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence, Union

from .density import DyadicDensity
from .detect import MultipartiteTarget, contains_multipartite, contains_p4, contains_subgraph
from .graphs import Graph, complete_multipartite, iter_bits, pair_count

MAX_SPARE_EDGES = 20

TargetLike = Union[Graph, MultipartiteTarget]


@dataclass(frozen=True)
class SubgraphFamily:
    """A host graph plus distinct member edge subsets of it."""

    host: Graph
    members: tuple[int, ...]

    def __init__(self, host: Graph, members: Sequence[int]):
        members = tuple(members)
        seen = set()
        for m in members:
            if m & ~host.edges:
                raise ValueError(f"member {m:#x} is not an edge subset of the host")
            if m in seen:
                raise ValueError(f"duplicate member {m:#x}")
            seen.add(m)
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "members", members)

    def __len__(self) -> int:
        return len(self.members)

    def member_graphs(self) -> list[Graph]:
        return [Graph(self.host.n, m) for m in self.members]


@dataclass(frozen=True)
class ConstructionSpec:
    """Part sizes for the construction: fixed parts plus the final part size t."""

    parts: tuple[int, ...]
    t: int

    def __init__(self, parts: Sequence[int], t: int):
        if not parts or any(p < 1 for p in parts):
            raise ValueError(f"fixed part sizes must all be >= 1, got {list(parts)}")
        if t < 1:
            raise ValueError(f"final part size must be >= 1, got {t}")
        object.__setattr__(self, "parts", tuple(parts))
        object.__setattr__(self, "t", t)

    @property
    def m(self) -> int:
        """Total size of the fixed parts (edges dropped per seed)."""
        return sum(self.parts)

    @property
    def target(self) -> MultipartiteTarget:
        return MultipartiteTarget(self.parts + (self.t,))

    @property
    def host_parts(self) -> tuple[int, ...]:
        return self.parts + (self.t + 2,)


@dataclass(frozen=True)
class MultipartiteFamily:
    """Built construction: host, seed subgraphs, the family, its density."""

    host: Graph
    seeds: tuple[int, ...]
    family: SubgraphFamily
    density: DyadicDensity


def multipartite_family(spec: ConstructionSpec) -> MultipartiteFamily:
    """Build the family: the host plus all proper supergraphs of every seed.

    Seeds are the host minus all edges at one final-part vertex; each seed
    misses exactly m = sum(parts) edges, so it contributes 2^m - 1 proper
    supergraphs and the family has (t+2)(2^m - 1) + 1 members.
    """
    if spec.m > MAX_SPARE_EDGES:
        raise ValueError(f"fixed parts drop {spec.m} edges per seed; cap is {MAX_SPARE_EDGES}")
    host = complete_multipartite(spec.host_parts)  # raises past the vertex cap
    final_part = range(spec.m, host.n)
    seeds = []
    members = {host.edges}
    for w in final_part:
        incident = host.incident_edge_mask(w)
        seed = host.edges & ~incident
        seeds.append(seed)
        positions = list(iter_bits(incident))
        for extra in range((1 << len(positions)) - 1):  # all but the full set
            added = 0
            for i in iter_bits(extra):
                added |= 1 << positions[i]
            members.add(seed | added)
    family = SubgraphFamily(host, sorted(members))
    density = DyadicDensity(len(members), host.edge_count)
    return MultipartiteFamily(host, tuple(seeds), family, density)


@dataclass(frozen=True)
class SeedCheck:
    """Report on a proposed seed set for the general gluing recipe."""

    intersection_property: bool
    disjoint_complement: bool
    family_size: int


def check_seeds(host: Graph, seeds: Sequence[int], target: TargetLike) -> SeedCheck:
    """Check the two conditions that make a seed set glue into a family.

    Condition 1 (intersection property) quantifies over ALL pairs including
    i = j, so every seed must contain the target itself.  Condition 2
    (disjoint complement) asks that distinct seeds union to the full host
    edge set.  The reported family size 1 + sum(2^(e(host)-e(seed)) - 1) is
    meaningful only when both conditions hold.
    """
    seeds = list(seeds)
    if len(set(seeds)) != len(seeds):
        raise ValueError("seed subgraphs must be pairwise distinct")
    for s in seeds:
        if s & ~host.edges:
            raise ValueError(f"seed {s:#x} is not an edge subset of the host")
    check = _containment_check(target)
    intersection_property = all(
        check(Graph(host.n, seeds[i] & seeds[j]))
        for i in range(len(seeds))
        for j in range(i, len(seeds))
    )
    disjoint_complement = all(
        seeds[i] | seeds[j] == host.edges
        for i in range(len(seeds))
        for j in range(i + 1, len(seeds))
    )
    e_host = host.edge_count
    family_size = 1 + sum((1 << (e_host - s.bit_count())) - 1 for s in seeds)
    return SeedCheck(intersection_property, disjoint_complement, family_size)


def _containment_check(target: TargetLike) -> Callable[[Graph], bool]:
    if isinstance(target, MultipartiteTarget):
        return lambda g: contains_multipartite(g, target)
    if target.n == 4 and target.edge_count == 3 and sorted(
        target.degree_sequence()
    ) == [1, 1, 2, 2]:
        return contains_p4
    return lambda g: contains_subgraph(g, target)


def verify_intersecting(
    family: SubgraphFamily, target: TargetLike, require_self: bool = False
) -> tuple[int, int] | None:
    """Check every pair's intersection for the target; None means all pass.

    Distinct pairs are always checked; with require_self each member is also
    checked on its own.  Returns the first failing index pair in member
    order ((i, i) for a self failure).
    """
    check = _containment_check(target)
    members = family.members
    n = family.host.n
    for i in range(len(members)):
        if require_self and not check(Graph(n, members[i])):
            return (i, i)
        for j in range(i + 1, len(members)):
            if not check(Graph(n, members[i] & members[j])):
                return (i, j)
    return None


def trivial_density(target: Graph) -> DyadicDensity:
    """Density of the all-supergraphs-of-one-copy family: 1 / 2^e(target)."""
    return DyadicDensity(1, target.edge_count)


def improvement_margin(spec: ConstructionSpec) -> tuple[int, int]:
    """Family size vs the trivial family rewritten over the host edge count.

    Returns (lhs, rhs) = ((t+2)(2^m - 1) + 1, 2^(2m)); the construction
    beats the trivial bound exactly when lhs > rhs, and t >= 2^m guarantees
    lhs >= 2^(2m) + 2^m - 1.
    """
    m = spec.m
    lhs = (spec.t + 2) * ((1 << m) - 1) + 1
    rhs = 1 << (2 * m)
    return lhs, rhs


def lifted_count_string(family_size: int, host_edges: int, n: int) -> str:
    """Render the family size after lifting the host family to n vertices.

    Every member extends to all graphs on n vertices whose restriction to
    the host's edges equals it, so the count is family_size * 2^(C(n,2) -
    host_edges); the exact integer is appended while C(n,2) <= 128.
    """
    slots = pair_count(n)
    if slots < host_edges:
        raise ValueError(f"n={n} gives only {slots} pairs; host has {host_edges} edges")
    exp = slots - host_edges
    text = f"2^{exp}" if family_size == 1 else f"{family_size} · 2^{exp}"
    if slots <= 128:
        text += f" = {family_size << exp}"
    return text
