"""Family constructions, seed checks, and exact density arithmetic."""

import itertools
import random

import pytest

from hifam import (
    ConstructionSpec,
    DyadicDensity,
    Graph,
    MultipartiteTarget,
    SubgraphFamily,
    check_seeds,
    complete,
    complete_multipartite,
    from_edges,
    improvement_margin,
    lifted_count_string,
    multipartite_family,
    path,
    trivial_density,
    verify_intersecting,
)


# ---------------------------------------------------------------------------
# dyadic densities
# ---------------------------------------------------------------------------


def test_density_normalization():
    assert DyadicDensity(34, 8) == DyadicDensity(17, 7)
    assert DyadicDensity(34, 8).numerator == 17
    d = DyadicDensity(0, 9)
    assert (d.numerator, d.exponent) == (0, 0)
    assert DyadicDensity(12, 0) == DyadicDensity(12, 0)  # exponent floor at 0


def test_density_validation():
    with pytest.raises(ValueError):
        DyadicDensity(-1, 3)
    with pytest.raises(ValueError):
        DyadicDensity(1, -3)


def test_density_strings():
    assert str(DyadicDensity(17, 7)) == "17/2^7"
    assert str(DyadicDensity(1, 0)) == "1"
    assert str(DyadicDensity(0, 5)) == "0"


def test_density_rescaling():
    assert DyadicDensity(1, 8).scaled_numerator(12) == 16
    with pytest.raises(ValueError):
        DyadicDensity(17, 7).scaled_numerator(3)


def test_density_order_matches_fractions():
    rng = random.Random(13)
    for _ in range(500):
        a = DyadicDensity(rng.randint(0, 1 << 20), rng.randint(0, 40))
        b = DyadicDensity(rng.randint(0, 1 << 20), rng.randint(0, 40))
        assert (a < b) == (a.as_fraction() < b.as_fraction())
        assert (a == b) == (a.as_fraction() == b.as_fraction())
        assert (a > b) == (a.as_fraction() > b.as_fraction())


# ---------------------------------------------------------------------------
# the multipartite construction
# ---------------------------------------------------------------------------

BIPARTITE_TABLE = [
    # parts, t, family size, host edges
    ((2,), 4, 19, 12),
    ((3,), 8, 71, 30),
    ((4,), 16, 271, 72),
    ((5,), 32, 1055, 170),
]

MULTIPARTITE_TABLE = [
    ((1, 1), 4, 19, 13),
    ((1, 2), 8, 71, 32),
    ((2, 2), 16, 271, 76),
    ((1, 1, 1), 8, 71, 33),
]


@pytest.mark.parametrize("parts,t,size,host_edges", BIPARTITE_TABLE + MULTIPARTITE_TABLE)
def test_construction_table(parts, t, size, host_edges):
    built = multipartite_family(ConstructionSpec(parts, t))
    assert len(built.family) == size
    assert built.host.edge_count == host_edges
    assert built.density == DyadicDensity(size, host_edges)
    assert len(built.seeds) == t + 2


def test_smallest_instance_fully_verified():
    built = multipartite_family(ConstructionSpec((1,), 2))
    assert built.host.n == 5 and built.host.edge_count == 4  # K_{1,4}
    assert len(built.family) == 5
    assert built.density == DyadicDensity(5, 4)
    assert verify_intersecting(built.family, MultipartiteTarget([1, 2]), require_self=True) is None


def test_family_members_are_distinct_host_subsets():
    built = multipartite_family(ConstructionSpec((2,), 4))
    members = built.family.members
    assert len(set(members)) == len(members)
    assert all(m & ~built.host.edges == 0 for m in members)
    assert built.host.edges in members


def _part_lists_up_to_total(total):
    out = []
    for k in range(1, total + 1):
        for combo in itertools.combinations_with_replacement(range(1, total + 1), k):
            if sum(combo) <= total:
                out.append(combo)
    return out


def test_size_formula_over_small_grid():
    # set-based generation never loses members: the per-seed supergraph
    # collections are pairwise disjoint
    for parts in _part_lists_up_to_total(4):
        m = sum(parts)
        for t in range(1, (1 << m) + 3):
            built = multipartite_family(ConstructionSpec(parts, t))
            assert len(built.family) == (t + 2) * ((1 << m) - 1) + 1, (parts, t)


def test_seed_check_agrees_with_size_formula():
    for parts in _part_lists_up_to_total(3):
        m = sum(parts)
        for t in (1, 1 << m, (1 << m) + 2):
            spec = ConstructionSpec(parts, t)
            built = multipartite_family(spec)
            report = check_seeds(built.host, built.seeds, MultipartiteTarget(parts + (t,)))
            assert report.intersection_property
            assert report.disjoint_complement
            assert report.family_size == len(built.family)


@pytest.mark.parametrize("parts,t,target_parts", [
    ((1,), 2, (1, 2)),
    ((2,), 4, (2, 4)),
    ((1, 1), 4, (1, 1, 4)),
    ((3,), 8, (3, 8)),
    ((1, 1, 1), 8, (1, 1, 1, 8)),
])
def test_intersecting_property_on_hosts_up_to_14_vertices(parts, t, target_parts):
    built = multipartite_family(ConstructionSpec(parts, t))
    assert built.host.n <= 14
    failure = verify_intersecting(
        built.family, MultipartiteTarget(target_parts), require_self=True
    )
    assert failure is None


@pytest.mark.parametrize("parts,t", [((4,), 16), ((5,), 32)])
def test_intersecting_property_on_large_hosts(request, parts, t):
    if not request.config.getoption("--run-large-verify"):
        pytest.skip("quadratic check on hundreds of members; pass --run-large-verify")
    built = multipartite_family(ConstructionSpec(parts, t))
    failure = verify_intersecting(
        built.family, MultipartiteTarget(parts + (t,)), require_self=True
    )
    assert failure is None


def test_construction_caps():
    with pytest.raises(ValueError):
        multipartite_family(ConstructionSpec((5,), 60))  # 67 vertices
    with pytest.raises(ValueError):
        ConstructionSpec((), 4)
    with pytest.raises(ValueError):
        ConstructionSpec((2,), 0)


# ---------------------------------------------------------------------------
# seed checks on hand-built inputs
# ---------------------------------------------------------------------------


def test_seed_check_triangle_host():
    host = complete(3)
    seeds = [0b011, 0b101]  # two distinct 2-edge subsets
    report = check_seeds(host, seeds, path(2))
    assert report.intersection_property
    assert report.disjoint_complement
    assert report.family_size == 3  # 1 + (2-1) + (2-1)


def test_seed_check_detects_missing_intersection():
    host = path(4)
    middle = 1 << 2  # edge {1,2} sits at slot 2
    seeds = [host.edges, host.edges & ~middle]
    report = check_seeds(host, seeds, path(4))
    assert not report.intersection_property


def test_seed_check_rejects_duplicates_and_non_subsets():
    host = complete(3)
    with pytest.raises(ValueError):
        check_seeds(host, [0b011, 0b011], path(2))
    with pytest.raises(ValueError):
        check_seeds(path(3), [0b010], path(2))  # slot 1 is not a P3 edge


# ---------------------------------------------------------------------------
# pairwise verification
# ---------------------------------------------------------------------------


def test_verify_reports_first_failing_pair():
    host = complete(4)
    triangle = from_edges(4, [(0, 1), (0, 2), (1, 2)])
    lone_edge = from_edges(4, [(0, 3)])
    family = SubgraphFamily(host, [triangle.edges, lone_edge.edges])
    assert verify_intersecting(family, path(2), require_self=False) == (0, 1)


def test_verify_self_check_catches_weak_members():
    host = path(4)  # edge slots {0, 2, 5}
    short = 0b101  # edges (0,1) and (1,2): contains P3, not P4
    family = SubgraphFamily(host, [host.edges, short])
    assert verify_intersecting(family, path(4), require_self=False) == (0, 1)
    assert verify_intersecting(
        SubgraphFamily(host, [short, host.edges]), path(4), require_self=True
    ) == (0, 0)


def test_family_validation():
    host = path(3)  # edge slots {0, 2}
    with pytest.raises(ValueError):
        SubgraphFamily(host, [0b010])  # slot 1 is not a host edge
    with pytest.raises(ValueError):
        SubgraphFamily(host, [0b1, 0b1])


# ---------------------------------------------------------------------------
# trivial bound, margin, lifting
# ---------------------------------------------------------------------------


def test_trivial_densities():
    assert trivial_density(path(4)) == DyadicDensity(1, 3)
    k24 = complete_multipartite([2, 4])
    assert trivial_density(k24) == DyadicDensity(1, 8)
    assert trivial_density(k24).scaled_numerator(12) == 16
    assert trivial_density(Graph(4, 0)) == DyadicDensity(1, 0)


@pytest.mark.parametrize("parts,t,lhs,rhs", [
    ((1,), 2, 5, 4),
    ((2,), 4, 19, 16),
    ((5,), 32, 1055, 1024),
])
def test_margin_examples(parts, t, lhs, rhs):
    assert improvement_margin(ConstructionSpec(parts, t)) == (lhs, rhs)


def test_margin_chain_at_threshold():
    for m in range(1, 11):
        lhs, rhs = improvement_margin(ConstructionSpec((m,), 1 << m))
        assert lhs == (1 << (2 * m)) + (1 << m) - 1
        assert lhs > rhs == 1 << (2 * m)


def test_density_beats_trivial_iff_margin_does():
    for parts in _part_lists_up_to_total(3):
        m = sum(parts)
        for t in range(1, (1 << m) + 3):
            spec = ConstructionSpec(parts, t)
            built = multipartite_family(spec)
            target = complete_multipartite(parts + (t,))
            lhs, rhs = improvement_margin(spec)
            assert (built.density > trivial_density(target)) == (lhs > rhs)


def test_lifted_count_strings():
    assert lifted_count_string(17, 7, 6) == "17 · 2^8 = 4352"
    assert lifted_count_string(19, 12, 8) == "19 · 2^16 = 1245184"
    assert lifted_count_string(1, 5, 4) == "2^1 = 2"
    assert lifted_count_string(19, 12, 40) == "19 · 2^768"
    with pytest.raises(ValueError):
        lifted_count_string(17, 7, 3)
