import random

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

import irgraphs as ig

from oracles import (
    naive_ir_sets,
    naive_is_irredundant,
    naive_private_neighborhood,
    neighbor_sets,
)
from strategies import graphs


@pytest.fixture(scope="module")
def gprime():
    return ig.build_gprime()[0]


@pytest.fixture(scope="module")
def g1_roles():
    return ig.build_gn(1)


def test_private_neighborhood_gprime(gprime):
    d = ig.mask_of([0, 1, 2])
    assert ig.private_neighborhood(gprime, d, 0) == ig.mask_of([3])


def test_private_neighborhood_singleton(gprime):
    for v in range(gprime.order):
        assert ig.private_neighborhood(gprime, 1 << v, v) == gprime.closed(v)


def test_private_neighborhood_gn_hubs(g1_roles):
    g, roles = g1_roles
    uv = roles.mask("u", "v")
    assert ig.private_neighborhood(g, uv, roles.vertex("u")) == roles.mask("a1")
    assert ig.external_private_neighborhood(g, uv, roles.vertex("u")) == roles.mask("a1")


def test_private_neighborhood_not_a_member(gprime):
    with pytest.raises(ig.NotAMember):
        ig.private_neighborhood(gprime, ig.mask_of([0, 1]), 5)


def test_external_private_neighborhood(gprime):
    d = ig.mask_of([0, 1, 2])
    assert ig.external_private_neighborhood(gprime, d, 0) == ig.mask_of([3])
    # an isolated member with no outside private neighbors keeps only itself
    c4 = ig.cycle_graph(4)
    diag = ig.mask_of([0, 2])
    assert ig.private_neighborhood(c4, diag, 0) == ig.mask_of([0])
    assert ig.external_private_neighborhood(c4, diag, 0) == 0


def test_is_irredundant_examples(g1_roles):
    g, roles = g1_roles
    assert ig.is_irredundant(g, roles.mask("u", "v"))
    assert ig.is_irredundant(g, 0)
    g3, roles3 = ig.build_gn(3)
    bad = roles3.mask("a1", "b1", "c1")
    assert not ig.is_irredundant(g3, bad)
    assert not ig.is_irredundant(g3, bad | roles3.mask("d2", "u"))


def test_ir_number_examples(gprime):
    for n in range(1, 6):
        assert ig.ir_number(ig.complete_graph(n)) == 1
    assert ig.ir_number(gprime) == 3
    for n in (1, 2, 3):
        g, _ = ig.build_gn(n)
        assert ig.ir_number(g) == 2 * n + 1


def test_all_ir_sets_k3():
    assert ig.all_ir_sets(ig.complete_graph(3)) == [1, 2, 4]


def test_all_ir_sets_gprime(gprime):
    got = ig.all_ir_sets(gprime)
    expected = sorted(
        [
            ig.mask_of([0, 1, 2]),
            ig.mask_of([3, 1, 2]),
            ig.mask_of([3, 4, 2]),
            ig.mask_of([3, 4, 5]),
            ig.mask_of([0, 3, 1]),
            ig.mask_of([4, 5, 2]),
        ],
        key=ig.members,
    )
    assert got == expected


def test_all_ir_sets_gn1_census(g1_roles):
    g, _ = g1_roles
    assert ig.all_ir_sets(g) == ig.expected_ir_sets_gn(1)


def test_order_zero_graph():
    g = ig.graph_from_edges(0, [])
    assert ig.ir_number(g) == 0
    assert ig.all_ir_sets(g) == [0]


@given(graphs(max_order=9))
@settings(max_examples=80, deadline=None)
def test_search_matches_naive_sweep(g):
    if g.order == 0:
        return
    best, sets = naive_ir_sets(g)
    assert ig.ir_number(g) == best
    assert [ig.members(m) for m in ig.all_ir_sets(g)] == sets


@given(graphs(max_order=9), st.data())
@settings(max_examples=100, deadline=None)
def test_heredity(g, data):
    if g.order == 0:
        return
    sets = ig.all_ir_sets(g)
    x = data.draw(st.sampled_from(sets))
    sub = data.draw(st.lists(st.sampled_from(ig.members(x)), unique=True))
    assert ig.is_irredundant(g, ig.mask_of(sub))


@given(graphs(max_order=9), st.data())
@settings(max_examples=100, deadline=None)
def test_private_neighborhoods_disjoint(g, data):
    nbrs = neighbor_sets(g)
    vs = list(range(g.order))
    d = set(data.draw(st.lists(st.sampled_from(vs), unique=True))) if vs else set()
    pns = ig.private_neighborhoods(g, ig.mask_of(d))
    seen = 0
    for v, pn in pns.items():
        assert seen & pn == 0
        seen |= pn
        assert set(ig.members(pn)) == naive_private_neighborhood(nbrs, d, v)


def test_heredity_bulk_trials():
    rng = random.Random(2024)
    trials = 0
    while trials < 2000:
        n = rng.randint(1, 9)
        p = rng.choice([0.15, 0.35, 0.6])
        g = ig.graph_from_edges(
            n,
            [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if rng.random() < p
            ],
        )
        sets = ig.all_ir_sets(g)
        x = rng.choice(sets)
        sub = [v for v in ig.members(x) if rng.random() < 0.5]
        assert ig.is_irredundant(g, ig.mask_of(sub))
        trials += 1


def test_partition_default_policy(gprime):
    x = ig.mask_of([0, 1, 2])
    part = ig.epn_iso_partition(gprime, x)
    assert part.x_epn == x and part.x_iso == 0
    assert part.epn_choice == {0: 3, 1: 4, 2: 5}


def test_partition_policies_differ_on_isolated_members():
    g, roles = ig.build_gn(1)
    x = roles.mask("u", "c1", "d1")
    u = roles.vertex("u")
    default = ig.epn_iso_partition(g, x)
    assert (default.x_iso >> u) & 1
    alt = ig.epn_iso_partition(g, x, ig.ISOLATED_TO_EPN)
    assert (alt.x_epn >> u) & 1
    assert alt.epn_choice[u] == roles.vertex("v")


def test_partition_independent_set_without_epns():
    c4 = ig.cycle_graph(4)
    x = ig.mask_of([0, 2])
    part = ig.epn_iso_partition(c4, x)
    assert part.x_epn == 0 and part.x_iso == x and part.epn_choice == {}


def test_partition_rejects_non_irredundant():
    g3, roles3 = ig.build_gn(3)
    with pytest.raises(ig.NotIrredundant):
        ig.epn_iso_partition(g3, roles3.mask("a1", "b1", "c1"))


def test_partition_rejects_unknown_policy(gprime):
    with pytest.raises(ig.InvalidParameter):
        ig.epn_iso_partition(gprime, ig.mask_of([0, 1, 2]), "sometimes")


def test_validate_partition_errors(gprime):
    x = ig.mask_of([0, 1, 2])
    good = ig.epn_iso_partition(gprime, x)
    ig.private_neighborhoods(gprime, x)
    bad_cover = ig.EpnIsoPartition(ig.mask_of([0, 1]), 0, {0: 3, 1: 4})
    with pytest.raises(ig.InvalidPartition):
        ig.flip_set(gprime, x, bad_cover)
    bad_choice = ig.EpnIsoPartition(good.x_epn, good.x_iso, {0: 4, 1: 4, 2: 5})
    with pytest.raises(ig.InvalidPartition):
        ig.flip_set(gprime, x, bad_choice)
    positive_in_iso = ig.EpnIsoPartition(
        ig.mask_of([0, 1]), ig.mask_of([2]), {0: 3, 1: 4}
    )
    with pytest.raises(ig.InvalidPartition):
        ig.flip_set(gprime, x, positive_in_iso)


@given(graphs(min_order=1, max_order=8), st.data())
@settings(max_examples=60, deadline=None)
def test_partition_choices_never_collide(g, data):
    x = data.draw(st.sampled_from(ig.all_ir_sets(g)))
    policy = data.draw(st.sampled_from([ig.ISOLATED_TO_ISO, ig.ISOLATED_TO_EPN]))
    part = ig.epn_iso_partition(g, x, policy)
    chosen = list(part.epn_choice.values())
    assert len(chosen) == len(set(chosen))
    for v, y in part.epn_choice.items():
        assert (ig.external_private_neighborhood(g, x, v) >> y) & 1


@given(graphs(max_order=8), st.data())
@settings(max_examples=60, deadline=None)
def test_naive_irredundance_agrees(g, data):
    vs = list(range(g.order))
    d = set(data.draw(st.lists(st.sampled_from(vs), unique=True))) if vs else set()
    nbrs = neighbor_sets(g)
    assert ig.is_irredundant(g, ig.mask_of(d)) == naive_is_irredundant(nbrs, d)
