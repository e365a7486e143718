import random

from hypothesis import given, settings
from hypothesis import strategies as st

import pytest

from fullflow import (
    ArcDisjointSequence,
    BudgetExceededError,
    SameEndpointsError,
    ShortcutInvalidError,
    UnknownVertexError,
    brute_force_flows,
    build_network,
    capacity_of_set,
    decompose,
    enumerate_max_sequences,
    flow_through,
    forced_passage,
    forced_throughput,
    induced_flow,
    max_flow,
    min_cost_max_flow,
    pair_report,
    passage_count,
    vitality_drop,
)

from strategies import networks_with_endpoints, networks_with_endpoints_and_group


def test_vitality_drop_fig3_vs_fig4(fig3, fig4):
    assert vitality_drop(fig3, "y", "z", {"x"}) == 0
    assert vitality_drop(fig4, "y", "z", {"x"}) == 1


def test_vitality_drop_fig5(fig5):
    assert vitality_drop(fig5, "y", "z", {"x1", "x2"}) == 1


def test_vitality_drop_empty_group(fig1):
    assert vitality_drop(fig1, "y", "z", set()) == 0


def test_vitality_drop_errors(fig1):
    with pytest.raises(SameEndpointsError):
        vitality_drop(fig1, "y", "y", {"x"})
    with pytest.raises(UnknownVertexError):
        vitality_drop(fig1, "y", "z", {"nope"})


def test_enumerate_fig1_classes(fig1):
    classes = [str(s) for s in enumerate_max_sequences(fig1, "y", "z")]
    assert classes == [
        "y-u-x-z,y-v-u-z,y-v-x-z",
        "y-u-z,y-v-u-x-z,y-v-x-z",
    ]


def test_enumerate_fig6_single_class(fig6):
    classes = list(enumerate_max_sequences(fig6, "y", "z"))
    assert [str(s) for s in classes] == ["y-x1-u-x2-z"]


def test_enumerate_fig5_contains_known_class(fig5):
    classes = {tuple(str(p) for p in s) for s in enumerate_max_sequences(fig5, "y", "z")}
    assert ("y-u1-x1-z", "y-u2-x2-v1-z", "y-v2-z") in classes


def test_enumerate_no_path_yields_empty_sequence():
    net = build_network(["a", "b"], [])
    classes = list(enumerate_max_sequences(net, "a", "b"))
    assert classes == [ArcDisjointSequence((), "a", "b")]


def test_enumerate_lengths_and_disjointness(fig1):
    from fullflow import is_arc_disjoint

    value, _ = max_flow(fig1, "y", "z")
    for s in enumerate_max_sequences(fig1, "y", "z"):
        assert len(s) == value
        assert is_arc_disjoint(fig1, s.paths)
        assert tuple(sorted(s.paths)) == s.paths  # canonical form


def test_enumerate_budget_exceeded(fig1):
    with pytest.raises(BudgetExceededError) as info:
        list(enumerate_max_sequences(fig1, "y", "z", node_budget=3))
    assert info.value.nodes > 3 or info.value.partial >= 0


def test_forced_passage_fig1(fig1):
    assert forced_passage(fig1, "y", "z", {"x"}, mode="exact") == 2
    assert forced_passage(fig1, "y", "z", {"x", "v"}, mode="exact") == 2
    # singleton shortcut agrees with the exact answer
    assert forced_passage(fig1, "y", "z", {"x"}, mode="singleton-shortcut") == 2


def test_forced_passage_fig5_strict_gap(fig5):
    group = {"x1", "x2"}
    assert forced_passage(fig5, "y", "z", group, mode="exact") == 2
    assert vitality_drop(fig5, "y", "z", group) == 1


def test_forced_passage_fig6(fig6):
    assert forced_passage(fig6, "y", "z", {"x1", "x2"}, mode="exact") == 1


def test_forced_passage_shortcut_rejected_for_pairs(fig5):
    with pytest.raises(ShortcutInvalidError):
        forced_passage(fig5, "y", "z", {"x1", "x2"}, mode="singleton-shortcut")


def test_forced_passage_auto_mode(fig5):
    # auto = shortcut for singletons, exact for larger groups
    assert forced_passage(fig5, "y", "z", {"x1", "x2"}) == 2
    assert forced_passage(fig5, "y", "z", {"x1"}) == forced_passage(
        fig5, "y", "z", {"x1"}, mode="exact"
    )


def test_forced_throughput_figures(fig1, fig6):
    assert forced_throughput(fig6, "y", "z", {"x1", "x2"}) == 2
    assert forced_throughput(fig6, "y", "z", {"y"}) == 1
    assert forced_throughput(fig1, "y", "z", {"x"}) == 2


def test_forced_throughput_matches_oracle_fig1(fig1):
    value, flows = brute_force_flows(fig1, "y", "z")
    assert value == 3
    oracle = min(flow_through(f, {"x"}) for f in flows)
    assert oracle == forced_throughput(fig1, "y", "z", {"x"}) == 2


def test_pair_report_fig5(fig5):
    rep = pair_report(fig5, "y", "z", {"x1", "x2"})
    assert rep.max_flow_total == 3
    assert rep.max_flow_restricted == 2
    assert rep.vitality_drop == 1
    assert rep.forced_passage == 2
    assert rep.forced_throughput >= 2
    assert rep.exact
    assert passage_count(rep.witness, {"x1", "x2"}) == 2


def test_pair_report_fig1_singleton(fig1):
    rep = pair_report(fig1, "y", "z", {"x"})
    assert (rep.max_flow_total, rep.max_flow_restricted) == (3, 1)
    assert rep.vitality_drop == rep.forced_passage == rep.forced_throughput == 2
    assert rep.witness is None  # shortcut mode
    exact = pair_report(fig1, "y", "z", {"x"}, exact=True)
    assert exact.forced_passage == 2
    assert exact.witness is not None


def test_pair_report_empty_group(fig1):
    rep = pair_report(fig1, "y", "z", set())
    assert rep.vitality_drop == rep.forced_passage == rep.forced_throughput == 0


def test_pair_report_record(fig1):
    rep = pair_report(fig1, "y", "z", {"x"})
    assert rep.record() == "y z x 3 1 2 2 2 -"
    assert rep.record(sep="\t").split("\t")[2] == "x"


@settings(max_examples=60)
@given(networks_with_endpoints())
def test_singleton_identity_all_three(net_yz):
    # for every single vertex: exact passage == vitality drop == throughput
    net, y, z = net_yz
    for x in net.vertices:
        exact = forced_passage(net, y, z, {x}, mode="exact")
        drop = vitality_drop(net, y, z, {x})
        through = forced_throughput(net, y, z, {x})
        assert exact == drop == through


@settings(max_examples=50)
@given(networks_with_endpoints_and_group())
def test_chain_inequality(net_yzg):
    net, y, z, group = net_yzg
    value, _ = max_flow(net, y, z)
    drop = vitality_drop(net, y, z, group)
    passage = forced_passage(net, y, z, group, mode="exact")
    through = forced_throughput(net, y, z, group)
    assert 0 <= drop <= passage <= min(through, value)


@settings(max_examples=50)
@given(networks_with_endpoints_and_group(), st.data())
def test_monotonicity_under_group_growth(net_yzg, data):
    net, y, z, group = net_yzg
    extra = data.draw(st.sets(st.sampled_from(net.vertices)), label="extra")
    larger = group | extra
    assert vitality_drop(net, y, z, group) <= vitality_drop(net, y, z, larger)
    assert forced_passage(net, y, z, group, mode="exact") <= forced_passage(
        net, y, z, larger, mode="exact"
    )
    assert forced_throughput(net, y, z, group) <= forced_throughput(
        net, y, z, larger
    )


@settings(max_examples=60)
@given(networks_with_endpoints())
def test_degree_bound(net_yz):
    net, y, z = net_yz
    others = set(net.vertices) - {y, z}
    for x in others:
        out_cap = capacity_of_set(net, {x})
        in_cap = capacity_of_set(net, set(net.vertices) - {x})
        assert forced_passage(net, y, z, {x}, mode="exact") <= min(out_cap, in_cap)


@settings(max_examples=40)
@given(networks_with_endpoints(), st.data())
def test_flow_through_lower_bound(net_yz, data):
    # every maximum flow, however produced, moves at least the forced
    # passage through each vertex
    net, y, z = net_yz
    costs = {}
    for arc in sorted(net.capacities):
        costs[arc] = data.draw(st.integers(0, 2), label=f"cost {arc}")
    flows = [max_flow(net, y, z)[1], min_cost_max_flow(net, y, z, costs)[2]]
    for x in net.vertices:
        bound = forced_passage(net, y, z, {x}, mode="exact")
        for f in flows:
            assert flow_through(f, {x}) >= bound


@settings(max_examples=60)
@given(networks_with_endpoints())
def test_boundary_cases(net_yz):
    net, y, z = net_yz
    value, _ = max_flow(net, y, z)
    for touching in ({y}, {z}, {y, z}):
        assert vitality_drop(net, y, z, touching) == value
        assert forced_passage(net, y, z, touching, mode="exact") == value
    # passage of the full vertex set equals the max flow value; it is zero
    # exactly when there is no path at all
    assert forced_passage(net, y, z, set(net.vertices), mode="exact") == value


@settings(max_examples=60)
@given(networks_with_endpoints())
def test_zero_max_flow_iff_no_path(net_yz):
    from fullflow.quantities import _path_candidates

    net, y, z = net_yz
    value, _ = max_flow(net, y, z)
    assert (value == 0) == (not _path_candidates(net, y, z))
    classes = list(enumerate_max_sequences(net, y, z))
    assert (value == 0) == (classes == [ArcDisjointSequence((), y, z)])


@settings(max_examples=15, deadline=None)
@given(networks_with_endpoints(max_vertices=4, max_capacity=2))
def test_enumeration_matches_decompositions(net_yz):
    # every decomposition of every maximum flow lands in the enumerated
    # classes, and every enumerated class is the decomposition of its own
    # induced flow
    net, y, z = net_yz
    classes = {s.canonical() for s in enumerate_max_sequences(net, y, z)}
    _, maximum_flows = brute_force_flows(net, y, z)
    rng = random.Random(7)
    for f in maximum_flows:
        for trial in range(21):
            dec = decompose(net, f) if trial == 0 else decompose(net, f, rng=rng)
            assert dec.paths.canonical() in classes
    for s in classes:
        dec = decompose(net, induced_flow(net, s))
        assert dec.paths.canonical() in classes
