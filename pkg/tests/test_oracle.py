import pytest

from fullflow import (
    BudgetExceededError,
    InstanceSpec,
    InvalidSpecError,
    brute_force_flows,
    brute_force_min_throughput,
    cross_check,
    flow_value,
    generate,
    max_flow,
    validate_flow,
)


def test_spec_validation():
    InstanceSpec(2, 0, 0.0, 0)
    InstanceSpec(6, 3, 1.0, 2**64 - 1)
    with pytest.raises(InvalidSpecError):
        InstanceSpec(1, 2, 0.5, 0)
    with pytest.raises(InvalidSpecError):
        InstanceSpec(3, 4, 0.5, 0)
    with pytest.raises(InvalidSpecError):
        InstanceSpec(3, 2, 1.5, 0)
    with pytest.raises(InvalidSpecError):
        InstanceSpec(3, 2, 0.5, -1)


def test_generate_degenerate_specs():
    empty = generate(InstanceSpec(2, 2, 0.0, 5))
    assert empty.capacities == {}
    full = generate(InstanceSpec(2, 1, 1.0, 5))
    assert full.capacities == {("a", "b"): 1, ("b", "a"): 1}


def test_generate_is_deterministic():
    spec = InstanceSpec(5, 3, 0.5, 12345)
    assert generate(spec) == generate(spec)
    other = InstanceSpec(5, 3, 0.5, 12346)
    assert generate(other) != generate(spec)


def test_brute_force_fig6(fig6):
    value, flows = brute_force_flows(fig6, "y", "z")
    assert value == 1
    assert len(flows) == 1
    assert flows[0].values == {
        ("y", "x1"): 1, ("x1", "u"): 1, ("u", "x2"): 1, ("x2", "z"): 1,
    }


def test_brute_force_zero_capacity():
    from fullflow import build_network

    net = build_network(["a", "b"], [])
    value, flows = brute_force_flows(net, "a", "b")
    assert value == 0
    assert [f.values for f in flows] == [{}]


def test_brute_force_fig3(fig3):
    value, flows = brute_force_flows(fig3, "y", "z")
    assert value == 2
    assert value == max_flow(fig3, "y", "z")[0]
    for f in flows:
        assert validate_flow(fig3, f) is None
        assert flow_value(f) == 2


def test_brute_force_budget(fig1):
    with pytest.raises(BudgetExceededError):
        brute_force_flows(fig1, "y", "z", assignment_budget=10)


def test_brute_force_min_throughput(fig6, fig1):
    assert brute_force_min_throughput(fig6, "y", "z", {"x1", "x2"}) == 2
    assert brute_force_min_throughput(fig6, "y", "z", set()) == 0
    assert brute_force_min_throughput(fig1, "y", "z", {"x"}) == 2


def test_cross_check_small_batch():
    batch = [
        InstanceSpec(vertex_count=2 + i % 4, max_capacity=2,
                     arc_probability=0.5, seed=100 + i)
        for i in range(12)
    ]
    report = cross_check(batch, assignment_budget=50_000)
    assert report.ok
    assert report.instances == 12
    assert report.pairs_checked > 0
    assert report.assertions > 0
    text = report.render()
    assert text.startswith("generator python-random-mersenne-twister\n")
    assert "violations 0" in text


def test_cross_check_reports_are_deterministic():
    batch = [InstanceSpec(4, 2, 0.5, 7)]
    first = cross_check(batch).render()
    second = cross_check(batch).render()
    assert first == second
