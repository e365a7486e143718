"""Brute-force references and randomized cross-checking at desk scale.

The flow oracle enumerates raw arc assignments and filters by the
conservation law -- a genuinely different code path from the augmenting
search, so shared assumptions cannot hide a bug.  Subtrees are cut as soon
as conservation is already broken at a vertex whose incident arcs are all
assigned; that discards no valid assignment.

Instance generation is reproducible: a spec fixes the vertex count,
capacity bound, arc probability and seed, and the same spec always yields
the same network.  ``cross_check`` runs a batch of specs against the
solvers and reports violations verbatim instead of raising.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import prod
from typing import Iterable, Sequence

from .errors import BudgetExceededError, InvalidSpecError
from .flows import (
    Flow,
    _check_endpoints,
    decompose,
    flow_through,
    max_flow,
    recompose,
    validate_flow,
)
from .network import Network, VertexId, ordered_pairs, vertex_group
from .paths import is_arc_disjoint, passage_count
from .quantities import (
    DEFAULT_NODE_BUDGET,
    enumerate_max_sequences,
    forced_throughput,
    render_group,
    vitality_drop,
)

GENERATOR_ID = "python-random-mersenne-twister"
DEFAULT_ASSIGNMENT_BUDGET = 10**7

_TOKEN_POOL = ("a", "b", "c", "d", "e", "f")


@dataclass(frozen=True)
class InstanceSpec:
    """Deterministic recipe for one random network."""

    vertex_count: int
    max_capacity: int
    arc_probability: float
    seed: int

    def __post_init__(self):
        if not 2 <= self.vertex_count <= 6:
            raise InvalidSpecError(
                f"vertex_count {self.vertex_count} outside 2..6"
            )
        if not 0 <= self.max_capacity <= 3:
            raise InvalidSpecError(
                f"max_capacity {self.max_capacity} outside 0..3"
            )
        if not 0 <= self.arc_probability <= 1:
            raise InvalidSpecError(
                f"arc_probability {self.arc_probability} outside [0, 1]"
            )
        if not 0 <= self.seed < 2**64:
            raise InvalidSpecError(f"seed {self.seed} not a 64-bit integer")


def generate(spec: InstanceSpec) -> Network:
    """Pseudorandom network: each ordered pair independently gets a uniform
    capacity in [1, max_capacity] with the arc probability, else 0."""
    rng = random.Random(spec.seed)
    tokens = _TOKEN_POOL[: spec.vertex_count]
    caps = {}
    for tail in tokens:
        for head in tokens:
            if tail == head:
                continue
            hit = rng.random() < spec.arc_probability
            if hit and spec.max_capacity > 0:
                caps[(tail, head)] = rng.randint(1, spec.max_capacity)
    return Network(tokens, caps)


def brute_force_flows(
    network: Network,
    source: VertexId,
    sink: VertexId,
    *,
    assignment_budget: int = DEFAULT_ASSIGNMENT_BUDGET,
) -> tuple[int, list[Flow]]:
    """Enumerate every integral assignment within capacity, keep the flows
    of maximum value.

    The budget bounds the size of the raw assignment space
    (product of capacity+1 over the positive arcs); larger instances raise
    BudgetExceededError up front.
    """
    _check_endpoints(network, source, sink)
    arcs = network.positive_arcs()
    space = prod(network.capacities[a] + 1 for a in arcs)
    if space > assignment_budget:
        raise BudgetExceededError(
            f"assignment space {space} exceeds budget {assignment_budget}",
            partial=0,
            nodes=0,
        )
    # conservation can be settled for a vertex once its incident arcs are
    # all assigned
    finish_at: dict[int, list[VertexId]] = {}
    last_index: dict[VertexId, int] = {}
    for idx, (tail, head) in enumerate(arcs):
        last_index[tail] = idx
        last_index[head] = idx
    for vertex, idx in last_index.items():
        if vertex not in (source, sink):
            finish_at.setdefault(idx, []).append(vertex)
    balance: dict[VertexId, int] = {v: 0 for v in network.vertices}
    assignment: list[int] = [0] * len(arcs)
    best_value = 0
    best: list[Flow] = []

    def leaf():
        nonlocal best_value
        value = -balance[source]
        if value < best_value:
            return
        flow = Flow(
            source,
            sink,
            {arcs[i]: v for i, v in enumerate(assignment) if v},
        )
        if value > best_value:
            best_value = value
            best.clear()
        best.append(flow)

    def rec(idx: int):
        if idx == len(arcs):
            leaf()
            return
        tail, head = arcs[idx]
        for val in range(network.capacities[arcs[idx]] + 1):
            assignment[idx] = val
            balance[tail] -= val
            balance[head] += val
            if all(balance[v] == 0 for v in finish_at.get(idx, ())):
                rec(idx + 1)
            balance[tail] += val
            balance[head] -= val
        assignment[idx] = 0

    if arcs:
        rec(0)
    else:
        best.append(Flow(source, sink, {}))
    return best_value, best


def brute_force_min_throughput(
    network: Network,
    source: VertexId,
    sink: VertexId,
    members: Iterable[VertexId],
    *,
    assignment_budget: int = DEFAULT_ASSIGNMENT_BUDGET,
) -> int:
    """Minimum group throughput over the exhaustively enumerated maximum flows."""
    group = vertex_group(network, members)
    _value, flows = brute_force_flows(
        network, source, sink, assignment_budget=assignment_budget
    )
    return min(flow_through(f, group) for f in flows)


@dataclass
class CrossCheckReport:
    """Outcome of a batch run; violations are verbatim, not raised."""

    generator: str
    instances: int
    pairs_checked: int = 0
    assertions: int = 0
    oracle_skips: int = 0
    enumeration_skips: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def render(self) -> str:
        lines = [
            f"generator {self.generator}",
            f"instances {self.instances}",
            f"pairs_checked {self.pairs_checked}",
            f"assertions {self.assertions}",
            f"oracle_skips {self.oracle_skips}",
            f"enumeration_skips {self.enumeration_skips}",
        ]
        if self.violations:
            lines.append(f"violations {len(self.violations)}")
            lines.extend(f"violation: {v}" for v in self.violations)
        else:
            lines.append("violations 0")
        return "\n".join(lines) + "\n"


def cross_check(
    batch: Sequence[InstanceSpec],
    *,
    assignment_budget: int = DEFAULT_ASSIGNMENT_BUDGET,
    node_budget: int = DEFAULT_NODE_BUDGET,
    group_samples: int = 2,
) -> CrossCheckReport:
    """Verify the solvers against first principles on every batch instance.

    Per instance and ordered pair: the decomposition round-trips and its
    paths are arc-disjoint with length equal to the flow value; the exact
    passage (minimum over the complete enumeration) of every singleton
    equals both the vitality drop and the forced throughput; for sampled
    groups the chain drop <= passage <= min(throughput, max flow) holds;
    and, when the assignment space fits the budget, the solver's value and
    throughput minima agree with the assignment-enumeration oracle.
    Instances whose enumeration or assignment space exceeds a budget are
    skipped for that part and counted, never silently dropped.
    """
    report = CrossCheckReport(generator=GENERATOR_ID, instances=len(batch))

    def check(condition: bool, message: str):
        report.assertions += 1
        if not condition:
            report.violations.append(message)

    for index, spec in enumerate(batch):
        net = generate(spec)
        label = (
            f"instance {index} (n={spec.vertex_count} cap<={spec.max_capacity} "
            f"p={spec.arc_probability} seed={spec.seed})"
        )
        sample_rng = random.Random(spec.seed * 1_000_003 + 17)
        sampled_groups = [frozenset(), frozenset(net.vertices)]
        for _ in range(group_samples):
            size = sample_rng.randint(0, len(net.vertices))
            sampled_groups.append(
                frozenset(sample_rng.sample(net.vertices, size))
            )
        for y, z in ordered_pairs(net):
            where = f"{label} pair ({y},{z})"
            report.pairs_checked += 1
            value, flow = max_flow(net, y, z)
            dec = decompose(net, flow)
            check(
                recompose(dec) == flow,
                f"{where}: decomposition does not recompose to the flow",
            )
            check(
                len(dec.paths) == value,
                f"{where}: decomposition has {len(dec.paths)} paths, value {value}",
            )
            check(
                is_arc_disjoint(net, dec.paths.paths),
                f"{where}: decomposition paths not arc-disjoint",
            )
            try:
                sequences = list(
                    enumerate_max_sequences(net, y, z, node_budget=node_budget)
                )
            except BudgetExceededError:
                sequences = None
                report.enumeration_skips += 1
            if sequences is not None:
                for x in net.vertices:
                    exact = min(passage_count(s, {x}) for s in sequences)
                    drop = vitality_drop(net, y, z, {x})
                    throughput = forced_throughput(net, y, z, {x})
                    check(
                        exact == drop == throughput,
                        f"{where} singleton {x}: passage {exact}, "
                        f"drop {drop}, throughput {throughput}",
                    )
                for group in sampled_groups:
                    exact = min(passage_count(s, group) for s in sequences)
                    drop = vitality_drop(net, y, z, group)
                    throughput = forced_throughput(net, y, z, group)
                    check(
                        drop <= exact <= min(throughput, value),
                        f"{where} group {render_group(group)}: chain broken: "
                        f"drop {drop}, passage {exact}, throughput "
                        f"{throughput}, max flow {value}",
                    )
            space = prod(c + 1 for c in net.capacities.values())
            if space > assignment_budget:
                report.oracle_skips += 1
                continue
            oracle_value, oracle_flows = brute_force_flows(
                net, y, z, assignment_budget=assignment_budget
            )
            check(
                oracle_value == value,
                f"{where}: oracle max {oracle_value}, solver max {value}",
            )
            bad = next(
                (f for f in oracle_flows if validate_flow(net, f) is not None),
                None,
            )
            check(
                bad is None,
                f"{where}: oracle produced an invalid maximum flow {bad}",
            )
            groups_to_check = [frozenset({x}) for x in net.vertices]
            groups_to_check.extend(sampled_groups)
            for group in groups_to_check:
                oracle_min = min(flow_through(f, group) for f in oracle_flows)
                solver_min = forced_throughput(net, y, z, group)
                check(
                    oracle_min == solver_min,
                    f"{where} group {render_group(group)}: oracle throughput "
                    f"{oracle_min}, solver {solver_min}",
                )
    return report
