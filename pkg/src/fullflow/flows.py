"""Flows on capacitated digraphs.

A flow assigns a nonnegative integer to every arc, within capacity, with
conservation at every vertex other than the designated source and sink.
This module validates flows, measures their value and their throughput at
vertex groups, finds augmenting generalized paths, computes maximum flows
and minimum-cost maximum flows, and decomposes a flow into source-sink
paths plus cycles (and recomposes it exactly).

All search orders follow the canonical lexicographic vertex order, so
every result here is a pure, deterministic function of its inputs:

* ``find_augmenting_path`` returns the lexicographically least shortest
  augmenting path (breadth-first over the residual view, sorted neighbor
  expansion, forward moves preferred on ties);
* ``decompose`` peels the canonically least positive out-arc first,
  extracting all paths before hunting remaining cycles.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import (
    InvalidFlowError,
    InvariantViolationError,
    NetworkParseError,
    NotAugmentingError,
    SameEndpointsError,
    UnknownVertexError,
)
from .network import Arc, Network, VertexId
from .paths import (
    BACKWARD,
    FORWARD,
    ArcDisjointSequence,
    Cycle,
    GeneralizedPath,
    Path,
)


@dataclass(frozen=True)
class Flow:
    """Sparse arc assignment with designated endpoints.

    Zero entries are normalized away on construction, so two flows are
    equal exactly when their assignments agree arc by arc.  Compatibility
    and conservation are checked against a network by
    :func:`validate_flow`, not here.
    """

    source: VertexId
    sink: VertexId
    values: dict[Arc, int]

    def __post_init__(self):
        if self.source == self.sink:
            raise SameEndpointsError(
                f"source and sink must differ, both are {self.source!r}"
            )
        cleaned: dict[Arc, int] = {}
        for arc, val in self.values.items():
            tail, head = arc
            if tail == head:
                raise InvalidFlowError(f"flow on self-loop arc {arc!r}")
            if val < 0:
                raise InvalidFlowError(f"negative flow {val} on arc {arc!r}")
            if val > 0:
                cleaned[(tail, head)] = val
        object.__setattr__(self, "values", cleaned)


def null_flow(source: VertexId, sink: VertexId) -> Flow:
    return Flow(source, sink, {})


def flow_value(flow: Flow) -> int:
    """Net outflow at the source."""
    out = sum(v for (t, _h), v in flow.values.items() if t == flow.source)
    back = sum(v for (_t, h), v in flow.values.items() if h == flow.source)
    return out - back


def flow_through(flow: Flow, members: Iterable[VertexId]) -> int:
    """Total flow passing through the group.

    Counts the out-sum at each interior group member and the flow value at
    the source or sink if they belong to the group.  Membership validation
    against a network happens where groups are built (:func:`vertex_group`).
    """
    group = frozenset(members)
    total = 0
    value = None
    for x in group:
        if x in (flow.source, flow.sink):
            if value is None:
                value = flow_value(flow)
            total += value
        else:
            total += sum(v for (t, _h), v in flow.values.items() if t == x)
    return total


@dataclass(frozen=True)
class FlowViolation:
    """First reason a candidate flow is not valid, in canonical scan order."""

    kind: str  # "capacity" or "conservation"
    arc: Arc | None
    vertex: VertexId | None
    detail: str

    def __str__(self) -> str:
        return self.detail


def validate_flow(network: Network, flow: Flow) -> FlowViolation | None:
    """Check compatibility on every arc and conservation at interior vertices.

    Returns None when the flow is valid, otherwise a report naming the
    first offending arc or vertex in canonical order.  Vertices outside
    the network raise UnknownVertexError instead.
    """
    known = set(network.vertices)
    for endpoint in (flow.source, flow.sink):
        if endpoint not in known:
            raise UnknownVertexError(f"unknown vertex {endpoint!r}")
    for tail, head in sorted(flow.values):
        if tail not in known:
            raise UnknownVertexError(f"unknown vertex {tail!r} in flow support")
        if head not in known:
            raise UnknownVertexError(f"unknown vertex {head!r} in flow support")
    for arc in sorted(flow.values):
        if flow.values[arc] > network.capacity(arc):
            return FlowViolation(
                "capacity",
                arc,
                None,
                f"flow {flow.values[arc]} exceeds capacity "
                f"{network.capacity(arc)} on arc {arc!r}",
            )
    for x in network.vertices:
        if x in (flow.source, flow.sink):
            continue
        into = sum(v for (_t, h), v in flow.values.items() if h == x)
        outof = sum(v for (t, _h), v in flow.values.items() if t == x)
        if into != outof:
            return FlowViolation(
                "conservation",
                None,
                x,
                f"conservation fails at vertex {x!r}: in {into}, out {outof}",
            )
    return None


class ResidualView:
    """Read-only residual quantities derived from a network and a flow.

    ``room`` is the unused capacity of an arc, ``cancelable`` the flow that
    could be pushed back.  ``moves_from`` lists the residual steps leaving a
    vertex in canonical order (sorted by neighbor, forward preferred when
    both directions reach the same neighbor).
    """

    def __init__(self, network: Network, flow: Flow):
        self.network = network
        self.flow = flow
        self._into: dict[VertexId, list[VertexId]] = {}
        for (tail, head), val in flow.values.items():
            if val >= 1:
                self._into.setdefault(head, []).append(tail)
        for tails in self._into.values():
            tails.sort()
        self._out: dict[VertexId, list[VertexId]] = {}
        for tail, head in network.positive_arcs():
            self._out.setdefault(tail, []).append(head)

    def room(self, arc: Arc) -> int:
        return self.network.capacity(arc) - self.flow.values.get(arc, 0)

    def cancelable(self, arc: Arc) -> int:
        return self.flow.values.get(arc, 0)

    def moves_from(self, vertex: VertexId) -> list[tuple[VertexId, Arc, int]]:
        options: dict[VertexId, tuple[Arc, int]] = {}
        for head in self._out.get(vertex, ()):
            if self.room((vertex, head)) >= 1:
                options[head] = ((vertex, head), FORWARD)
        for tail in self._into.get(vertex, ()):
            if tail not in options:
                options[tail] = ((tail, vertex), BACKWARD)
        return [(w, arc, d) for w, (arc, d) in sorted(options.items())]


def _check_endpoints(network: Network, source: VertexId, sink: VertexId):
    known = set(network.vertices)
    for endpoint in (source, sink):
        if endpoint not in known:
            raise UnknownVertexError(f"unknown vertex {endpoint!r}")
    if source == sink:
        raise SameEndpointsError(f"source and sink must differ, both are {source!r}")


def _forward_adjacency(caps: Mapping[Arc, int]) -> dict[VertexId, list[VertexId]]:
    adj: dict[VertexId, list[VertexId]] = {}
    for tail, head in sorted(caps):
        adj.setdefault(tail, []).append(head)
    return adj


def _backward_adjacency(flow: Mapping[Arc, int]) -> dict[VertexId, list[VertexId]]:
    adj: dict[VertexId, list[VertexId]] = {}
    for (tail, head), val in flow.items():
        if val >= 1:
            adj.setdefault(head, []).append(tail)
    for tails in adj.values():
        tails.sort()
    return adj


def _bfs_augmenting(
    caps: Mapping[Arc, int],
    fwd_adj: Mapping[VertexId, list[VertexId]],
    flow: Mapping[Arc, int],
    source: VertexId,
    sink: VertexId,
) -> list[tuple[Arc, int]] | None:
    """Lexicographically least shortest augmenting path, as (arc, dir) moves."""
    bwd_adj = _backward_adjacency(flow)
    parent: dict[VertexId, tuple[VertexId, Arc, int] | None] = {source: None}
    queue: deque[VertexId] = deque([source])
    while queue:
        v = queue.popleft()
        options: dict[VertexId, tuple[Arc, int]] = {}
        for head in fwd_adj.get(v, ()):
            if head not in parent and caps[(v, head)] - flow.get((v, head), 0) >= 1:
                options[head] = ((v, head), FORWARD)
        for tail in bwd_adj.get(v, ()):
            if tail not in parent and tail not in options:
                options[tail] = ((tail, v), BACKWARD)
        for w in sorted(options):
            parent[w] = (v, options[w][0], options[w][1])
            if w == sink:
                moves: list[tuple[Arc, int]] = []
                cur = w
                while parent[cur] is not None:
                    prev, arc, direction = parent[cur]  # type: ignore[misc]
                    moves.append((arc, direction))
                    cur = prev
                moves.reverse()
                return moves
            queue.append(w)
    return None


def _moves_to_gpath(moves: list[tuple[Arc, int]], source: VertexId) -> GeneralizedPath:
    vertices = [source]
    directions = []
    for arc, direction in moves:
        tail, head = arc
        vertices.append(head if direction == FORWARD else tail)
        directions.append(direction)
    return GeneralizedPath(tuple(vertices), tuple(directions))


def find_augmenting_path(network: Network, flow: Flow) -> GeneralizedPath | None:
    """Breadth-first residual search for an augmenting generalized path.

    Returns None exactly when the flow is maximum.  The result is the
    unique lexicographically least shortest augmenting path under the
    canonical vertex order.
    """
    _check_endpoints(network, flow.source, flow.sink)
    moves = _bfs_augmenting(
        network.capacities,
        _forward_adjacency(network.capacities),
        flow.values,
        flow.source,
        flow.sink,
    )
    return None if moves is None else _moves_to_gpath(moves, flow.source)


def augment(flow: Flow, gpath: GeneralizedPath) -> Flow:
    """Add one unit along the generalized path: +1 forward, -1 backward.

    The value rises by exactly 1.  Raises NotAugmentingError when the path
    does not run source->sink or would drive some arc negative; capacity
    headroom is the caller's responsibility and is rechecked wherever a
    network is at hand (validate_flow, max_flow).
    """
    if gpath.source != flow.source or gpath.sink != flow.sink:
        raise NotAugmentingError(
            f"path runs {gpath.source!r}->{gpath.sink!r}, "
            f"flow is {flow.source!r}->{flow.sink!r}"
        )
    updated = dict(flow.values)
    for arc, direction in gpath.signed_arcs:
        nxt = updated.get(arc, 0) + direction
        if nxt < 0:
            raise NotAugmentingError(f"no flow to cancel on backward arc {arc!r}")
        updated[arc] = nxt
    return Flow(flow.source, flow.sink, updated)


def max_flow(network: Network, source: VertexId, sink: VertexId) -> tuple[int, Flow]:
    """Maximum flow value and a deterministic maximum flow.

    Shortest-augmenting-path iteration.  Each round saturates the current
    lexicographically least shortest path; since augmenting cannot create
    shorter residual paths nor lexicographically smaller ones of the same
    length, this matches repeating the unit augmentation step until that
    path saturates, but is independent of capacity magnitude.
    """
    _check_endpoints(network, source, sink)
    caps = network.capacities
    fwd_adj = _forward_adjacency(caps)
    flow: dict[Arc, int] = {}
    while True:
        moves = _bfs_augmenting(caps, fwd_adj, flow, source, sink)
        if moves is None:
            break
        bottleneck = min(
            caps[arc] - flow.get(arc, 0) if d == FORWARD else flow[arc]
            for arc, d in moves
        )
        for arc, d in moves:
            nxt = flow.get(arc, 0) + d * bottleneck
            if nxt:
                flow[arc] = nxt
            else:
                flow.pop(arc, None)
    result = Flow(source, sink, flow)
    return flow_value(result), result


def min_cost_max_flow(
    network: Network,
    source: VertexId,
    sink: VertexId,
    arc_cost: Mapping[Arc, int],
) -> tuple[int, int, Flow]:
    """Cheapest maximum flow for nonnegative integer arc costs.

    Successive shortest paths: starting from the null flow, repeatedly
    augment along a minimum-cost residual path (label-correcting search,
    tolerant of the negative costs cancellation introduces) until no
    augmenting path remains.  Integral capacities and costs make the
    optimum integral.  Returns (value, total cost, flow).
    """
    _check_endpoints(network, source, sink)
    for arc, cost in arc_cost.items():
        if cost < 0:
            raise ValueError(f"negative cost {cost} on arc {arc!r}")
    caps = network.capacities
    fwd_adj = _forward_adjacency(caps)
    vertices = network.vertices
    flow: dict[Arc, int] = {}
    while True:
        moves = _cheapest_augmenting(
            caps, fwd_adj, flow, arc_cost, source, sink, vertices
        )
        if moves is None:
            break
        bottleneck = min(
            caps[arc] - flow.get(arc, 0) if d == FORWARD else flow[arc]
            for arc, d in moves
        )
        for arc, d in moves:
            nxt = flow.get(arc, 0) + d * bottleneck
            if nxt:
                flow[arc] = nxt
            else:
                flow.pop(arc, None)
    result = Flow(source, sink, flow)
    total_cost = sum(arc_cost.get(arc, 0) * v for arc, v in flow.items())
    return flow_value(result), total_cost, result


def _cheapest_augmenting(
    caps: Mapping[Arc, int],
    fwd_adj: Mapping[VertexId, list[VertexId]],
    flow: Mapping[Arc, int],
    arc_cost: Mapping[Arc, int],
    source: VertexId,
    sink: VertexId,
    vertices: tuple[VertexId, ...],
) -> list[tuple[Arc, int]] | None:
    """Minimum-cost augmenting path via Bellman-Ford label correction."""
    bwd_adj = _backward_adjacency(flow)
    dist: dict[VertexId, int] = {source: 0}
    parent: dict[VertexId, tuple[VertexId, Arc, int]] = {}
    for sweep in range(len(vertices) + 1):
        changed = False
        for v in vertices:
            if v not in dist:
                continue
            dv = dist[v]
            for head in fwd_adj.get(v, ()):
                if caps[(v, head)] - flow.get((v, head), 0) >= 1:
                    nd = dv + arc_cost.get((v, head), 0)
                    if nd < dist.get(head, nd + 1):
                        dist[head] = nd
                        parent[head] = (v, (v, head), FORWARD)
                        changed = True
            for tail in bwd_adj.get(v, ()):
                nd = dv - arc_cost.get((tail, v), 0)
                if nd < dist.get(tail, nd + 1):
                    dist[tail] = nd
                    parent[tail] = (v, (tail, v), BACKWARD)
                    changed = True
        if not changed:
            break
        if sweep == len(vertices):
            raise InvariantViolationError(
                "negative-cost residual cycle: min-cost search did not converge"
            )
    if sink not in dist:
        return None
    moves: list[tuple[Arc, int]] = []
    cur = sink
    hops = 0
    while cur != source:
        prev, arc, direction = parent[cur]
        moves.append((arc, direction))
        cur = prev
        hops += 1
        if hops > len(vertices):
            raise InvariantViolationError("parent chain cycle in min-cost search")
    moves.reverse()
    return moves


@dataclass(frozen=True)
class Decomposition:
    """A flow written as source->sink paths plus cycles, summing back exactly."""

    paths: ArcDisjointSequence
    cycles: tuple[Cycle, ...]


def decompose(network: Network, flow: Flow, *, rng=None) -> Decomposition:
    """Split a valid flow into exactly value-many paths plus cycles.

    Deterministic by default: walks repeatedly follow the canonically
    least positive out-arc from the source, peeling a cycle whenever a
    vertex repeats; leftover circulation is peeled starting from the least
    vertex still carrying flow.  Passing ``rng`` randomizes the out-arc
    tie-breaks instead (used to sample alternative decompositions).
    Raises InvalidFlowError when the flow does not validate.
    """
    violation = validate_flow(network, flow)
    if violation is not None:
        raise InvalidFlowError(str(violation))
    value = flow_value(flow)
    if value < 0:
        # compatibility and conservation also admit flows running net
        # backwards; those decompose into sink->source paths, not ours
        raise InvalidFlowError(
            f"flow has negative value {value}; cannot decompose into "
            f"{flow.source!r}->{flow.sink!r} paths"
        )
    out: dict[VertexId, dict[VertexId, int]] = {}
    for (tail, head), val in flow.values.items():
        out.setdefault(tail, {})[head] = val

    def pick(v: VertexId) -> VertexId:
        heads = sorted(out.get(v, ()))
        if not heads:
            raise InvariantViolationError(
                f"decomposition walk stuck at vertex {v!r}"
            )
        if rng is None:
            return heads[0]
        return heads[rng.randrange(len(heads))]

    def subtract(tail: VertexId, head: VertexId):
        inner = out[tail]
        inner[head] -= 1
        if inner[head] == 0:
            del inner[head]
            if not inner:
                del out[tail]

    def peel_walk_cycle(walk: list, pos: dict, repeat: VertexId) -> Cycle:
        i = pos[repeat]
        body = walk[i:]
        for j in range(i, len(walk) - 1):
            subtract(walk[j], walk[j + 1])
        subtract(walk[-1], repeat)
        del walk[i + 1 :]
        for v in list(pos):
            if pos[v] > i:
                del pos[v]
        return Cycle(tuple(body) + (repeat,)).rotated_to_least()

    paths: list[Path] = []
    cycles: list[Cycle] = []
    for _ in range(value):
        walk = [flow.source]
        pos = {flow.source: 0}
        while walk[-1] != flow.sink:
            w = pick(walk[-1])
            if w in pos:
                cycles.append(peel_walk_cycle(walk, pos, w))
            else:
                pos[w] = len(walk)
                walk.append(w)
        for j in range(len(walk) - 1):
            subtract(walk[j], walk[j + 1])
        paths.append(Path(tuple(walk)))
    while out:
        start = min(out)
        walk = [start]
        pos = {start: 0}
        while True:
            w = pick(walk[-1])
            if w in pos:
                cycles.append(peel_walk_cycle(walk, pos, w))
                break
            pos[w] = len(walk)
            walk.append(w)
    return Decomposition(
        ArcDisjointSequence(tuple(paths), flow.source, flow.sink),
        tuple(cycles),
    )


def recompose(decomposition: Decomposition) -> Flow:
    """Exact sum of the path and cycle arc functions, as a flow value."""
    counts: Counter = Counter()
    for p in decomposition.paths:
        counts.update(p.arcs)
    for c in decomposition.cycles:
        counts.update(c.arcs)
    return Flow(
        decomposition.paths.source, decomposition.paths.sink, dict(counts)
    )


def flow_to_text(flow: Flow) -> str:
    """Serialize: a ``flow source sink value`` header, then sorted arc lines."""
    lines = [f"flow {flow.source} {flow.sink} {flow_value(flow)}"]
    for tail, head in sorted(flow.values):
        lines.append(f"{tail} {head} {flow.values[(tail, head)]}")
    return "\n".join(lines) + "\n"


def parse_flow(text: str) -> Flow:
    """Parse the serialization produced by :func:`flow_to_text`."""
    header: tuple[int, str, str, int] | None = None
    values: dict[Arc, int] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 4 or fields[0] != "flow":
                raise NetworkParseError(line_no, "expected 'flow source sink value'")
            try:
                declared = int(fields[3])
            except ValueError:
                raise NetworkParseError(
                    line_no, f"bad flow value {fields[3]!r}"
                ) from None
            header = (line_no, fields[1], fields[2], declared)
            continue
        if len(fields) != 3:
            raise NetworkParseError(line_no, "expected 'tail head value'")
        tail, head, val_text = fields
        try:
            val = int(val_text)
        except ValueError:
            raise NetworkParseError(line_no, f"bad value {val_text!r}") from None
        if val < 0:
            raise NetworkParseError(line_no, f"negative value {val}")
        if (tail, head) in values:
            raise NetworkParseError(line_no, f"duplicate arc ({tail!r}, {head!r})")
        values[(tail, head)] = val
    if header is None:
        raise NetworkParseError(1, "empty input: no 'flow' header")
    line_no, source, sink, declared = header
    flow = Flow(source, sink, values)
    actual = flow_value(flow)
    if actual != declared:
        raise NetworkParseError(
            line_no, f"declared value {declared} but arcs sum to {actual}"
        )
    return flow
