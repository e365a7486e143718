"""Per-pair quantities for a vertex group X between a source y and a sink z.

Three numbers, all nonnegative integers:

* vitality drop -- how much the maximum flow value falls when every arc
  touching X is zeroed out;
* forced passage -- the minimum number of component paths meeting X over
  all maximum-length arc-disjoint path sequences from y to z;
* forced throughput -- the minimum total flow through X over all maximum
  flows.

They always satisfy ``0 <= drop <= passage <= min(throughput, max_flow)``,
and all three coincide whenever X is a single vertex, which justifies the
singleton shortcut mode: for ``|X| <= 1`` the passage can be answered by
two max-flow runs instead of an enumeration.  For larger groups the
passage is computed exactly by backtracking over all canonical maximum
sequences with capacity bookkeeping, two sound prunings (a partial
sequence already meeting X at least best-so-far times cannot improve; a
completed sequence matching the vitality-drop lower bound ends the
search), and a feasibility cut (remaining capacity must still admit the
missing number of paths).  The search is budgeted by node count and fails
loudly rather than approximating.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import BudgetExceededError, InvariantViolationError, ShortcutInvalidError
from .flows import (
    _bfs_augmenting,
    _check_endpoints,
    _forward_adjacency,
    max_flow,
    min_cost_max_flow,
)
from .network import Arc, Network, VertexId, restrict, vertex_group
from .paths import FORWARD, ArcDisjointSequence, Path

DEFAULT_NODE_BUDGET = 10**6

_MODES = ("auto", "exact", "singleton-shortcut")


def vitality_drop(
    network: Network, source: VertexId, sink: VertexId, members: Iterable[VertexId]
) -> int:
    """Fall in maximum flow value when all arcs incident to the group vanish.

    Always in ``[0, max_flow]``; equals the full max-flow value whenever
    the group touches an endpoint; monotone in the group.
    """
    _check_endpoints(network, source, sink)
    group = vertex_group(network, members)
    total, _ = max_flow(network, source, sink)
    if not group:
        return 0
    rest, _ = max_flow(restrict(network, group), source, sink)
    return total - rest


def _residual_max_value(
    caps: dict[Arc, int], source: VertexId, sink: VertexId
) -> int:
    """Max-flow value on a plain capacity dict (zero entries allowed)."""
    fwd_adj = _forward_adjacency(caps)
    flow: dict[Arc, int] = {}
    total = 0
    while True:
        moves = _bfs_augmenting(caps, fwd_adj, flow, source, sink)
        if moves is None:
            return total
        bottleneck = min(
            caps[arc] - flow.get(arc, 0) if d == FORWARD else flow[arc]
            for arc, d in moves
        )
        for arc, d in moves:
            flow[arc] = flow.get(arc, 0) + d * bottleneck
        total += bottleneck


def _path_candidates(
    network: Network, source: VertexId, sink: VertexId
) -> list[Path]:
    """All source->sink paths over positive-capacity arcs, in lexicographic order."""
    adj: dict[VertexId, list[VertexId]] = {}
    for tail, head in network.positive_arcs():
        adj.setdefault(tail, []).append(head)
    found: list[Path] = []
    trail = [source]
    on_trail = {source}

    def walk(v: VertexId):
        for w in adj.get(v, ()):
            if w == sink:
                found.append(Path(tuple(trail) + (sink,)))
            elif w not in on_trail:
                trail.append(w)
                on_trail.add(w)
                walk(w)
                on_trail.discard(w)
                trail.pop()

    if source != sink:
        walk(source)
    return found


def enumerate_max_sequences(
    network: Network,
    source: VertexId,
    sink: VertexId,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Iterator[ArcDisjointSequence]:
    """Stream every maximum arc-disjoint sequence class, canonically.

    Yields exactly one representative per reordering class -- the one
    whose components are sorted -- in lexicographic order of those
    canonical forms.  Candidates are chosen with nondecreasing candidate
    index under live capacity bookkeeping, so completeness follows from
    the backtracking; a branch is cut when the remaining capacities no
    longer admit the missing number of paths.  Raises BudgetExceededError
    (carrying the partial count) when the node budget runs out.
    """
    _check_endpoints(network, source, sink)
    target, _ = max_flow(network, source, sink)
    if target == 0:
        yield ArcDisjointSequence((), source, sink)
        return
    cands = _path_candidates(network, source, sink)
    cand_arcs = [p.arcs for p in cands]
    caps = dict(network.capacities)
    chosen: list[int] = []
    state = {"nodes": 0, "found": 0}

    def rec(start: int, remaining: int) -> Iterator[ArcDisjointSequence]:
        state["nodes"] += 1
        if state["nodes"] > node_budget:
            raise BudgetExceededError(
                "sequence enumeration budget exhausted",
                partial=state["found"],
                nodes=state["nodes"],
            )
        if remaining == 0:
            state["found"] += 1
            yield ArcDisjointSequence(
                tuple(cands[i] for i in chosen), source, sink
            )
            return
        if _residual_max_value(caps, source, sink) < remaining:
            return
        for i in range(start, len(cands)):
            arcs = cand_arcs[i]
            if all(caps[a] >= 1 for a in arcs):
                for a in arcs:
                    caps[a] -= 1
                chosen.append(i)
                yield from rec(i, remaining - 1)
                chosen.pop()
                for a in arcs:
                    caps[a] += 1

    yield from rec(0, target)


def _min_passage(
    network: Network,
    source: VertexId,
    sink: VertexId,
    group: frozenset,
    node_budget: int,
    lower_bound: int | None = None,
) -> tuple[int, ArcDisjointSequence]:
    """Exact minimum passage count plus a witness sequence attaining it."""
    target, _ = max_flow(network, source, sink)
    if target == 0:
        return 0, ArcDisjointSequence((), source, sink)
    if lower_bound is None:
        lower_bound = vitality_drop(network, source, sink, group)
    cands = _path_candidates(network, source, sink)
    cand_arcs = [p.arcs for p in cands]
    meets = [any(v in group for v in p.vertices) for p in cands]
    caps = dict(network.capacities)
    chosen: list[int] = []
    state = {"nodes": 0, "found": 0}
    best: list = [None, None]  # passage count, witness indices

    def rec(start: int, remaining: int, hits: int) -> bool:
        state["nodes"] += 1
        if state["nodes"] > node_budget:
            raise BudgetExceededError(
                "passage minimization budget exhausted",
                partial=state["found"],
                nodes=state["nodes"],
            )
        if best[0] is not None and hits >= best[0]:
            return False
        if remaining == 0:
            state["found"] += 1
            best[0] = hits
            best[1] = tuple(chosen)
            return hits == lower_bound
        if _residual_max_value(caps, source, sink) < remaining:
            return False
        for i in range(start, len(cands)):
            arcs = cand_arcs[i]
            if all(caps[a] >= 1 for a in arcs):
                for a in arcs:
                    caps[a] -= 1
                chosen.append(i)
                done = rec(i, remaining - 1, hits + (1 if meets[i] else 0))
                chosen.pop()
                for a in arcs:
                    caps[a] += 1
                if done:
                    return True
        return False

    rec(0, target, 0)
    if best[0] is None:
        raise InvariantViolationError(
            f"no maximum sequence found for {source!r}->{sink!r} "
            f"despite max flow {target}"
        )
    witness = ArcDisjointSequence(
        tuple(cands[i] for i in best[1]), source, sink
    )
    return best[0], witness


def forced_passage(
    network: Network,
    source: VertexId,
    sink: VertexId,
    members: Iterable[VertexId],
    mode: str = "auto",
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> int:
    """Minimum number of paths meeting the group in a maximum sequence.

    ``mode`` is ``"exact"`` (enumeration), ``"singleton-shortcut"``
    (answers with the vitality drop; valid only for groups of at most one
    vertex) or ``"auto"`` (shortcut when it applies, exact otherwise).
    """
    if mode not in _MODES:
        raise ValueError(f"unknown mode {mode!r}, expected one of {_MODES}")
    _check_endpoints(network, source, sink)
    group = vertex_group(network, members)
    if mode == "singleton-shortcut" and len(group) > 1:
        raise ShortcutInvalidError(
            f"singleton shortcut asked for a {len(group)}-vertex group"
        )
    if mode != "exact" and len(group) <= 1:
        return vitality_drop(network, source, sink, group)
    value, _ = _min_passage(network, source, sink, group, node_budget)
    return value


def forced_throughput(
    network: Network, source: VertexId, sink: VertexId, members: Iterable[VertexId]
) -> int:
    """Minimum total flow through the group over all maximum flows.

    The throughput of a flow is linear: a constant (flow value, once per
    endpoint inside the group) plus the flow on every arc leaving an
    interior group member.  Minimizing it over maximum flows is therefore
    a min-cost max-flow with unit cost on exactly those arcs.
    """
    _check_endpoints(network, source, sink)
    group = vertex_group(network, members)
    interior = group - {source, sink}
    costs = {arc: 1 for arc in network.capacities if arc[0] in interior}
    value, cost, _ = min_cost_max_flow(network, source, sink, costs)
    return len(group & {source, sink}) * value + cost


@dataclass(frozen=True)
class PairQuantities:
    """Everything this package can say about one (source, sink, group) triple.

    ``witness`` is a canonical sequence attaining the forced passage; it is
    present exactly when the passage was computed by enumeration
    (``exact`` is True) rather than by the singleton shortcut.
    """

    source: VertexId
    sink: VertexId
    group: frozenset
    max_flow_total: int
    max_flow_restricted: int
    vitality_drop: int
    forced_passage: int
    forced_throughput: int
    witness: ArcDisjointSequence | None
    exact: bool

    def record(self, sep: str = " ") -> str:
        """Flat record: y z X phi_total phi_restricted phi_X lambda_X delta_X witness."""
        witness = "-" if self.witness is None else str(self.witness)
        return sep.join(
            [
                self.source,
                self.sink,
                render_group(self.group),
                str(self.max_flow_total),
                str(self.max_flow_restricted),
                str(self.vitality_drop),
                str(self.forced_passage),
                str(self.forced_throughput),
                witness,
            ]
        )


def render_group(group: frozenset) -> str:
    return ",".join(sorted(group)) if group else "-"


def pair_report(
    network: Network,
    source: VertexId,
    sink: VertexId,
    members: Iterable[VertexId],
    *,
    exact: bool = False,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> PairQuantities:
    """Compute all pair quantities and assert their chain before returning.

    Passage mode follows the auto rule unless ``exact`` forces the
    enumeration; the witness is attached whenever the enumeration ran.
    """
    _check_endpoints(network, source, sink)
    group = vertex_group(network, members)
    total, _ = max_flow(network, source, sink)
    restricted, _ = max_flow(restrict(network, group), source, sink)
    drop = total - restricted
    use_exact = exact or len(group) > 1
    if use_exact:
        passage, witness = _min_passage(
            network, source, sink, group, node_budget, lower_bound=drop
        )
    else:
        passage, witness = drop, None
    throughput = forced_throughput(network, source, sink, group)
    if not (0 <= drop <= passage <= min(throughput, total)):
        raise InvariantViolationError(
            f"pair quantity chain violated for ({source!r}, {sink!r}, "
            f"{render_group(group)}): drop={drop} passage={passage} "
            f"throughput={throughput} max_flow={total}"
        )
    return PairQuantities(
        source=source,
        sink=sink,
        group=group,
        max_flow_total=total,
        max_flow_restricted=restricted,
        vitality_drop=drop,
        forced_passage=passage,
        forced_throughput=throughput,
        witness=witness,
        exact=use_exact,
    )
