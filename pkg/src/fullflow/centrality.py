"""Group centrality from flow quantities, accumulated as exact rationals.

Both measures sum one ratio per ordered vertex pair with positive maximum
flow value: full flow vitality uses the vitality drop of the group over
the pair's maximum flow value, full flow betweenness the forced passage
over the same denominator.  Sums are ``fractions.Fraction`` values, so
results are exact, order-independent and comparable with ``==``; pairs
whose maximum flow value is zero contribute nothing rather than 0/0.

Per-pair terms are independent, which is what the ``jobs`` knob of
:func:`centrality_report` exploits: terms fan out over a thread pool and
are reduced in canonical pair order, so the result is identical for every
worker width.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvariantViolationError, ShortcutInvalidError
from .flows import max_flow
from .network import Network, VertexId, ordered_pairs, restrict, vertex_group
from .quantities import DEFAULT_NODE_BUDGET, _min_passage, render_group


@dataclass(frozen=True)
class PairTerm:
    """One pair's contribution, kept for --explain output."""

    source: VertexId
    sink: VertexId
    max_flow_total: int
    vitality_drop: int
    forced_passage: int | None


@dataclass(frozen=True)
class CentralityReport:
    group: frozenset
    vitality: Fraction
    betweenness: Fraction | None
    pair_terms: tuple[PairTerm, ...] | None

    def record(self, sep: str = " ") -> str:
        """set vitality_num vitality_den betweenness_num betweenness_den
        vitality_dec betweenness_dec."""
        bet = self.betweenness
        fields = [
            render_group(self.group),
            str(self.vitality.numerator),
            str(self.vitality.denominator),
            str(bet.numerator) if bet is not None else "-",
            str(bet.denominator) if bet is not None else "-",
            decimal_text(self.vitality),
            decimal_text(bet) if bet is not None else "-",
        ]
        return sep.join(fields)


def decimal_text(value: Fraction, places: int = 6) -> str:
    """Exact fixed-point rendering, round-half-up, for nonnegative values."""
    scaled = value * 10**places
    whole, rem = divmod(scaled.numerator, scaled.denominator)
    if 2 * rem >= scaled.denominator:
        whole += 1
    digits = f"{whole:0{places + 1}d}"
    return f"{digits[:-places]}.{digits[-places:]}"


def _pair_term(
    network: Network,
    pair: tuple[VertexId, VertexId],
    group: frozenset,
    need_passage: bool,
    use_exact: bool,
    node_budget: int,
) -> PairTerm | None:
    y, z = pair
    total, _ = max_flow(network, y, z)
    if total == 0:
        return None
    restricted, _ = max_flow(restrict(network, group), y, z)
    drop = total - restricted
    passage: int | None = None
    if need_passage:
        if use_exact or len(group) > 1:
            passage, _ = _min_passage(
                network, y, z, group, node_budget, lower_bound=drop
            )
        else:
            passage = drop
    return PairTerm(y, z, total, drop, passage)


def full_flow_vitality(
    network: Network, members: Iterable[VertexId]
) -> Fraction:
    """Sum over flow-positive pairs of (vitality drop) / (max flow value)."""
    group = vertex_group(network, members)
    total = Fraction(0)
    for pair in ordered_pairs(network):
        term = _pair_term(network, pair, group, False, False, 0)
        if term is not None:
            total += Fraction(term.vitality_drop, term.max_flow_total)
    return total


def full_flow_betweenness(
    network: Network,
    members: Iterable[VertexId],
    mode: str = "auto",
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Fraction:
    """Sum over flow-positive pairs of (forced passage) / (max flow value).

    ``mode`` as in :func:`fullflow.quantities.forced_passage`.
    """
    group = vertex_group(network, members)
    use_exact = mode == "exact"
    if mode == "singleton-shortcut" and len(group) > 1:
        raise ShortcutInvalidError(
            f"singleton shortcut asked for a {len(group)}-vertex group"
        )
    total = Fraction(0)
    for pair in ordered_pairs(network):
        term = _pair_term(network, pair, group, True, use_exact, node_budget)
        if term is not None:
            total += Fraction(term.forced_passage, term.max_flow_total)
    return total


def centrality_report(
    network: Network,
    groups: Sequence[Iterable[VertexId]],
    *,
    exact: bool = False,
    explain: bool = False,
    jobs: int = 1,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> list[CentralityReport]:
    """One report per group, in the given order.

    ``exact`` forces enumeration-based passage even for singletons;
    ``jobs`` widens the per-pair fan-out without affecting any output.
    """
    validated = [vertex_group(network, g) for g in groups]
    pairs = ordered_pairs(network)
    reports = []
    for group in validated:

        def term_for(pair, group=group):
            return _pair_term(network, pair, group, True, exact, node_budget)

        if jobs > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                terms = list(pool.map(term_for, pairs))
        else:
            terms = [term_for(p) for p in pairs]
        kept = tuple(t for t in terms if t is not None)
        vitality = sum(
            (Fraction(t.vitality_drop, t.max_flow_total) for t in kept),
            Fraction(0),
        )
        betweenness = sum(
            (Fraction(t.forced_passage, t.max_flow_total) for t in kept),
            Fraction(0),
        )
        if vitality > betweenness:
            raise InvariantViolationError(
                f"vitality {vitality} exceeds betweenness {betweenness} "
                f"for group {render_group(group)}"
            )
        reports.append(
            CentralityReport(
                group=group,
                vitality=vitality,
                betweenness=betweenness,
                pair_terms=kept if explain else None,
            )
        )
    return reports
