"""Paths, cycles, generalized paths and arc-disjoint path sequences.

A path is a vertex-distinct forward walk; a cycle closes back on its first
vertex; a generalized path may traverse each step forward or backward
(the backbone of augmenting-path search).  Each carries a signed arc
function (:func:`chi`): +1 on forward arcs, -1 on backward arcs, 0
elsewhere.

A sequence of source-sink paths is *arc-disjoint* relative to a network
when no arc is used by more components than its capacity allows.  Sequences
are compared modulo reordering; the canonical representative sorts its
components lexicographically by vertex tokens.

Paths and cycles are defined over the vertex tokens alone; capacities only
come in at use sites (:func:`is_arc_disjoint`, :func:`induced_flow`).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Sequence, Union

from .errors import (
    MixedEndpointsError,
    NotArcDisjointError,
    SameEndpointsError,
)
from .network import Arc, Network, VertexId

if TYPE_CHECKING:
    from .flows import Flow

FORWARD = 1
BACKWARD = -1


@dataclass(frozen=True, order=True)
class Path:
    """Forward walk through distinct vertices (at least two)."""

    vertices: tuple[VertexId, ...]

    def __post_init__(self):
        if len(self.vertices) < 2:
            raise ValueError("a path needs at least 2 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"repeated vertex in path {'-'.join(self.vertices)}")

    @property
    def source(self) -> VertexId:
        return self.vertices[0]

    @property
    def sink(self) -> VertexId:
        return self.vertices[-1]

    @property
    def arcs(self) -> tuple[Arc, ...]:
        v = self.vertices
        return tuple((v[i], v[i + 1]) for i in range(len(v) - 1))

    def __str__(self) -> str:
        return "-".join(self.vertices)


def path_of(*tokens: VertexId) -> Path:
    """Convenience constructor: ``path_of("y", "v", "x", "z")``."""
    return Path(tuple(tokens))


@dataclass(frozen=True)
class Cycle:
    """Forward closed walk: first vertex repeated at the end, rest distinct.

    Directed 2-cycles are allowed: ``(b, d, b)`` uses the two distinct arcs
    (b, d) and (d, b).
    """

    vertices: tuple[VertexId, ...]

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise ValueError("a cycle needs at least 2 distinct vertices")
        if self.vertices[0] != self.vertices[-1]:
            raise ValueError("a cycle must end where it starts")
        body = self.vertices[:-1]
        if len(set(body)) != len(body):
            raise ValueError(f"repeated vertex in cycle {'-'.join(self.vertices)}")

    @property
    def arcs(self) -> tuple[Arc, ...]:
        v = self.vertices
        return tuple((v[i], v[i + 1]) for i in range(len(v) - 1))

    def rotated_to_least(self) -> "Cycle":
        """Equivalent cycle starting at its least vertex (canonical form)."""
        body = self.vertices[:-1]
        pivot = body.index(min(body))
        rotated = body[pivot:] + body[:pivot]
        return Cycle(rotated + (rotated[0],))

    def __str__(self) -> str:
        return "-".join(self.vertices)


def cycle_of(*tokens: VertexId) -> Cycle:
    return Cycle(tuple(tokens))


@dataclass(frozen=True)
class GeneralizedPath:
    """Vertex-distinct walk whose steps may run with or against the arcs.

    ``directions[i]`` is FORWARD when step i uses arc
    ``(vertices[i], vertices[i+1])`` and BACKWARD when it uses
    ``(vertices[i+1], vertices[i])``.
    """

    vertices: tuple[VertexId, ...]
    directions: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) < 2:
            raise ValueError("a generalized path needs at least 2 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(
                f"repeated vertex in generalized path {'-'.join(self.vertices)}"
            )
        if len(self.directions) != len(self.vertices) - 1:
            raise ValueError("need one direction marker per consecutive pair")
        if any(d not in (FORWARD, BACKWARD) for d in self.directions):
            raise ValueError("direction markers must be FORWARD or BACKWARD")

    @property
    def source(self) -> VertexId:
        return self.vertices[0]

    @property
    def sink(self) -> VertexId:
        return self.vertices[-1]

    @property
    def signed_arcs(self) -> tuple[tuple[Arc, int], ...]:
        out = []
        v = self.vertices
        for i, direction in enumerate(self.directions):
            arc = (v[i], v[i + 1]) if direction == FORWARD else (v[i + 1], v[i])
            out.append((arc, direction))
        return tuple(out)

    @property
    def arcs(self) -> tuple[Arc, ...]:
        return tuple(arc for arc, _ in self.signed_arcs)

    @property
    def forward_arcs(self) -> tuple[Arc, ...]:
        return tuple(a for a, d in self.signed_arcs if d == FORWARD)

    @property
    def backward_arcs(self) -> tuple[Arc, ...]:
        return tuple(a for a, d in self.signed_arcs if d == BACKWARD)

    def __str__(self) -> str:
        parts = [self.vertices[0]]
        for i, direction in enumerate(self.directions):
            parts.append(">" if direction == FORWARD else "<")
            parts.append(self.vertices[i + 1])
        return "".join(parts)


Walk = Union[Path, Cycle, GeneralizedPath]


def chi(walk: Walk) -> dict[Arc, int]:
    """Signed arc function of a walk: +1 forward, -1 backward, 0 elsewhere.

    Paths and cycles only produce +1 entries; the support is exactly the
    walk's arc set.
    """
    if isinstance(walk, GeneralizedPath):
        return {arc: direction for arc, direction in walk.signed_arcs}
    return {arc: 1 for arc in walk.arcs}


def passes_through(walk: Walk, members: Iterable[VertexId]) -> bool:
    """True iff some vertex of the walk lies in the group."""
    group = set(members)
    return any(v in group for v in walk.vertices)


@dataclass(frozen=True)
class ArcDisjointSequence:
    """Ordered multiset of source->sink paths, compared modulo reordering.

    May be empty, in which case the endpoints still identify the pair it
    belongs to.  Capacity validation happens against a network in
    :func:`is_arc_disjoint` / :func:`induced_flow`.
    """

    paths: tuple[Path, ...]
    source: VertexId
    sink: VertexId

    def __post_init__(self):
        if self.source == self.sink:
            raise SameEndpointsError(
                f"source and sink must differ, both are {self.source!r}"
            )
        for p in self.paths:
            if p.source != self.source or p.sink != self.sink:
                raise MixedEndpointsError(
                    f"path {p} does not run {self.source!r}->{self.sink!r}"
                )

    @classmethod
    def from_paths(cls, paths: Sequence[Path]) -> "ArcDisjointSequence":
        if not paths:
            raise ValueError("cannot infer endpoints from an empty sequence")
        return cls(tuple(paths), paths[0].source, paths[0].sink)

    @property
    def length(self) -> int:
        return len(self.paths)

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def canonical(self) -> "ArcDisjointSequence":
        """Components sorted lexicographically by vertex tokens."""
        return ArcDisjointSequence(tuple(sorted(self.paths)), self.source, self.sink)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.paths) if self.paths else "()"


def arc_multiplicities(paths: Iterable[Path]) -> Counter:
    """How many components use each arc."""
    counts: Counter = Counter()
    for p in paths:
        counts.update(p.arcs)
    return counts


def is_arc_disjoint(network: Network, paths: Sequence[Path]) -> bool:
    """True iff every arc's multiplicity across the sequence is within capacity.

    All paths must share one source and one sink (MixedEndpointsError
    otherwise); the empty sequence is arc-disjoint.
    """
    if paths:
        y, z = paths[0].source, paths[0].sink
        for p in paths:
            if p.source != y or p.sink != z:
                raise MixedEndpointsError(
                    f"path {p} does not run {y!r}->{z!r} like the first component"
                )
    counts = arc_multiplicities(paths)
    return all(count <= network.capacity(arc) for arc, count in counts.items())


def passage_count(seq: ArcDisjointSequence, members: Iterable[VertexId]) -> int:
    """Number of components meeting the group; invariant under reordering."""
    group = set(members)
    if not group:
        return 0
    return sum(1 for p in seq.paths if any(v in group for v in p.vertices))


def induced_flow(network: Network, seq: ArcDisjointSequence) -> "Flow":
    """The flow whose value on each arc is the arc's multiplicity in ``seq``.

    Its value equals the sequence length, and its throughput at any single
    vertex equals the passage count there.  Raises NotArcDisjointError if
    some arc's multiplicity exceeds its capacity in ``network``.
    """
    from .flows import Flow

    counts = arc_multiplicities(seq.paths)
    for arc in sorted(counts):
        if counts[arc] > network.capacity(arc):
            raise NotArcDisjointError(
                f"arc {arc!r} used {counts[arc]} times, capacity "
                f"{network.capacity(arc)}"
            )
    return Flow(seq.source, seq.sink, dict(counts))


def sequences_equivalent(s1: ArcDisjointSequence, s2: ArcDisjointSequence) -> bool:
    """True iff the sequences have equal length and equal component multisets."""
    return len(s1) == len(s2) and Counter(s1.paths) == Counter(s2.paths)
