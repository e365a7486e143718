"""Capacitated complete digraphs over string-token vertices.

A network is a finite vertex set (at least two vertices) together with a
nonnegative integer capacity for every ordered pair of distinct vertices.
The digraph is implicitly complete: only positive capacities are stored,
and querying any other pair returns 0.  Vertex tokens are non-empty
strings over ``[A-Za-z0-9_]`` and are ordered lexicographically; that
order is the canonical order used by every enumeration and report in this
package, so identical inputs always produce identical outputs.

Vertex groups are plain ``frozenset`` values validated against a network
by :func:`vertex_group`.

Text format (UTF-8), parsed by :func:`parse_network`::

    # comment lines start with '#'
    vertices y v x u z
    y v 2
    v x 1

One ``vertices`` line first, then one ``tail head capacity`` line per
positive-capacity arc.  Parse errors report the offending line number.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    BadTokenError,
    DuplicateArcError,
    NetworkParseError,
    SelfLoopError,
    TooFewVerticesError,
    UnknownVertexError,
)

VertexId = str
Arc = tuple[VertexId, VertexId]

_TOKEN_RE = re.compile(r"[A-Za-z0-9_]+\Z")


def check_token(token: str) -> str:
    """Return ``token`` if it is a valid vertex token, else raise."""
    if not isinstance(token, str) or not _TOKEN_RE.match(token):
        raise BadTokenError(f"bad vertex token {token!r}: expected [A-Za-z0-9_]+")
    return token


@dataclass(frozen=True)
class Network:
    """Immutable capacitated complete digraph.

    ``vertices`` is kept sorted; ``capacities`` maps arcs to their positive
    capacities (zero entries are normalized away on construction).  Treat
    both fields as read-only.
    """

    vertices: tuple[VertexId, ...]
    capacities: dict[Arc, int]

    def __post_init__(self):
        tokens = tuple(check_token(v) for v in self.vertices)
        if len(set(tokens)) != len(tokens):
            dupe = next(v for v in tokens if tokens.count(v) > 1)
            raise ValueError(f"vertex {dupe!r} declared more than once")
        if len(tokens) < 2:
            raise TooFewVerticesError(
                f"a network needs at least 2 vertices, got {len(tokens)}"
            )
        object.__setattr__(self, "vertices", tuple(sorted(tokens)))
        known = set(tokens)
        cleaned: dict[Arc, int] = {}
        for arc, cap in self.capacities.items():
            tail, head = arc
            if tail not in known:
                raise UnknownVertexError(f"unknown vertex {tail!r} in arc {arc!r}")
            if head not in known:
                raise UnknownVertexError(f"unknown vertex {head!r} in arc {arc!r}")
            if tail == head:
                raise SelfLoopError(f"self-loop on vertex {tail!r}")
            if cap < 0:
                raise ValueError(f"negative capacity {cap} on arc {arc!r}")
            if cap > 0:
                cleaned[(tail, head)] = cap
        object.__setattr__(self, "capacities", cleaned)

    def capacity(self, arc: Arc) -> int:
        """Capacity of ``arc``; 0 for any pair without a stored entry."""
        return self.capacities.get(arc, 0)

    def positive_arcs(self) -> tuple[Arc, ...]:
        """All arcs with positive capacity, in canonical order."""
        return tuple(sorted(self.capacities))

    def has_vertex(self, token: VertexId) -> bool:
        return token in self._vertex_set

    @property
    def _vertex_set(self) -> frozenset:
        return frozenset(self.vertices)


def vertex_group(network: Network, members: Iterable[VertexId]) -> frozenset:
    """Validate ``members`` against ``network`` and return them as a frozenset.

    Raises UnknownVertexError naming the first offending token (in sorted
    order).  The result may be empty and may contain any network vertex.
    """
    group = frozenset(members)
    known = network._vertex_set
    for token in sorted(group):
        if token not in known:
            raise UnknownVertexError(f"unknown vertex {token!r}")
    return group


def build_network(
    vertices: Iterable[VertexId],
    entries: Iterable[tuple[VertexId, VertexId, int]],
) -> Network:
    """Build a network from declared vertices and (tail, head, capacity) entries.

    Zero-capacity entries are accepted and dropped.  Raises
    TooFewVerticesError, UnknownVertexError, SelfLoopError or
    DuplicateArcError, each naming the offending token or arc.
    """
    tokens = [check_token(v) for v in vertices]
    if len(tokens) < 2:
        raise TooFewVerticesError(
            f"a network needs at least 2 vertices, got {len(tokens)}"
        )
    seen_v = set()
    for v in tokens:
        if v in seen_v:
            raise ValueError(f"vertex {v!r} declared more than once")
        seen_v.add(v)
    caps: dict[Arc, int] = {}
    seen_arcs = set()
    for tail, head, cap in entries:
        if tail not in seen_v:
            raise UnknownVertexError(f"unknown vertex {tail!r} in arc ({tail!r}, {head!r})")
        if head not in seen_v:
            raise UnknownVertexError(f"unknown vertex {head!r} in arc ({tail!r}, {head!r})")
        if tail == head:
            raise SelfLoopError(f"self-loop on vertex {tail!r}")
        if (tail, head) in seen_arcs:
            raise DuplicateArcError(f"duplicate arc ({tail!r}, {head!r})")
        seen_arcs.add((tail, head))
        if cap < 0:
            raise ValueError(f"negative capacity {cap} on arc ({tail!r}, {head!r})")
        if cap > 0:
            caps[(tail, head)] = int(cap)
    return Network(tuple(tokens), caps)


def restrict(network: Network, members: Iterable[VertexId]) -> Network:
    """Zero out every arc with an endpoint in the group; keep the rest.

    ``restrict(network, ())`` returns the network unchanged.
    """
    group = vertex_group(network, members)
    if not group:
        return network
    kept = {
        arc: cap
        for arc, cap in network.capacities.items()
        if arc[0] not in group and arc[1] not in group
    }
    return Network(network.vertices, kept)


def boundary_arcs(
    network: Network, members: Iterable[VertexId]
) -> tuple[frozenset, frozenset]:
    """Arcs of the complete digraph crossing the group boundary.

    Returns ``(outgoing, incoming)``: all ordered pairs from the group to
    its complement and vice versa, regardless of capacity (the arc set of
    a complete digraph is determined by the vertex set alone).
    """
    group = vertex_group(network, members)
    rest = [v for v in network.vertices if v not in group]
    inside = sorted(group)
    outgoing = frozenset((x, u) for x in inside for u in rest)
    incoming = frozenset((u, x) for x in inside for u in rest)
    return outgoing, incoming


def capacity_of_set(network: Network, members: Iterable[VertexId]) -> int:
    """Total capacity leaving the group: sum over arcs from it to its complement.

    For a singleton ``{x}`` this is the outdegree of ``x``; applied to the
    complement of ``{x}`` it gives the indegree of ``x``.
    """
    group = vertex_group(network, members)
    return sum(
        cap
        for (tail, head), cap in network.capacities.items()
        if tail in group and head not in group
    )


def parse_network(text: str, *, max_capacity: int | None = None) -> Network:
    """Parse the text format described in the module docstring.

    ``max_capacity``, when given, rejects any larger capacity (used by the
    CLI to keep downstream arithmetic comfortably in machine range).
    All failures raise NetworkParseError carrying the 1-based line number.
    """
    vertices: list[str] | None = None
    caps: dict[Arc, int] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if vertices is None:
            if fields[0] != "vertices":
                raise NetworkParseError(line_no, "expected a 'vertices' line first")
            vertices = fields[1:]
            if len(vertices) < 2:
                raise NetworkParseError(line_no, "need at least 2 vertices")
            for tok in vertices:
                if not _TOKEN_RE.match(tok):
                    raise NetworkParseError(line_no, f"bad vertex token {tok!r}")
            if len(set(vertices)) != len(vertices):
                dupe = next(v for v in vertices if vertices.count(v) > 1)
                raise NetworkParseError(line_no, f"duplicate vertex {dupe!r}")
            continue
        if len(fields) != 3:
            raise NetworkParseError(line_no, "expected 'tail head capacity'")
        tail, head, cap_text = fields
        for tok in (tail, head):
            if tok not in vertices:
                raise NetworkParseError(line_no, f"unknown vertex {tok!r}")
        if tail == head:
            raise NetworkParseError(line_no, f"self-loop on vertex {tail!r}")
        try:
            cap = int(cap_text)
        except ValueError:
            raise NetworkParseError(line_no, f"bad capacity {cap_text!r}") from None
        if cap < 0:
            raise NetworkParseError(line_no, f"negative capacity {cap}")
        if max_capacity is not None and cap > max_capacity:
            raise NetworkParseError(
                line_no, f"capacity {cap} exceeds the configured cap {max_capacity}"
            )
        if (tail, head) in caps:
            raise NetworkParseError(line_no, f"duplicate arc ({tail!r}, {head!r})")
        # zero entries are remembered here for duplicate detection, dropped below
        caps[(tail, head)] = cap
    if vertices is None:
        raise NetworkParseError(1, "empty input: no 'vertices' line")
    return Network(tuple(vertices), {a: c for a, c in caps.items() if c > 0})


def network_to_text(network: Network) -> str:
    """Serialize in canonical order; parse_network round-trips exactly."""
    lines = ["vertices " + " ".join(network.vertices)]
    for tail, head in network.positive_arcs():
        lines.append(f"{tail} {head} {network.capacities[(tail, head)]}")
    return "\n".join(lines) + "\n"


def load_network(path, *, max_capacity: int | None = None) -> Network:
    """Read and parse a network file."""
    with open(path, "r", encoding="utf-8") as handle:
        return parse_network(handle.read(), max_capacity=max_capacity)


def ordered_pairs(network: Network) -> list[tuple[VertexId, VertexId]]:
    """All ordered pairs of distinct vertices, in canonical order."""
    return [
        (y, z) for y in network.vertices for z in network.vertices if y != z
    ]
