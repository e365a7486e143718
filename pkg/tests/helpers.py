"""Builders shared between test modules (not hypothesis strategies)."""

from fullflow import (
    GeneralizedPath,
    ResidualView,
    augment,
    max_flow,
    null_flow,
)


def random_augmenting_path(net, flow, rng):
    """A uniformly scrambled residual search; None iff the flow is maximum."""
    parent = {flow.source: None}
    queue = [flow.source]
    view = ResidualView(net, flow)
    while queue:
        v = queue.pop(rng.randrange(len(queue)))
        moves = view.moves_from(v)
        rng.shuffle(moves)
        for w, arc, direction in moves:
            if w in parent:
                continue
            parent[w] = (v, arc, direction)
            if w == flow.sink:
                vertices, directions = [w], []
                while parent[vertices[-1]] is not None:
                    prev, arc, direction = parent[vertices[-1]]
                    vertices.append(prev)
                    directions.append(direction)
                return GeneralizedPath(
                    tuple(reversed(vertices)), tuple(reversed(directions))
                )
            queue.append(w)
    return None


def random_flow(net, y, z, rng):
    """A valid flow built from a random augmentation prefix."""
    value, _ = max_flow(net, y, z)
    stop_after = rng.randint(0, value)
    f = null_flow(y, z)
    for _ in range(stop_after):
        gp = random_augmenting_path(net, f, rng)
        if gp is None:
            break
        f = augment(f, gp)
    return f
