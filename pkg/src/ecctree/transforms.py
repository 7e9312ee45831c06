"""The mate transformation and its iteration to a caterpillar.

Given a non-caterpillar ``T`` and a longest path ``v0..vd``, pick a path
vertex ``v_j`` (with ``j >= d/2``) that has a non-leaf neighbour ``u`` off
the path.  The mate of ``T`` re-hangs every branch of ``u`` that points away
from the path onto ``v_{j+1}``.  The eccentric sequence is unchanged and the
number of leaves goes up by at least one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AlreadyCaterpillar
from .tree import Tree, from_edge_list, is_caterpillar, longest_path


@dataclass(frozen=True)
class MateTrace:
    """Choices made by one mate step.

    ``path`` is the oriented longest path, ``j`` the index of the anchor
    vertex on it and ``u`` its off-path neighbour.  ``far`` (U) holds the
    vertices behind ``u``; ``left`` (L) and ``right`` (R) split the rest
    by the edge ``v_j v_{j+1}``.
    """

    path: tuple[int, ...]
    j: int
    u: int
    far: frozenset[int]
    left: frozenset[int]
    right: frozenset[int]

    def describe(self) -> str:
        return (
            f"mate: path={','.join(map(str, self.path))} j={self.j} u={self.u} "
            f"|U|={len(self.far)} |L|={len(self.left)} |R|={len(self.right)}"
        )


def _component(t: Tree, start: int, blocked: set[int]) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in t.adj[v]:
            if w not in seen and w not in blocked:
                seen.add(w)
                stack.append(w)
    return seen


def _select(t: Tree) -> tuple[list[int], int, int]:
    p = longest_path(t)
    d = len(p) - 1
    on_path = set(p)
    best = None
    for j in range(1, d):
        for u in t.adj[p[j]]:
            if u in on_path or len(t.adj[u]) == 1:
                continue
            oriented = max(j, d - j)
            key = (-oriented, u)
            if best is None or key < best[0]:
                best = (key, j, u)
    if best is None:
        raise AlreadyCaterpillar("tree is a caterpillar")
    _, j, u = best
    if 2 * j < d:
        p.reverse()
        j = d - j
    return p, j, u


def mate(t: Tree) -> tuple[Tree, MateTrace]:
    """Return the mate of ``t`` and the trace of the choices made.

    Among the path vertices with an off-path non-leaf neighbour, the one
    farthest from the middle (after orienting the path so ``j >= d/2``) is
    used; ties on ``u`` go to the smallest label.
    """
    if is_caterpillar(t)[0]:
        raise AlreadyCaterpillar("tree is a caterpillar")
    p, j, u = _select(t)
    vj, vnext = p[j], p[j + 1]
    far = _component(t, u, {vj}) - {u}
    left = _component(t, vj, {vnext}) - far
    right = _component(t, vnext, {vj})
    moved = {z for z in t.adj[u] if z != vj}
    edges = []
    for a, b in t.edges:
        if a == u and b in moved:
            edges.append((vnext, b))
        elif b == u and a in moved:
            edges.append((vnext, a))
        else:
            edges.append((a, b))
    trace = MateTrace(tuple(p), j, u, frozenset(far), frozenset(left), frozenset(right))
    return from_edge_list(t.n, edges), trace


def caterpillarize(t: Tree) -> tuple[Tree, int]:
    """Apply :func:`mate` until the tree is a caterpillar; return it and the step count."""
    steps = 0
    while not is_caterpillar(t)[0]:
        t, _ = mate(t)
        steps += 1
        if steps > t.n:
            raise RuntimeError("mate iteration did not terminate within n steps")
    return t, steps
