"""Tree representation, metric quantities and canonical forms."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import BadLabel, NotATree, ParseError

MAX_ORDER = 10**5


@dataclass(frozen=True)
class Tree:
    """An immutable tree on vertices ``0..n-1``.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``.  Build instances
    with :func:`from_edge_list`, which validates the input.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def relabel(self, perm: Sequence[int]) -> "Tree":
        """Return the tree with vertex ``v`` renamed to ``perm[v]``."""
        return from_edge_list(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, edges={self.edges})"


@dataclass(frozen=True)
class EccProfile:
    eccentricities: tuple[int, ...]
    radius: int
    diameter: int
    center: frozenset[int]


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Tree:
    """Validate an edge list and return the corresponding :class:`Tree`.

    >>> from_edge_list(3, [(0, 1), (1, 2)]).adj
    ((1,), (0, 2), (1,))
    """
    edges = [(int(u), int(v)) for u, v in edges]
    if n < 2:
        raise NotATree(f"a tree needs at least two vertices, got n={n}")
    if n > MAX_ORDER:
        raise NotATree(f"order {n} exceeds the supported maximum {MAX_ORDER}")
    if len(edges) != n - 1:
        raise NotATree(f"expected {n - 1} edges, got {len(edges)}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        for x in (u, v):
            if not 0 <= x < n:
                raise BadLabel(f"vertex {x} outside 0..{n - 1}")
        if u == v:
            raise NotATree(f"self-loop at {u}")
        if v in nbrs[u]:
            raise NotATree(f"duplicate edge {u}-{v}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    while stack:
        v = stack.pop()
        for w in nbrs[v]:
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    if not all(seen):
        # n-1 edges and disconnected means there is a cycle somewhere
        raise NotATree("graph is disconnected (and therefore contains a cycle)")
    return Tree(n, tuple(tuple(sorted(s)) for s in nbrs))


def path(n: int) -> Tree:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Tree:
    """Star on ``n`` vertices with centre 0."""
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def _bfs(t: Tree, source: int) -> tuple[list[int], list[int]]:
    # neighbours are sorted, so the first discovery is via the smallest label
    dist = [-1] * t.n
    parent = [-1] * t.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in t.adj[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                parent[w] = v
                queue.append(w)
    return dist, parent


def all_pairs_distances(t: Tree) -> np.ndarray:
    """Distance matrix of ``t`` (``int32``, symmetric, zero diagonal)."""
    out = np.empty((t.n, t.n), dtype=np.int32)
    for v in range(t.n):
        out[v] = _bfs(t, v)[0]
    return out


def distance_histogram(t: Tree) -> dict[int, int]:
    """Map each distance ``x >= 1`` to the number of unordered pairs at distance ``x``."""
    dist = all_pairs_distances(t)
    upper = dist[np.triu_indices(t.n, k=1)]
    values, counts = np.unique(upper, return_counts=True)
    return {int(x): int(c) for x, c in zip(values, counts)}


def ecc_profile(t: Tree) -> EccProfile:
    ecc = tuple(int(x) for x in all_pairs_distances(t).max(axis=1))
    r, d = min(ecc), max(ecc)
    return EccProfile(ecc, r, d, frozenset(v for v in range(t.n) if ecc[v] == r))


def leaves(t: Tree) -> set[int]:
    return {v for v in range(t.n) if len(t.adj[v]) == 1}


def longest_path(t: Tree) -> list[int]:
    """A diametral path found by double BFS.

    Both sweeps pick the smallest-labelled farthest vertex; the path is
    listed from the end of the second sweep back to its start.
    """
    dist, _ = _bfs(t, 0)
    a = dist.index(max(dist))
    dist, parent = _bfs(t, a)
    b = dist.index(max(dist))
    out = [b]
    while out[-1] != a:
        out.append(parent[out[-1]])
    return out


def is_caterpillar(t: Tree) -> tuple[bool, list[int] | None]:
    """Check whether removing all leaves leaves a path.

    Returns ``(flag, backbone)``; the backbone is listed end to end and is
    ``None`` when the tree is not a caterpillar or the backbone is empty
    (only for the single edge).
    """
    inner = {v for v in range(t.n) if len(t.adj[v]) > 1}
    if not inner:
        return True, None
    inner_deg = {v: sum(1 for w in t.adj[v] if w in inner) for v in inner}
    if any(k > 2 for k in inner_deg.values()):
        return False, None
    start = min(v for v, k in inner_deg.items() if k <= 1)
    backbone = [start]
    prev = -1
    while True:
        nxt = [w for w in t.adj[backbone[-1]] if w in inner and w != prev]
        if not nxt:
            break
        prev = backbone[-1]
        backbone.append(nxt[0])
    return True, backbone


def _rooted_code(t: Tree, root: int, banned: int = -1) -> bytes:
    """AHU parenthesis code of the subtree at ``root`` with ``banned`` cut off."""
    order = [root]
    parent = {root: banned}
    for v in order:
        for w in t.adj[v]:
            if w != parent[v]:
                parent[w] = v
                order.append(w)
    child_codes: dict[int, list[bytes]] = {v: [] for v in order}
    code = b""
    for v in reversed(order):
        code = b"(" + b"".join(sorted(child_codes[v])) + b")"
        if v != root:
            child_codes[parent[v]].append(code)
    return code


def canonical_form(t: Tree) -> bytes:
    """Isomorphism-invariant byte string for ``t``.

    Unicentral trees are encoded rooted at the centre; bicentral trees by the
    sorted pair of codes of the two halves left after deleting the central
    edge.  Two trees have equal forms exactly when they are isomorphic.
    """
    center = sorted(ecc_profile(t).center)
    if len(center) == 1:
        return b"U" + _rooted_code(t, center[0])
    a, b = center
    halves = sorted((_rooted_code(t, a, banned=b), _rooted_code(t, b, banned=a)))
    return b"B" + halves[0] + halves[1]


def is_isomorphic(t1: Tree, t2: Tree) -> bool:
    return t1.n == t2.n and canonical_form(t1) == canonical_form(t2)


# -- edge-list text format -------------------------------------------------

def parse_edge_list(text: str) -> Tree:
    """Parse the edge-list format: ``n`` on the first line, then ``u v`` lines.

    Blank lines and lines starting with ``#`` are ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append((lineno, [int(tok) for tok in line.split()]))
        except ValueError:
            raise ParseError(f"line {lineno}: expected integers, got {raw!r}") from None
    if not rows:
        raise ParseError("empty edge list")
    lineno, head = rows[0]
    if len(head) != 1:
        raise ParseError(f"line {lineno}: first line must hold the order n")
    edges = []
    for lineno, row in rows[1:]:
        if len(row) != 2:
            raise ParseError(f"line {lineno}: expected 'u v'")
        edges.append((row[0], row[1]))
    return from_edge_list(head[0], edges)


def to_edge_list(t: Tree, header: Sequence[str] = ()) -> str:
    """Serialise ``t``; ``header`` lines are emitted as ``#`` comments."""
    lines = [f"# {h}" for h in header]
    lines.append(str(t.n))
    lines.extend(f"{u} {v}" for u, v in t.edges)
    return "\n".join(lines) + "\n"
