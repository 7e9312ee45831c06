"""Free-tree enumeration and exhaustive checks of the extremal results.

Free trees are generated with the Wright-Richmond-Odlyzko-McKay successor
rule on centre-rooted canonical level sequences, so every isomorphism class
appears once and no deduplication is needed.  Prüfer decoding of all
labelled trees is kept as a small-order oracle.
"""

from __future__ import annotations

import heapq
import json
import math
import os
import random
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Sequence

from .errors import BadK, BadParameters, SizeLimit
from .indices import DECREASING, IndexSpec, IndexValue, SteinerIndex, WeightFunction, evaluate
from .sequence import EccSequence, build_extremal, build_Tdn, of_tree
from .tree import Tree, canonical_form, ecc_profile, from_edge_list

ENUMERATION_CAP = 18
VERIFY_CAP = 14
LABELED_CAP = 9


def _cap(default: int) -> int:
    env = os.environ.get("ECCTREE_MAX_N")
    return int(env) if env else default


# -- generation ------------------------------------------------------------

def _layout_to_tree(layout: Sequence[int]) -> Tree:
    edges = []
    stack: list[int] = []
    for i, depth in enumerate(layout):
        del stack[depth:]
        if stack:
            edges.append((stack[-1], i))
        stack.append(i)
    return from_edge_list(len(layout), edges)


def _next_rooted(layout: list[int], p: int | None = None) -> list[int] | None:
    if p is None:
        p = len(layout) - 1
        while layout[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while layout[q] != layout[p] - 1:
        q -= 1
    out = list(layout)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(layout: list[int]) -> tuple[list[int], list[int]]:
    # first subtree of the root (shifted up one level) and everything else
    m = next((i for i in range(2, len(layout)) if layout[i] == 1), len(layout))
    left = [x - 1 for x in layout[1:m]]
    rest = [0] + layout[m:]
    return left, rest


def _next_free(layout: list[int]) -> list[int]:
    left, rest = _split(layout)
    lh, rh = max(left), max(rest)
    valid = rh >= lh
    if valid and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            valid = False
    if valid:
        return layout
    p = len(left)
    out = _next_rooted(layout, p)
    if layout[p] > 2:
        new_left, _ = _split(out)
        suffix = list(range(1, max(new_left) + 2))
        out[-len(suffix):] = suffix
    return out


def free_trees(n: int) -> Iterator[Tree]:
    """Yield one representative of every isomorphism class of trees of order ``n``."""
    cap = _cap(ENUMERATION_CAP)
    if n < 2:
        raise BadParameters(f"trees have at least two vertices, got n={n}")
    if n > cap:
        raise SizeLimit(f"free-tree enumeration is capped at n={cap}")
    if n == 2:
        yield from_edge_list(2, [(0, 1)])
        return
    layout: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while layout is not None:
        layout = _next_free(layout)
        if layout is None:
            break
        yield _layout_to_tree(layout)
        layout = _next_rooted(layout)


def prufer_decode(word: Sequence[int]) -> Tree:
    n = len(word) + 2
    degree = [1] * n
    for x in word:
        degree[x] += 1
    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    edges = []
    for x in word:
        leaf = heapq.heappop(heap)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(heap, x)
    edges.append((heapq.heappop(heap), heapq.heappop(heap)))
    return from_edge_list(n, edges)


def labeled_trees(n: int) -> Iterator[Tree]:
    """All ``n**(n-2)`` labelled trees on ``0..n-1``, via Prüfer words."""
    if n < 2:
        raise BadParameters(f"trees have at least two vertices, got n={n}")
    if n > LABELED_CAP:
        raise SizeLimit(f"labelled enumeration is capped at n={LABELED_CAP}")
    for word in product(range(n), repeat=n - 2):
        yield prufer_decode(word)


def random_tree(n: int, rng: random.Random) -> Tree:
    """Uniformly random labelled tree of order ``n``."""
    if n == 2:
        return from_edge_list(2, [(0, 1)])
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)])


def classify_by_sequence(n: int) -> dict[EccSequence, list[Tree]]:
    """Partition the free trees of order ``n`` by eccentric sequence (keys sorted)."""
    groups: dict[EccSequence, list[Tree]] = defaultdict(list)
    for t in free_trees(n):
        groups[of_tree(t)].append(t)
    return dict(sorted(groups.items()))


def trees_of_diameter(n: int, d: int) -> list[Tree]:
    return [t for t in free_trees(n) if ecc_profile(t).diameter == d]


# -- verification ----------------------------------------------------------

@dataclass
class ClassRecord:
    key: str
    size: int
    extremal_value: IndexValue
    attainers: list[bytes]
    flags: dict[str, object]
    asserted: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return all(self.flags[f] is True for f in self.asserted)

    def to_dict(self) -> dict:
        return {
            "key": self.key,
            "size": self.size,
            "extremal_value": str(self.extremal_value),
            "attainers": [a.hex() for a in self.attainers],
            "flags": dict(self.flags),
            "asserted": list(self.asserted),
            "passed": self.passed,
        }


@dataclass
class VerifyReport:
    order: int
    index_spec: str
    diameter: int | None = None
    classes: list[ClassRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.classes)

    @property
    def tree_count(self) -> int:
        return sum(c.size for c in self.classes)

    def failures(self) -> list[ClassRecord]:
        return [c for c in self.classes if not c.passed]

    def to_dict(self) -> dict:
        out = {"order": self.order, "index_spec": self.index_spec}
        if self.diameter is not None:
            out["diameter"] = self.diameter
        out["passed"] = self.passed
        out["classes"] = [c.to_dict() for c in self.classes]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _check_class(
    key: str,
    trees: Sequence[Tree],
    spec: IndexSpec,
    constructor: Tree,
    uniqueness_required: bool,
) -> ClassRecord:
    values = [evaluate(t, spec) for t in trees]
    maximise = spec.monotonicity == DECREASING
    best = (max if maximise else min)(values, key=lambda v: v.value)
    winners = sorted({canonical_form(t) for t, v in zip(trees, values) if v.close_to(best)})
    flags: dict[str, object] = {
        "extremal_is_constructor": canonical_form(constructor) in winners,
    }
    if not spec.exact:
        # floating ties are reported, never broken
        flags["tie"] = len(winners) > 1
        flags["unique"] = True if len(winners) == 1 else None
        asserted: tuple[str, ...] = ("extremal_is_constructor",)
    elif isinstance(spec, SteinerIndex):
        flags["unique"] = len(winners) == 1
        flags["uniqueness_required"] = uniqueness_required
        flags["uniqueness_threshold_respected"] = flags["unique"] or not uniqueness_required
        asserted = ("extremal_is_constructor", "uniqueness_threshold_respected")
    else:
        flags["unique"] = len(winners) == 1
        asserted = ("extremal_is_constructor", "unique")
    return ClassRecord(key, len(trees), best, winners, flags, asserted)


def _check_class_packed(args) -> ClassRecord:
    return _check_class(*args)


def _steiner_threshold(n: int, d: int) -> int:
    return n - math.ceil(d / 2)


def _run(report: VerifyReport, tasks: list[tuple], jobs: int) -> VerifyReport:
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_check_class_packed, tasks))
    else:
        records = [_check_class(*task) for task in tasks]
    report.classes = records
    return report


def _check_order(n: int):
    cap = _cap(VERIFY_CAP)
    if n > cap:
        raise SizeLimit(f"verification sweeps are capped at n={cap}")


def verify_sequences(
    n: int,
    spec: IndexSpec,
    *,
    only: Sequence[EccSequence] | None = None,
    jobs: int = 1,
) -> VerifyReport:
    """Check, class by class, that ``build_extremal(S)`` is the extremal tree.

    Wiener-type weights are minimised when increasing and maximised when
    decreasing; Steiner indices are minimised and uniqueness is only required
    for ``k <= n - ceil(d/2)``.  ``only`` restricts the sweep to some classes.
    """
    _check_order(n)
    if isinstance(spec, SteinerIndex) and (spec.k is None or not 2 <= spec.k <= n - 1):
        raise BadK(f"steiner verification needs 2 <= k <= n-1, got {spec.k}")
    groups = classify_by_sequence(n)
    if only is not None:
        wanted = set(only)
        groups = {s: ts for s, ts in groups.items() if s in wanted}
    tasks = []
    for s, trees in groups.items():
        required = True
        if isinstance(spec, SteinerIndex):
            required = spec.k <= _steiner_threshold(n, s.diameter)
        tasks.append((str(s), trees, spec, build_extremal(s), required))
    return _run(VerifyReport(n, spec.spec()), tasks, jobs)


def verify_wiener_type(n: int, g: WeightFunction, **kw) -> VerifyReport:
    return verify_sequences(n, g, **kw)


def verify_steiner(n: int, k: int, **kw) -> VerifyReport:
    return verify_sequences(n, SteinerIndex(k), **kw)


def verify_diameter(n: int, d: int, spec: IndexSpec, *, jobs: int = 1) -> VerifyReport:
    """Check that ``T_{d,n}`` is extremal among all trees of order ``n`` and diameter ``d``."""
    _check_order(n)
    if not 2 <= d <= n - 1:
        raise BadParameters(f"need 2 <= d <= n-1, got n={n}, d={d}")
    required = True
    if isinstance(spec, SteinerIndex):
        if spec.k is None or not 2 <= spec.k <= n - 1:
            raise BadK(f"steiner verification needs 2 <= k <= n-1, got {spec.k}")
        required = spec.k <= _steiner_threshold(n, d)
    trees = trees_of_diameter(n, d)
    task = (f"n={n},d={d}", trees, spec, build_Tdn(n, d), required)
    return _run(VerifyReport(n, spec.spec(), diameter=d), [task], jobs)
