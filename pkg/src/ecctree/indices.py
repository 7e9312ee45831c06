"""Distance-based indices of trees.

Two families are covered:

* Wiener-type indices ``W(T; g)``: the sum of ``g(d(u, v))`` over all
  unordered vertex pairs, for a monotone weight ``g``.
* The k-Steiner Wiener index ``SW_k``: the sum of Steiner distances over all
  ``k``-element vertex subsets.

Everything is computed exactly (``int`` / ``Fraction``) except the
generalised Wiener index with a non-integer exponent.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, islice
from typing import Iterable, Union

import numpy as np

from .errors import BadK, BadParameters, BadSubset, DomainError, ParseError, SizeLimit
from .tree import Tree, all_pairs_distances, distance_histogram

REL_TOL = 1e-9
SUBSET_CAP = 10**7
DENOMINATOR_BITS = 4096

INCREASING = "strictly-increasing"
DECREASING = "strictly-decreasing"


@dataclass(frozen=True)
class WeightFunction:
    """A monotone weight ``g`` on positive integers.

    ``kind`` is one of ``wiener``, ``hyper``, ``harary``, ``genw`` (with
    exponent ``lam``) or ``rcw``.  The reciprocal complementary Wiener
    weight depends on the diameter of the tree being evaluated, so
    :meth:`__call__` takes it as a second argument.
    """

    kind: str
    lam: Union[int, float, None] = None

    KINDS = ("wiener", "hyper", "harary", "genw", "rcw")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise BadParameters(f"unknown weight kind {self.kind!r}")
        if self.kind == "genw":
            if self.lam is None or self.lam == 0:
                raise BadParameters("generalised Wiener needs a nonzero exponent")
            if float(self.lam).is_integer():
                object.__setattr__(self, "lam", int(self.lam))
        elif self.lam is not None:
            raise BadParameters(f"{self.kind} takes no exponent")

    @property
    def monotonicity(self) -> str:
        if self.kind == "harary" or (self.kind == "genw" and self.lam < 0):
            return DECREASING
        return INCREASING

    @property
    def exact(self) -> bool:
        return not (self.kind == "genw" and isinstance(self.lam, float))

    def __call__(self, x: int, diameter: int | None = None):
        if self.kind == "wiener":
            return x
        if self.kind == "hyper":
            return x * (x + 1) // 2
        if self.kind == "harary":
            return Fraction(1, x)
        if self.kind == "rcw":
            if diameter is None:
                raise BadParameters("rcw weight needs the tree diameter")
            return Fraction(1, diameter + 1 - x)
        if isinstance(self.lam, int):
            return Fraction(x) ** self.lam
        return float(x) ** self.lam

    def spec(self) -> str:
        return f"genw:{self.lam}" if self.kind == "genw" else self.kind


@dataclass(frozen=True)
class SteinerIndex:
    k: int | None = None

    monotonicity = INCREASING
    exact = True

    def spec(self) -> str:
        return "steiner" if self.k is None else f"steiner:{self.k}"


IndexSpec = Union[WeightFunction, SteinerIndex]


@dataclass(frozen=True)
class IndexValue:
    """An index value: exact (``int``/``Fraction``) or a float with tolerance."""

    value: Union[int, Fraction, float]

    @property
    def exact(self) -> bool:
        return not isinstance(self.value, float)

    def close_to(self, other: "IndexValue") -> bool:
        if self.exact and other.exact:
            return self.value == other.value
        return math.isclose(float(self.value), float(other.value), rel_tol=REL_TOL)

    def __float__(self) -> float:
        return float(self.value)

    def __str__(self) -> str:
        if isinstance(self.value, float):
            return format(self.value, ".12g")
        if isinstance(self.value, Fraction) and self.value.denominator == 1:
            return str(self.value.numerator)
        return str(self.value)

    def __lt__(self, other: "IndexValue") -> bool:
        return self.value < other.value


def parse_index_spec(text: str) -> IndexSpec:
    """Parse ``wiener``, ``hyper``, ``harary``, ``genw:<lambda>``, ``rcw``, ``steiner:<k>``."""
    name, _, arg = text.strip().lower().partition(":")
    try:
        if name == "steiner":
            return SteinerIndex(int(arg) if arg else None)
        if name == "genw":
            lam = float(arg)
            return WeightFunction("genw", int(lam) if lam.is_integer() else lam)
    except ValueError:
        raise ParseError(f"bad index spec {text!r}") from None
    if arg:
        raise ParseError(f"index {name!r} takes no argument")
    try:
        return WeightFunction(name)
    except BadParameters:
        raise ParseError(f"unknown index {text!r}") from None


def wiener_type(t: Tree, g: WeightFunction, *, on_overflow: str = "float") -> IndexValue:
    """``W(t; g)``, the sum of ``g(d(u, v))`` over unordered pairs.

    For ``rcw`` the diameter is taken from ``t``.  If an exact rational
    result has a denominator wider than ``DENOMINATOR_BITS`` bits the value
    is returned as a float with a warning, or :class:`DomainError` is raised
    when ``on_overflow="raise"``.
    """
    hist = distance_histogram(t)
    diameter = max(hist)
    total = sum(count * g(x, diameter) for x, count in hist.items())
    if isinstance(total, Fraction):
        if total.denominator == 1:
            return IndexValue(total.numerator)
        if total.denominator.bit_length() > DENOMINATOR_BITS:
            if on_overflow == "raise":
                raise DomainError(f"denominator of {g.spec()} exceeds {DENOMINATOR_BITS} bits")
            warnings.warn(f"{g.spec()}: exact denominator too large, using floating point")
            return IndexValue(float(total))
    return IndexValue(total)


def steiner_distance(t: Tree, subset: Iterable[int]) -> int:
    """Edges in the smallest subtree containing ``subset``.

    Leaves outside the subset are pruned until none remain; what is left is
    the Steiner tree.
    """
    keep = set(subset)
    if not keep:
        raise BadSubset("empty subset")
    if any(not 0 <= v < t.n for v in keep):
        raise BadSubset(f"labels outside 0..{t.n - 1}: {sorted(keep)}")
    deg = [len(nb) for nb in t.adj]
    alive = [True] * t.n
    stack = [v for v in range(t.n) if deg[v] <= 1 and v not in keep]
    remaining = t.n
    while stack:
        v = stack.pop()
        alive[v] = False
        remaining -= 1
        for w in t.adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1 and w not in keep:
                    stack.append(w)
    return remaining - 1


def _check_k(t: Tree, k: int):
    if not 1 <= k <= t.n:
        raise BadK(f"k must lie in 1..{t.n}, got {k}")


def subtree_sizes(t: Tree, root: int = 0) -> list[tuple[int, int, int]]:
    """``(parent, child, size)`` for every edge, with ``size`` the child side's order."""
    parent = [-1] * t.n
    order = [root]
    parent[root] = root
    for v in order:
        for w in t.adj[v]:
            if parent[w] < 0:
                parent[w] = v
                order.append(w)
    size = [1] * t.n
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    return [(parent[v], v, size[v]) for v in order[1:]]


def sw_k_formula(t: Tree, k: int) -> int:
    """``SW_k`` via edge splits: each edge counts the k-sets meeting both sides."""
    _check_k(t, k)
    n = t.n
    total = math.comb(n, k)
    return sum(
        total - math.comb(s, k) - math.comb(n - s, k) for _, _, s in subtree_sizes(t)
    )


def _preorder(t: Tree) -> list[int]:
    order, stack, seen = [], [0], [False] * t.n
    seen[0] = True
    while stack:
        v = stack.pop()
        order.append(v)
        for w in reversed(t.adj[v]):
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    return order


def sw_k_bruteforce(t: Tree, k: int, *, cap: int = SUBSET_CAP, chunk: int = 1 << 16) -> int:
    """``SW_k`` by summing the Steiner distance of every ``k``-subset.

    Each subset's Steiner distance is half the closed walk visiting its
    members in depth-first preorder, so the sum is taken straight off the
    distance matrix without touching edge splits.
    """
    _check_k(t, k)
    if math.comb(t.n, k) > cap:
        raise SizeLimit(f"C({t.n},{k}) subsets exceeds the cap {cap}")
    order = _preorder(t)
    dist = all_pairs_distances(t)[np.ix_(order, order)].astype(np.int64)
    subsets = combinations(range(t.n), k)
    total = 0
    while True:
        block = np.array(list(islice(subsets, chunk)), dtype=np.intp)
        if block.size == 0:
            break
        walk = dist[block[:, -1], block[:, 0]]
        if k > 1:
            walk = walk + dist[block[:, :-1], block[:, 1:]].sum(axis=1)
        total += int(walk.sum())
    return total // 2


def steiner_wiener(t: Tree, k: int) -> IndexValue:
    return IndexValue(sw_k_formula(t, k))


def evaluate(t: Tree, spec: IndexSpec) -> IndexValue:
    if isinstance(spec, SteinerIndex):
        if spec.k is None:
            raise BadK("steiner index needs k")
        return steiner_wiener(t, spec.k)
    return wiener_type(t, spec)


def binomial_split_max(t: int, z: int, k: int) -> tuple[int, int, bool]:
    """Maximiser of ``C(x,k) + C(y,k)`` over ``x + y = z`` with ``x, y >= t``.

    The most lopsided split ``(t, z-t)`` always wins; it is the only one
    (up to swapping) when ``2 <= k <= z - t``.  For ``k = 1`` the objective
    is constant, so only a forced split (``2t == z``) is unique.
    """
    if t < 1 or k < 1 or 2 * t > z:
        raise BadParameters(f"need t, k >= 1 and 2t <= z, got t={t}, z={z}, k={k}")
    unique = k <= z - t and (k >= 2 or 2 * t == z)
    return t, z - t, unique

