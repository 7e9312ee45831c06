"""Tree eccentric sequences and the extremal trees built from them.

A tree eccentric sequence is stored in compact form ``(r; m2, ..., ml)``:
the radius followed by the number of vertices of eccentricity
``r+1, ..., r+l-1``.  The number of centre vertices is 1 or 2 depending on
the parity of the diameter, so it is never stored.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import BadParameters, InvalidSequence, NotReducible, ParseError
from .tree import Tree, ecc_profile, from_edge_list


@dataclass(frozen=True, order=True)
class EccSequence:
    radius: int
    mults: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "mults", tuple(int(m) for m in self.mults))
        r = self.radius
        if r < 1:
            raise InvalidSequence("CenterCondition", f"radius must be positive, got {r}")
        if any(m < 2 for m in self.mults):
            raise InvalidSequence(
                "MultiplicityGap", f"multiplicities must be at least 2: {self.mults}"
            )
        if self.diameter not in (2 * r - 1, 2 * r):
            raise InvalidSequence(
                "CenterCondition",
                f"radius {r} incompatible with diameter {self.diameter}",
            )

    @property
    def length(self) -> int:
        """Number of distinct eccentricities (``l``)."""
        return len(self.mults) + 1

    @property
    def diameter(self) -> int:
        return self.radius + len(self.mults)

    @property
    def center_count(self) -> int:
        return 1 if self.diameter % 2 == 0 else 2

    @property
    def order(self) -> int:
        return self.center_count + sum(self.mults)

    def full(self) -> list[int]:
        """The nondecreasing list of all eccentricities."""
        out = [self.radius] * self.center_count
        for j, m in enumerate(self.mults, 1):
            out.extend([self.radius + j] * m)
        return out

    def multiplicity(self, j: int) -> int:
        """``m_j`` with 1-based ``j`` (``j = 1`` is the centre count)."""
        return self.center_count if j == 1 else self.mults[j - 2]

    def __str__(self) -> str:
        return f"{self.radius};" + ",".join(str(m) for m in self.mults)


def validate_sorted(seq: Sequence[int]) -> EccSequence:
    """Decide whether ``seq`` is a tree eccentric sequence.

    Applies Lesniak's criterion and returns the compact form, or raises
    :class:`InvalidSequence` carrying the reason.
    """
    a = [int(x) for x in seq]
    if len(a) < 2:
        raise InvalidSequence("TooShort", f"length {len(a)}")
    if any(x < 1 for x in a):
        raise InvalidSequence("NotSorted", "entries must be positive integers")
    if any(x > y for x, y in zip(a, a[1:])):
        raise InvalidSequence("NotSorted")
    n = len(a)
    if n == 2:
        if a == [1, 1]:
            return EccSequence(1, ())
        raise InvalidSequence("CenterCondition", "the only 2-vertex tree has eccentricities 1,1")

    # 0-based: a[0] = a_1
    bicentral = a[0] == a[1]
    if not bicentral:
        ok = 2 * a[0] == a[-1]
    else:
        ok = 2 * a[0] == a[-1] + 1 and a[2] != a[1]
    if not ok:
        raise InvalidSequence("CenterCondition")

    # every k in (a_1, a_n] must appear as a_j = a_{j+1} for some 2 <= j <= n-1
    doubled = {a[j] for j in range(1, n - 1) if a[j] == a[j + 1]}
    missing = [k for k in range(a[0] + 1, a[-1] + 1) if k not in doubled]
    if missing:
        raise InvalidSequence("MultiplicityGap", f"values {missing} occur fewer than twice")

    counts = Counter(a)
    return EccSequence(a[0], tuple(counts[k] for k in range(a[0] + 1, a[-1] + 1)))


def parse_sequence(text: str) -> EccSequence:
    """Parse ``"2,2,3,3,3"`` (full sorted form) or ``"2;3"`` (compact form)."""
    text = text.strip()
    try:
        if ";" in text:
            head, _, tail = text.partition(";")
            mults = tuple(int(x) for x in tail.split(",") if x.strip())
            return EccSequence(int(head), mults)
        values = [int(x) for x in text.split(",")]
    except ValueError:
        raise ParseError(f"cannot parse sequence {text!r}") from None
    return validate_sorted(values)


def of_tree(t: Tree) -> EccSequence:
    return validate_sorted(sorted(ecc_profile(t).eccentricities))


def _caterpillar(spine_len: int, pendants: Sequence[tuple[int, int]]) -> Tree:
    """Path ``0..spine_len`` with ``count`` pendants at each ``(position, count)``."""
    edges = [(i, i + 1) for i in range(spine_len)]
    nxt = spine_len + 1
    for pos, count in pendants:
        for _ in range(count):
            edges.append((pos, nxt))
            nxt += 1
    return from_edge_list(nxt, edges)


def build_extremal(s: EccSequence) -> Tree:
    """The caterpillar ``T(r; m2, ..., ml)``.

    A path ``v0..v_d`` (labels ``0..d``) with ``m_j - 2`` pendants at
    ``v_{l+1-j}`` for ``j = 2..l``.  Pendants are labelled ``d+1, d+2, ...``
    in order of increasing ``j``.
    """
    l = s.length
    return _caterpillar(s.diameter, [(l + 1 - j, s.mults[j - 2] - 2) for j in range(2, l + 1)])


def build_Tdn(n: int, d: int) -> Tree:
    """Path of order ``d+1`` with ``n-d-1`` pendants at a centre vertex."""
    if not 2 <= d <= n - 1:
        raise BadParameters(f"need 2 <= d <= n-1, got n={n}, d={d}")
    return build_extremal(Tdn_sequence(n, d))


def Tdn_sequence(n: int, d: int) -> EccSequence:
    if not 2 <= d <= n - 1:
        raise BadParameters(f"need 2 <= d <= n-1, got n={n}, d={d}")
    return EccSequence(-(-d // 2), (n - d + 1,) + (2,) * (d // 2 - 1))


def seq_reduce(s: EccSequence) -> EccSequence:
    """Fold the outermost excess multiplicity one step toward the centre.

    With ``i`` the largest index in ``3..l`` having ``m_i > 2``:
    ``m_{i-1} += m_i - 2`` and ``m_i = 2``.  Order, radius and diameter are
    unchanged.
    """
    if s.diameter < 3 or all(m == 2 for m in s.mults[1:]):
        raise NotReducible(f"{s} is already of T(d,n) shape")
    mults = list(s.mults)
    # mults[k] holds m_{k+2}
    i = max(k for k in range(1, len(mults)) if mults[k] > 2)
    mults[i - 1] += mults[i] - 2
    mults[i] = 2
    return EccSequence(s.radius, tuple(mults))


def reduction_index(s: EccSequence) -> int:
    """The 1-based index ``i`` that :func:`seq_reduce` would fold."""
    if s.diameter < 3 or all(m == 2 for m in s.mults[1:]):
        raise NotReducible(f"{s} is already of T(d,n) shape")
    return max(k for k in range(1, len(s.mults)) if s.mults[k] > 2) + 2


def counterexample_pair(n: int, d: int) -> tuple[Tree, Tree]:
    """Two non-isomorphic trees sharing an eccentric sequence and, for large k, SW_k.

    ``T1`` carries all ``n-d-1`` pendants at ``v_{(d-1)/2}`` (odd ``d``) or
    ``v_{(d-2)/2}`` (even ``d``); ``T2`` moves one of them to the mirror
    position ``v_{(d+1)/2}`` or ``v_{(d+2)/2}``.
    """
    if d < 3 or n < d + 3:
        raise BadParameters(f"need d >= 3 and n >= d+3, got n={n}, d={d}")
    if d % 2:
        left, right = (d - 1) // 2, (d + 1) // 2
    else:
        left, right = (d - 2) // 2, (d + 2) // 2
    k = n - d - 1
    return _caterpillar(d, [(left, k)]), _caterpillar(d, [(left, k - 1), (right, 1)])


def sequences_of_order(n: int) -> list[EccSequence]:
    """Every tree eccentric sequence with ``n`` vertices, sorted."""
    if n == 2:
        return [EccSequence(1, ())]
    out = []
    for d in range(2, n):
        r = -(-d // 2)
        parts = d - r
        total = n - (1 if d % 2 == 0 else 2)
        for mults in _compositions(total, parts, 2):
            out.append(EccSequence(r, mults))
    return sorted(out)


def _compositions(total: int, parts: int, least: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(least, total - least * (parts - 1) + 1):
        for rest in _compositions(total - first, parts - 1, least):
            yield (first,) + rest
