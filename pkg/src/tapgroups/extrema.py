"""Local extrema of finite sequences with distinct neighbours."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
import operator
from operator import eq
from typing import Dict, FrozenSet, Sequence, Tuple

__all__ = [
    "ExtremaReport",
    "extrema",
    "ext_count",
    "is_fd_sequence",
    "is_subsequence",
    "iota_injection",
    "zigzag_enumeration",
]


@dataclass(frozen=True)
class ExtremaReport:
    lmax: FrozenSet[int]
    lmin: FrozenSet[int]

    @property
    def ext(self) -> FrozenSet[int]:
        return self.lmax | self.lmin

    def __len__(self):
        return len(self.ext)


def is_fd_sequence(s: Sequence[int]) -> bool:
    return not any(map(eq, s, islice(s, 1, None)))


def extrema(s: Sequence[int]) -> ExtremaReport:
    """Indices of local maxima and minima of ``s``.

    ``i`` is a local maximum when it is larger than each neighbour that
    exists; endpoints only have one neighbour to beat.

    >>> sorted(extrema((1, 0, 3, 2)).ext)
    [0, 1, 2, 3]
    """
    k = len(s) - 1
    lmax = []
    lmin = []
    for i in range(k + 1):
        x = s[i]
        if (i == 0 or s[i - 1] < x) and (i == k or x > s[i + 1]):
            lmax.append(i)
        if (i == 0 or s[i - 1] > x) and (i == k or x < s[i + 1]):
            lmin.append(i)
    return ExtremaReport(frozenset(lmax), frozenset(lmin))


def ext_count(s: Sequence[int]) -> int:
    """``|Ext(s)|`` without building the index sets."""
    k = len(s) - 1
    count = 0
    for i in range(k + 1):
        x = s[i]
        is_max = i == 0 or s[i - 1] < x
        is_min = i == 0 or s[i - 1] > x
        if i < k:
            is_max = is_max and x > s[i + 1]
            is_min = is_min and x < s[i + 1]
        if is_max or is_min:
            count += 1
    return count


def is_subsequence(sub: Sequence[int], s: Sequence[int]) -> bool:
    it = iter(s)
    return all(any(x == y for y in it) for x in sub)


def _argmax(s: Sequence[int], p: int, q: int) -> int:
    best = p
    for j in range(p + 1, q + 1):
        if s[j] > s[best]:
            best = j
    return best


def _argmin(s: Sequence[int], p: int, q: int) -> int:
    best = p
    for j in range(p + 1, q + 1):
        if s[j] < s[best]:
            best = j
    return best


def iota_injection(s: Sequence[int], selected: Sequence[int]) -> Dict[int, int]:
    """Map each extremum of the selected subsequence to an extremum of ``s``.

    Endpoints go to endpoints; an interior local maximum ``n`` of the
    subsequence goes to the first index of the largest entry of ``s``
    between ``selected[n-1]`` and ``selected[n+1]`` (dually for minima).
    The returned map is injective with image inside ``Ext(s)``.
    """
    if not s:
        raise ValueError("s must be nonempty")
    if not is_fd_sequence(s):
        raise ValueError("s has equal neighbours")
    idx = list(selected)
    if not idx:
        raise ValueError("empty selection")
    if idx[0] < 0 or idx[-1] >= len(s):
        raise ValueError("selected index out of range")
    if any(map(operator.ge, idx, islice(idx, 1, None))):
        raise ValueError("selected indices must be strictly increasing")
    sub = [s[i] for i in idx]
    if not is_fd_sequence(sub):
        raise ValueError("selected subsequence has equal neighbours")

    kp = len(sub) - 1
    out = {0: 0}
    for n in range(1, kp):
        prev, x, nxt = sub[n - 1], sub[n], sub[n + 1]
        if prev < x > nxt:
            out[n] = _argmax(s, idx[n - 1], idx[n + 1])
        elif prev > x < nxt:
            out[n] = _argmin(s, idx[n - 1], idx[n + 1])
    if kp:
        out[kp] = len(s) - 1
    return out


def zigzag_enumeration(m: int) -> Tuple[int, ...]:
    """``(x_0, ..., x_m)`` with ``x_n = n+1`` for even ``n`` and ``n-1`` for odd ``n``."""
    return tuple(n + 1 if n % 2 == 0 else n - 1 for n in range(m + 1))
