"""Finitely supported permutations of N with the pointwise topology.

Product convention: ``perm_mul(f, g)`` is ``f o g`` (apply ``g`` first).
With it, ``b_0 b_1 ... b_n`` is the cycle ``0 -> 1 -> ... -> n+1 -> 0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .base import InstrumentedGroup


@dataclass(frozen=True)
class FinPerm:
    """Images of ``0..k-1``; every point ``>= k`` is fixed."""

    images: Tuple[int, ...] = ()

    def __post_init__(self):
        im = list(self.images)
        if sorted(im) != list(range(len(im))):
            raise ValueError("images must be a permutation of 0..k-1")
        while im and im[-1] == len(im) - 1:
            im.pop()
        object.__setattr__(self, "images", tuple(im))

    def __call__(self, k: int) -> int:
        return self.images[k] if k < len(self.images) else k

    @classmethod
    def from_mapping(cls, mapping: Dict[int, int]) -> "FinPerm":
        size = max((max(k, v) for k, v in mapping.items()), default=-1) + 1
        return cls(tuple(mapping.get(k, k) for k in range(size)))


def perm_mul(f: FinPerm, g: FinPerm) -> FinPerm:
    size = max(len(f.images), len(g.images))
    return FinPerm(tuple(f(g(k)) for k in range(size)))


def perm_inv(f: FinPerm) -> FinPerm:
    out = [0] * len(f.images)
    for k, v in enumerate(f.images):
        out[v] = k
    return FinPerm(tuple(out))


def transposition_b(n: int) -> FinPerm:
    """Swap ``n`` and ``n+1``."""
    return FinPerm(tuple(range(n)) + (n + 1, n))


def cycle(points: List[int]) -> FinPerm:
    """``points[0] -> points[1] -> ... -> points[0]``."""
    mapping = {a: b for a, b in zip(points, points[1:] + points[:1])}
    return FinPerm.from_mapping(mapping)


def pi_n(n: int) -> FinPerm:
    out = FinPerm()
    for j in range(n + 1):
        out = perm_mul(out, transposition_b(j))
    return out


def pi_cycle_check(n: int) -> bool:
    return pi_n(n) == cycle(list(range(n + 2)))


def cycle_notation(f: FinPerm) -> str:
    seen = set()
    parts = []
    for start in range(len(f.images)):
        if start in seen or f(start) == start:
            continue
        orbit = [start]
        seen.add(start)
        k = f(start)
        while k != start:
            orbit.append(k)
            seen.add(k)
            k = f(k)
        parts.append("(" + " ".join(map(str, orbit)) + ")")
    return "".join(parts) or "()"


class FinPermModel(InstrumentedGroup):
    """``U_n`` = permutations fixing each of ``0..n-1``."""

    name = "finperm"
    abelian = False

    def __init__(self, window: int = 16):
        self.window = window

    def identity(self):
        return FinPerm()

    def mul(self, a, b):
        return perm_mul(a, b)

    def inv(self, a):
        return perm_inv(a)

    def in_basic_subgroup(self, a, n):
        return all(a(k) == k for k in range(n))

    def depth(self, a, cap):
        for k in range(cap):
            if a(k) != k:
                return k
        return cap

    def render(self, a):
        return cycle_notation(a)

    def parts(self, a, levels):
        # preimages matter too: a pointwise limit of bijections need not be onto
        b = perm_inv(a)
        n = self.window
        return tuple(a(k) for k in range(n)) + tuple(b(k) for k in range(n))

    def part_names(self, levels):
        n = self.window
        return [f"img@{k}" for k in range(n)] + [f"pre@{k}" for k in range(n)]

    def default_probes(self):
        return [f"img@{k}" for k in range(self.window)]

    def probe(self, a, probe_ids):
        out = []
        for pid in probe_ids:
            if not pid.startswith("img@"):
                raise ValueError(f"unknown probe {pid!r}")
            v = a(int(pid[4:]))
            out.append((pid, v, str(v)))
        return out
