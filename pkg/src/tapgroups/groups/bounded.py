"""Bounded integer sequences, a subgroup of the product ``Z^N``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .base import InstrumentedGroup


@dataclass(frozen=True)
class BoundedIntVec:
    prefix: Tuple[int, ...] = ()
    tail: int = 0

    def __post_init__(self):
        p = [int(v) for v in self.prefix]
        t = int(self.tail)
        while p and p[-1] == t:
            p.pop()
        object.__setattr__(self, "prefix", tuple(p))
        object.__setattr__(self, "tail", t)

    def __call__(self, i: int) -> int:
        return self.prefix[i] if i < len(self.prefix) else self.tail


def _combine(a: BoundedIntVec, b: BoundedIntVec, op) -> BoundedIntVec:
    n = max(len(a.prefix), len(b.prefix))
    return BoundedIntVec(tuple(op(a(i), b(i)) for i in range(n)), op(a.tail, b.tail))


def bvec_mul(a: BoundedIntVec, b: BoundedIntVec) -> BoundedIntVec:
    return _combine(a, b, lambda u, v: u + v)


def bvec_inv(a: BoundedIntVec) -> BoundedIntVec:
    return BoundedIntVec(tuple(-v for v in a.prefix), -a.tail)


def bvec_pow(a: BoundedIntVec, k: int) -> BoundedIntVec:
    return BoundedIntVec(tuple(k * v for v in a.prefix), k * a.tail)


def sup_norm(a: BoundedIntVec) -> int:
    return max((abs(v) for v in (*a.prefix, a.tail)), default=0)


def basis_a(n: int) -> BoundedIntVec:
    """1 at coordinate ``n``, 0 elsewhere."""
    return BoundedIntVec((0,) * n + (1,), 0)


class BoundedModel(InstrumentedGroup):
    """Bounded sequences with ``U_n = {h : h(i) = 0 for i < n}``."""

    name = "bounded"
    abelian = True
    spectrum_tag = "BoundedStar"

    def __init__(self, window: int = 32):
        self.window = window

    def identity(self):
        return BoundedIntVec()

    def mul(self, a, b):
        return bvec_mul(a, b)

    def inv(self, a):
        return bvec_inv(a)

    def pow(self, a, k):
        return bvec_pow(a, k)

    def in_basic_subgroup(self, a, n):
        return all(a(i) == 0 for i in range(n))

    def depth(self, a, cap):
        for i in range(cap):
            if a(i) != 0:
                return i
        return cap

    def render(self, a):
        body = ",".join(str(v) for v in a.prefix)
        return f"[{body}|{a.tail}...]"

    def parts(self, a, levels):
        return tuple(a(i) for i in range(self.window))

    def part_names(self, levels):
        return [f"coord@{i}" for i in range(self.window)]

    def default_probes(self):
        return [f"coord@{i}" for i in range(self.window)] + ["sup"]

    def probe(self, a, probe_ids):
        out = []
        for pid in probe_ids:
            if pid == "sup":
                v = sup_norm(a)
            elif pid.startswith("coord@"):
                v = a(int(pid[6:]))
            else:
                raise ValueError(f"unknown probe {pid!r}")
            out.append((pid, v, str(v)))
        return out
