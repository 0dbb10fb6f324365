"""The integers with the p-adic topology, basic subgroups ``p^n Z``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .base import InstrumentedGroup

INFINITY = float("inf")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def valuation(a: int, p: int) -> Union[int, float]:
    """Exponent of ``p`` in ``a``; ``INFINITY`` for 0."""
    if a == 0:
        return INFINITY
    a = abs(a)
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


@dataclass(frozen=True)
class PadicInt:
    value: int
    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")


def v_p(a: PadicInt) -> Union[int, float]:
    return valuation(a.value, a.p)


def padic_in_Un(a: PadicInt, n: int) -> bool:
    return a.value % a.p ** n == 0


def padic_basis_sequence(n: int, p: int) -> PadicInt:
    return PadicInt(p ** n, p)


def render_padic(a: PadicInt) -> str:
    v = v_p(a)
    return f"{a.value}(v_p={'inf' if v == INFINITY else v})"


class PadicModel(InstrumentedGroup):
    name = "padic"
    abelian = True
    # countable, so no f-productive sequences at all
    spectrum_tag = "Empty"

    def __init__(self, p: int = 3):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def identity(self):
        return PadicInt(0, self.p)

    def mul(self, a, b):
        return PadicInt(a.value + b.value, self.p)

    def inv(self, a):
        return PadicInt(-a.value, self.p)

    def pow(self, a, k):
        return PadicInt(k * a.value, self.p)

    def in_basic_subgroup(self, a, n):
        return padic_in_Un(a, n)

    def depth(self, a, cap):
        v = v_p(a)
        return cap if v >= cap else int(v)

    def render(self, a):
        return render_padic(a)

    def parts(self, a, levels):
        return tuple(a.value % self.p ** k for k in range(1, levels + 1))

    def part_names(self, levels):
        return [f"mod{self.p}^{k}" for k in range(1, levels + 1)]

    def default_probes(self):
        return ["val"]

    def probe(self, a, probe_ids):
        out = []
        for pid in probe_ids:
            if pid == "val":
                v = v_p(a)
                out.append((pid, "inf" if v == INFINITY else v, render_padic(a)))
            elif pid == "value":
                out.append((pid, a.value, str(a.value)))
            else:
                raise ValueError(f"unknown probe {pid!r}")
        return out
