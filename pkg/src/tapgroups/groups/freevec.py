"""The product ``G = F(N)^N`` and its subgroup ``H`` generated by the ``g_z``.

``g_z(i) = 0^z(0) 1^z(1) ... i^z(i)``.  Elements of ``H`` are kept
symbolically as a list of ``(z, eps)`` factors and can be evaluated exactly
at any coordinate.  For the lab, elements of ``G`` are handled through a
finite coordinate window ``0..I-1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from .. import words as W
from ..seminorms import delta, eta, mu
from ..weights import Multiplier
from .base import InstrumentedGroup, Probe

__all__ = [
    "y",
    "g_z_coord",
    "HSymbolic",
    "g",
    "h_eval",
    "HBoundCertificate",
    "h_bound_certificates",
    "eta_certificate",
    "mu_certificate",
    "t_of",
    "delta_stability_check",
    "ShortCorePowerReport",
    "PreconditionError",
    "short_core_power_bounds",
    "FreeVecElement",
    "FreeVecModel",
    "h_window",
]


def y(n: int) -> Multiplier:
    """The indicator sequence of ``{n}``."""
    return Multiplier((0,) * n + (1,), 0)


def g_z_coord(z: Multiplier, i: int) -> W.Word:
    limit = i + 1
    bound = z.support_bound()
    if bound is not None:
        limit = min(limit, bound)
    return W.from_monoms((n, z(n)) for n in range(limit))


@dataclass(frozen=True)
class HSymbolic:
    """``g_{z_0}^{eps_0} g_{z_1}^{eps_1} ...`` as a tuple of factors."""

    factors: Tuple[Tuple[Multiplier, int], ...] = ()

    def __post_init__(self):
        fs = tuple((z, int(e)) for z, e in self.factors)
        for _, e in fs:
            if e not in (-1, 1):
                raise ValueError("exponents must be +1 or -1")
        object.__setattr__(self, "factors", fs)

    def __mul__(self, other: "HSymbolic") -> "HSymbolic":
        return HSymbolic(self.factors + other.factors)

    def inverse(self) -> "HSymbolic":
        return HSymbolic(tuple((z, -e) for z, e in reversed(self.factors)))

    def __pow__(self, k: int) -> "HSymbolic":
        if k < 0:
            return self.inverse() ** (-k)
        return HSymbolic(self.factors * k)

    def __call__(self, i: int) -> W.Word:
        return h_eval(self, i)


def g(z: Multiplier) -> HSymbolic:
    return HSymbolic(((z, 1),))


def h_eval(h: HSymbolic, i: int) -> W.Word:
    out = W.E
    for z, e in h.factors:
        c = g_z_coord(z, i)
        out = W.mul(out, c if e == 1 else W.inv(c))
    return out


def eta_certificate(h: HSymbolic, multiplicity: int = 1) -> int:
    """Upper bound for ``eta(h(i))`` valid at every coordinate ``i``.

    Each ``g_z(i)`` has increasing support, hence at most 2 extrema.
    """
    return 2 * len(h.factors) * abs(multiplicity)


def mu_certificate(h: HSymbolic, letter: int, multiplicity: int = 1) -> int:
    return abs(multiplicity) * sum(abs(z(letter)) for z, _ in h.factors)


@dataclass(frozen=True)
class HBoundCertificate:
    eta_bound: int
    mu_bounds: Dict[int, int]
    eta_observed: int
    mu_observed: Dict[int, int]

    @property
    def consistent(self) -> bool:
        return self.eta_observed <= self.eta_bound and all(
            self.mu_observed[j] <= self.mu_bounds[j] for j in self.mu_bounds
        )


def h_bound_certificates(h: HSymbolic, window: int, letters: Iterable[int]) -> HBoundCertificate:
    letters = list(letters)
    coords = [h_eval(h, i) for i in range(window)]
    return HBoundCertificate(
        eta_bound=eta_certificate(h),
        mu_bounds={j: mu_certificate(h, j) for j in letters},
        eta_observed=max((eta(w) for w in coords), default=0),
        mu_observed={j: max((mu(j, w) for w in coords), default=0) for j in letters},
    )


def t_of(a, limit: int) -> Optional[int]:
    """First coordinate ``i < limit`` with ``a(i) != e``; ``None`` if not found.

    ``a`` is an :class:`HSymbolic` or a :class:`FreeVecElement`.
    """
    if isinstance(a, FreeVecElement):
        for i, w in enumerate(a.coords[:limit]):
            if w:
                return i
        return None
    for i in range(limit):
        if h_eval(a, i):
            return i
    return None


def delta_stability_check(h: HSymbolic, j: int, window: int) -> bool:
    """``delta_j(h(i))`` is 0 below ``j`` and constant from ``j`` on."""
    vals = [delta(j, h_eval(h, i)) for i in range(window)]
    if any(vals[i] != 0 for i in range(min(j, window))):
        return False
    if j < window:
        return all(v == vals[j] for v in vals[j:])
    return True


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class ShortCorePowerReport:
    t_a: int
    power: W.Word
    lead_mu: int
    lead_ok: bool
    other_ok: bool

    @property
    def passed(self) -> bool:
        return self.lead_ok and self.other_ok


def short_core_power_bounds(a: HSymbolic, z: int, i: int, window: Optional[int] = None) -> ShortCorePowerReport:
    """Bounds on ``mu`` of ``a^z(i)`` when every coordinate has a short core.

    Checks that the lead letter ``t_a`` carries power at least ``z`` and
    that no other letter's ``mu`` grows past its value on ``a(i)``.
    """
    if z < 1:
        raise ValueError("z must be a positive integer")
    window = max(window or 0, i + 1)
    coords = [h_eval(a, k) for k in range(window)]
    for k, w in enumerate(coords):
        if len(W.cyclic_conjugate(w)) > 1:
            raise PreconditionError(f"coordinate {k} has cyclic core longer than one monom")
    t = next((k for k, w in enumerate(coords) if w), None)
    if t is None:
        raise PreconditionError("a is trivial on the window")
    if i < t:
        raise PreconditionError(f"coordinate {i} precedes t_a={t}")
    ai = coords[i]
    pw = W.pow(ai, z)
    lead = mu(t, pw)
    others = {x for x in ai.letters if x != t}
    other_ok = all(mu(x, pw) <= mu(x, ai) for x in others)
    return ShortCorePowerReport(t, pw, lead, lead >= z, other_ok)


@dataclass(frozen=True)
class FreeVecElement:
    """Coordinates ``0..I-1`` of an element of ``G``."""

    coords: Tuple[W.Word, ...]

    @property
    def window(self) -> int:
        return len(self.coords)

    def __call__(self, i: int) -> W.Word:
        return self.coords[i]

    @classmethod
    def from_h(cls, h: HSymbolic, window: int) -> "FreeVecElement":
        return cls(h_window(h, window))


def _factor_window(z: Multiplier, window: int) -> List[W.Word]:
    # g_z(i) = g_z(i-1) * i^z(i), built incrementally
    out = []
    w = W.E
    prefix = z.prefix
    bound = z.support_bound()
    top = window if bound is None else min(window, bound)
    for i in range(top):
        p = prefix[i] if i < len(prefix) else z.tail
        if p:
            w = W.mul(w, W.Word(((i, p),)))
        out.append(w)
    out.extend([w] * (window - top))
    return out


def h_window(h: HSymbolic, window: int) -> Tuple[W.Word, ...]:
    """``(h(0), ..., h(window-1))``; same values as :func:`h_eval`."""
    if not h.factors:
        return (W.E,) * window
    cols = []
    for z, e in h.factors:
        col = _factor_window(z, window)
        cols.append(col if e == 1 else [W.inv(w) for w in col])
    if len(cols) == 1:
        return tuple(cols[0])
    return tuple(W.product(ws) for ws in zip(*cols))


class FreeVecModel(InstrumentedGroup):
    """Window of ``F(N)^N`` with ``U_n = {g : g(i) = e for i < n}``."""

    name = "H"
    abelian = False
    spectrum_tag = "Full"

    def __init__(self, window: int):
        if window < 1:
            raise ValueError("window must be positive")
        self.window = window
        self._e = FreeVecElement((W.E,) * window)

    def identity(self):
        return self._e

    def embed(self, h: HSymbolic) -> FreeVecElement:
        return FreeVecElement.from_h(h, self.window)

    def mul(self, a, b):
        # coordinates below the first nontrivial one of b are copied
        bc = b.coords
        t = next((i for i, v in enumerate(bc) if v.monoms), len(bc))
        return FreeVecElement(a.coords[:t] + tuple(map(W.mul, a.coords[t:], bc[t:])))

    def inv(self, a):
        return FreeVecElement(tuple(W.inv(u) for u in a.coords))

    def pow(self, a, k):
        return FreeVecElement(tuple(W.pow(u, k) for u in a.coords))

    def in_basic_subgroup(self, a, n):
        return not any(a.coords[: min(n, self.window)])

    def depth(self, a, cap):
        t = t_of(a, self.window)
        d = self.window if t is None else t
        return min(d, cap)

    def render(self, a):
        return "\n".join(f"[{i}]={W.format_word(w)}" for i, w in enumerate(a.coords))

    def parts(self, a, levels):
        return a.coords

    def part_names(self, levels):
        return [f"coord@{i}" for i in range(self.window)]

    def render_part(self, part):
        return W.format_word(part)

    def default_probes(self):
        return [f"eta@{i}" for i in range(self.window)]

    def probe(self, a, probe_ids):
        out: List[Probe] = []
        for pid in probe_ids:
            fn, _, at = pid.partition("@")
            i = int(at)
            w = a.coords[i]
            if fn == "eta":
                val = eta(w)
            elif fn.startswith("mu:"):
                val = mu(int(fn[3:]), w)
            elif fn.startswith("delta:"):
                val = delta(int(fn[6:]), w)
            elif fn == "len":
                val = len(w)
            else:
                raise ValueError(f"unknown probe {pid!r}")
            out.append((pid, val, W.format_word(w)))
        return out
