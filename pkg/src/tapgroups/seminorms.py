"""Word functionals: max power at a letter, extrema count, exponent sums.

Also holds the seminorm axiom checker, the power bounds for the extrema
count, and the mountain-condition checker with its instance generator.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

from .extrema import ext_count, is_subsequence
from .words import Word, cyclic_conjugate, from_monoms, mul, inv, pow, product

__all__ = [
    "Seminorm",
    "mu",
    "eta",
    "delta",
    "ETA",
    "mu_seminorm",
    "parse_seminorm",
    "AxiomReport",
    "seminorm_axiom_check",
    "PowerBoundReport",
    "eta_power_bounds",
    "MountainInstance",
    "MountainReport",
    "MountainHypothesisError",
    "mountain_check",
    "random_mountain_instance",
]


def mu(x: int, w: Word) -> int:
    """Largest ``|power|`` of a monom of ``w`` in letter ``x`` (0 if none)."""
    best = 0
    for letter, power in w.monoms:
        if letter == x:
            a = -power if power < 0 else power
            if a > best:
                best = a
    return best


def eta(w: Word) -> int:
    """Number of local extrema of the letter sequence of ``w``."""
    return ext_count(w.letters)


def delta(j: int, w: Word) -> int:
    """Exponent sum of letter ``j`` in ``w``."""
    return sum(p for x, p in w.monoms if x == j)


@dataclass(frozen=True)
class Seminorm:
    name: str
    eval: Callable[[Word], int] = field(compare=False)

    def __call__(self, w: Word) -> int:
        return self.eval(w)


ETA = Seminorm("eta", eta)


def mu_seminorm(x: int) -> Seminorm:
    return Seminorm(f"mu:{x}", lambda w: mu(x, w))


def parse_seminorm(text: str):
    """``eta`` | ``mu:<letter>`` | ``delta:<j>``.

    ``delta`` is returned as a plain functional; it is a homomorphism to the
    integers and can be negative, so it is not a :class:`Seminorm`.
    """
    name, _, arg = text.partition(":")
    if name == "eta" and not arg:
        return ETA
    if name == "mu" and arg.isdigit():
        return mu_seminorm(int(arg))
    if name == "delta" and arg.isdigit():
        j = int(arg)
        return Seminorm(f"delta:{j}", lambda w: delta(j, w))
    raise ValueError(f"unknown functional {text!r}; expected eta, mu:<x> or delta:<j>")


@dataclass(frozen=True)
class AxiomReport:
    nu_a: int
    nu_b: int
    nu_ab: int
    nu_inv_a: int
    subadditive: bool
    symmetric: bool
    reverse_triangle: bool

    @property
    def passed(self) -> bool:
        return self.subadditive and self.symmetric and self.reverse_triangle


def seminorm_axiom_check(nu: Callable[[Word], int], a: Word, b: Word) -> AxiomReport:
    na, nb = nu(a), nu(b)
    nab = nu(mul(a, b))
    nia = nu(inv(a))
    return AxiomReport(
        nu_a=na,
        nu_b=nb,
        nu_ab=nab,
        nu_inv_a=nia,
        subadditive=nab <= na + nb,
        symmetric=nia == na,
        reverse_triangle=abs(na - nb) <= nab,
    )


@dataclass(frozen=True)
class PowerBoundReport:
    core_length: int
    branch: str  # "growth" when the cyclic conjugate has length > 1, else "stable"
    eta_w: int
    eta_power: int
    holds: bool

    @property
    def lower_bound_ok(self) -> Optional[bool]:
        return self.holds if self.branch == "growth" else None

    @property
    def exact_when_short_core(self) -> Optional[bool]:
        return self.holds if self.branch == "stable" else None


def eta_power_bounds(w: Word, n: int) -> PowerBoundReport:
    if n < 1:
        raise ValueError("n must be positive")
    lc = len(cyclic_conjugate(w))
    ew = eta(w)
    ewn = eta(pow(w, n))
    if lc > 1:
        return PowerBoundReport(lc, "growth", ew, ewn, ewn >= 2 * n)
    return PowerBoundReport(lc, "stable", ew, ewn, ewn == ew)


class MountainHypothesisError(ValueError):
    pass


@dataclass(frozen=True)
class MountainInstance:
    words: Tuple[Word, ...]
    peaks: Tuple[int, ...]

    def __post_init__(self):
        if len(self.words) != len(self.peaks) or not self.words:
            raise ValueError("need one peak letter per word and at least one word")

    @property
    def m(self) -> int:
        return len(self.words) - 1

    def hypothesis_violations(self) -> List[str]:
        out = []
        ws, xs = self.words, self.peaks
        if mu(xs[0], ws[0]) <= 0:
            out.append("peak 0 absent from word 0")
        for j, x in enumerate(xs):
            top = mu(x, ws[j])
            for k, w in enumerate(ws):
                if k != j and not top > 2 * mu(x, w):
                    out.append(f"mu_{x}(w_{j})={top} not > 2*mu_{x}(w_{k})={2 * mu(x, w)}")
        return out


@dataclass(frozen=True)
class MountainReport:
    product: Word
    n_m: Optional[int]  # 1-based position in the product, None if no candidate
    clause_range: bool
    clause_peak: bool
    clause_suffix: bool
    clause_subsequence: bool

    @property
    def verdict(self) -> bool:
        return self.clause_range and self.clause_peak and self.clause_suffix and self.clause_subsequence


def _is_final_subword(tail: Tuple, w: Word) -> bool:
    if not tail:
        return True
    return len(tail) <= len(w.monoms) and w.monoms[len(w.monoms) - len(tail):] == tail


def mountain_check(inst: MountainInstance) -> MountainReport:
    """Locate the last peak of the product and verify the four clauses.

    Scans the product right to left for a monom in the last peak letter
    whose doubled power beats the peak height of the last word, and returns
    the first position at which all clauses hold.
    """
    bad = inst.hypothesis_violations()
    if bad:
        raise MountainHypothesisError("; ".join(bad))
    v = product(inst.words)
    xm = inst.peaks[-1]
    wm = inst.words[-1]
    height = mu(xm, wm)
    monoms = v.monoms
    letters = v.letters
    fallback = None
    for pos in range(len(monoms), 0, -1):
        x, z = monoms[pos - 1]
        if x != xm:
            continue
        peak_ok = 2 * abs(z) > height
        suffix_ok = _is_final_subword(monoms[pos:], wm)
        subseq_ok = is_subsequence(inst.peaks, letters[:pos])
        rep = MountainReport(v, pos, True, peak_ok, suffix_ok, subseq_ok)
        if rep.verdict:
            return rep
        if fallback is None:
            fallback = rep
    if fallback is not None:
        return fallback
    return MountainReport(v, None, False, False, False, False)


def random_mountain_instance(rng: random.Random, m: int, alphabet: int = 0,
                             pad: int = 3, low: int = 3, max_tries: int = 1000) -> MountainInstance:
    """Random instance satisfying the mountain hypothesis.

    Each word gets one tall monom in its own peak letter flanked by short
    random padding with small powers; the hypothesis is re-verified and the
    instance resampled on failure.
    """
    alphabet = max(alphabet, m + 3)
    for _ in range(max_tries):
        peaks = rng.sample(range(alphabet), m + 1)
        raws = []
        for j in range(m + 1):
            left = [(rng.randrange(alphabet), rng.choice([-1, 1]) * rng.randint(1, low))
                    for _ in range(rng.randint(0, pad))]
            right = [(rng.randrange(alphabet), rng.choice([-1, 1]) * rng.randint(1, low))
                     for _ in range(rng.randint(0, pad))]
            raws.append((left, right))
        # other words carry each peak letter with power at most `low` (merging can double it)
        height = 4 * (2 * low) + 1
        words = []
        for j, (left, right) in enumerate(raws):
            tall = (peaks[j], rng.choice([-1, 1]) * (height + rng.randint(0, 3 * low)))
            words.append(from_monoms(left + [tall] + right))
        inst = MountainInstance(tuple(words), tuple(peaks))
        if not inst.hypothesis_violations():
            return inst
    raise RuntimeError("could not generate a valid mountain instance")
