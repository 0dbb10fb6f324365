"""Seeded property suites behind ``tapgroups selftest``.

Each suite draws its cases from its own ``random.Random`` (Mersenne Twister)
seeded with ``"<seed>:<suite>"``, so suites replay independently of each
other and across platforms.  Checks compare against small brute-force
oracles kept here, apart from the implementation.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from . import words as W
from .extrema import ext_count, extrema, is_fd_sequence, iota_injection
from .groups import (
    BoundedIntVec,
    BoundedModel,
    FinPerm,
    FinPermModel,
    FreeVecModel,
    HSymbolic,
    PadicInt,
    PadicModel,
    basis_a,
    cycle,
    delta_stability_check,
    h_bound_certificates,
    pi_n,
)
from .seminorms import (
    eta,
    eta_power_bounds,
    mountain_check,
    mu,
    random_mountain_instance,
    seminorm_axiom_check,
)
from .weights import (
    Const,
    Linear,
    Multiplier,
    Permutation,
    Weight,
    binary_slices,
    check_multiplier,
    decompose_signs,
    perm_apply,
    perm_inverse,
)

MUTANTS = ("eta-endpoint",)


# -- oracles ---------------------------------------------------------------

def naive_reduce(monoms) -> tuple:
    """Free reduction letter by letter (powers expanded)."""
    stack: List[tuple] = []
    for x, p in monoms:
        s = 1 if p > 0 else -1
        for _ in range(abs(p)):
            if stack and stack[-1] == (x, -s):
                stack.pop()
            else:
                stack.append((x, s))
    out: List[list] = []
    for x, s in stack:
        if out and out[-1][0] == x:
            out[-1][1] += s
        else:
            out.append([x, s])
    return tuple((x, p) for x, p in out)


def naive_ext(s) -> int:
    """Local extrema straight from the definition."""
    n = len(s)
    count = 0
    for i in range(n):
        left = s[i - 1] if i > 0 else None
        right = s[i + 1] if i + 1 < n else None
        nbrs = [v for v in (left, right) if v is not None]
        if all(s[i] > v for v in nbrs) or all(s[i] < v for v in nbrs):
            count += 1
    return count


def brute_core(v: W.Word, w: W.Word) -> W.Word:
    best = W.E
    for k in range(len(w) + 1):
        u = W.Word(w.monoms[:k]) if k else W.E
        tail = W.inv(u).monoms
        if len(tail) <= len(v) and (not tail or v.monoms[len(v) - len(tail):] == tail):
            best = u
    return best


def _eta_no_endpoints(w: W.Word) -> int:
    s = w.letters
    return sum(1 for i in range(1, len(s) - 1)
               if (s[i] > s[i - 1]) == (s[i] > s[i + 1]))


# -- random inputs -----------------------------------------------------------

def random_word(rng: random.Random, alphabet: int = 8, length: int = 12, power: int = 3) -> W.Word:
    raw = [(rng.randrange(alphabet), rng.choice([-1, 1]) * rng.randint(1, power))
           for _ in range(rng.randint(0, length))]
    return W.from_monoms(raw)


def random_fd(rng: random.Random, alphabet: int, length: int) -> List[int]:
    s: List[int] = []
    for _ in range(length):
        s.append(rng.choice([x for x in range(alphabet) if not s or x != s[-1]]))
    return s


def random_h(rng: random.Random, factors: int = 3, span: int = 6, size: int = 3) -> HSymbolic:
    fs = []
    for _ in range(rng.randint(0, factors)):
        z = Multiplier(tuple(rng.randint(-size, size) for _ in range(rng.randint(0, span))), 0)
        fs.append((z, rng.choice([-1, 1])))
    return HSymbolic(tuple(fs))


# -- suites ----------------------------------------------------------------

@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    violations: List[str] = field(default_factory=list)

    def check(self, ok: bool, what: str):
        if not ok and len(self.violations) < 20:
            self.violations.append(what)
        elif not ok:
            self.violations.append("")


def suite_words(rng, cases, res, eta_fn):
    for _ in range(cases):
        a, b, c = (random_word(rng) for _ in range(3))
        res.cases += 1
        res.check(W.mul(W.mul(a, b), c) == W.mul(a, W.mul(b, c)), f"associativity {a} {b} {c}")
        res.check(W.mul(a, W.inv(a)) == W.E and W.mul(W.E, a) == a, f"inverse/identity {a}")
        res.check(W.mul(a, b).monoms == naive_reduce(a.monoms + b.monoms), f"mul oracle {a} {b}")
        res.check(W.cancellation_core(a, b) == brute_core(a, b), f"core oracle {a} {b}")
        n = rng.randint(0, 6)
        res.check(W.pow(a, n) == W.product([a] * n), f"pow {a}^{n}")
        res.check(W.parse_word(W.format_word(a)) == a, f"literal round trip {a}")


def suite_extrema(rng, cases, res, eta_fn):
    for _ in range(cases):
        s = random_fd(rng, 6, rng.randint(1, 9))
        res.cases += 1
        res.check(ext_count(s) == naive_ext(s), f"ext count {s}")
        k = rng.randint(1, len(s))
        sel = sorted(rng.sample(range(len(s)), k))
        sub = [s[i] for i in sel]
        if not is_fd_sequence(sub):
            continue
        res.check(ext_count(sub) <= ext_count(s), f"subsequence extrema {s} {sel}")
        iota = iota_injection(s, sel)
        ext = extrema(s).ext
        sub_ext = extrema(sub).ext
        img = [iota[n] for n in sorted(sub_ext)]
        res.check(len(set(img)) == len(img) and all(i in ext for i in img), f"iota {s} {sel}")


def suite_seminorms(rng, cases, res, eta_fn):
    mu_x = lambda w: mu(0, w)
    for _ in range(cases):
        a, b = random_word(rng), random_word(rng)
        res.cases += 1
        res.check(eta_fn(a) == naive_ext(a.letters), f"eta oracle {a}")
        for name, nu in (("eta", eta_fn), ("mu0", mu_x)):
            rep = seminorm_axiom_check(nu, a, b)
            res.check(rep.passed, f"{name} axioms {a} {b}")
        rep = eta_power_bounds(a, rng.randint(1, 20)) if a else None
        if rep is not None:
            res.check(rep.holds, f"power bound {a}")


def suite_mountain(rng, cases, res, eta_fn):
    for _ in range(max(1, cases // 10) if cases else 0):
        inst = random_mountain_instance(rng, rng.randint(0, 6))
        res.cases += 1
        res.check(mountain_check(inst).verdict, f"mountain {inst}")


def _random_weight(rng) -> Weight:
    prefix = tuple(rng.randint(1, 5) for _ in range(rng.randint(0, 4)))
    tail = rng.choice([Const(rng.randint(1, 5)), Linear(rng.randint(0, 2), rng.randint(1, 3))])
    return Weight(prefix, tail)


def suite_weights(rng, cases, res, eta_fn):
    for _ in range(cases):
        res.cases += 1
        z = Multiplier(tuple(rng.randint(-4, 4) for _ in range(rng.randint(0, 8))), rng.randint(-2, 2))
        plus, minus = decompose_signs(z)
        res.check(all(plus(n) - minus(n) == z(n) and plus(n) >= 0 <= minus(n) for n in range(12)),
                  f"sign split {z}")
        nz = Multiplier(tuple(abs(v) for v in z.prefix), abs(z.tail))
        slices = binary_slices(nz, 4)
        res.check(all(sum(s(n) for s in slices) == nz(n) for n in range(12)), f"binary slices {nz}")
        f = _random_weight(rng)
        brute = all(abs(z(n)) <= f(n) for n in range(200))
        res.check(check_multiplier(z, f) == brute, f"check_multiplier {z} {f}")
        table = list(range(rng.randint(0, 8)))
        rng.shuffle(table)
        phi = Permutation.from_table(table)
        inv = perm_inverse(phi)
        res.check(all(perm_apply(inv, perm_apply(phi, n)) == n for n in range(12)), f"perm inverse {table}")


def _random_in(model, rng, n):
    """Random element of ``U_n`` (``n = 0`` gives an arbitrary element)."""
    if isinstance(model, FreeVecModel):
        el = model.embed(random_h(rng))
        coords = tuple(W.E if i < n else c for i, c in enumerate(el.coords))
        return type(el)(coords)
    if isinstance(model, BoundedModel):
        prefix = tuple(0 if i < n else rng.randint(-5, 5) for i in range(rng.randint(n, n + 5)))
        return BoundedIntVec(prefix, 0 if n > len(prefix) else rng.randint(-3, 3))
    if isinstance(model, PadicModel):
        return PadicInt(rng.randint(-50, 50) * model.p ** n, model.p)
    size = rng.randint(0, 6)
    moved = list(range(n, n + size))
    shuffled = moved[:]
    rng.shuffle(shuffled)
    return FinPerm.from_mapping(dict(zip(moved, shuffled)))


def suite_groups(rng, cases, res, eta_fn):
    models = [FreeVecModel(8), BoundedModel(8), PadicModel(3), FinPermModel(8)]
    for _ in range(cases):
        for model in models:
            res.cases += 1
            a, b, c = (_random_in(model, rng, 0) for _ in range(3))
            mul, inv, e = model.mul, model.inv, model.identity()
            res.check(model.equal(mul(mul(a, b), c), mul(a, mul(b, c))), f"{model.name} associativity")
            res.check(model.equal(mul(a, e), a) and model.is_identity(mul(a, inv(a))),
                      f"{model.name} identity/inverse")
            n = rng.randint(0, 5)
            u, v = _random_in(model, rng, n), _random_in(model, rng, n)
            res.check(model.in_basic_subgroup(u, n) and model.in_basic_subgroup(mul(u, v), n)
                      and model.in_basic_subgroup(inv(u), n), f"{model.name} U_{n} subgroup")
            if model.in_basic_subgroup(u, n + 1):
                res.check(model.in_basic_subgroup(u, n), f"{model.name} nested")
        h = random_h(rng)
        cert = h_bound_certificates(h, 50, range(6))
        res.check(cert.consistent, f"H certificates {h}")
        res.check(all(delta_stability_check(h, j, 30) for j in range(9)), f"delta stability {h}")
    if cases:
        res.cases += 1
        res.check(all(pi_n(n) == cycle(list(range(n + 2))) for n in range(101)), "pi_n cycle")


def suite_lab(rng, cases, res, eta_fn):
    from .lab.engine import cauchy_verdict, linear_null_shortcut, partial_products
    from .lab.spec import ExperimentSpec, random_multiplier, random_table_permutation
    from .lab.witness import ABS, technical_check, unbounded_witness

    for _ in range(max(1, cases // 50) if cases else 0):
        res.cases += 1
        M = 16
        z = random_multiplier(rng, 50, rng.randint(1, 8), M)
        phi = random_table_permutation(rng, rng.randint(1, M // 2))
        for group, kind in (("padic", "powers"), ("bounded", "basis")):
            base = ExperimentSpec(group, kind, multiplier=z, horizon=M, window=6, levels=6)
            t0 = partial_products(base)
            # same terms, same exponents, new order
            z_phi = Multiplier(tuple(z(perm_apply(phi, n)) for n in range(M)), 0)
            t1 = partial_products(base.with_(permutation=phi, multiplier=z_phi))
            p0 = t0.model.parts(t0.final, base.levels)
            p1 = t1.model.parts(t1.final, base.levels)
            agree = all(p0[k] == p1[k] for k in range(len(p0)) if t0.stabilized(k) and t1.stabilized(k))
            res.check(agree, f"rearrangement {group} {z} {phi}")
            shortcut = linear_null_shortcut(t1.sequence, base)
            res.check(shortcut.kind == cauchy_verdict(t1).kind, f"null shortcut {group} {z} {phi}")
        f = Weight((), Linear(1, 1))
        w = unbounded_witness(f, basis_a, ABS, rng.randint(0, 6))
        res.check(technical_check(w, None, basis_a, ABS), "unbounded witness re-check")


SUITES: Dict[str, Callable] = {
    "words": suite_words,
    "extrema": suite_extrema,
    "seminorms": suite_seminorms,
    "mountain": suite_mountain,
    "weights": suite_weights,
    "groups": suite_groups,
    "lab": suite_lab,
}


def run_selftest(seed: int, cases: int, mutant: Optional[str] = None) -> List[SuiteResult]:
    if mutant is not None and mutant not in MUTANTS:
        raise ValueError(f"unknown mutant {mutant!r}")
    eta_fn = _eta_no_endpoints if mutant == "eta-endpoint" else eta
    out = []
    for name, suite in SUITES.items():
        res = SuiteResult(name)
        suite(random.Random(f"{seed}:{name}"), cases, res, eta_fn)
        out.append(res)
    return out
