"""Witnesses that a sequence in a subgroup of a product ``D^I`` of discrete
groups is not productive.

A :class:`Witness` carries indices ``n_m``, exponents ``z_m`` and
coordinates ``i_m``.  :func:`technical_check` re-verifies, by direct
evaluation, the three condition families

* ``|z_m| <= g(m)``,
* ``a_m(i_k) = e`` for ``k`` in ``M`` with ``k < m``,
* ``nu(prod_{j<=m} a_j^{z_j}(i_m)) >= m`` for ``m`` in ``M``,

where ``a_m`` is the ``n_m``-th term of the sequence.
"""
from __future__ import annotations

import operator
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .. import words as W
from ..extrema import zigzag_enumeration
from ..groups.bounded import BoundedIntVec
from ..groups.freevec import HSymbolic, eta_certificate, h_window, mu_certificate
from ..seminorms import ETA, Seminorm, mu
from ..weights import F_OMEGA, OMEGA, Weight, weight_at


class SearchExhausted(RuntimeError):
    """The search limits were too small to decide."""


@dataclass(frozen=True)
class NotFound:
    reason: str


@dataclass(frozen=True)
class Coordinates:
    """The discrete coordinate group ``D``."""

    name: str
    identity: Any
    mul: Callable[[Any, Any], Any]
    pow: Callable[[Any, int], Any]
    is_identity: Callable[[Any], bool]


FREE = Coordinates("F", W.E, W.mul, W.pow, lambda w: not w)
INTEGERS = Coordinates("Z", 0, operator.add, lambda a, k: a * k, lambda a: a == 0)

ABS = Seminorm("abs", abs)


def coordinates_for(term) -> Coordinates:
    if isinstance(term, HSymbolic):
        return FREE
    if isinstance(term, BoundedIntVec):
        return INTEGERS
    raise TypeError(f"no coordinate group for {type(term).__name__}")


def stable_from(term) -> Optional[int]:
    """An index from which ``term(i)`` no longer depends on ``i``."""
    if isinstance(term, BoundedIntVec):
        return len(term.prefix)
    bounds = [z.support_bound() for z, _ in term.factors]
    if any(b is None for b in bounds):
        return None
    return max([b - 1 for b in bounds] + [0])


def _certificate(term, z: int, nu: Seminorm) -> int:
    if isinstance(term, HSymbolic):
        if nu.name == "eta":
            return eta_certificate(term, z)
        if nu.name.startswith("mu:"):
            return mu_certificate(term, int(nu.name[3:]), z)
    raise SearchExhausted(f"no certificate for {nu.name} on {type(term).__name__}")


def sup_bound(factors: Sequence[Tuple[Any, int]], nu: Seminorm, D: Coordinates) -> int:
    """An upper bound for ``nu`` of ``prod term^z`` at every coordinate.

    Exact (a maximum over finitely many coordinates) when every term is
    eventually constant in the coordinate; otherwise a triangle-inequality
    certificate.
    """
    live = [(t, z) for t, z in factors if z]
    if not live:
        return 0
    ends = [stable_from(t) for t, _ in live]
    if any(s is None for s in ends):
        return sum(_certificate(t, z, nu) for t, z in live)
    best = 0
    for i in range(max(ends) + 1):
        acc = D.identity
        for t, z in live:
            acc = D.mul(acc, D.pow(t(i), z))
        best = max(best, nu(acc))
    return best


@dataclass(frozen=True)
class Witness:
    indices: Tuple[int, ...]
    z: Tuple[int, ...]
    coords: Tuple[int, ...]
    members: Tuple[int, ...]
    g_values: Tuple[Any, ...]
    nu_values: Tuple[int, ...]
    kind: str = "unbounded"

    @property
    def depth(self) -> int:
        return len(self.indices) - 1


class _Memo:
    def __init__(self, seq):
        self.seq = seq
        self.cache: Dict[int, Any] = {}

    def __call__(self, n):
        t = self.cache.get(n)
        if t is None:
            t = self.cache[n] = self.seq(n)
        return t


def _product_at(terms: Sequence[Any], zs: Sequence[int], i: int, D: Coordinates):
    acc = D.identity
    for t, z in zip(terms, zs):
        if z:
            acc = D.mul(acc, D.pow(t(i), z))
    return acc


def technical_report(w: Witness, g: Optional[Weight], sequence, nu, D: Optional[Coordinates] = None) -> List[str]:
    """Failed conditions, as readable strings; empty when all hold."""
    terms = [sequence(n) for n in w.indices]
    D = D or coordinates_for(terms[0])
    members = set(w.members)
    failures = []
    for m, zm in enumerate(w.z):
        bound = weight_at(g, m) if g is not None else w.g_values[m]
        if bound is not OMEGA and abs(zm) > bound:
            failures.append(f"(i_{m}) |z_{m}|={abs(zm)} > g({m})={bound}")
    for m, t in enumerate(terms):
        for k in w.members:
            if k < m and not D.is_identity(t(w.coords[k])):
                failures.append(f"(ii_{m}) a_{m}(i_{k}) != e at coordinate {w.coords[k]}")
    for m in sorted(members):
        v = nu(_product_at(terms[: m + 1], w.z[: m + 1], w.coords[m], D))
        if v < m:
            failures.append(f"(iii_{m}) nu={v} < {m}")
    return failures


def technical_check(w: Witness, g: Optional[Weight], sequence, nu, D: Optional[Coordinates] = None) -> bool:
    return not technical_report(w, g, sequence, nu, D)


def _z_candidates(bound, z_cap: int) -> List[int]:
    if bound is OMEGA:
        out, z = [], 1
        while z <= z_cap:
            out.append(z)
            z *= 2
        return out
    return [bound]


def unbounded_witness(f: Weight, sequence, nu: Seminorm, depth: int, *, n_limit: int = 1000,
                      coord_limit: int = 1000, z_cap: int = 1 << 20,
                      D: Optional[Coordinates] = None):
    """Inductive search for a witness that ``sequence`` is not ``f``-productive.

    Step ``m`` takes the exact bound ``s`` of the running product, then the
    least index ``n_m`` above every earlier index and above every term
    nontrivial at an earlier chosen coordinate, with some coordinate ``i``
    and exponent ``|z| <= f(n_m)`` giving ``nu(a_n(i)^z) >= s + m``.

    Returns a :class:`Witness`, or :class:`NotFound` when ``f`` is bounded
    and the search fails.  Raises :class:`SearchExhausted` otherwise.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    terms = _Memo(sequence)
    D = D or coordinates_for(terms(0))
    idx, zs, cs = [0], [0], [0]
    factors: List[Tuple[Any, int]] = [(terms(0), 0)]
    max_f = -1

    def scan_f(i):
        top = -1
        for n in range(n_limit):
            if not D.is_identity(terms(n)(i)):
                top = n
        return top

    max_f = scan_f(0)
    for m in range(1, depth + 1):
        r = sup_bound(factors, nu, D) + m
        lower = max(idx[-1], max_f) + 1
        found = None
        for n in range(lower, n_limit):
            h = terms(n)
            cands = _z_candidates(weight_at(f, n), z_cap)
            top = coord_limit
            sf = stable_from(h)
            if sf is not None:
                top = min(top, sf + 1)
            for i in range(top):
                c = h(i)
                if D.is_identity(c):
                    continue
                z = next((z for z in cands if nu(D.pow(c, z)) >= r), None)
                if z is not None:
                    found = (n, i, z)
                    break
            if found:
                break
        if found is None:
            if f.is_bounded():
                return NotFound(f"no index below {n_limit} reaches nu >= {r} with a bounded weight")
            raise SearchExhausted(f"step {m}: no index below {n_limit} reaches nu >= {r}")
        n, i, z = found
        idx.append(n)
        cs.append(i)
        zs.append(z)
        factors.append((terms(n), z))
        max_f = max(max_f, scan_f(i))
    g_values = tuple(weight_at(f, n) for n in idx)
    members = tuple(range(depth + 1))
    w = _finish(idx, zs, cs, members, g_values, terms, nu, D, "unbounded")
    failures = technical_report(w, None, terms, nu, D)
    if failures:
        raise RuntimeError(f"constructed witness failed re-verification: {failures[0]}")
    return w


def _finish(idx, zs, cs, members, g_values, terms, nu, D, kind) -> Witness:
    chosen = [terms(n) for n in idx]
    nu_values = tuple(nu(_product_at(chosen[: m + 1], zs[: m + 1], cs[m], D)) for m in range(len(idx)))
    return Witness(tuple(idx), tuple(zs), tuple(cs), tuple(members), tuple(g_values), nu_values, kind)


@dataclass
class CaseReport:
    """Outcome of the case analysis for a sequence in ``H``.

    ``case`` is ``"1"`` (a coordinate with cyclic core of length >= 2),
    ``"2a"`` (a repeated lead coordinate ``t``, so not a null sequence) or
    ``"2b"`` (thin lead coordinates; ``witness`` is the zig-zag witness).
    """

    case: str
    detail: Dict[str, Any] = field(default_factory=dict)
    witness: Optional[Witness] = None


def tap_witness_for_H(sequence, depth: int, *, window: Optional[int] = None,
                      n_limit: Optional[int] = None, repeat_threshold: int = 4,
                      case1_depth: int = 6) -> CaseReport:
    """Witness that a sequence of :class:`HSymbolic` is not unconditionally
    ``f_omega``-productive, following the case analysis on cyclic cores and
    lead coordinates ``t``."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    n_limit = n_limit or 4 * (depth + 2)
    window = window or n_limit + 1
    terms = _Memo(sequence)
    cols = [h_window(terms(n), window) for n in range(n_limit)]

    for n, col in enumerate(cols):
        for i, w in enumerate(col):
            core = len(W.cyclic_conjugate(w))
            if core >= 2:
                detail = {"n": n, "i": i, "core_length": core}
                try:
                    wit = unbounded_witness(F_OMEGA, terms, ETA, min(depth, case1_depth),
                                            n_limit=n_limit, coord_limit=window, D=FREE)
                except SearchExhausted as exc:
                    detail["search"] = str(exc)
                    wit = None
                return CaseReport("1", detail, wit if isinstance(wit, Witness) else None)

    t_values = []
    for n, col in enumerate(cols):
        t = next((i for i, w in enumerate(col) if w), None)
        if t is None:
            raise SearchExhausted(f"term {n} is trivial on the window of {window} coordinates")
        t_values.append(t)
    counts = Counter(t_values)
    t_rep, c_rep = max(counts.items(), key=lambda kv: (kv[1], -kv[0]))
    if c_rep >= repeat_threshold:
        return CaseReport("2a", {"t": t_rep, "count": c_rep,
                                 "indices": [n for n, t in enumerate(t_values) if t == t_rep]})

    T = sorted(counts)
    x = zigzag_enumeration(depth)
    if max(x) >= len(T):
        raise SearchExhausted(f"only {len(T)} distinct lead coordinates below index {n_limit}")
    p = [T[k] for k in x]
    phi = [t_values.index(pm) for pm in p]
    letters = sorted(set(p))
    psi = {j: max(mu(j, w) for col in cols for w in col) for j in letters}
    zs = [2 * psi[pm] + 1 for pm in p]
    cs = [max(p[: m + 1]) for m in range(depth + 1)]
    if max(cs) >= window:
        raise SearchExhausted("probe coordinate outside the window")
    members = tuple(m for m in range(depth + 1) if m % 2 == 1)
    w = _finish(phi, zs, cs, members, (OMEGA,) * (depth + 1), terms, ETA, FREE, "thin-set")
    failures = technical_report(w, F_OMEGA, terms, ETA, FREE)
    if failures:
        raise SearchExhausted(f"window too small, re-verification failed: {failures[0]}")
    return CaseReport("2b", {"p": p, "psi": [psi[pm] for pm in p]}, w)
