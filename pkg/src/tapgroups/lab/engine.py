"""Partial products of multiplier-twisted sequences and window-relative verdicts.

Every verdict here is a semi-decision about a finite window of steps and
coordinates: ``CauchyInWindow``, ``ConvergedInWindow``, ``DivergenceWitness``
or ``Inconclusive``.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ..extrema import extrema
from ..groups.freevec import eta_certificate
from ..seminorms import eta
from ..words import format_word
from ..weights import Multiplier, ZIGZAG, perm_apply
from .spec import ExperimentSpec

CAUCHY = "CauchyInWindow"
CONVERGED = "ConvergedInWindow"
DIVERGENCE = "DivergenceWitness"
INCONCLUSIVE = "Inconclusive"

GROWTH_RUN = 5


@dataclass
class Verdict:
    kind: str
    detail: Dict[str, Any] = field(default_factory=dict)

    def __str__(self):
        if self.kind == CONVERGED:
            return f"{self.kind}({self.detail['limit_id']})"
        if self.kind == DIVERGENCE:
            return f"{self.kind}({self.detail['probe']})"
        return self.kind


@dataclass
class TraceReport:
    spec: ExperimentSpec
    probe_ids: List[str]
    steps: List[Tuple[int, str, Any, str]]
    part_names: List[str]
    last_change: List[int]
    final: Any
    history: Optional[List[Any]] = None
    spectrum_tag: Optional[str] = None
    verdict: Optional[Verdict] = None
    cauchy: Optional[Verdict] = None
    convergence: Optional[Verdict] = None
    model: Any = field(default=None, repr=False, compare=False)
    sequence: Any = field(default=None, repr=False, compare=False)

    def stabilized(self, k: int) -> bool:
        return self.last_change[k] <= self.spec.horizon - 1 - self.spec.settle


class _Terms:
    """Memoized ``n -> a_n``."""

    def __init__(self, seq):
        self.seq = seq
        self.cache: Dict[int, Any] = {}

    def __call__(self, n: int):
        t = self.cache.get(n)
        if t is None:
            t = self.cache[n] = self.seq(n)
        return t


def partial_products(spec: ExperimentSpec, keep_history: bool = True) -> TraceReport:
    """``P_m = prod_{n<=m} a_{phi(n)}^{z(n)}`` for ``m < horizon``."""
    spec.validate()
    model = spec.build_model()
    seq = spec.build_sequence(model)
    terms = _Terms(seq)
    probe_ids = list(spec.probes) if spec.probes is not None else model.default_probes()
    names = model.part_names(spec.levels)
    last = [-1] * len(names)
    e = model.identity()
    prev = model.parts(e, spec.levels)
    P = e
    history = [] if keep_history else None
    steps: List[Tuple[int, str, Any, str]] = []
    M = spec.horizon
    for m in range(M):
        zm = spec.multiplier(m)
        if zm:
            a = terms(perm_apply(spec.permutation, m))
            P = model.mul(P, a if zm == 1 else model.pow(a, zm))
            cur = model.parts(P, spec.levels)
            for k, (u, v) in enumerate(zip(prev, cur)):
                if u is not v and u != v:
                    last[k] = m
            prev = cur
        if history is not None:
            history.append(P)
        if spec.record == "all" or (spec.record == "final" and m == M - 1):
            for pid, value, rendered in model.probe(P, probe_ids):
                steps.append((m, pid, value, rendered))
    return TraceReport(
        spec=spec,
        probe_ids=probe_ids,
        steps=steps,
        part_names=names,
        last_change=last,
        final=P,
        history=history,
        spectrum_tag=model.spectrum_tag,
        model=model,
        sequence=terms,
    )


def _least_k(suffix_min: List[int], n: int) -> int:
    for k, d in enumerate(suffix_min):
        if d >= n:
            return k
    return len(suffix_min)


def _suffix_min(values: List[int], vacuous: int) -> List[int]:
    out = [vacuous] * (len(values) + 1)
    for k in range(len(values) - 1, -1, -1):
        out[k] = min(values[k], out[k + 1])
    return out


def source_k_table(model, terms, horizon: int, levels: int) -> List[int]:
    """Least ``K`` with ``a_j`` in ``U_n`` for all ``K <= j < horizon``, per level."""
    depths = [model.depth(terms(j), levels) for j in range(horizon)]
    suf = _suffix_min(depths, levels)
    return [_least_k(suf, n) for n in range(levels + 1)]


def cauchy_verdict(trace: TraceReport, spec: Optional[ExperimentSpec] = None) -> Verdict:
    """Left Cauchy test on tails ``P_{l-1}^{-1} P_m`` inside the window.

    ``k_step[n]`` is the least step ``k`` such that every tail with
    ``k <= l <= m < M`` lies in ``U_n``.  ``k_source[n]`` is the least source
    index from which all terms ``a_j`` (``j < M``) lie in ``U_n``.
    """
    spec = spec or trace.spec
    if trace.history is None:
        raise ValueError("cauchy_verdict needs a trace with history")
    model = trace.model
    levels = spec.levels
    M = len(trace.history)
    e = model.identity()
    row_min = []
    prev_inv = e
    for l in range(M):
        best = levels
        for m in range(l, M):
            d = model.depth(model.mul(prev_inv, trace.history[m]), levels)
            if d < best:
                best = d
                if best == 0:
                    break
        row_min.append(best)
        prev_inv = model.inv(trace.history[l])
    suf = _suffix_min(row_min, levels)
    k_step = [_least_k(suf, n) for n in range(levels + 1)]
    k_source = source_k_table(model, trace.sequence, M, levels)
    failed = [n for n, k in enumerate(k_step) if k > M - spec.settle]
    detail = {"levels": levels, "k_step": k_step, "k_source": k_source}
    if failed:
        detail["failed_levels"] = failed
        return Verdict(INCONCLUSIVE, detail)
    return Verdict(CAUCHY, detail)


def _limit_id(trace: TraceReport) -> str:
    text = "\n".join(trace.model.render_part(p) for p in trace.model.parts(trace.final, trace.spec.levels))
    return hashlib.sha1(text.encode()).hexdigest()[:12]


def _h_growth(trace: TraceReport, stable: List[bool]) -> Optional[Verdict]:
    spec = trace.spec
    seq = trace.sequence.seq
    cert = 0
    for n in range(spec.horizon):
        if spec.multiplier(n):
            cert = max(cert, eta_certificate(seq.symbolic(perm_apply(spec.permutation, n))))
    table = [(i, eta(w)) for i, w in enumerate(trace.final.coords) if stable[i]]
    best: List[Tuple[int, int]] = []
    run: List[Tuple[int, int]] = []
    for i, v in table:
        if v > cert and run and run[-1][0] == i - 1 and run[-1][1] < v:
            run.append((i, v))
        elif v > cert:
            run = [(i, v)]
        else:
            run = []
        if len(run) > len(best):
            best = list(run)
    if len(best) >= GROWTH_RUN:
        return Verdict(DIVERGENCE, {"probe": "eta", "certificate": cert, "growth": best})
    return None


def _finperm_gap(trace: TraceReport, stable: List[bool]) -> Optional[Verdict]:
    n = trace.spec.window
    parts = trace.model.parts(trace.final, trace.spec.levels)
    images = {parts[k] for k in range(n) if stable[k]}
    for j in range(n):
        if j not in images and not stable[n + j]:
            table = [(k, parts[k]) for k in range(n) if stable[k]]
            return Verdict(DIVERGENCE, {"probe": f"pre@{j}", "missing": j, "bijective": False,
                                        "map": table})
    return None


def convergence_verdict(trace: TraceReport, spec: Optional[ExperimentSpec] = None) -> Verdict:
    spec = spec or trace.spec
    stable = [trace.stabilized(k) for k in range(len(trace.part_names))]
    if spec.group == "H":
        v = _h_growth(trace, stable)
        if v is not None:
            return v
    if spec.group == "finperm":
        v = _finperm_gap(trace, stable)
        if v is not None:
            return v
    if all(stable):
        return Verdict(CONVERGED, {"limit_id": _limit_id(trace)})
    unstable = [trace.part_names[k] for k, s in enumerate(stable) if not s]
    return Verdict(INCONCLUSIVE, {"unstable": unstable})


def linear_null_shortcut(sequence, spec: ExperimentSpec, model=None) -> Verdict:
    """Null-sequence test: for every level, all but finitely many terms lie in ``U_n``.

    In a linear group this certifies the Cauchy property for every
    multiplier and every rearrangement at once.
    """
    model = model or spec.build_model()
    terms = sequence if isinstance(sequence, _Terms) else _Terms(sequence)
    k_source = source_k_table(model, terms, spec.horizon, spec.levels)
    detail = {"levels": spec.levels, "k_source": k_source}
    failed = [n for n, k in enumerate(k_source) if k > spec.horizon - spec.settle]
    if failed:
        detail["failed_levels"] = failed
        return Verdict(INCONCLUSIVE, detail)
    detail["certificate"] = "null-sequence"
    return Verdict(CAUCHY, detail)


def run_experiment(spec: ExperimentSpec) -> TraceReport:
    trace = partial_products(spec)
    trace.cauchy = cauchy_verdict(trace, spec)
    trace.convergence = convergence_verdict(trace, spec)
    if trace.convergence.kind in (DIVERGENCE, CONVERGED):
        trace.verdict = trace.convergence
    else:
        trace.verdict = trace.cauchy
    return trace


@dataclass
class ZigzagRow:
    l: int
    eta: int
    ext: int
    word: str

    @property
    def ok(self) -> bool:
        return self.eta == 2 * self.l + 2 == self.ext


@dataclass
class ZigzagReport:
    rows: List[ZigzagRow]
    verdict: Verdict

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows) and self.verdict.kind == DIVERGENCE


def zigzag_spec(l_max: int) -> ExperimentSpec:
    window = 2 * l_max + 2
    return ExperimentSpec(
        group="H",
        sequence="g_y",
        multiplier=Multiplier((), 1),
        permutation=ZIGZAG,
        horizon=window + 2,
        window=window,
        levels=0,
        record="none",
    )


def zigzag_divergence_demo(l_max: int) -> ZigzagReport:
    """Stabilized coordinates ``a(2l+1)`` of the zig-zag rearranged product."""
    if l_max < 0:
        raise ValueError("l_max must be non-negative")
    spec = zigzag_spec(l_max)
    trace = partial_products(spec, keep_history=False)
    rows = []
    for l in range(l_max + 1):
        i = 2 * l + 1
        if not trace.stabilized(i):
            raise RuntimeError(f"coordinate {i} did not stabilize")
        w = trace.final.coords[i]
        rows.append(ZigzagRow(l, eta(w), len(extrema(w.letters)), format_word(w)))
    return ZigzagReport(rows, convergence_verdict(trace, spec))
