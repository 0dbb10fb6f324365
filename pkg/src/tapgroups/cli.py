"""``tapgroups`` command line.

Exit codes: 0 success, 1 negative outcome (a check failed or the verdict
differs from ``--expect``), 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import words as W
from .extrema import extrema, is_fd_sequence
from .groups import cycle, cycle_notation, make_sequence, pi_n
from .lab import (
    ABS,
    CAUCHY,
    DIVERGENCE,
    ConfigError,
    ExperimentSpec,
    NotFound,
    SearchExhausted,
    format_trace_json,
    format_trace_text,
    load_config,
    run_experiment,
    tap_witness_for_H,
    technical_check,
    unbounded_witness,
    zigzag_divergence_demo,
)
from .lab.spec import tomllib
from .seminorms import parse_seminorm
from .weights import F_OMEGA, weight_from_obj


class UsageError(Exception):
    pass


def _out(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_run(args) -> int:
    spec = load_config(args.config)
    trace = run_experiment(spec)
    _out(format_trace_json(trace) if args.json else format_trace_text(trace), args.out)
    if args.expect and trace.verdict.kind != args.expect:
        print(f"verdict {trace.verdict.kind} differs from expected {args.expect}", file=sys.stderr)
        return 1
    return 0


def cmd_demo_zigzag(args) -> int:
    if args.lmax < 0:
        raise UsageError("--lmax must be non-negative")
    rep = zigzag_divergence_demo(args.lmax)
    lines = []
    for r in rep.rows:
        line = f"l={r.l} eta={r.eta} expected={2 * r.l + 2} ext={r.ext} ok={str(r.ok).lower()}"
        if args.words:
            line += f" word={r.word}"
        lines.append(line)
    lines.append(f"verdict={rep.verdict}")
    _out("\n".join(lines) + "\n", args.out)
    return 0 if rep.ok else 1


def cmd_demo_perm_cycle(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    lines = []
    ok = True
    for k in range(args.n + 1):
        good = pi_n(k) == cycle(list(range(k + 2)))
        ok &= good
        lines.append(f"n={k} pi={cycle_notation(pi_n(k))} cycle={str(good).lower()}")
    window = min(args.window, args.n + 1)
    spec = ExperimentSpec("finperm", "transpositions", horizon=args.n + 1, window=window,
                          levels=min(window, args.n), record="none")
    trace = run_experiment(spec)
    lines.append(f"cauchy={trace.cauchy.kind} k_step={trace.cauchy.detail['k_step']}")
    conv = trace.convergence
    lines.append(f"convergence={conv}")
    if conv.kind == DIVERGENCE:
        lines.append(f"stabilized_map={conv.detail['map']} missing={conv.detail['missing']} bijective=false")
    _out("\n".join(lines) + "\n", args.out)
    return 0 if ok and trace.cauchy.kind == CAUCHY and conv.kind == DIVERGENCE else 1


def _witness_rows(w) -> List[str]:
    rows = []
    for m in range(len(w.indices)):
        tag = "*" if m in w.members else " "
        rows.append(f"{tag}m={m} n={w.indices[m]} z={w.z[m]} i={w.coords[m]} "
                    f"g={w.g_values[m]} nu={w.nu_values[m]}")
    return rows


def cmd_witness_unbounded(args) -> int:
    try:
        with open(args.config, "rb") as fh:
            cfg = tomllib.load(fh)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"syntax error: {exc}") from None
    group = cfg.get("group")
    if group not in ("bounded", "H"):
        raise ConfigError("witness configs need group = \"bounded\" or \"H\"")
    seq_cfg = cfg.get("sequence", {"kind": "basis" if group == "bounded" else "g_pair"})
    try:
        gen = make_sequence(group, seq_cfg["kind"], {k: v for k, v in seq_cfg.items() if k != "kind"})
        f = weight_from_obj(cfg.get("weight", "omega"))
        nu = ABS if group == "bounded" else parse_seminorm(cfg.get("nu", "eta"))
    except (KeyError, ValueError) as exc:
        raise ConfigError(str(exc)) from None
    seq = gen.symbolic if group == "H" else gen
    depth = int(cfg.get("depth", 10))
    try:
        res = unbounded_witness(f, seq, nu, depth, n_limit=int(cfg.get("n_limit", 1000)),
                                coord_limit=int(cfg.get("coord_limit", 1000)))
    except SearchExhausted as exc:
        print(f"search exhausted: {exc}")
        return 1
    if isinstance(res, NotFound):
        print(f"not found: {res.reason}")
        return 0 if args.expect == "none" else 1
    lines = [f"witness depth={res.depth}"] + _witness_rows(res)
    ok = technical_check(res, None, seq, nu)
    lines.append(f"technical_check={str(ok).lower()}")
    print("\n".join(lines))
    return 0 if ok and args.expect == "found" else 1


def cmd_witness_tap_h(args) -> int:
    if args.depth < 0:
        raise UsageError("--depth must be non-negative")
    seq = make_sequence("H", args.sequence).symbolic
    try:
        rep = tap_witness_for_H(seq, args.depth, window=args.window)
    except SearchExhausted as exc:
        print(f"search exhausted: {exc}")
        return 1
    lines = [f"case={rep.case}"]
    for k, v in rep.detail.items():
        lines.append(f"{k}={v}")
    if rep.witness is not None:
        lines += _witness_rows(rep.witness)
        ok = technical_check(rep.witness, F_OMEGA, seq, parse_seminorm("eta"))
        lines.append(f"technical_check={str(ok).lower()}")
    print("\n".join(lines))
    return 0


def cmd_seminorm_eval(args) -> int:
    try:
        nu = parse_seminorm(args.nu)
        w = W.parse_word(args.word)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(nu(w))
    return 0


def cmd_extrema(args) -> int:
    try:
        s = [int(v) for v in args.seq.split(",") if v.strip()]
    except ValueError:
        raise UsageError("--seq takes comma separated integers") from None
    if not s or not is_fd_sequence(s):
        raise UsageError("--seq must be nonempty with distinct neighbours")
    rep = extrema(s)
    print(f"lmax={sorted(rep.lmax)}\nlmin={sorted(rep.lmin)}\next={sorted(rep.ext)}\ncount={len(rep)}")
    return 0


def cmd_selftest(args) -> int:
    from .selftest import run_selftest

    if args.cases < 0:
        raise UsageError("--cases must be non-negative")
    results = run_selftest(args.seed, args.cases, args.inject_mutant)
    bad = 0
    for r in results:
        print(f"suite={r.name} cases={r.cases} violations={len(r.violations)}")
        for v in r.violations[:3]:
            if v:
                print(f"  violation: {v}")
        bad += len(r.violations)
    print(f"total violations={bad}")
    return 1 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tapgroups", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="run an experiment config and write its trace")
    r.add_argument("config")
    r.add_argument("--out")
    r.add_argument("--json", action="store_true")
    r.add_argument("--expect", choices=["CauchyInWindow", "ConvergedInWindow", "DivergenceWitness",
                                        "Inconclusive"])
    r.set_defaults(func=cmd_run)

    d = sub.add_parser("demo", help="reproduction demos")
    dsub = d.add_subparsers(dest="demo", required=True)
    z = dsub.add_parser("zigzag")
    z.add_argument("--lmax", type=int, required=True)
    z.add_argument("--words", action="store_true", help="also print the coordinate words")
    z.add_argument("--out")
    z.set_defaults(func=cmd_demo_zigzag)
    pc = dsub.add_parser("perm-cycle")
    pc.add_argument("--n", type=int, required=True)
    pc.add_argument("--window", type=int, default=16)
    pc.add_argument("--out")
    pc.set_defaults(func=cmd_demo_perm_cycle)

    w = sub.add_parser("witness", help="non-productivity witnesses")
    wsub = w.add_subparsers(dest="witness", required=True)
    u = wsub.add_parser("unbounded")
    u.add_argument("config")
    u.add_argument("--expect", choices=["found", "none"], default="found")
    u.set_defaults(func=cmd_witness_unbounded)
    t = wsub.add_parser("tap-h")
    t.add_argument("--depth", type=int, required=True)
    t.add_argument("--sequence", choices=["g_y", "g_pair"], default="g_y")
    t.add_argument("--window", type=int)
    t.set_defaults(func=cmd_witness_tap_h)

    s = sub.add_parser("seminorm", help="evaluate word functionals")
    ssub = s.add_subparsers(dest="seminorm", required=True)
    ev = ssub.add_parser("eval")
    ev.add_argument("--nu", required=True, help="eta, mu:<x> or delta:<j>")
    ev.add_argument("--word", required=True, help="word literal such as 1.0^-2")
    ev.set_defaults(func=cmd_seminorm_eval)

    e = sub.add_parser("extrema", help="local extrema of a sequence")
    e.add_argument("--seq", required=True)
    e.set_defaults(func=cmd_extrema)

    st = sub.add_parser("selftest", help="seeded property suites")
    st.add_argument("--seed", type=int, default=0)
    st.add_argument("--cases", type=int, default=1000)
    st.add_argument("--inject-mutant", help=argparse.SUPPRESS)
    st.set_defaults(func=cmd_selftest)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
