"""Shared strategies and reference implementations.

The reference functions here are written independently of the package: they
work on plain lists of ``(letter, power)`` pairs and recompute everything
from first principles, so agreement with the package is a real check.
"""
from __future__ import annotations

import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from tapgroups.words import Word

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

_CRITERIA_LINES = []


def record_criterion(line):
    _CRITERIA_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA_LINES:
            terminalreporter.write_line(line)


# -- reference free group arithmetic on unit letters ----------------------

def expand(raw):
    """Pairs ``(x, p)`` as a list of signed unit letters ``(x, +-1)``."""
    out = []
    for x, p in raw:
        s = 1 if p > 0 else -1
        out.extend([(x, s)] * abs(p))
    return out


def free_reduce(units):
    """Classic stack reduction on unit letters."""
    stack = []
    for u in units:
        if stack and stack[-1][0] == u[0] and stack[-1][1] == -u[1]:
            stack.pop()
        else:
            stack.append(u)
    return stack


def collapse(units):
    """Unit letters back to ``(x, p)`` runs."""
    out = []
    for x, s in units:
        if out and out[-1][0] == x:
            out[-1][1] += s
        else:
            out.append([x, s])
    return tuple((x, p) for x, p in out)


def ref_word(raw):
    return collapse(free_reduce(expand(raw)))


def ref_mul(*raws):
    units = []
    for r in raws:
        units.extend(expand(r))
    return collapse(free_reduce(units))


def ref_inv(raw):
    return tuple((x, -p) for x, p in reversed(raw))


# -- reference extrema -----------------------------------------------------

def ref_ext_count(s):
    """Count of indices that beat every existing neighbour, either way."""
    n = len(s)
    c = 0
    for i in range(n):
        nb = [s[j] for j in (i - 1, i + 1) if 0 <= j < n]
        if all(s[i] > v for v in nb) or all(s[i] < v for v in nb):
            c += 1
    return c


def ref_eta(raw):
    return ref_ext_count([x for x, _ in raw])


def ref_mu(x, raw):
    return max([abs(p) for y, p in raw if y == x], default=0)


# -- strategies ------------------------------------------------------------

def raw_monoms(alphabet=8, max_len=12, max_power=4):
    return st.lists(
        st.tuples(st.integers(0, alphabet - 1),
                  st.integers(-max_power, max_power).filter(bool)),
        max_size=max_len,
    )


def words(alphabet=8, max_len=12, max_power=4):
    return raw_monoms(alphabet, max_len, max_power).map(lambda r: Word(ref_word(r)))


def random_word(rng: random.Random, alphabet=8, max_len=12, max_power=4) -> Word:
    raw = [(rng.randrange(alphabet), rng.choice([-1, 1]) * rng.randint(1, max_power))
           for _ in range(rng.randint(0, max_len))]
    return Word(ref_word(raw))


# -- exhaustive extrema sweep ----------------------------------------------

def fd_words(alphabet, length):
    """All sequences over ``range(alphabet)`` of this length with distinct neighbours."""
    stack = [(x,) for x in range(alphabet)] if length else [()]
    while stack:
        s = stack.pop()
        if len(s) == length:
            yield s
            continue
        stack.extend(s + (x,) for x in range(alphabet) if x != s[-1])


def fd_selections(s):
    """Index tuples selecting a subsequence of ``s`` with distinct neighbours."""
    stack = [(i,) for i in range(len(s))]
    while stack:
        idx = stack.pop()
        yield idx
        last = s[idx[-1]]
        stack.extend(idx + (j,) for j in range(idx[-1] + 1, len(s)) if s[j] != last)


def exhaustive_extrema_violations(alphabet, max_length):
    """Check the subsequence injection on every ``(s, s')`` pair.

    Returns ``(pairs checked, violations)``.
    """
    from tapgroups.extrema import ext_count, iota_injection

    checked = 0
    bad = []
    for length in range(1, max_length + 1):
        for s in fd_words(alphabet, length):
            ext = {i for i in range(length) if _is_ext(s, i)}
            for idx in fd_selections(s):
                iota = iota_injection(s, idx)
                checked += 1
                vals = set(iota.values())
                if (len(vals) != len(iota) or not vals <= ext or len(iota) > len(ext)
                        or len(iota) != ext_count([s[i] for i in idx])):
                    bad.append((s, idx))
    return checked, bad


def _is_ext(s, i):
    nb = [s[j] for j in (i - 1, i + 1) if 0 <= j < len(s)]
    return all(s[i] > v for v in nb) or all(s[i] < v for v in nb)
