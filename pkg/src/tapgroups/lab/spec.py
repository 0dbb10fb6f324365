"""Experiment descriptions and their TOML config files."""
from __future__ import annotations

import random
import re
import sys
from dataclasses import dataclass, field, replace
from typing import Any, Dict, Optional, Tuple

import tomli_w

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from ..groups import GROUP_IDS, SEQUENCE_KINDS, make_model, make_sequence
from ..weights import (
    F_OMEGA,
    IDENTITY,
    Multiplier,
    Permutation,
    Weight,
    multiplier_from_obj,
    multiplier_to_obj,
    perm_apply,
    permutation_from_obj,
    permutation_to_obj,
    weight_at,
    weight_from_obj,
    weight_to_obj,
    OMEGA,
)

RECORD_MODES = ("all", "final", "none")


class ConfigError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


@dataclass
class ExperimentSpec:
    group: str
    sequence: str
    params: Dict[str, Any] = field(default_factory=dict)
    weight: Weight = F_OMEGA
    multiplier: Multiplier = Multiplier((), 1)
    permutation: Permutation = IDENTITY
    horizon: int = 40
    window: int = 30
    levels: int = 10
    seed: int = 0
    p: int = 3
    settle: int = 1
    record: str = "all"
    probes: Optional[Tuple[str, ...]] = None

    def validate(self) -> None:
        if self.group not in GROUP_IDS:
            raise ConfigError(f"unknown group {self.group!r}")
        if self.sequence not in SEQUENCE_KINDS[self.group]:
            raise ConfigError(f"unknown sequence {self.sequence!r} for group {self.group!r}")
        for name in ("horizon", "window"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be positive")
        if self.levels < 0 or self.settle < 0:
            raise ConfigError("levels and settle must be non-negative")
        if self.group != "padic" and self.levels > self.window:
            raise ConfigError("levels may not exceed the window")
        if self.record not in RECORD_MODES:
            raise ConfigError(f"record must be one of {', '.join(RECORD_MODES)}")
        bad = self.multiplier_violation()
        if bad is not None:
            n, v, bound = bad
            raise ConfigError(f"multiplier value {v} at step {n} exceeds weight {bound}")

    def multiplier_violation(self):
        """First ``n < horizon`` with ``|z(n)| > f(phi(n))``, else ``None``."""
        for n in range(self.horizon):
            bound = weight_at(self.weight, perm_apply(self.permutation, n))
            v = self.multiplier(n)
            if bound is not OMEGA and abs(v) > bound:
                return n, v, bound
        return None

    def build_model(self):
        return make_model(self.group, self.window, self.p)

    def build_sequence(self, model=None):
        model = model or self.build_model()
        return make_sequence(self.group, self.sequence, self.params, model)

    def with_(self, **changes) -> "ExperimentSpec":
        return replace(self, **changes)


def random_multiplier(rng: random.Random, bound: int, support: int, span: int) -> Multiplier:
    """``support`` nonzero entries at positions below ``span``, values in ``[-bound, bound]``."""
    support = min(support, span)
    positions = sorted(rng.sample(range(span), support))
    prefix = [0] * span
    for pos in positions:
        v = 0
        while v == 0:
            v = rng.randint(-bound, bound)
        prefix[pos] = v
    return Multiplier(tuple(prefix), 0).normalized()


def random_table_permutation(rng: random.Random, size: int) -> Permutation:
    table = list(range(size))
    rng.shuffle(table)
    return Permutation.from_table(table)


# -- TOML ------------------------------------------------------------------

_TOP_KEYS = ("group", "horizon", "window", "levels", "seed", "p", "settle", "record", "probes",
             "weight", "multiplier", "permutation", "sequence")


def spec_to_obj(spec: ExperimentSpec) -> Dict[str, Any]:
    obj: Dict[str, Any] = {
        "group": spec.group,
        "horizon": spec.horizon,
        "window": spec.window,
        "levels": spec.levels,
        "seed": spec.seed,
        "p": spec.p,
        "settle": spec.settle,
        "record": spec.record,
    }
    if spec.probes is not None:
        obj["probes"] = list(spec.probes)
    obj["permutation"] = permutation_to_obj(spec.permutation)
    obj["weight"] = weight_to_obj(spec.weight)
    obj["multiplier"] = multiplier_to_obj(spec.multiplier)
    obj["sequence"] = {"kind": spec.sequence, **spec.params}
    return obj


def dump_config(spec: ExperimentSpec) -> str:
    return tomli_w.dumps(spec_to_obj(spec))


def _line_of(text: str, key: str) -> Optional[int]:
    pat = re.compile(rf"^\s*(\[{re.escape(key)}\]|{re.escape(key)}\s*=)")
    for n, line in enumerate(text.splitlines(), 1):
        if pat.match(line):
            return n
    return None


def _int(obj, key, default, text):
    v = obj.get(key, default)
    if isinstance(v, bool) or not isinstance(v, int):
        raise ConfigError(f"{key} must be an integer", _line_of(text, key))
    return v


def spec_from_obj(obj: Dict[str, Any], text: str = "") -> ExperimentSpec:
    unknown = [k for k in obj if k not in _TOP_KEYS]
    if unknown:
        raise ConfigError(f"unknown key {unknown[0]!r}", _line_of(text, unknown[0]))
    if "group" not in obj:
        raise ConfigError("missing key 'group'")
    seq = obj.get("sequence")
    if not isinstance(seq, dict) or "kind" not in seq:
        raise ConfigError("missing [sequence] table with a 'kind'", _line_of(text, "sequence"))
    params = {k: v for k, v in seq.items() if k != "kind"}
    seed = _int(obj, "seed", 0, text)
    horizon = _int(obj, "horizon", 40, text)

    def parse(key, fn, default):
        if key not in obj:
            return default
        try:
            return fn(obj[key])
        except (ValueError, TypeError, KeyError) as exc:
            raise ConfigError(f"bad {key}: {exc}", _line_of(text, key)) from None

    def multiplier(raw):
        if isinstance(raw, dict) and "random" in raw:
            r = raw["random"]
            rng = random.Random(seed)
            return random_multiplier(rng, int(r.get("bound", 1)), int(r.get("support", 1)),
                                     int(r.get("span", horizon)))
        return multiplier_from_obj(raw)

    probes = obj.get("probes")
    if probes is not None and not (isinstance(probes, list) and all(isinstance(p, str) for p in probes)):
        raise ConfigError("probes must be a list of strings", _line_of(text, "probes"))
    spec = ExperimentSpec(
        group=str(obj["group"]),
        sequence=str(seq["kind"]),
        params=params,
        weight=parse("weight", weight_from_obj, F_OMEGA),
        multiplier=parse("multiplier", multiplier, Multiplier((), 1)),
        permutation=parse("permutation", permutation_from_obj, IDENTITY),
        horizon=horizon,
        window=_int(obj, "window", 30, text),
        levels=_int(obj, "levels", 10, text),
        seed=seed,
        p=_int(obj, "p", 3, text),
        settle=_int(obj, "settle", 1, text),
        record=str(obj.get("record", "all")),
        probes=tuple(probes) if probes is not None else None,
    )
    try:
        spec.validate()
    except ConfigError as exc:
        keys = ("sequence", "multiplier", "levels", "record", "group", "horizon", "window")
        line = next((_line_of(text, k) for k in keys if k in str(exc)), None)
        raise ConfigError(str(exc), line) from None
    return spec


def parse_config(text: str) -> ExperimentSpec:
    try:
        obj = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        m = re.search(r"line (\d+)", str(exc))
        raise ConfigError(f"syntax error: {exc}", int(m.group(1)) if m else None) from None
    return spec_from_obj(obj, text)


def load_config(path) -> ExperimentSpec:
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())
