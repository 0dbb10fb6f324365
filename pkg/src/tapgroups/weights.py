"""Weight functions, multipliers and permutations of the naturals.

All three are finitely represented as an explicit prefix plus a tail rule,
so they can be written to config and trace files and read back exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

__all__ = [
    "OMEGA",
    "Const",
    "Linear",
    "Weight",
    "F_1",
    "F_OMEGA",
    "Multiplier",
    "ZERO",
    "Permutation",
    "IDENTITY",
    "ZIGZAG",
    "Injection",
    "weight_at",
    "le",
    "le_star",
    "check_multiplier",
    "decompose_signs",
    "binary_slices",
    "perm_apply",
    "perm_inverse",
    "compose_weight",
    "factor_injection",
    "weight_from_obj",
    "weight_to_obj",
    "multiplier_from_obj",
    "multiplier_to_obj",
    "permutation_from_obj",
    "permutation_to_obj",
]


class _Omega:
    """The first infinite ordinal, used as the 'no bound' weight value."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "OMEGA"

    def __str__(self):
        return "omega"

    def __reduce__(self):
        return (_Omega, ())


OMEGA = _Omega()
WeightValue = Union[int, _Omega]


def _wle(a: WeightValue, b: WeightValue) -> bool:
    if b is OMEGA:
        return True
    if a is OMEGA:
        return False
    return a <= b


@dataclass(frozen=True)
class Const:
    value: Any


@dataclass(frozen=True)
class Linear:
    """``n -> a*n + b``."""

    a: int
    b: int


@dataclass(frozen=True)
class Weight:
    prefix: Tuple[WeightValue, ...] = ()
    tail: Union[Const, Linear] = Const(OMEGA)

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        for v in self.prefix:
            if v is not OMEGA and (not isinstance(v, int) or v < 1):
                raise ValueError(f"weight values must be positive integers or OMEGA, got {v!r}")
        t = self.tail
        if isinstance(t, Const):
            if t.value is not OMEGA and (not isinstance(t.value, int) or t.value < 1):
                raise ValueError(f"constant tail must be >= 1 or OMEGA, got {t.value!r}")
        elif isinstance(t, Linear):
            if t.a < 0 or t.b < 1:
                raise ValueError("linear tail needs a >= 0 and b >= 1")
        else:
            raise TypeError(f"bad tail rule {t!r}")

    def __call__(self, n: int) -> WeightValue:
        return weight_at(self, n)

    def is_bounded(self) -> bool:
        if any(v is OMEGA for v in self.prefix):
            return False
        t = self.tail
        if isinstance(t, Const):
            return t.value is not OMEGA
        return t.a == 0

    def bound(self) -> Optional[int]:
        """``sup f`` when finite."""
        if not self.is_bounded():
            return None
        tail = self.tail.value if isinstance(self.tail, Const) else self.tail.b
        return max((tail, *self.prefix))


F_1 = Weight((), Const(1))
F_OMEGA = Weight((), Const(OMEGA))


def _tail_at(t, n: int):
    if isinstance(t, Const):
        return t.value
    return t.a * n + t.b


def weight_at(f: Weight, n: int) -> WeightValue:
    if n < len(f.prefix):
        return f.prefix[n]
    return _tail_at(f.tail, n)


def _tails_le_from(s, t, start: int) -> bool:
    """Do tail rules satisfy ``s(n) <= t(n)`` for every ``n >= start``?"""
    if isinstance(t, Const) and t.value is OMEGA:
        return True
    if isinstance(s, Const) and s.value is OMEGA:
        return False
    if isinstance(s, Const) and isinstance(t, Const):
        return s.value <= t.value
    if isinstance(s, Linear) and isinstance(t, Const):
        return s.a == 0 and s.b <= t.value
    if isinstance(s, Const) and isinstance(t, Linear):
        return s.value <= t.a * start + t.b
    return s.a <= t.a and s.a * start + s.b <= t.a * start + t.b


def _tails_le_eventually(s, t) -> bool:
    if isinstance(t, Const) and t.value is OMEGA:
        return True
    if isinstance(s, Const) and s.value is OMEGA:
        return False
    if isinstance(s, Const) and isinstance(t, Const):
        return s.value <= t.value
    if isinstance(s, Linear) and isinstance(t, Const):
        return s.a == 0 and s.b <= t.value
    if isinstance(s, Const) and isinstance(t, Linear):
        return t.a > 0 or s.value <= t.b
    return s.a < t.a or (s.a == t.a and s.b <= t.b)


def le(f: Weight, g: Weight) -> bool:
    """Pointwise ``f <= g`` on all of N."""
    cut = max(len(f.prefix), len(g.prefix))
    if not all(_wle(weight_at(f, n), weight_at(g, n)) for n in range(cut)):
        return False
    return _tails_le_from(f.tail, g.tail, cut)


def le_star(f: Weight, g: Weight) -> bool:
    """``f <= g`` at all but finitely many points."""
    return _tails_le_eventually(f.tail, g.tail)


@dataclass(frozen=True)
class Multiplier:
    """Integer sequence: explicit prefix then a constant."""

    prefix: Tuple[int, ...] = ()
    tail: int = 0

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(map(int, self.prefix)))
        object.__setattr__(self, "tail", int(self.tail))

    def __call__(self, n: int) -> int:
        return self.prefix[n] if n < len(self.prefix) else self.tail

    def values(self, horizon: int) -> List[int]:
        return [self(n) for n in range(horizon)]

    def normalized(self) -> "Multiplier":
        p = list(self.prefix)
        while p and p[-1] == self.tail:
            p.pop()
        return Multiplier(tuple(p), self.tail)

    def support_bound(self) -> Optional[int]:
        """One past the last nonzero entry; ``None`` for a nonzero tail."""
        if self.tail:
            return None
        p = self.prefix
        k = len(p)
        while k and not p[k - 1]:
            k -= 1
        return k


ZERO = Multiplier((), 0)


def check_multiplier(z: Multiplier, f: Weight) -> bool:
    """``|z(n)| <= f(n)`` for every n."""
    cut = max(len(z.prefix), len(f.prefix))
    if not all(_wle(abs(z(n)), weight_at(f, n)) for n in range(cut)):
        return False
    c = abs(z.tail)
    if c == 0:
        return True
    return _tails_le_from(Const(c), f.tail, cut)


def decompose_signs(z: Multiplier) -> Tuple[Multiplier, Multiplier]:
    """``(z_plus, z_minus)`` with ``z = z_plus - z_minus``, both non-negative."""
    plus = Multiplier(tuple(max(0, v) for v in z.prefix), max(0, z.tail))
    minus = Multiplier(tuple(-min(0, v) for v in z.prefix), -min(0, z.tail))
    return plus, minus


def binary_slices(z: Multiplier, k: int) -> List[Multiplier]:
    """Split ``0 <= z <= k`` into ``k`` 0/1 multipliers summing to ``z``.

    Slice ``i`` (1-based) is 1 exactly where ``z(n) >= i``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    for v in (*z.prefix, z.tail):
        if v < 0 or v > k:
            raise ValueError(f"multiplier value {v} outside 0..{k}")
    return [
        Multiplier(tuple(1 if v >= i else 0 for v in z.prefix), 1 if z.tail >= i else 0)
        for i in range(1, k + 1)
    ]


@dataclass(frozen=True)
class Permutation:
    """A bijection of N.

    ``kind`` is ``identity``, ``zigzag``, ``table`` (a permutation of
    ``0..k-1`` extended by the identity) or ``composed`` (``parts[0]`` after
    ``parts[1]`` after ...).
    """

    kind: str = "identity"
    table: Tuple[int, ...] = ()
    parts: Tuple["Permutation", ...] = ()

    def __post_init__(self):
        if self.kind not in ("identity", "zigzag", "table", "composed"):
            raise ValueError(f"unknown permutation kind {self.kind!r}")
        if self.kind == "table":
            t = tuple(int(v) for v in self.table)
            if sorted(t) != list(range(len(t))):
                raise ValueError("table must be a permutation of 0..k-1")
            object.__setattr__(self, "table", t)

    def __call__(self, n: int) -> int:
        return perm_apply(self, n)

    @classmethod
    def from_table(cls, table: Sequence[int]) -> "Permutation":
        return cls("table", tuple(table))

    @classmethod
    def compose(cls, *parts: "Permutation") -> "Permutation":
        return cls("composed", parts=tuple(parts))


IDENTITY = Permutation("identity")
ZIGZAG = Permutation("zigzag")


def perm_apply(phi: Permutation, n: int) -> int:
    kind = phi.kind
    if kind == "identity":
        return n
    if kind == "zigzag":
        return n + 1 if n % 2 == 0 else n - 1
    if kind == "table":
        return phi.table[n] if n < len(phi.table) else n
    for part in reversed(phi.parts):
        n = perm_apply(part, n)
    return n


def perm_inverse(phi: Permutation) -> Permutation:
    if phi.kind in ("identity", "zigzag"):
        return phi
    if phi.kind == "table":
        inv = [0] * len(phi.table)
        for i, v in enumerate(phi.table):
            inv[v] = i
        return Permutation("table", tuple(inv))
    return Permutation("composed", parts=tuple(perm_inverse(p) for p in reversed(phi.parts)))


def compose_weight(f: Weight, phi, horizon: int) -> Tuple[WeightValue, ...]:
    """``(f o phi)(n)`` for ``n < horizon``; ``phi`` may be an injection."""
    return tuple(weight_at(f, phi(n)) for n in range(horizon))


@dataclass(frozen=True)
class Injection:
    """``n -> perm(selection[n])`` with ``selection`` strictly increasing.

    This is the factorization of an injection into an order-preserving map
    followed by a bijection.  Only the first ``len(selection)`` values are
    defined.
    """

    perm: Permutation
    selection: Tuple[int, ...]

    def __post_init__(self):
        sel = tuple(self.selection)
        if any(sel[i] >= sel[i + 1] for i in range(len(sel) - 1)):
            raise ValueError("selection must be strictly increasing")
        object.__setattr__(self, "selection", sel)

    def __call__(self, n: int) -> int:
        return perm_apply(self.perm, self.selection[n])

    def __len__(self):
        return len(self.selection)


def factor_injection(values: Sequence[int]) -> Injection:
    """Factor finitely many distinct values ``phi(0..k-1)`` as an :class:`Injection`."""
    vals = [int(v) for v in values]
    if len(set(vals)) != len(vals) or any(v < 0 for v in vals):
        raise ValueError("injection values must be distinct naturals")
    size = max(vals) + 1 if vals else 0
    taken = set(vals)
    table = vals + [v for v in range(size) if v not in taken]
    return Injection(Permutation("table", tuple(table)), tuple(range(len(vals))))


# -- serialization (config / trace files) ---------------------------------

def _value_to_obj(v: WeightValue):
    return "omega" if v is OMEGA else v


def _value_from_obj(v) -> WeightValue:
    if isinstance(v, str):
        if v.lower() in ("omega", "w"):
            return OMEGA
        raise ValueError(f"bad weight value {v!r}")
    if isinstance(v, bool) or not isinstance(v, int):
        raise ValueError(f"bad weight value {v!r}")
    return v


def weight_to_obj(f: Weight) -> Dict[str, Any]:
    t = f.tail
    if isinstance(t, Const):
        tail = _value_to_obj(t.value)
    else:
        tail = {"linear": [t.a, t.b]}
    return {"prefix": [_value_to_obj(v) for v in f.prefix], "tail": tail}


def weight_from_obj(obj) -> Weight:
    """Accepts ``"omega"``, ``"f1"``, an integer, or ``{prefix=[..], tail=..}``.

    ``tail`` is an integer, ``"omega"`` or ``{linear=[a, b]}``.
    """
    if isinstance(obj, str):
        key = obj.lower()
        if key in ("omega", "f_omega", "fomega"):
            return F_OMEGA
        if key in ("f1", "f_1"):
            return F_1
        raise ValueError(f"unknown weight {obj!r}")
    if isinstance(obj, int) and not isinstance(obj, bool):
        return Weight((), Const(obj))
    if not isinstance(obj, dict):
        raise ValueError(f"bad weight {obj!r}")
    extra = set(obj) - {"prefix", "tail"}
    if extra:
        raise ValueError(f"unknown weight keys {sorted(extra)}")
    prefix = tuple(_value_from_obj(v) for v in obj.get("prefix", []))
    tail = obj.get("tail", "omega")
    if isinstance(tail, dict):
        if set(tail) != {"linear"} or len(tail["linear"]) != 2:
            raise ValueError(f"bad weight tail {tail!r}")
        a, b = tail["linear"]
        rule = Linear(int(a), int(b))
    else:
        rule = Const(_value_from_obj(tail))
    return Weight(prefix, rule)


def multiplier_to_obj(z: Multiplier) -> Dict[str, Any]:
    return {"prefix": list(z.prefix), "tail": z.tail}


def multiplier_from_obj(obj) -> Multiplier:
    if isinstance(obj, int) and not isinstance(obj, bool):
        return Multiplier((), obj)
    if isinstance(obj, list):
        return Multiplier(tuple(obj), 0)
    if not isinstance(obj, dict):
        raise ValueError(f"bad multiplier {obj!r}")
    extra = set(obj) - {"prefix", "tail"}
    if extra:
        raise ValueError(f"unknown multiplier keys {sorted(extra)}")
    prefix = obj.get("prefix", [])
    tail = obj.get("tail", 0)
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in (*prefix, tail)):
        raise ValueError(f"multiplier entries must be integers: {obj!r}")
    return Multiplier(tuple(prefix), tail)


def permutation_to_obj(phi: Permutation):
    if phi.kind in ("identity", "zigzag"):
        return phi.kind
    if phi.kind == "table":
        return {"table": list(phi.table)}
    return {"composed": [permutation_to_obj(p) for p in phi.parts]}


def permutation_from_obj(obj) -> Permutation:
    if isinstance(obj, str):
        if obj in ("identity", "zigzag"):
            return Permutation(obj)
        raise ValueError(f"unknown permutation {obj!r}")
    if isinstance(obj, dict) and len(obj) == 1:
        if "table" in obj:
            return Permutation("table", tuple(obj["table"]))
        if "composed" in obj:
            return Permutation("composed", parts=tuple(permutation_from_obj(p) for p in obj["composed"]))
    raise ValueError(f"bad permutation {obj!r}")
