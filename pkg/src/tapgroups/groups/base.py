"""Common contract for the model groups used by the lab."""
from __future__ import annotations

from typing import Any, Callable, List, Optional, Tuple

Probe = Tuple[str, Any, str]  # (probe id, value, rendered)


class InstrumentedGroup:
    """A group with a linear topology given by a chain of basic subgroups.

    ``in_basic_subgroup(g, n)`` describes open subgroups ``U_0 > U_1 > ...``
    with trivial intersection on representable elements.
    """

    name = "abstract"
    abelian = False
    #: productivity spectrum class stated for this model, if any
    spectrum_tag: Optional[str] = None

    def identity(self):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        out = self.identity()
        base = a
        while k:
            if k & 1:
                out = self.mul(out, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return out

    def equal(self, a, b) -> bool:
        return a == b

    def is_identity(self, a) -> bool:
        return self.equal(a, self.identity())

    def in_basic_subgroup(self, a, n: int) -> bool:
        raise NotImplementedError

    def depth(self, a, cap: int) -> int:
        """Largest ``n <= cap`` with ``a`` in ``U_n``."""
        n = 0
        while n < cap and self.in_basic_subgroup(a, n + 1):
            n += 1
        return n

    def render(self, a) -> str:
        raise NotImplementedError

    def parts(self, a, levels: int) -> tuple:
        """Finitely many discrete observables whose joint stabilization
        means convergence inside the window."""
        raise NotImplementedError

    def part_names(self, levels: int) -> List[str]:
        raise NotImplementedError

    def render_part(self, part) -> str:
        return str(part)

    def default_probes(self) -> List[str]:
        return []

    def probe(self, a, probe_ids: List[str]) -> List[Probe]:
        return []


class SequenceGen:
    """A named sequence ``n -> a_n`` of elements of a model group."""

    def __init__(self, name: str, term: Callable[[int], Any], params: Optional[dict] = None):
        self.name = name
        self._term = term
        self.params = dict(params or {})

    def __call__(self, n: int):
        return self._term(n)

    def __repr__(self):
        return f"SequenceGen({self.name!r}, {self.params!r})"
