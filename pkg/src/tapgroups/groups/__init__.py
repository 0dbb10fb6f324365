"""Model groups with linear topologies, plus their sequence generators."""
from __future__ import annotations

from typing import Any, Dict, Optional

from ..weights import Multiplier, multiplier_from_obj
from .base import InstrumentedGroup, SequenceGen
from .bounded import BoundedIntVec, BoundedModel, basis_a, bvec_inv, bvec_mul, sup_norm
from .finperm import (
    FinPerm,
    FinPermModel,
    cycle,
    cycle_notation,
    perm_inv,
    perm_mul,
    pi_cycle_check,
    pi_n,
    transposition_b,
)
from .freevec import (
    FreeVecElement,
    FreeVecModel,
    HSymbolic,
    PreconditionError,
    delta_stability_check,
    g,
    g_z_coord,
    h_bound_certificates,
    h_eval,
    h_window,
    short_core_power_bounds,
    t_of,
    y,
)
from .padic import INFINITY, PadicInt, PadicModel, padic_basis_sequence, padic_in_Un, v_p

GROUP_IDS = ("H", "bounded", "padic", "finperm")

SEQUENCE_KINDS = {
    "H": ("g_y", "g_pair", "constant"),
    "bounded": ("basis", "constant"),
    "padic": ("powers", "constant"),
    "finperm": ("transpositions", "constant"),
}


class GeneratorError(ValueError):
    """A sequence term could not be produced in the model."""


def make_model(group: str, window: int = 30, p: int = 3) -> InstrumentedGroup:
    if group == "H":
        return FreeVecModel(window)
    if group == "bounded":
        return BoundedModel(window)
    if group == "padic":
        return PadicModel(p)
    if group == "finperm":
        return FinPermModel(window)
    raise ValueError(f"unknown group {group!r}; expected one of {', '.join(GROUP_IDS)}")


def _symbolic_h(kind: str, params: Dict[str, Any]):
    if kind == "g_y":
        return lambda n: g(y(n))
    if kind == "g_pair":
        # two adjacent letters, so every nontrivial coordinate has a long core
        return lambda n: g(Multiplier((0,) * n + (1, 1), 0))
    if kind == "constant":
        z = multiplier_from_obj(params.get("z", [1]))
        return lambda n: g(z)
    raise ValueError(f"unknown H sequence {kind!r}")


def make_sequence(group: str, kind: str, params: Optional[Dict[str, Any]] = None,
                  model: Optional[InstrumentedGroup] = None) -> SequenceGen:
    """The generator ``n -> a_n`` of model elements.

    For ``H`` the returned object also carries ``symbolic(n)``, the exact
    :class:`HSymbolic` term, which the windowed model element comes from.
    """
    params = dict(params or {})
    if kind not in SEQUENCE_KINDS.get(group, ()):
        raise ValueError(f"unknown sequence {kind!r} for group {group!r}")
    if group == "H":
        model = model or FreeVecModel(30)
        sym = _symbolic_h(kind, params)
        gen = SequenceGen(kind, lambda n: model.embed(sym(_check_index(n))), params)
        gen.symbolic = sym
        return gen
    if group == "bounded":
        if kind == "basis":
            return SequenceGen(kind, lambda n: basis_a(_check_index(n)), params)
        v = BoundedIntVec(tuple(params.get("prefix", [1])), params.get("tail", 0))
        return SequenceGen(kind, lambda n: v, params)
    if group == "padic":
        p = model.p if model is not None else int(params.get("p", 3))
        if kind == "powers":
            return SequenceGen(kind, lambda n: padic_basis_sequence(_check_index(n), p), params)
        value = int(params.get("value", 1))
        return SequenceGen(kind, lambda n: PadicInt(value, p), params)
    if kind == "transpositions":
        return SequenceGen(kind, lambda n: transposition_b(_check_index(n)), params)
    f = FinPerm(tuple(params.get("images", [1, 0])))
    return SequenceGen(kind, lambda n: f, params)


def _check_index(n: int) -> int:
    if n < 0:
        raise GeneratorError(f"sequence index {n} is negative")
    return n


__all__ = [
    "GROUP_IDS",
    "SEQUENCE_KINDS",
    "GeneratorError",
    "make_model",
    "make_sequence",
    "InstrumentedGroup",
    "SequenceGen",
    "BoundedIntVec",
    "BoundedModel",
    "basis_a",
    "bvec_mul",
    "bvec_inv",
    "sup_norm",
    "FinPerm",
    "FinPermModel",
    "cycle",
    "cycle_notation",
    "perm_mul",
    "perm_inv",
    "pi_n",
    "pi_cycle_check",
    "transposition_b",
    "FreeVecElement",
    "FreeVecModel",
    "HSymbolic",
    "PreconditionError",
    "delta_stability_check",
    "g",
    "g_z_coord",
    "h_bound_certificates",
    "h_eval",
    "h_window",
    "short_core_power_bounds",
    "t_of",
    "y",
    "INFINITY",
    "PadicInt",
    "PadicModel",
    "padic_basis_sequence",
    "padic_in_Un",
    "v_p",
]
