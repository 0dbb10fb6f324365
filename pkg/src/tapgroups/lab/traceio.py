"""Trace files: a config header, one record per step and probe, a verdict block.

The text form is line oriented::

    %% tapgroups trace v1
    %% config
    <TOML config>
    %% steps
    m=0 probe=eta@0 value=1 rendered=0
    %% verdict
    verdict=ConvergedInWindow
    ...

``--json`` selects the same fields as one JSON object.  Field order is
fixed, so equal inputs give byte-identical files.
"""
from __future__ import annotations

import json
from typing import Any, Dict

from ..weights import OMEGA
from .engine import TraceReport, Verdict
from .spec import ExperimentSpec, dump_config, parse_config, spec_to_obj

MAGIC = "%% tapgroups trace v1"


def _jsonable(v):
    if v is OMEGA:
        return "omega"
    if isinstance(v, float) and v == float("inf"):
        return "inf"
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


def _verdict_obj(v: Verdict) -> Dict[str, Any]:
    return {"kind": v.kind, **_jsonable(v.detail)}


def verdict_block(trace: TraceReport) -> Dict[str, Any]:
    out: Dict[str, Any] = {"verdict": str(trace.verdict) if trace.verdict else None}
    out["spectrum_tag"] = trace.spectrum_tag
    if trace.cauchy is not None:
        out["cauchy"] = _verdict_obj(trace.cauchy)
    if trace.convergence is not None:
        out["convergence"] = _verdict_obj(trace.convergence)
    return out


def format_trace_text(trace: TraceReport) -> str:
    lines = [MAGIC, "%% config", dump_config(trace.spec).rstrip("\n"), "%% steps"]
    for m, pid, value, rendered in trace.steps:
        lines.append(f"m={m} probe={pid} value={_jsonable(value)} rendered={rendered}")
    lines.append("%% verdict")
    for key, val in verdict_block(trace).items():
        if isinstance(val, dict):
            for k, v in val.items():
                lines.append(f"{key}.{k}={json.dumps(v, separators=(',', ':'))}")
        else:
            lines.append(f"{key}={'' if val is None else val}")
    return "\n".join(lines) + "\n"


def format_trace_json(trace: TraceReport) -> str:
    obj = {
        "format": "tapgroups-trace-v1",
        "config": spec_to_obj(trace.spec),
        "steps": [
            {"m": m, "probe": pid, "value": _jsonable(value), "rendered": rendered}
            for m, pid, value, rendered in trace.steps
        ],
        **verdict_block(trace),
    }
    return json.dumps(_jsonable(obj), indent=1) + "\n"


def config_header(text: str) -> str:
    """The TOML config embedded in a text trace."""
    lines = text.splitlines()
    if not lines or lines[0] != MAGIC:
        raise ValueError("not a tapgroups trace")
    start = lines.index("%% config") + 1
    end = lines.index("%% steps")
    return "\n".join(lines[start:end]) + "\n"


def spec_from_trace(text: str) -> ExperimentSpec:
    return parse_config(config_header(text))
