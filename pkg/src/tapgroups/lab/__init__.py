"""Experiment engine: partial products, verdicts and witnesses."""
from .engine import (
    CAUCHY,
    CONVERGED,
    DIVERGENCE,
    INCONCLUSIVE,
    TraceReport,
    Verdict,
    ZigzagReport,
    cauchy_verdict,
    convergence_verdict,
    linear_null_shortcut,
    partial_products,
    run_experiment,
    source_k_table,
    zigzag_divergence_demo,
)
from .spec import (
    ConfigError,
    ExperimentSpec,
    dump_config,
    load_config,
    parse_config,
    random_multiplier,
    random_table_permutation,
)
from .traceio import config_header, format_trace_json, format_trace_text, spec_from_trace
from .witness import (
    ABS,
    CaseReport,
    NotFound,
    SearchExhausted,
    Witness,
    tap_witness_for_H,
    technical_check,
    technical_report,
    unbounded_witness,
)
