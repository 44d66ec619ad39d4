"""Parametric floating-point laboratory.

Exact dyadic arithmetic over a configurable binary format F(p, emin, emax),
the six rounding modes rd/ru/rz/rne/rna/ro, traced FastTwoSum and
ExtractScalar, executable sufficient conditions, and exhaustive sweep
verification.
"""

from ._eftlab import (  # noqa: F401
    BudgetExceeded,
    ConditionId,
    Dyadic,
    FormatConfig,
    Fp,
    FtsTrace,
    GuaranteeClass,
    ModeTriple,
    RoundingError,
    RoundingMode,
    SplitTrace,
    SweepReport,
    SweepSpec,
    SweepTarget,
    adversarial_triples,
    check,
    check_detailed,
    condition_name,
    double_round_ro,
    emit_report,
    enumerate_format,
    exponent_gap_bound,
    extract_scalar,
    fast_two_sum,
    format_cardinality,
    guarantee_class,
    h_lsb,
    in_format,
    is_faithful_result,
    is_multiple_of,
    mixed_triples,
    mode_name,
    parse_condition,
    parse_dyadic,
    parse_mode,
    parse_report,
    pred,
    reports_equivalent,
    round,
    round_down,
    round_up,
    rounding_error,
    run_sweep,
    succ,
    sweep_delta,
    sweep_double_round,
    sweep_fts,
    sweep_split,
    to_fp_exact,
    ufp,
    ulp,
    uniform_triples,
)

__version__ = "0.1.0"
