"""Hook products, Littlewood decompositions and integrality of hook ratios."""

from ._hookratio import (
    TheoremViolation,
    boundary,
    compose,
    construct_failing_lambda,
    counts_signature,
    decide,
    decide_height1,
    decompose,
    f_table,
    hook_diagram,
    hook_lengths,
    p_core,
    parse_partition,
    partition_text,
    ratio_exponents,
)

__all__ = [
    "TheoremViolation",
    "boundary",
    "compose",
    "construct_failing_lambda",
    "counts_signature",
    "decide",
    "decide_height1",
    "decompose",
    "f_table",
    "hook_diagram",
    "hook_lengths",
    "p_core",
    "parse_partition",
    "partition_text",
    "ratio_exponents",
]
