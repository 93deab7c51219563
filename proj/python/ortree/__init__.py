"""Gray code for ordered trees: consecutive trees differ by one leaf move."""

from ._core import (
    OrderedTree,
    apply_delta,
    catalan,
    check_co1,
    classify,
    decode_parens,
    delta,
    delta_stream,
    enumerate_all,
    family_tree_dot,
    finalize_last,
    gray_code,
    has_pony_tail,
    is_adjacent,
    is_copying,
    run_cli,
    step,
    validate,
    verify,
)

__all__ = [
    "OrderedTree",
    "apply_delta",
    "catalan",
    "check_co1",
    "classify",
    "decode_parens",
    "delta",
    "delta_stream",
    "enumerate_all",
    "family_tree_dot",
    "finalize_last",
    "gray_code",
    "has_pony_tail",
    "is_adjacent",
    "is_copying",
    "run_cli",
    "step",
    "validate",
    "verify",
]
