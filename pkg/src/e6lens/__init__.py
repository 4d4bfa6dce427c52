"""Exact E6 state sum invariants of lens spaces."""

from e6lens.invariant import (
    InvariantValue,
    LensSpace,
    closed_form,
    homotopy_equivalent,
    state_sum,
)

__all__ = [
    "InvariantValue",
    "LensSpace",
    "closed_form",
    "homotopy_equivalent",
    "state_sum",
]
