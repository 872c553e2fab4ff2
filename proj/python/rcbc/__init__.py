"""Combinatorial batch codes with server redundancy."""

from ._rcbc import (
    BatchCode,
    CodeParams,
    ContractError,
    ParameterError,
    ParseError,
    compute_F,
    compute_n_max,
    construct,
    exact_min_weight,
    girth,
    max_edges_with_girth,
    plan_retrieval,
    predicted_weight,
    verify,
)

__all__ = [
    "BatchCode",
    "CodeParams",
    "ContractError",
    "ParameterError",
    "ParseError",
    "compute_F",
    "compute_n_max",
    "construct",
    "exact_min_weight",
    "girth",
    "max_edges_with_girth",
    "plan_retrieval",
    "predicted_weight",
    "verify",
]
