"""Leavitt path algebras over the rationals: normal forms, graded and
lambda-reducible ideals, and the two-vertex lattice classification."""

from ._leavitt import (
    Element,
    Graph,
    LpaError,
    classify,
    contains,
    count_closed_form,
    enumerate_up_to_iso,
    extract_vertex,
    lambda_reduce,
    nongraded_witness,
    run,
)

__all__ = [
    "Element",
    "Graph",
    "LpaError",
    "classify",
    "contains",
    "count_closed_form",
    "enumerate_up_to_iso",
    "extract_vertex",
    "lambda_reduce",
    "nongraded_witness",
    "run",
]
