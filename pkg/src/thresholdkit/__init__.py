"""Threshold graphs, 2-linear Betti sequences and anti-lecture hall compositions."""

from .combinatorics import binomial, format_rational, parse_rational, rational
from .correspondence import (
    InvalidSequenceError,
    alhc_from_betti,
    alhc_of,
    betti_from_alhc,
    betti_of,
    betti_oracle,
    enumerate_alhc,
    graph_from_alhc,
    graph_from_betti,
    projective_dimension,
    shift_alhc,
    shift_betti,
    validate_alhc,
)
from .graphs import ThresholdGraph, enumerate_graphs, make, recognize
from .random_model import ExpectationReport, exact_expectation, monte_carlo, sample

__version__ = "0.1.0"

__all__ = [
    "ExpectationReport",
    "InvalidSequenceError",
    "ThresholdGraph",
    "alhc_from_betti",
    "alhc_of",
    "betti_from_alhc",
    "betti_of",
    "betti_oracle",
    "binomial",
    "enumerate_alhc",
    "enumerate_graphs",
    "exact_expectation",
    "format_rational",
    "graph_from_alhc",
    "graph_from_betti",
    "make",
    "monte_carlo",
    "parse_rational",
    "projective_dimension",
    "rational",
    "recognize",
    "sample",
    "shift_alhc",
    "shift_betti",
    "validate_alhc",
]
