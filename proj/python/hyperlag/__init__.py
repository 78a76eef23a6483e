"""Lagrangians of non-uniform hypergraphs."""

from ._hyperlag import (
    Hypergraph,
    catalog,
    closed_form,
    complete,
    compress_set,
    counterexample,
    evaluate,
    evaluate_uniform,
    gradient,
    grid_oracle,
    is_left_compressed,
    left_compress,
    max_complete_subgraph,
    maximize,
    parse_graph,
    threshold,
    verify,
)

__all__ = [
    "Hypergraph",
    "catalog",
    "closed_form",
    "complete",
    "compress_set",
    "counterexample",
    "evaluate",
    "evaluate_uniform",
    "gradient",
    "grid_oracle",
    "is_left_compressed",
    "left_compress",
    "max_complete_subgraph",
    "maximize",
    "parse_graph",
    "threshold",
    "verify",
]
