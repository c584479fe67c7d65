"""Hierarchical clustering by quartet-cost tree search.

Thin wrapper around the C++ core: build a cost table from a distance matrix
(or NCD over raw bytes), then search for the tree minimizing the total cost
of its embedded quartet topologies, scored by S(T) in [0, 1].
"""

from ._core import (
    AgreementTimeoutError,
    CapExceededError,
    CostTable,
    DegenerateTableError,
    InputError,
    cost_table,
    count_trees,
    exact_tree,
    make_tree,
    ncd,
    ncd_matrix,
    no_perfect_tree_table,
    random_tree_metric,
    sample_k,
    tag_corpus,
)

__all__ = [
    "AgreementTimeoutError",
    "CapExceededError",
    "CostTable",
    "DegenerateTableError",
    "InputError",
    "cost_table",
    "count_trees",
    "exact_tree",
    "make_tree",
    "ncd",
    "ncd_matrix",
    "no_perfect_tree_table",
    "random_tree_metric",
    "sample_k",
    "tag_corpus",
]
