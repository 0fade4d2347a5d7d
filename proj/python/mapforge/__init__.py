"""Combinatorial map engine: embeddings, map groups, censuses."""

from ._core import (
    BudgetError,
    Graph,
    InputError,
    Map,
    O20,
    P10,
    automorphisms,
    bouquet_class_counts,
    bouquet_genus_recursion,
    bouquet_rooted_recursion,
    burnside_count,
    census,
    classify,
    count_embeddings,
    genus_distribution,
    genus_poly,
    graph,
    hurwitz_bounds,
    kn_counts,
    lift,
    lift_with_deck,
    orbit_partition,
    quotient,
    rooted_poly,
    semiarc_aut_order,
    subdivide,
)

__all__ = [
    "BudgetError",
    "Graph",
    "InputError",
    "Map",
    "O20",
    "P10",
    "automorphisms",
    "bouquet_class_counts",
    "bouquet_genus_recursion",
    "bouquet_rooted_recursion",
    "burnside_count",
    "census",
    "classify",
    "count_embeddings",
    "genus_distribution",
    "genus_poly",
    "graph",
    "hurwitz_bounds",
    "kn_counts",
    "lift",
    "lift_with_deck",
    "orbit_partition",
    "quotient",
    "rooted_poly",
    "semiarc_aut_order",
    "subdivide",
]
