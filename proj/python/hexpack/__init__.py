"""Finite ball packings on the hexagonal close-packing lattice.

Thin Python surface over the C++ core: lattice geometry, contact graphs,
canonical forms, the bundled reference corpus, summary metrics, and the
exact/greedy/annealing searches. Coordinates are (i, j, k) tuples,
configurations are lists of tuples, structured results are dicts.
"""

from ._core import (
    anneal,
    bound_check,
    canonicalize,
    contact_count,
    contact_graph,
    embedded,
    exact_max_contacts,
    greedy,
    is_contact,
    local_maximality_check,
    metrics_row,
    naive_oracle,
    neighbors,
    pair_form,
    parse_configuration,
    parse_edges,
    serialize_configuration,
    serialize_edges,
    summary_table,
    to_cartesian,
    verify,
)

__all__ = [
    "anneal",
    "bound_check",
    "canonicalize",
    "contact_count",
    "contact_graph",
    "embedded",
    "exact_max_contacts",
    "greedy",
    "is_contact",
    "local_maximality_check",
    "metrics_row",
    "naive_oracle",
    "neighbors",
    "pair_form",
    "parse_configuration",
    "parse_edges",
    "serialize_configuration",
    "serialize_edges",
    "summary_table",
    "to_cartesian",
    "verify",
]

__version__ = "1.0.0"
