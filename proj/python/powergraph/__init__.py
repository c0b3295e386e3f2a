"""Finite windows of power graphs of torsion-free abelian groups."""

from ._core import (
    Graph,
    adjacent,
    arc,
    automorphism_orbits,
    build_window,
    classify_cardinality,
    classify_edge_exact,
    classify_edge_window,
    cli,
    components,
    divisors,
    emit_dot,
    emit_tsv,
    equivalence_witness,
    factorize,
    g_p,
    heights_equivalent,
    height_contains,
    identity,
    involution_phi,
    maximal_cyclic_generator,
    negate,
    neighborhood_complement_split,
    parse_height_file,
    parse_tsv,
    power_graph,
    prime_swap,
    recover_orientation,
    s_set_exact,
    s_set_window,
    same_component,
    scale_height,
    serialize_height_file,
    valuation,
    verify,
)

__all__ = [
    "Graph",
    "adjacent",
    "arc",
    "automorphism_orbits",
    "build_window",
    "classify_cardinality",
    "classify_edge_exact",
    "classify_edge_window",
    "cli",
    "components",
    "divisors",
    "emit_dot",
    "emit_tsv",
    "equivalence_witness",
    "factorize",
    "g_p",
    "heights_equivalent",
    "height_contains",
    "identity",
    "involution_phi",
    "maximal_cyclic_generator",
    "negate",
    "neighborhood_complement_split",
    "parse_height_file",
    "parse_tsv",
    "power_graph",
    "prime_swap",
    "recover_orientation",
    "s_set_exact",
    "s_set_window",
    "same_component",
    "scale_height",
    "serialize_height_file",
    "valuation",
    "verify",
]
