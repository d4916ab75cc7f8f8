"""Distinguishing numbers, motion and related certificates for permutation group actions."""

from .distinguish import (
    Coloring,
    count_preserved_colorings,
    distinguishing_number,
    find_2_distinguishing_subset,
    greedy_infinite_coloring,
    minimal_base,
    motion,
    motion_lemma_certify,
    verify_coloring,
)
from .graphs import Graph, automorphism_group, parse_graph
from .perm import FiniteAction, Permutation, enumerate_elements, parse_group, parse_permutation
from .streams import make_stream

__all__ = [
    "Coloring",
    "FiniteAction",
    "Graph",
    "Permutation",
    "automorphism_group",
    "count_preserved_colorings",
    "distinguishing_number",
    "enumerate_elements",
    "find_2_distinguishing_subset",
    "greedy_infinite_coloring",
    "make_stream",
    "minimal_base",
    "motion",
    "motion_lemma_certify",
    "parse_graph",
    "parse_group",
    "parse_permutation",
    "verify_coloring",
]
