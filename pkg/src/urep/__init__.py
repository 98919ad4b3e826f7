"""Words that represent graphs by avoiding consecutive patterns."""

from urep.graphs import LabeledGraph, complete_graph, induced_subgraph, non_edges, parse_graph, supplement
from urep.represent import ConstructionPlan, ConstructionTrace, VerifyReport, construct, plan, verify
from urep.search import SearchConfig, SearchOutcome, classify_labelings, find_representation, oracle_cross_check
from urep.words import (
    Pattern,
    complement,
    find_matches,
    has_match,
    initial_permutation,
    reduce,
    restrict,
    reverse,
    substitute,
)

__version__ = "0.1.0"

__all__ = [
    "ConstructionPlan",
    "ConstructionTrace",
    "LabeledGraph",
    "Pattern",
    "SearchConfig",
    "SearchOutcome",
    "VerifyReport",
    "classify_labelings",
    "complement",
    "complete_graph",
    "construct",
    "find_matches",
    "find_representation",
    "has_match",
    "induced_subgraph",
    "initial_permutation",
    "non_edges",
    "oracle_cross_check",
    "parse_graph",
    "plan",
    "reduce",
    "restrict",
    "reverse",
    "substitute",
    "supplement",
    "verify",
]
