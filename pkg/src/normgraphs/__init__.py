"""Graphs on the non-trivial elements of finite soluble groups.

Five adjacency relations are supported: normalising (Γ), permuting (Ψ),
commuting (K), Engel (E) and soluble (Σ). Graphs are built on nontrivial
cyclic subgroups and reduced by conjugation orbits, which keeps groups of
order around 10^6 tractable.
"""

from .cyclic_collapse import CyclicSubgroupTable, OrbitDecomposition, build_table, orbits
from .frobenius import FrobeniusStructure, detect_frobenius, disconnection_criterion, predicted_components
from .graph_engine import (
    CollapsedGraph,
    GraphKind,
    ResourceBudgetExceeded,
    build_collapsed_graph,
    collapsed_graph,
    connected_components,
    diameter,
    distance_to_subset,
)
from .group_core import IDENTITY, FiniteGroup, GroupError, SubgroupSet
from .representations import GroupSpec, SpecError, build, load_group, parse_group_spec
from .verifier import SUITES, VerificationReport, default_corpus, run_corpus

__version__ = "0.1.0"

__all__ = [
    "IDENTITY",
    "SUITES",
    "CollapsedGraph",
    "CyclicSubgroupTable",
    "FiniteGroup",
    "FrobeniusStructure",
    "GraphKind",
    "GroupError",
    "GroupSpec",
    "OrbitDecomposition",
    "ResourceBudgetExceeded",
    "SpecError",
    "SubgroupSet",
    "VerificationReport",
    "build",
    "build_collapsed_graph",
    "build_table",
    "collapsed_graph",
    "connected_components",
    "default_corpus",
    "detect_frobenius",
    "diameter",
    "disconnection_criterion",
    "distance_to_subset",
    "load_group",
    "orbits",
    "parse_group_spec",
    "predicted_components",
    "run_corpus",
]
