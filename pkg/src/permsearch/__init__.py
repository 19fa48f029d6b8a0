"""Backtrack search for permutation groups over stacks of labelled digraphs.

The package finds the set of permutations satisfying a conjunction of
constraints (set and partition stabilisers and transporters, digraph
isomorphisms, centralisers, group and coset memberships), returning
single elements, full enumerations, or a base and strong generating set.
Pruning works on stacks of vertex- and arc-labelled digraphs refined to
equitable partitions, with selectable coset approximators trading time
per node against tree size.
"""

from . import labels
from .approx import FULL, STRONG, WEAK, Approximator, CosetApprox, approximate_iso, fixed_points
from .bench import (
    ProblemSpec,
    grid_problem,
    grid_suite,
    report_json,
    rows_to_csv,
    run_problem,
    run_suite,
    subdirect_problem,
    subdirect_suite,
    summarize,
    wreath_problem,
    wreath_suite,
)
from .canon import CanonResult, DegreeCapExceeded, automorphism_group, canonical_form
from .chain import StabChain, orbit_of, orbits, pointwise_stabilizer, tuple_transporter
from .digraphs import Digraph, Stack, orbital_graph, point_marker, single
from .equitable import equitable_partition, is_equitable
from .oracle import OracleCapExceeded, brute_iso_stacks, brute_solve
from .perms import Perm, format_cycles, parse_cycles, perm_from_images_1based, perm_to_images_1based
from .refiners import (
    Centralizer,
    Conjugacy,
    DigraphAuto,
    DigraphIso,
    GroupByGens,
    ListOfSetsStab,
    ListOfSetsTransport,
    RightCoset,
    SetOfSetsStab,
    SetOfSetsTransport,
    SetStab,
    SetTransport,
    constraint_from_json,
)
from .search import (
    MODES,
    BsgsOutcome,
    SearchConfig,
    SearchLimitExceeded,
    SearchOutcome,
    SearchStats,
    refine_pair,
    search_all,
    search_bsgs,
    search_single,
    split_stacks,
)
from .verify import VerifyReport, verify_refiner_law

__version__ = "0.1.0"

__all__ = [
    "labels",
    "WEAK", "STRONG", "FULL",
    "Approximator", "CosetApprox", "approximate_iso", "fixed_points",
    "ProblemSpec", "grid_problem", "grid_suite", "subdirect_problem",
    "subdirect_suite", "wreath_problem", "wreath_suite",
    "run_problem", "run_suite", "summarize", "rows_to_csv", "report_json",
    "CanonResult", "DegreeCapExceeded", "automorphism_group", "canonical_form",
    "StabChain", "orbit_of", "orbits", "pointwise_stabilizer", "tuple_transporter",
    "Digraph", "Stack", "orbital_graph", "point_marker", "single",
    "equitable_partition", "is_equitable",
    "OracleCapExceeded", "brute_iso_stacks", "brute_solve",
    "Perm", "format_cycles", "parse_cycles",
    "perm_from_images_1based", "perm_to_images_1based",
    "Centralizer", "Conjugacy", "DigraphAuto", "DigraphIso", "GroupByGens",
    "ListOfSetsStab", "ListOfSetsTransport", "RightCoset",
    "SetOfSetsStab", "SetOfSetsTransport", "SetStab", "SetTransport",
    "constraint_from_json",
    "MODES", "BsgsOutcome", "SearchConfig", "SearchLimitExceeded",
    "SearchOutcome", "SearchStats",
    "refine_pair", "split_stacks",
    "search_all", "search_bsgs", "search_single",
    "VerifyReport", "verify_refiner_law",
]
