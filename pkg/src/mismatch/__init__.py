"""Mismatch norms between aligned graphs, exact distance solvers, hardness gadgets and Latin square tools."""

from .graph import (
    Alignment, AlignmentError, Graph, GraphError, NormValue, SignedGraph, check_regular_balance, degree_profile,
    mismatch_graph, regular_degree, spectrum,
)
from .norms import MmcValue, mmc, mmc_sandwich, mu_abs_p, mu_edit, mu_p
from .solvers import (
    DistanceQuery, DistanceResult, RestrictedFamily, SearchBudgetExceeded, SolverError, conservative_search,
    delta_branch_and_bound, delta_exhaustive, delta_restricted, min_mmc_restricted, solve,
)
from .gadgets import build_dnq, build_gq, build_hat, build_hk, verify_mismatch_structure
from .latin import GroupTable, LatinSquare, detect_srg, latin_square_graph, twinned_alignment
from .verify import CLAIMS, VerificationReport, run_claim

__version__ = "0.1.0"

__all__ = [
    "Alignment", "AlignmentError", "Graph", "GraphError", "NormValue", "SignedGraph", "check_regular_balance",
    "degree_profile", "mismatch_graph", "regular_degree", "spectrum",
    "MmcValue", "mmc", "mmc_sandwich", "mu_abs_p", "mu_edit", "mu_p",
    "DistanceQuery", "DistanceResult", "RestrictedFamily", "SearchBudgetExceeded", "SolverError",
    "conservative_search", "delta_branch_and_bound", "delta_exhaustive", "delta_restricted", "min_mmc_restricted",
    "solve", "build_dnq", "build_gq", "build_hat", "build_hk", "verify_mismatch_structure",
    "GroupTable", "LatinSquare", "detect_srg", "latin_square_graph", "twinned_alignment",
    "CLAIMS", "VerificationReport", "run_claim",
]
