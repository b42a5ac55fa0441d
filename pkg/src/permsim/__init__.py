"""Randomized determinant test for permutation similarity and graph isomorphism."""

from .detsim import (CoefficientDraw, Kind, TestParams, Verdict, equality_test, failure_bound,
                     permutation_similarity_test, randomized_f, sample_coefficients,
                     similarity_trial)
from .graphio import Graph, adjacency_matrix, enumerate_graphs, parse_graph6, to_graph6
from .matrix import Matrix, det_exact, det_mod_p
from .oracle import Permutation, apply_permutation, brute_force_similar
from .ring import EXACT, MERSENNE_61, RingConfig

__all__ = [
    "CoefficientDraw", "EXACT", "Graph", "Kind", "MERSENNE_61", "Matrix", "Permutation",
    "RingConfig", "TestParams", "Verdict", "adjacency_matrix", "apply_permutation",
    "brute_force_similar", "det_exact", "det_mod_p", "enumerate_graphs", "equality_test",
    "failure_bound", "parse_graph6", "permutation_similarity_test", "randomized_f",
    "sample_coefficients", "similarity_trial", "to_graph6",
]
