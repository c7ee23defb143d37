"""Splitting of the torus normalizer: classification, constructions, and oracles."""

from .construct import check_relations, construct_complement, generators_by_name
from .obstruction import CLAUSES, default_clause, obstruction_check
from .oracle import BruteForceResult, brute_force_split, subgroup_closure, verify_complement
from .verdict import ComplementCertificate, ObstructionWitness, Verdict, classify, classify_algebraic

__all__ = [
    "BruteForceResult", "CLAUSES", "ComplementCertificate", "ObstructionWitness", "Verdict",
    "brute_force_split", "check_relations", "classify", "classify_algebraic", "construct_complement",
    "default_clause", "generators_by_name", "obstruction_check", "subgroup_closure", "verify_complement",
]
