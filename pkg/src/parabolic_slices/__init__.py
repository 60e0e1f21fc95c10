"""Adapted pairs and Weierstrass-section certificates for truncated maximal parabolics."""

from .cascade import Cascade, kostant_cascade, table1_reference
from .chevalley import LieTable, build_lie_table
from .pairs import NotCovered, PairCandidate, construct_candidate, covered_cases, tableau_C
from .parabolic import ParabolicContext, build_parabolic, epsilon_criterion, polynomiality_verdict
from .rootsys import RootSystem, RootSystemError, build_root_system
from .search import f4_s3_search
from .verify import PairCertificate, certify, generic_index, regularity_certificate

__version__ = "0.1.0"

__all__ = [
    "Cascade",
    "LieTable",
    "NotCovered",
    "PairCandidate",
    "PairCertificate",
    "ParabolicContext",
    "RootSystem",
    "RootSystemError",
    "build_lie_table",
    "build_parabolic",
    "build_root_system",
    "certify",
    "construct_candidate",
    "covered_cases",
    "epsilon_criterion",
    "f4_s3_search",
    "generic_index",
    "kostant_cascade",
    "polynomiality_verdict",
    "regularity_certificate",
    "table1_reference",
    "tableau_C",
]
