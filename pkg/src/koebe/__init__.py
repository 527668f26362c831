"""Koebe-domain boundary radii and distortion bounds for starlike functions
of complex order under the interior fixed-point (Montel) normalization."""

from .bounds import BoundPair, candidate_ratio, growth_bounds, transplant, two_point_bounds
from .candidates import (CandidateFunction, CandidateKind, evaluate, extremal,
                         identity, log_derivative, rotated_extremal,
                         starlikeness_functional)
from .complex_core import (BoundaryPoint, DegenerateInputError, DiskPoint,
                           DomainError, OrderParameter, mobius_shift,
                           mobius_unshift, pos_power, principal_power)
from .domain import (EPSILON_LADDER, KoebeProfile, MontelConfig, SpecialCase,
                     boundary_profile, koebe_radius, limit_gaps, montel_lower,
                     montel_upper, special_case_radius)
from .verify import (VerificationReport, verify_growth, verify_limit,
                     verify_starlikeness, verify_two_point)

__version__ = "0.1.0"

__all__ = [
    "BoundPair", "BoundaryPoint", "CandidateFunction", "CandidateKind",
    "DegenerateInputError", "DiskPoint", "DomainError", "EPSILON_LADDER",
    "KoebeProfile", "MontelConfig", "OrderParameter", "SpecialCase",
    "VerificationReport", "boundary_profile", "candidate_ratio", "evaluate",
    "extremal", "growth_bounds", "identity", "koebe_radius", "limit_gaps",
    "log_derivative", "mobius_shift", "mobius_unshift", "montel_lower",
    "montel_upper", "pos_power", "principal_power", "rotated_extremal",
    "special_case_radius", "starlikeness_functional", "transplant",
    "two_point_bounds", "verify_growth", "verify_limit",
    "verify_starlikeness", "verify_two_point",
]
