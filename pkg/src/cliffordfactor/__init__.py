"""Exact factorization of polynomials over quaternions, split quaternions,
dual quaternions and Clifford algebras, plus the kinematic reading of
linear factors."""
from __future__ import annotations

from .algebra import DH, EPS, H, S, DualNumber, algebra_from_name, clifford
from .errors import CliffordFactorError
from .factor import (
    AffineFamily,
    LinearFactorization,
    NoFactorization,
    NoSolution,
    all_factorizations,
    classify_motion,
    czero,
    factor_by_projection,
    factor_generic_motion,
    factor_quadratic_split,
    gfactor,
    quaternion_factorizations,
    unbounded_reduce,
    verify,
)
from .polynomial import AlgebraPolynomial, RealPolynomial, divide, lquo, lrem, mrpf, norm_poly, rquo, rrem
from .realroots import factor_real, quadratic_choices
from .textio import parse_polynomial

__version__ = "0.1.0"

__all__ = [
    "DH", "EPS", "H", "S", "DualNumber", "algebra_from_name", "clifford",
    "CliffordFactorError",
    "AffineFamily", "LinearFactorization", "NoFactorization", "NoSolution",
    "all_factorizations", "classify_motion", "czero", "factor_by_projection",
    "factor_generic_motion", "factor_quadratic_split", "gfactor",
    "quaternion_factorizations", "unbounded_reduce", "verify",
    "AlgebraPolynomial", "RealPolynomial", "divide", "lquo", "lrem", "mrpf",
    "norm_poly", "rquo", "rrem", "factor_real", "quadratic_choices",
    "parse_polynomial",
]
