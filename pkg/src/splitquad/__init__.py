"""Quadratic equations a x^2 + b x + c = 0 over the split quaternions with a zero-divisor a."""

from .algebra import (
    I,
    J,
    K,
    ONE,
    ZERO,
    Kind,
    LinearKind,
    LinearSolutionSet,
    SplitQuaternion,
    classify,
    conjugate,
    inner,
    inverse,
    parse_quaternion,
    parse_rational,
    pinv,
    qform,
    solve_linear,
)
from .companion import CompanionReport, QuasiClass, companion_poly, solve_via_companion
from .errors import (
    IdenticallyZero,
    NotInvertible,
    NotNormalized,
    NotZeroDivisor,
    ParseError,
    SplitQuadError,
    Unsupported,
    WrongBranch,
)
from .realroots import RealPoly, real_roots
from .sets import Family, Shape, SolutionSet
from .solver import Analysis, NormalizedEquation, QuadEquation, analyze, normalize, solve, solve_pure_quadratic
from .verify import GridSpec, brute_force_roots, check_solution_set, residual

__all__ = [
    "Analysis", "CompanionReport", "Family", "GridSpec", "I", "IdenticallyZero", "J", "K", "Kind",
    "LinearKind", "LinearSolutionSet", "NormalizedEquation", "NotInvertible", "NotNormalized",
    "NotZeroDivisor", "ONE", "ParseError", "QuadEquation", "QuasiClass", "RealPoly", "Shape",
    "SolutionSet", "SplitQuadError", "SplitQuaternion", "Unsupported", "WrongBranch", "ZERO",
    "analyze", "brute_force_roots", "check_solution_set", "classify", "companion_poly", "conjugate",
    "inner", "inverse", "normalize", "parse_quaternion", "parse_rational", "pinv", "qform",
    "real_roots", "residual", "solve", "solve_linear", "solve_pure_quadratic", "solve_via_companion",
]
