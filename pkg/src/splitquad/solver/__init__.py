"""Complete solution sets of a x^2 + b x + c = 0 when a is a nonzero zero divisor.

The equation is first brought to canonical form.  With b = 0 it is a pure
quadratic; otherwise solutions split by whether 2 x0 a + b is a zero divisor
(SZ) or invertible (SI), and each part has its own case analysis.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..algebra import SplitQuaternion
from ..sets import SolutionSet
from .branch import BranchData, FixedRealPart
from .normal import NormalizedEquation, QuadEquation, as_normalized, check_normalized, normalize
from .pure import PureQuadratic, solve_pure_quadratic, sqrt_split
from .si import candidate, si_solve, si_solve_pab_nonzero, si_solve_pab_zero, trace_cubic
from .sz import (
    semi_explicit_points,
    sz_solve,
    sz_solve_delta_2b1,
    sz_solve_delta_zero,
    sz_solve_pab_nonzero,
)


@dataclass(frozen=True)
class Part:
    branch: str
    case: str
    solutions: SolutionSet


@dataclass(frozen=True)
class Analysis:
    equation: QuadEquation
    normalized: NormalizedEquation
    parts: tuple[Part, ...]
    data: BranchData | None = None
    fixed: FixedRealPart | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def normalized_solutions(self) -> SolutionSet:
        out = SolutionSet()
        for p in self.parts:
            out = out.union(p.solutions)
        return out

    @property
    def solutions(self) -> SolutionSet:
        """Solutions of the original equation."""
        return self.normalized_solutions.shifted(self.normalized.shift)


def _coerce(eq, b=None, c=None) -> QuadEquation:
    if isinstance(eq, (QuadEquation, NormalizedEquation)):
        return QuadEquation(eq.a, eq.b, eq.c)
    return QuadEquation(eq, b, c)


def analyze(eq, b: SplitQuaternion | None = None, c: SplitQuaternion | None = None) -> Analysis:
    """Solve and keep the case-by-case breakdown."""
    src = _coerce(eq, b, c)
    ne = normalize(*src)
    if not ne.b:
        pure = solve_pure_quadratic(ne.a, ne.c)
        case = "a c = 2 c" if pure.solvable else "a c != 2 c (unsolvable)"
        return Analysis(src, ne, (Part("pure", case, pure.solution_set()),))
    bd = BranchData.of(ne)
    sz_case, sz = sz_solve(ne)
    si_case, si = si_solve(ne)
    return Analysis(
        src,
        ne,
        (Part("SZ", sz_case, sz), Part("SI", si_case, si)),
        bd,
        bd.fixed_real_part() if bd.P_ab != 0 else None,
    )


def solve(eq, b: SplitQuaternion | None = None, c: SplitQuaternion | None = None) -> SolutionSet:
    """All x with a x^2 + b x + c = 0; accepts an equation or three coefficients."""
    return analyze(eq, b, c).solutions


__all__ = [
    "Analysis",
    "BranchData",
    "FixedRealPart",
    "NormalizedEquation",
    "Part",
    "PureQuadratic",
    "QuadEquation",
    "analyze",
    "as_normalized",
    "candidate",
    "check_normalized",
    "normalize",
    "semi_explicit_points",
    "si_solve",
    "si_solve_pab_nonzero",
    "si_solve_pab_zero",
    "solve",
    "solve_pure_quadratic",
    "sqrt_split",
    "sz_solve",
    "sz_solve_delta_2b1",
    "sz_solve_delta_zero",
    "sz_solve_pab_nonzero",
    "trace_cubic",
]
