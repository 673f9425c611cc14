"""Solutions x for which 2 x0 a + b is invertible.

For such x, with T = 2 x0 and N = I_x, the equation is linear:
x = (T a + b)^{-1} (a N - c), and (T, N) solve a small real system.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from ..algebra import SplitQuaternion, conjugate, qform
from ..errors import WrongBranch
from ..expr import Var
from ..realroots import RealPoly, real_roots
from ..sets import Family, Shape, SolutionSet
from .branch import BranchData
from .normal import NormalizedEquation, as_normalized

Number = Union[Fraction, float]

FLOAT_TOL = 1e-9


def _data(eq) -> tuple[NormalizedEquation, BranchData]:
    eq = as_normalized(eq)
    if not eq.b:
        raise WrongBranch("linear coefficient is 0; use the pure quadratic solver")
    return eq, BranchData.of(eq)


def candidate(eq: NormalizedEquation, T: Number, N: Number) -> SplitQuaternion | None:
    """(T a + b)^{-1} (a N - c) when T a + b is invertible and the result is consistent."""
    a, b, c = eq.a, eq.b, eq.c
    exact = isinstance(T, Fraction) and isinstance(N, Fraction)
    if not exact:
        a, b, c = a.to_float(), b.to_float(), c.to_float()
        T, N = float(T), float(N)
    m = a * T + b
    n = qform(m)
    scale = max(1.0, *(abs(float(v)) for v in m)) ** 2
    if n == 0 or (not exact and abs(n) <= FLOAT_TOL * scale):
        return None
    x = conjugate(m) * (a * N - c) / n
    if exact:
        ok = not (a * x * x + b * x + c) and 2 * x.x0 == T and qform(x) == N
    else:
        res = a * x * x + b * x + c
        ok = (
            max(abs(v) for v in res) < FLOAT_TOL * max(1.0, max(abs(v) for v in x)) ** 2
            and abs(2 * x.x0 - T) < 1e-7 * max(1.0, abs(T))
            and abs(qform(x) - N) < 1e-7 * max(1.0, abs(N))
        )
    return x if ok else None


def trace_cubic(bd: BranchData) -> RealPoly:
    P, Q = bd.P_ab, 2 * bd.P_ac + bd.I_b
    return RealPoly([
        2 * bd.P_bc * Q - 2 * P * bd.I_c,
        4 * P * bd.P_bc + Q * Q,
        4 * P * Q,
        4 * P * P,
    ])


def si_solve_pab_nonzero(eq) -> SolutionSet:
    """P_ab != 0: T runs over real roots of a cubic, N is then determined."""
    eq, bd = _data(eq)
    if bd.P_ab == 0:
        raise WrongBranch("requires P_ab != 0")
    P, Q = bd.P_ab, 2 * bd.P_ac + bd.I_b
    points = []
    for T in real_roots(trace_cubic(bd)).values():
        N = (2 * P * T * T + Q * T + 2 * bd.P_bc) / (2 * P)
        x = candidate(eq, T, N)
        if x is not None:
            points.append(x)
    return SolutionSet.of(points)


def si_solve_pab_zero(eq) -> SolutionSet:
    """P_ab = 0: (T, N) in closed form, or a two-parameter family in the degenerate case."""
    eq, bd = _data(eq)
    if bd.P_ab != 0:
        raise WrongBranch("requires P_ab = 0")
    if bd.I_b == 0:
        return SolutionSet()
    denom = bd.I_b + 2 * bd.P_ac
    if denom != 0:
        N = bd.I_c / denom
        T = -2 * bd.P_bc / denom
        x = candidate(eq, T, N)
        return SolutionSet.of([x] if x is not None else [])
    if bd.I_c != 0 or bd.P_bc != 0 or bd.affine_si_defect() != 0:
        return SolutionSet()
    a2, a3, b1, b2, b3, d = bd.a2, bd.a3, bd.b1, bd.b2, bd.b3, bd.delta
    x0, x1 = Var("x0"), Var("x1")
    u, v = (a2 * b1 + b3) / d, (a3 * b1 - b2) / d
    fam = Family(
        Shape.AFFINE, ("x0", "x1"),
        (x0, x1, -bd.t2 / d - u * x0 - v * x1, bd.t1 / d - v * x0 + u * x1),
        label="two free parameters",
    )
    return SolutionSet.of((), [fam])


def si_solve(eq) -> tuple[str, SolutionSet]:
    eq, bd = _data(eq)
    if bd.P_ab != 0:
        return "P_ab != 0", si_solve_pab_nonzero(eq)
    if bd.I_b == 0:
        return "P_ab = 0, I_b = 0 (no SI solutions)", SolutionSet()
    if bd.I_b + 2 * bd.P_ac != 0:
        return "P_ab = 0, I_b + 2 P_ac != 0", si_solve_pab_zero(eq)
    return "P_ab = 0, I_b + 2 P_ac = 0", si_solve_pab_zero(eq)
