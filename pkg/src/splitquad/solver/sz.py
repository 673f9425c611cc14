"""Solutions x for which 2 x0 a + b is a zero divisor."""

from __future__ import annotations

from fractions import Fraction

from ..algebra import SplitQuaternion
from ..errors import WrongBranch
from ..expr import Const, Constraint, Expr, Var, sqrt
from ..sets import SIGN, Aux, Family, Shape, SolutionSet
from .branch import BranchData
from .normal import NormalizedEquation, as_normalized

ZERO = Const(Fraction(0))


def _data(eq) -> tuple[NormalizedEquation, BranchData]:
    eq = as_normalized(eq)
    if not eq.b:
        raise WrongBranch("linear coefficient is 0; use the pure quadratic solver")
    return eq, BranchData.of(eq)


def sz_solve_pab_nonzero(eq) -> SolutionSet:
    """P_ab != 0: the real part is forced to -I_b / (4 P_ab)."""
    eq, bd = _data(eq)
    if bd.P_ab == 0:
        raise WrongBranch("requires P_ab != 0")
    fx = bd.fixed_real_part()
    if fx.F != 0:
        return SolutionSet()
    x0, k1, k2, m = fx.x0, fx.k1, fx.k2, fx.m

    def point_at(x1):
        return (
            x0,
            x1,
            k1 / m * x1 + k2 / m * x0 + fx.d1,
            -k2 / m * x1 + k1 / m * x0 + fx.d2,
        )

    if fx.R != 0:
        return SolutionSet.of([SplitQuaternion(*point_at(-fx.L / fx.R))])
    if fx.L != 0:
        return SolutionSet()
    fam = Family(Shape.AFFINE, ("x1",), point_at(Var("x1")), label="fixed real part, free x1")
    return SolutionSet.of((), [fam])


def sz_solve_delta_2b1(eq) -> SolutionSet:
    """P_ab = 0, I_b = 0 and delta = 2 b1."""
    eq, bd = _data(eq)
    if bd.P_ab != 0 or bd.I_b != 0 or bd.delta != 2 * bd.b1:
        raise WrongBranch("requires P_ab = 0, I_b = 0 and delta = 2 b1")
    a2, a3, b1, c0, c1, t1, t2 = bd.a2, bd.a3, bd.b1, bd.c0, bd.c1, bd.t1, bd.t2

    def rest(x0, x1):
        return (x0, x1, -a2 * x0 - a3 * x1 - t2 / (2 * b1), -a3 * x0 + a2 * x1 + t1 / (2 * b1))

    s = a2 * t1 + a3 * t2
    if s != 0:
        x0 = (a3 * t1 - a2 * t2 + 2 * c1) * b1 / (2 * s)
        x1 = -(t1 * t1 + t2 * t2 + 2 * b1 * b1 * s + 4 * b1 * b1 * c0) / (4 * b1 * s)
        return SolutionSet.of([SplitQuaternion(*rest(x0, x1))])
    if a2 * t2 - a3 * t1 - 2 * c1 != 0 or t1 * t1 + t2 * t2 + 4 * b1 * b1 * c0 != 0:
        return SolutionSet()
    fam = Family(Shape.AFFINE, ("x0", "x1"), rest(Var("x0"), Var("x1")), label="two free parameters")
    return SolutionSet.of((), [fam])


def _sqrt_of_quadratic(var: Expr, beta: Fraction, gamma: Fraction):
    """sqrt(var^2 - beta var + gamma) as +-linear pieces when it is a perfect square."""
    if beta * beta == 4 * gamma:
        return [var - beta / 2, -(var - beta / 2)], None
    arg = var ** 2 - beta * var + gamma
    return [Var(SIGN) * sqrt(arg)], Constraint(arg, ">=")


def sz_solve_delta_zero(eq) -> SolutionSet:
    """P_ab = 0, I_b = 0 and delta = 0, so b = a b1 i."""
    eq, bd = _data(eq)
    if bd.P_ab != 0 or bd.I_b != 0 or bd.delta != 0:
        raise WrongBranch("requires P_ab = 0, I_b = 0 and delta = 0")
    if eq.a * eq.c != 2 * eq.c:
        return SolutionSet()
    a2, a3, b1, c0, c1 = bd.a2, bd.a3, bd.b1, bd.c0, bd.c1
    x0, x1, x2, x3 = (Var(n) for n in ("x0", "x1", "x2", "x3"))
    families = []

    # zero real part
    if a2 == 0:
        # x1 is free, x2 = -a3 b1/2 + sqrt((x1 + b1/2)^2 - c1^2/b1^2 - c0)
        gamma = b1 * b1 / 4 - c1 * c1 / (b1 * b1) - c0
        roots, dom = _sqrt_of_quadratic(x1, -b1, gamma)
        for r in roots:
            families.append(Family(
                Shape.SQRT_BRANCH if dom else Shape.AFFINE, ("x1",),
                (ZERO, x1, -a3 * b1 / 2 + r, Const(c1 / (a3 * b1))),
                (dom,) if dom else (),
                label="zero real part",
            ))
    else:
        beta = (2 * a3 * c1 + a2 * b1 * b1) / b1
        gamma = (4 * (a2 * a2 * b1 * b1 * c0 + a2 * b1 * b1 * a3 * c1 + c1 * c1) + b1 ** 4 * a2 * a2) / (4 * b1 * b1)
        roots, dom = _sqrt_of_quadratic(x3, beta, gamma)
        for r in roots:
            families.append(Family(
                Shape.SQRT_BRANCH if dom else Shape.AFFINE, ("x3",),
                (ZERO, -b1 / 2 + r / a2, c1 / (a2 * b1) - a3 / a2 * x3, x3),
                (dom,) if dom else (),
                label="zero real part",
            ))

    # nonzero real part, generic: x0 = T is a real root of a quartic in T
    T = Var("T")
    g = a2 * x2 + a3 * x3
    h = a3 * x2 - a2 * x3
    coeffs = (
        -((b1 * g - c1) ** 2) / 4,
        a2 * a3 * b1 * (x2 ** 2 - x3 ** 2) + b1 * (a3 * a3 - a2 * a2) * x2 * x3 - c1 * h,
        g ** 2 + b1 * h + c0 + b1 * b1 / 4,
        2 * g,
        Const(Fraction(1)),
    )
    families.append(Family(
        Shape.SEMI_EXPLICIT, ("x2", "x3"),
        (
            T,
            (a2 * b1 / 2 / T - a3) * x2 + (a3 * b1 / 2 / T + a2) * x3 - (c1 + b1 * T) / (2 * T),
            x2,
            x3,
        ),
        (Constraint(g - c1 / b1, "!="), Constraint(T, "!=")),
        aux=Aux("T", tuple(c if isinstance(c, Expr) else Const(c) for c in coeffs), Var("x0")),
        label="nonzero real part, x0 a quartic root",
    ))

    # nonzero real part on the line a2 x2 + a3 x3 = c1/b1
    q1 = x0 ** 2 / b1 + 2 * c1 / (b1 * b1) * x0 + c1 ** 2 / b1 ** 3 - b1 / 4 + c0 / b1
    families.append(Family(
        Shape.POLY_IN_PARAMS, ("x0",),
        (x0, q1, a2 * c1 / b1 - a3 * b1 / 2 - a3 * q1, a3 * c1 / b1 + a2 * b1 / 2 + a2 * q1),
        (Constraint(x0, "!="),),
        label="nonzero real part, x1 quadratic in x0",
    ))
    return SolutionSet.of((), families)


def semi_explicit_points(eq, x2, x3) -> list[SplitQuaternion]:
    """Points of the quartic-root family for one choice of (x2, x3)."""
    out = []
    for fam in sz_solve_delta_zero(eq).families:
        if fam.shape is Shape.SEMI_EXPLICIT:
            out.extend(fam.evaluate({"x2": x2, "x3": x3}))
    return out


def sz_solve(eq) -> tuple[str, SolutionSet]:
    """Dispatch inside the SZ branch; returns (case name, solutions)."""
    eq, bd = _data(eq)
    if bd.P_ab != 0:
        return "P_ab != 0", sz_solve_pab_nonzero(eq)
    if bd.I_b != 0:
        return "P_ab = 0, I_b != 0 (no SZ solutions)", SolutionSet()
    if bd.delta == 2 * bd.b1:
        return "P_ab = 0, delta = 2 b1", sz_solve_delta_2b1(eq)
    if bd.delta == 0:
        return "P_ab = 0, delta = 0", sz_solve_delta_zero(eq)
    raise AssertionError(f"delta = {bd.delta} is neither 0 nor 2 b1 although I_b = 0 and P_ab = 0")

