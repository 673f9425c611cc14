"""a x^2 + c = 0 with a = 1 + a2 j + a3 k, and square roots in the split quaternions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..algebra import SplitQuaternion, conjugate, im, qform, sqrt_exact
from ..errors import NotNormalized
from ..expr import Const, Constraint, Var, sqrt
from ..sets import SIGN, Family, Shape, SolutionSet

Number = Union[Fraction, float]


def _positive_roots(q0: Number, iv: Number) -> list[Number]:
    """Positive roots u of u^2 - q0 u - iv/4 = 0."""
    disc = q0 * q0 + iv
    if disc < 0:
        return []
    s = sqrt_exact(disc)
    roots = [(q0 + s) / 2, (q0 - s) / 2]
    out = []
    for u in roots:
        if u > 0 and u not in out:
            out.append(u)
    return out


def sqrt_split(q: SplitQuaternion) -> SolutionSet:
    """Every x with x^2 = q."""
    q0, v = q.x0, im(q)
    points = []
    for u in _positive_roots(q0, qform(v)):
        r = sqrt_exact(u)
        for x0 in (r, -r):
            points.append(SplitQuaternion(x0) + v / (2 * x0) if isinstance(x0, Fraction)
                          else SplitQuaternion(x0) + v.to_float() / (2 * x0))
    families = []
    if not v:
        x1, x2 = Var("x1"), Var("x2")
        arg = x1 ** 2 - x2 ** 2 + q0
        families.append(Family(
            Shape.SQRT_BRANCH, ("x1", "x2"),
            (Const(Fraction(0)), x1, x2, Var(SIGN) * sqrt(arg)),
            (Constraint(arg, ">="),),
            label="pure imaginary square roots",
        ))
    return SolutionSet.of(points, families)


@dataclass(frozen=True)
class PureQuadratic:
    """Outcome for a x^2 + c = 0 with canonical a."""

    a: SplitQuaternion
    c: SplitQuaternion
    solvable: bool

    def roots_for(self, y: SplitQuaternion) -> SolutionSet:
        """Square roots of -c/2 + conj(a) y / 2; every one solves the equation."""
        if not self.solvable:
            return SolutionSet()
        return sqrt_split(-self.c / 2 + conjugate(self.a) * y / 2)

    def default_samples(self) -> SolutionSet:
        out = SolutionSet()
        for y in (SplitQuaternion(0), SplitQuaternion(1)):
            out = out.union(self.roots_for(y))
        return out

    def solution_set(self) -> SolutionSet:
        """The complete solution set in closed form."""
        if not self.solvable:
            return SolutionSet()
        return _complete(self.a, self.c)


def solve_pure_quadratic(a: SplitQuaternion, c: SplitQuaternion) -> PureQuadratic:
    if a.x0 != 1 or a.x1 != 0 or a.x2 ** 2 + a.x3 ** 2 != 1:
        raise NotNormalized(f"{a} is not of the form 1 + a2 j + a3 k with a2^2 + a3^2 = 1")
    return PureQuadratic(a, c, a * c == 2 * c)


def _complete(a: SplitQuaternion, c: SplitQuaternion) -> SolutionSet:
    # With p = a2 x2 + a3 x3 and q = a3 x2 - a2 x3 the equation reduces to
    #   (x0 + p)^2 + q^2 - x1^2 = -c0,   2 x0 (x1 + q) = -c1
    # and x2 = a2 p + a3 q, x3 = a3 p - a2 q.
    a2, a3 = a.x2, a.x3
    c0, c1 = c.x0, c.x1
    x0, x1, x2 = Var("x0"), Var("x1"), Var("x2")
    nonzero = Constraint(x0, "!=")
    families = []
    if c1 == 0:
        arg = x1 ** 2 - x2 ** 2 - c0
        families.append(Family(
            Shape.SQRT_BRANCH, ("x1", "x2"),
            (Const(Fraction(0)), x1, x2, Var(SIGN) * sqrt(arg)),
            (Constraint(arg, ">="),),
            label="zero real part",
        ))
        if c0 <= 0:
            s = sqrt_exact(-c0)
            if isinstance(s, Fraction):
                for r in ([s, -s] if s else [s]):
                    p = r - x0
                    families.append(Family(
                        Shape.AFFINE, ("x0", "x1"),
                        (x0, x1, a2 * p - a3 * x1, a3 * p + a2 * x1),
                        (nonzero,),
                        label="nonzero real part",
                    ))
            else:
                p = Var(SIGN) * sqrt(Const(-c0)) - x0
                families.append(Family(
                    Shape.SQRT_BRANCH, ("x0", "x1"),
                    (x0, x1, a2 * p - a3 * x1, a3 * p + a2 * x1),
                    (nonzero,),
                    label="nonzero real part",
                ))
    else:
        p = Var("p")
        q = x0 * ((x0 + p) ** 2 + c0) / c1 - (c1 / 4) / x0
        families.append(Family(
            Shape.POLY_IN_PARAMS, ("x0", "p"),
            (x0, -q - (c1 / 2) / x0, a2 * p + a3 * q, a3 * p - a2 * q),
            (nonzero,),
            extractors=(("p", a2 * Var("x2") + a3 * Var("x3")),),
            label="nonzero real part",
        ))
    return SolutionSet.of((), families)
