"""Scalar invariants of a canonical equation that drive the case analysis."""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction

from ..algebra import format_scalar, inner, qform
from .normal import NormalizedEquation


@dataclass(frozen=True)
class FixedRealPart:
    """Quantities for solutions with 2 x0 a + b a zero divisor when P_ab != 0.

    Such solutions have x0 = -I_b / (4 P_ab); x2 and x3 are affine in x1 and
    two scalar conditions (R x1 + L = 0, F = 0) remain.
    """

    x0: Fraction
    k1: Fraction
    k2: Fraction
    m: Fraction
    d1: Fraction
    d2: Fraction
    R: Fraction
    L: Fraction
    F: Fraction

    def to_json(self) -> dict:
        return {f.name: format_scalar(getattr(self, f.name)) for f in fields(self)}


@dataclass(frozen=True)
class BranchData:
    a2: Fraction
    a3: Fraction
    b1: Fraction
    b2: Fraction
    b3: Fraction
    c0: Fraction
    c1: Fraction
    c2: Fraction
    c3: Fraction
    P_ab: Fraction
    P_ac: Fraction
    P_bc: Fraction
    I_b: Fraction
    I_c: Fraction
    delta: Fraction
    t1: Fraction
    t2: Fraction

    @classmethod
    def of(cls, eq: NormalizedEquation) -> BranchData:
        a, b, c = eq.a, eq.b, eq.c
        a2, a3 = a.x2, a.x3
        b1, b2, b3 = b.x1, b.x2, b.x3
        c0, c1, c2, c3 = c
        return cls(
            a2, a3, b1, b2, b3, c0, c1, c2, c3,
            P_ab=inner(a, b),
            P_ac=inner(a, c),
            P_bc=inner(b, c),
            I_b=qform(b),
            I_c=qform(c),
            delta=a2 * b3 - a3 * b2 + b1,
            t1=c2 - c0 * a2 - a3 * c1,
            t2=c3 - c0 * a3 + a2 * c1,
        )

    def fixed_real_part(self) -> FixedRealPart:
        P, d, Ib = self.P_ab, self.delta, self.I_b
        if P == 0:
            raise ValueError("requires P_ab != 0")
        a2, a3, b1, b2, b3 = self.a2, self.a3, self.b1, self.b2, self.b3
        x0 = -Ib / (4 * P)
        k1 = 2 * b2 * d - a3 * Ib
        k2 = -2 * b3 * d - a2 * Ib
        m = 2 * b1 * d - Ib
        t1, t2 = self.t1, self.t2
        d1 = (-P * t1 - d * t2) / m
        d2 = (d * t1 - P * t2) / m
        R = (2 * k1 * d1 - 2 * k2 * d2 + b2 * k1 - b3 * k2 + 2 * (a2 * k1 - a3 * k2) * x0 - m * b1) / m
        L = (
            b2 * d1 + b3 * d2 + d1 * d1 + d2 * d2 + self.c0
            + 2 * (a2 * k2 + a3 * k1 + m) / m * x0 * x0
            + (2 * k2 * d1 + 2 * k1 * d2 + b2 * k2 + b3 * k1 + 2 * a2 * d1 * m + 2 * a3 * d2 * m) / m * x0
        )
        F = (
            (2 * a3 * k2 - 2 * a2 * k1) / m * x0 * x0
            + ((b3 * k2 - b2 * k1) / m + 2 * a3 * d1 - 2 * a2 * d2 + b1) * x0
            + b3 * d1 - b2 * d2 + self.c1
        )
        return FixedRealPart(x0, k1, k2, m, d1, d2, R, L, F)

    def matrix_fixed_real_part(self) -> list[list[Fraction]]:
        """3x3 system in (x1, x2, x3) satisfied when x0 = -I_b/(4 P_ab); it is singular."""
        x0 = -self.I_b / (4 * self.P_ab)
        a2, a3, b1, b2, b3 = self.a2, self.a3, self.b1, self.b2, self.b3
        return [
            [2 * x0, b3 + 2 * a3 * x0, -b2 - 2 * a2 * x0],
            [-a2 * b1 - b3, a2 * b2 + a3 * b3, a2 * b3 - a3 * b2 + b1],
            [-a3 * b1 + b2, a3 * b2 - a2 * b3 - b1, a2 * b2 + a3 * b3],
        ]

    def orthogonal_system(self) -> tuple[list[list[Fraction]], list[Fraction]]:
        """2x4 linear system (A, u) met by every solution when P_ab = 0."""
        a2, a3, b1, b2, b3, d = self.a2, self.a3, self.b1, self.b2, self.b3, self.delta
        A = [
            [b2 - a3 * b1, a2 * b1 + b3, Fraction(0), -d],
            [a2 * b1 + b3, a3 * b1 - b2, d, Fraction(0)],
        ]
        return A, [-self.t1, -self.t2]

    def affine_si_defect(self) -> Fraction:
        """F for the degenerate SI case I_b + 2 P_ac = 0; a family exists iff it is 0."""
        t1, t2, d = self.t1, self.t2, self.delta
        return t1 * t1 + t2 * t2 + (self.b3 * t1 - self.b2 * t2) * d + self.c0 * d * d

    def to_json(self) -> dict:
        return {f.name: format_scalar(getattr(self, f.name)) for f in fields(self)}
