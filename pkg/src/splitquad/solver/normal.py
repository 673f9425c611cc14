"""Equations a x^2 + b x + c = 0 and their canonical form.

Any zero-divisor leading coefficient can be brought to a = 1 + a2 j + a3 k
(a2^2 + a3^2 = 1) with a purely imaginary linear coefficient by a left
multiplication and a real shift of the unknown.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..algebra import Kind, SplitQuaternion, classify, inverse
from ..errors import NotNormalized, NotZeroDivisor, Unsupported


@dataclass(frozen=True)
class QuadEquation:
    a: SplitQuaternion
    b: SplitQuaternion
    c: SplitQuaternion

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def evaluate(self, x: SplitQuaternion) -> SplitQuaternion:
        return self.a * x * x + self.b * x + self.c

    def to_json(self) -> dict:
        return {"a": self.a.to_json(), "b": self.b.to_json(), "c": self.c.to_json()}

    def __str__(self) -> str:
        return f"({self.a}) x^2 + ({self.b}) x + ({self.c})"


@dataclass(frozen=True)
class NormalizedEquation:
    """Canonical a, b, c; the source unknown is x - shift."""

    a: SplitQuaternion
    b: SplitQuaternion
    c: SplitQuaternion
    shift: Fraction = Fraction(0)

    def __post_init__(self):
        check_normalized(self.a, self.b)

    @property
    def equation(self) -> QuadEquation:
        return QuadEquation(self.a, self.b, self.c)

    @property
    def a2(self) -> Fraction:
        return self.a.x2

    @property
    def a3(self) -> Fraction:
        return self.a.x3


def check_normalized(a: SplitQuaternion, b: SplitQuaternion) -> None:
    if a.x0 != 1 or a.x1 != 0 or a.x2 ** 2 + a.x3 ** 2 != 1:
        raise NotNormalized(f"leading coefficient {a} is not of the form 1 + a2 j + a3 k with a2^2 + a3^2 = 1")
    if b.x0 != 0:
        raise NotNormalized(f"linear coefficient {b} is not purely imaginary")


def require_zero_divisor(d: SplitQuaternion) -> None:
    kind = classify(d)
    if kind is Kind.INVERTIBLE:
        raise Unsupported(
            f"leading coefficient {d} is invertible; only the companion path "
            "(solve_via_companion) handles that case"
        )
    if kind is Kind.ZERO:
        raise NotZeroDivisor("leading coefficient is 0; the equation is not quadratic")


def normalize(d: SplitQuaternion, e: SplitQuaternion, f: SplitQuaternion) -> NormalizedEquation:
    """Canonical form of d y^2 + e y + f = 0; solutions are y = x - shift."""
    require_zero_divisor(d)
    # d = d1 + d2 j with d1 = d0 + d1' i; d1 is nonzero because I_d = |d1|^2 - |d2|^2 = 0
    d1 = SplitQuaternion(d.x0, d.x1)
    d1inv = inverse(d1)
    a = d1inv * d
    de = d1inv * e
    k0 = de.x0
    b = de - k0 * a
    c = d1inv * f - de * (k0 / 2) + a * (k0 * k0 / 4)
    return NormalizedEquation(a, b, c, k0 / 2)


def is_normalized(eq: QuadEquation) -> bool:
    try:
        check_normalized(eq.a, eq.b)
    except NotNormalized:
        return False
    return True


def as_normalized(eq: QuadEquation | NormalizedEquation) -> NormalizedEquation:
    if isinstance(eq, NormalizedEquation):
        return eq
    if is_normalized(eq):
        return NormalizedEquation(eq.a, eq.b, eq.c)
    raise NotNormalized("equation is not in canonical form; call normalize() first")

