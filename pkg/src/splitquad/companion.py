"""Solving through the companion polynomial.

Every root x of p(x) = a x^2 + b x + c lies in a class {re = T/2, I = N}
where x^2 - T x + N divides the real polynomial p(x) * conj(p)(x), and within
that class the equation is linear: (T a + b) x = a N - c.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from . import _linalg
from .algebra import (
    LinearKind,
    LinearSolutionSet,
    SplitQuaternion,
    conjugate,
    format_scalar,
    inner,
    qform,
    solve_linear,
    sqrt_exact,
)
from .expr import Const, Constraint, Var, sqrt
from .realroots import RealPoly, quadratic_divisors
from .sets import SIGN, Family, Shape, SolutionSet
from .solver.normal import QuadEquation

Number = Union[Fraction, float]

FLOAT_TOL = 1e-9


def companion_poly(eq) -> RealPoly:
    """I_a x^4 + 2 P_ab x^3 + (2 P_ac + I_b) x^2 + 2 P_bc x + I_c."""
    a, b, c = eq.a, eq.b, eq.c
    return RealPoly([
        qform(c),
        2 * inner(b, c),
        2 * inner(a, c) + qform(b),
        2 * inner(a, b),
        qform(a),
    ])


@dataclass(frozen=True)
class QuasiClass:
    """All x with 2 re(x) = T and I_x = N."""

    T: Number
    N: Number

    def contains(self, x: SplitQuaternion, tol: float = 0.0) -> bool:
        if tol == 0:
            return 2 * x.x0 == self.T and qform(x) == self.N
        return abs(2 * x.x0 - self.T) <= tol * max(1.0, abs(self.T)) and abs(qform(x) - self.N) <= tol * max(
            1.0, abs(self.N), float(sum(v * v for v in x))
        )

    @property
    def exact(self) -> bool:
        return isinstance(self.T, Fraction) and isinstance(self.N, Fraction)


def _line_family(base: list[Fraction], w: list[Fraction]) -> Family:
    """{base + t w}, reparametrized by the first coordinate that moves."""
    i = next(n for n, v in enumerate(w) if v != 0)
    xi = Var(f"x{i}")
    t = (xi - base[i]) / w[i]
    comps = tuple(xi if n == i else base[n] + w[n] * t for n in range(4))
    return Family(Shape.AFFINE, (f"x{i}",), comps, label="line in the class")


def class_intersect(lin: LinearSolutionSet, q: QuasiClass) -> SolutionSet:
    """Points of an exact linear solution set lying in the class q."""
    if lin.kind is LinearKind.EMPTY:
        return SolutionSet()
    if lin.kind is LinearKind.POINT:
        tol = 0.0 if q.exact and lin.base.is_exact else FLOAT_TOL
        return SolutionSet.of([lin.base] if q.contains(lin.base, tol) else [])
    if not q.exact:
        raise ValueError("affine intersections need an exact class")
    base = list(lin.base)
    dirs = _linalg.column_basis(lin.projector)
    # real part constraint: sum s_i v_i0 = T/2 - base0
    sol = _linalg.solve_affine([[v[0] for v in dirs]], [q.T / 2 - base[0]])
    if sol is None:
        return SolutionSet()
    sp, null = sol
    b1 = [base[r] + sum((sp[i] * dirs[i][r] for i in range(len(dirs))), Fraction(0)) for r in range(4)]
    ws = [[sum((n[i] * dirs[i][r] for i in range(len(dirs))), Fraction(0)) for r in range(4)] for n in null]
    bq = SplitQuaternion(*b1)
    e = qform(bq) - q.N
    if not ws:
        return SolutionSet.of([bq] if e == 0 else [])
    if len(ws) == 1:
        w = SplitQuaternion(*ws[0])
        g, h = qform(w), inner(bq, w)
        if g == 0:
            if h == 0:
                return SolutionSet.of((), [_line_family(b1, ws[0])] if e == 0 else ())
            return SolutionSet.of([bq - w * (e / (2 * h))])
        disc = h * h - g * e
        if disc < 0:
            return SolutionSet()
        s = sqrt_exact(disc)
        ts = [(-h + s) / g, (-h - s) / g] if disc else [-h / g]
        return SolutionSet.of([bq + w * t for t in ts])
    if len(ws) == 3:
        # the whole class: x0 = T/2 and x1^2 - x2^2 - x3^2 = N - T^2/4
        x1, x2 = Var("x1"), Var("x2")
        arg = x1 ** 2 - x2 ** 2 - q.N + q.T * q.T / 4
        fam = Family(
            Shape.SQRT_BRANCH, ("x1", "x2"),
            (Const(q.T / 2), x1, x2, Var(SIGN) * sqrt(arg)),
            (Constraint(arg, ">="),),
            label="whole class",
        )
        return SolutionSet.of((), [fam])
    raise AssertionError(f"unexpected {len(ws)}-dimensional slice of a linear solution set")


@dataclass(frozen=True)
class DivisorReport:
    T: Number
    N: Number
    linear: LinearSolutionSet | None
    solutions: SolutionSet
    note: str = ""

    def to_json(self) -> dict:
        out = {
            "T": format_scalar(self.T),
            "N": format_scalar(self.N),
            "solutions": self.solutions.to_json(),
        }
        if self.linear is not None:
            out["linear"] = self.linear.to_json()
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class CompanionReport:
    applicable: bool
    poly: RealPoly
    divisors: tuple[DivisorReport, ...] = ()
    solutions: SolutionSet = field(default_factory=SolutionSet)

    def to_json(self) -> dict:
        return {
            "applicable": self.applicable,
            "poly": [format_scalar(v) for v in self.poly.coeffs],
            "poly_text": str(self.poly),
            "divisors": [d.to_json() for d in self.divisors],
            "solutions": self.solutions.to_json(),
        }


def _float_divisor(eq, T: float, N: float) -> DivisorReport:
    a, b, c = (v.to_float() for v in eq)
    T, N = float(T), float(N)
    m = a * T + b
    n = qform(m)
    if abs(n) <= FLOAT_TOL * max(1.0, *(abs(v) for v in m)) ** 2:
        return DivisorReport(T, N, None, SolutionSet(), "T a + b is numerically a zero divisor; skipped")
    x = conjugate(m) * (a * N - c) / n
    res = a * x * x + b * x + c
    ok = QuasiClass(T, N).contains(x, 1e-7) and max(abs(v) for v in res) < FLOAT_TOL * max(
        1.0, max(abs(v) for v in x)
    ) ** 2
    return DivisorReport(T, N, None, SolutionSet.of([x] if ok else []))


def solve_via_companion(eq, b=None, c=None) -> CompanionReport:
    if b is not None:
        eq = QuadEquation(eq, b, c)
    poly = companion_poly(eq)
    if poly.is_zero():
        return CompanionReport(False, poly)
    reports = []
    total = SolutionSet()
    for T, N in quadratic_divisors(poly):
        if isinstance(T, Fraction) and isinstance(N, Fraction):
            lin = solve_linear(eq.a * T + eq.b, eq.a * N - eq.c)
            rep = DivisorReport(T, N, lin, class_intersect(lin, QuasiClass(T, N)))
        else:
            rep = _float_divisor(eq, T, N)
        reports.append(rep)
        total = total.union(rep.solutions)
    return CompanionReport(True, poly, tuple(reports), total)
