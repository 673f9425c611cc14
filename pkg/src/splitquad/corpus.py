"""Worked equations with independently written expected answers.

Expected sets are typed in from the published statements, in their own
parametrizations, and compared with solver output by mutual membership.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .algebra import SplitQuaternion, parse_quaternion
from .companion import solve_via_companion
from .expr import Const, Constraint, Var, sqrt
from .realroots import RealPoly
from .sets import SIGN, Aux, Family, Shape, SolutionSet
from .solver import QuadEquation, analyze, semi_explicit_points
from .verify import check_solution_set

F = Fraction
Q = parse_quaternion
X0, X1, X2, X3, T = (Var(n) for n in ("x0", "x1", "x2", "x3", "T"))
ZERO = Const(F(0))

FLOAT_MATCH = 5e-4
SAMPLES = 50


def same_set(expected: SolutionSet, actual: SolutionSet, samples: int = SAMPLES, seed: int = 7) -> list[str]:
    """Differences between two solution sets; empty when they agree."""
    rng = random.Random(seed)
    problems = []
    if expected.dim != actual.dim:
        problems.append(f"dimension {actual.dim} != expected {expected.dim}")
    for name, src, dst in (("expected", expected, actual), ("solver", actual, expected)):
        for p in src.points:
            if not dst.contains(p):
                problems.append(f"{name} point {p} missing from the other set")
        for fam in src.families:
            pts = fam.sample(rng, samples)
            if fam.params and not pts:
                problems.append(f"{name} family {fam.label!r} produced no samples")
            for p in pts:
                if not dst.contains(p):
                    problems.append(f"{name} family {fam.label!r} member {p} missing from the other set")
                    break
    return problems


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class CorpusResult:
    id: str
    title: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "title": self.title,
            "passed": self.passed,
            "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in self.checks],
        }


@dataclass
class Entry:
    id: str
    title: str
    equation: QuadEquation
    expected: SolutionSet | None = None
    branch: str = "all"
    extra: tuple[Callable[[Entry], list[Check]], ...] = ()

    def solutions(self) -> SolutionSet:
        an = analyze(self.equation)
        if self.branch == "all":
            return an.solutions
        out = SolutionSet()
        for part in an.parts:
            if part.branch == self.branch:
                out = out.union(part.solutions)
        return out.shifted(an.normalized.shift)

    def run(self) -> CorpusResult:
        res = CorpusResult(self.id, self.title)
        try:
            got = self.solutions()
            if self.expected is not None:
                diff = same_set(self.expected, got)
                res.checks.append(Check(f"solutions ({self.branch})", not diff, "; ".join(diff[:3])))
                rep = check_solution_set(self.equation, got, samples=20)
                res.checks.append(Check("residuals", rep.sound, "; ".join(str(x) for x, _ in rep.unsound[:3])))
            for fn in self.extra:
                res.checks.extend(fn(self))
        except Exception as exc:  # report, do not abort the whole corpus
            res.checks.append(Check("run", False, f"{type(exc).__name__}: {exc}"))
        return res


def eq(a: str, b: str, c: str) -> QuadEquation:
    return QuadEquation(Q(a), Q(b), Q(c))


def points(*texts: str) -> SolutionSet:
    return SolutionSet.of([Q(t) for t in texts])


def fam(params, comps, constraints=(), shape=Shape.AFFINE, aux=None, label="") -> Family:
    return Family(shape, tuple(params), tuple(comps), tuple(constraints), aux=aux, label=label)


def _equal_values(name: str, got: dict, want: dict) -> Check:
    bad = {k: (got[k], v) for k, v in want.items() if got[k] != v}
    return Check(name, not bad, ", ".join(f"{k}={g} (want {w})" for k, (g, w) in bad.items()))


def check_fixed_part(**want) -> Callable[[Entry], list[Check]]:
    def run(entry: Entry) -> list[Check]:
        fx = analyze(entry.equation).fixed
        got = {k: getattr(fx, k) for k in want}
        return [_equal_values("fixed real part quantities", got, {k: F(v) for k, v in want.items()})]

    return run


def check_branch_data(**want) -> Callable[[Entry], list[Check]]:
    def run(entry: Entry) -> list[Check]:
        bd = analyze(entry.equation).data
        got = {k: getattr(bd, k) for k in want}
        return [_equal_values("branch quantities", got, {k: F(v) for k, v in want.items()})]

    return run


def check_float_points(x2, x3, want_T, want_points) -> Callable[[Entry], list[Check]]:
    def run(entry: Entry) -> list[Check]:
        pts = semi_explicit_points(analyze(entry.equation).normalized, F(x2), F(x3))
        Ts = sorted(float(p.x0) for p in pts)
        ok_T = len(Ts) == len(want_T) and all(abs(u - v) <= FLOAT_MATCH for u, v in zip(Ts, sorted(want_T)))
        ok_pts = len(pts) == len(want_points) and all(
            any(all(abs(float(u) - v) <= FLOAT_MATCH for u, v in zip(p, w)) for p in pts) for w in want_points
        )
        shown = ", ".join(str(p) for p in pts)
        return [
            Check(f"quartic roots at (x2, x3) = ({x2}, {x3})", ok_T, f"T = {Ts}"),
            Check("points at that parameter choice", ok_pts, shown),
        ]

    return run


def check_companion(coeffs, pairs, expected: SolutionSet | None) -> Callable[[Entry], list[Check]]:
    def run(entry: Entry) -> list[Check]:
        rep = solve_via_companion(entry.equation)
        out = [Check("companion polynomial", rep.poly == RealPoly([F(c) for c in coeffs]), str(rep.poly))]
        if not rep.applicable:
            out.append(Check("companion applicable", False, "polynomial vanishes"))
            return out
        got = sorted((d.T, d.N) for d in rep.divisors)
        want = sorted((F(t), F(n)) for t, n in pairs)
        out.append(Check("quadratic divisors", got == want, str(got)))
        diff = same_set(analyze(entry.equation).solutions, rep.solutions)
        out.append(Check("agrees with direct solver", not diff, "; ".join(diff[:3])))
        if expected is not None:
            diff = same_set(expected, rep.solutions)
            out.append(Check("companion solutions", not diff, "; ".join(diff[:3])))
        return out

    return run


def check_vanishing(entry: Entry) -> list[Check]:
    rep = solve_via_companion(entry.equation)
    return [Check("companion polynomial identically zero", not rep.applicable, str(rep.poly))]


def check_pure_at_y_one(entry: Entry) -> list[Check]:
    from .solver import solve_pure_quadratic

    an = analyze(entry.equation)
    pure = solve_pure_quadratic(an.normalized.a, an.normalized.c)
    got = SolutionSet.of((), pure.roots_for(SplitQuaternion(1)).families)
    diff = same_set(SolutionSet.of((), [_unit_quadric()]), got)
    return [Check("square roots at y = 1 (zero real part)", not diff, "; ".join(diff[:3]))]


def _unit_quadric() -> Family:
    arg = 1 + X1 ** 2 - X2 ** 2
    return fam(("x1", "x2"), (ZERO, X1, X2, Var(SIGN) * sqrt(arg)), [Constraint(arg, ">=")],
               Shape.SQRT_BRANCH, label="-x1^2 + x2^2 + x3^2 = 1")


def _x0_free(x1_of_x0, x2, x3, label) -> Family:
    return fam(("x0",), (X0, x1_of_x0, x2, x3), [Constraint(X0, "!=")], Shape.POLY_IN_PARAMS, label=label)


def _semi(quartic, x1, guard, label) -> Family:
    return fam(("x2", "x3"), (T, x1, X2, X3), [guard, Constraint(T, "!=")], Shape.SEMI_EXPLICIT,
               aux=Aux("T", tuple(quartic), X0), label=label)


def _entries() -> list[Entry]:
    line = fam(("x1",), (ZERO, X1, X1, Const(F(1))), label="x1 i + x1 j + k")
    q1 = X0 ** 2 + 4 * X0 + F(19, 4)
    q2 = -X0 ** 2 + 2 * X0 + F(1, 4)
    arg35 = X1 ** 2 + X1 - F(19, 4)
    return [
        Entry(
            "pure-quadratic",
            "(1+j)x^2 - 1 - j = 0: no linear term",
            eq("1+j", "0", "-1-j"),
            SolutionSet.of((), [
                _unit_quadric(),
                fam(("x0", "x1"), (X0, X1, 1 - X0, X1), [Constraint(X0, "!=")], label="(1 - x0) j"),
                fam(("x0", "x1"), (X0, X1, -1 - X0, X1), [Constraint(X0, "!=")], label="(-1 - x0) j"),
            ]),
            extra=(check_pure_at_y_one,),
        ),
        Entry(
            "sz-fixed-real-part-point",
            "fixed real part, single point",
            eq("1+j", "i+2j+k", "-1/4+5/2i+3/4j+5/2k"),
            points("-1/2+i+k"),
            extra=(
                check_fixed_part(x0=F(-1, 2), k1=8, k2=0, d1=-1, d2=F(3, 2), m=8, R=-2, L=2, F=0),
                check_companion((F(-1, 2), -3, -6, -4), [(-1, F(1, 4))], points("-1/2+i+k")),
            ),
        ),
        Entry(
            "sz-fixed-real-part-line",
            "fixed real part, one free parameter (SZ part only)",
            eq("1+j", "i+j", "-1+i"),
            SolutionSet.of((), [line]),
            branch="SZ",
            extra=(check_fixed_part(x0=0, k1=2, k2=0, d1=0, d2=1, m=2, R=0, L=0, F=0),),
        ),
        Entry(
            "si-cubic-point",
            "cubic in the trace; together with the line above gives the full set",
            eq("1+j", "i+j", "-1+i"),
            points("-1"),
            branch="SI",
        ),
        Entry(
            "union-line-and-point",
            "full solution set: a point and a line",
            eq("1+j", "i+j", "-1+i"),
            SolutionSet.of([Q("-1")], [line]),
            extra=(check_companion((2, 2, -2, -2), [(-2, 1), (0, -1)], SolutionSet.of([Q("-1")], [line])),),
        ),
        Entry(
            "sz-isotropic-point",
            "isotropic linear term, single point",
            eq("1+j", "i+k", "1-i"),
            points("1/2+i+1/2k"),
            extra=(
                check_branch_data(t1=-1, t2=-1),
                check_companion((2, -2, 2), [(1, 1)], points("1/2+i+1/2k")),
            ),
        ),
        Entry(
            "sz-isotropic-plane",
            "isotropic linear term, two free parameters",
            eq("1+j", "i+k", "-1+i-j+k"),
            SolutionSet.of((), [fam(("x0", "x1"), (X0, X1, -1 - X0, X1), label="x0 + x1 i - (1 + x0) j + x1 k")]),
            extra=(check_branch_data(t1=0, t2=2), check_vanishing),
        ),
        Entry(
            "sz-quartic-a2-zero",
            "b = a b1 i with a = 1 + k: square-root branch and quartic-root family",
            eq("1+k", "i+j", "1+2i+2j+k"),
            SolutionSet.of((), [
                fam(("x1",), (ZERO, X1, -F(1, 2) - Var(SIGN) * sqrt(arg35), Const(F(2))),
                    [Constraint(arg35, ">=")], Shape.SQRT_BRANCH, label="zero real part"),
                _semi(
                    (-(X3 - 2) ** 2 / 4, X2 * X3 - 2 * X2, X3 ** 2 + X2 + F(5, 4), 2 * X3, Const(F(1))),
                    -X2 + X3 / (2 * T) - (2 + T) / (2 * T),
                    Constraint(X3 - 2, "!="),
                    "x0 a quartic root",
                ),
                _x0_free(q1, -(q1 + F(1, 2)), Const(F(2)), "x3 = 2"),
            ]),
            extra=(
                check_float_points(1, 1, [0.3914, -0.1675], [(0.3914, -2.7773, 1, 1), (-0.1675, 1.4857, 1, 1)]),
                check_vanishing,
            ),
        ),
        Entry(
            "sz-quartic-a2-nonzero",
            "b = a b1 i with a = 1 + j: two lines, quartic-root family, parabola",
            eq("1+j", "-i+k", "-1+i-j-k"),
            SolutionSet.of((), [
                fam(("x3",), (ZERO, 1 + X3, Const(F(-1)), X3), label="(1 + x3) i - j + x3 k"),
                fam(("x3",), (ZERO, -X3, Const(F(-1)), X3), label="-x3 i - j + x3 k"),
                _semi(
                    (-(X2 + 1) ** 2 / 4, X2 * X3 + X3, X2 ** 2 + X3 - F(3, 4), 2 * X2, Const(F(1))),
                    -X2 / (2 * T) + X3 + (T - 1) / (2 * T),
                    Constraint(X2 + 1, "!="),
                    "x0 a quartic root",
                ),
                _x0_free(q2, Const(F(-1)), q2 - F(1, 2), "x2 = -1"),
            ]),
            extra=(
                check_float_points(1, 1, [-2, 0.3620], [(-2, 2, 1, 1), (0.3620, -1.2621, 1, 1)]),
                check_vanishing,
            ),
        ),
        Entry(
            "si-closed-form-point",
            "P_ab = 0 with I_b + 2 P_ac != 0",
            eq("1+j", "2i+k", "1+i+2j+k"),
            points("-1+17/3i+1/3j+6k"),
            extra=(check_companion((-3, 2, 1), [(-2, -3)], points("-1+17/3i+1/3j+6k")),),
        ),
        Entry(
            "si-affine-plane",
            "P_ab = 0 with I_b + 2 P_ac = 0: two free parameters",
            eq("1+j", "2i+k", "-3/4+3/4j"),
            SolutionSet.of((), [fam(("x0", "x1"), (X0, X1, -X0, X1 + F(1, 2)), label="x0 + x1 i - x0 j + (x1 + 1/2) k")]),
            extra=(check_branch_data(delta=3, t1=F(3, 2), t2=0), check_vanishing),
        ),
        Entry(
            "companion-vanishing",
            "a companion polynomial that vanishes identically",
            eq("1+j", "-i+k", "-1+i-j-k"),
            extra=(check_vanishing,),
        ),
    ]


ENTRIES: list[Entry] = _entries()


def select(only: str | None = None) -> list[Entry]:
    if not only:
        return list(ENTRIES)
    exact = [e for e in ENTRIES if e.id == only]
    return exact or [e for e in ENTRIES if only in e.id]


def run_corpus(only: str | None = None) -> list[CorpusResult]:
    return [e.run() for e in select(only)]
