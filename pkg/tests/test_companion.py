from __future__ import annotations

import random
from fractions import Fraction

import pytest
from helpers import Q, quat, zero_divisor

from splitquad import (
    LinearKind,
    QuadEquation,
    QuasiClass,
    RealPoly,
    SplitQuaternion,
    companion_poly,
    qform,
    solve,
    solve_linear,
    solve_via_companion,
)
from splitquad.companion import class_intersect
from splitquad.corpus import ENTRIES, same_set

F = Fraction
h = F(1, 2)


def eq(a, b, c) -> QuadEquation:
    return QuadEquation(Q(a), Q(b), Q(c))


def by_pair(rep, T, N):
    (d,) = [d for d in rep.divisors if (d.T, d.N) == (T, N)]
    return d


def test_printed_introductory_equation_does_not_vanish():
    # as printed, b = -i + j; the ledger records why the corpus reads it as -i + k
    assert companion_poly(eq("1+j", "-i+j", "-1+i-j-k")) == RealPoly([0, 0, 0, -2])


def test_triple_root_item_intermediates():
    e = eq("1+j", "i+2j+k", "-1/4+5/2i+3/4j+5/2k")
    T, N = F(-1), F(1, 4)
    assert T * e.a + e.b == Q("-1+i+j+k")
    assert N * e.a - e.c == Q("1/2-5/2i-1/2j-5/2k")
    d = by_pair(solve_via_companion(e), T, N)
    assert d.linear.kind is LinearKind.AFFINE and d.linear.rank == 2
    for y0, y1, y2, y3 in [(0, 0, 0, 0), (1, -1, 2, 5), (F(2, 3), 3, 0, -1)]:
        x = SplitQuaternion(F(-3, 4) + h * (y0 + y3), h + h * (y1 + y2), -h + h * (y1 + y2), F(3, 4) + h * (y0 + y3))
        assert d.linear.contains(x)
    assert d.solutions.points == (Q("-1/2+i+k"),) and not d.solutions.families


def test_two_pair_item_intermediates():
    e = eq("1+j", "i+j", "-1+i")
    rep = solve_via_companion(e)
    first = by_pair(rep, F(-2), F(1))
    assert -2 * e.a + e.b == Q("-2+i-j") and qform(Q("-2+i-j")) != 0
    assert 1 * e.a - e.c == Q("2-i+j")
    assert first.linear.kind is LinearKind.POINT and first.linear.base == Q("-1")
    second = by_pair(rep, F(0), F(-1))
    assert e.b == Q("i+j") and -1 * e.a - e.c == Q("-i-j")
    for y0, y1, y2, y3 in [(0, 0, 0, 0), (1, 2, 3, 4)]:
        x = SplitQuaternion(-h + h * (y0 + y3), h * (y1 + y2), h * (y1 + y2), h + h * (y0 + y3))
        assert second.linear.contains(x)
    assert not second.solutions.points and len(second.solutions.families) == 1
    for x1 in (F(-2), F(0), F(7, 3)):
        assert second.solutions.contains(SplitQuaternion(0, x1, x1, 1))


def test_complex_pair_item_intermediates():
    e = eq("1+j", "i+k", "1-i")
    d = by_pair(solve_via_companion(e), F(1), F(1))
    assert e.a + e.b == Q("1+i+j+k") and e.a - e.c == Q("i+j")
    x = SplitQuaternion(F(1, 4) + h * (1 - 2), F(1, 4) + h * (3 + 4), F(1, 4) + h * (2 - 1), F(-1, 4) + h * (3 + 4))
    assert d.linear.contains(x)
    assert d.solutions.points == (Q("1/2+i+1/2k"),)


def test_invertible_pair_item_intermediates():
    e = eq("1+j", "2i+k", "1+i+2j+k")
    d = by_pair(solve_via_companion(e), F(-2), F(-3))
    assert -2 * e.a + e.b == Q("-2+2i-2j+k") and -3 * e.a - e.c == Q("-4-i-5j-k")
    assert d.linear.kind is LinearKind.POINT and d.linear.base == Q("-1+17/3i+1/3j+6k")


def test_class_intersect_point_cases():
    lin = solve_linear(Q("-2+i-j"), Q("2-i+j"))
    assert class_intersect(lin, QuasiClass(F(-2), F(1))).points == (Q("-1"),)
    assert class_intersect(lin, QuasiClass(F(0), F(1))).is_empty()


def test_class_intersect_whole_class():
    lin = solve_linear(Q("0"), Q("0"))
    s = class_intersect(lin, QuasiClass(F(2), F(0)))
    assert s.contains(Q("1+i+j+k")) and s.contains(Q("1-k")) and not s.contains(Q("1+i"))


def test_class_intersect_two_points_on_a_line():
    # x = t i in the class {Re = 0, I = 4}: t = +-2
    from splitquad.algebra import LinearSolutionSet

    proj = ((0, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0))
    lin = LinearSolutionSet(LinearKind.AFFINE, SplitQuaternion(0), tuple(tuple(F(v) for v in r) for r in proj), 1)
    s = class_intersect(lin, QuasiClass(F(0), F(4)))
    assert set(s.points) == {Q("2i"), Q("-2i")}


@pytest.mark.parametrize("entry", [e for e in ENTRIES if solve_via_companion(e.equation).applicable], ids=lambda e: e.id)
def test_solver_points_lie_in_divisor_classes(entry):
    poly = companion_poly(entry.equation)
    for x in solve(entry.equation).points:
        assert (poly % RealPoly([qform(x), -2 * x.x0, 1])).is_zero()


def test_divisors_divide_exactly():
    for e in ENTRIES:
        rep = solve_via_companion(e.equation)
        for d in rep.divisors:
            if isinstance(d.T, Fraction) and isinstance(d.N, Fraction):
                assert (rep.poly % RealPoly([d.N, -d.T, 1])).is_zero()


def test_agrees_with_solver_on_random_equations():
    rng = random.Random(41)
    compared = 0
    for _ in range(60):
        d, e_, y = zero_divisor(rng), quat(rng), quat(rng, 2)
        e = QuadEquation(d, e_, -(d * y * y + e_ * y))
        rep = solve_via_companion(e)
        if not rep.applicable:
            continue
        direct = solve(e)
        exact_direct = exact_points(direct)
        exact_comp = exact_points(rep.solutions)
        assert exact_direct == exact_comp
        assert rep.solutions.contains(y) or any(d_.note for d_ in rep.divisors)
        compared += 1
    assert compared > 30


def exact_points(s) -> set:
    return {p for p in s.points if p.is_exact}


def test_invertible_leading_coefficient_uses_quartic():
    e = eq("1+i", "j", "-1")
    rep = solve_via_companion(e)
    assert rep.poly.degree == 4
    for x in rep.solutions.points:
        r = e.evaluate(x)
        assert max(abs(float(v)) for v in r) < 1e-9


def test_cross_validation_on_corpus():
    for e in ENTRIES:
        rep = solve_via_companion(e.equation)
        if rep.applicable:
            assert same_set(solve(e.equation), rep.solutions) == []
