from __future__ import annotations

import random
from fractions import Fraction

import pytest
from helpers import Q, normalized_a, pure_imag, quat, zero_divisor
from hypothesis import given, settings
from hypothesis import strategies as st

from splitquad import (
    NotNormalized,
    NotZeroDivisor,
    QuadEquation,
    SplitQuaternion,
    Unsupported,
    WrongBranch,
    analyze,
    normalize,
    qform,
    residual,
    solve,
    solve_pure_quadratic,
)
from splitquad.corpus import ENTRIES
from splitquad.solver import (
    BranchData,
    as_normalized,
    semi_explicit_points,
    si_solve,
    si_solve_pab_nonzero,
    si_solve_pab_zero,
    sqrt_split,
    sz_solve,
    sz_solve_delta_2b1,
    sz_solve_delta_zero,
    sz_solve_pab_nonzero,
)

F = Fraction
rationals = st.fractions(min_value=-4, max_value=4, max_denominator=6)
quats = st.builds(SplitQuaternion, rationals, rationals, rationals, rationals)


def eq(a, b, c) -> QuadEquation:
    return QuadEquation(Q(a), Q(b), Q(c))


# canonical form


def test_already_canonical_is_unchanged():
    e = eq("1+j", "i+2j+k", "3-i")
    ne = normalize(*e)
    assert ne.equation == e and ne.shift == 0


def test_normalize_with_real_part_in_linear_term():
    ne = normalize(Q("1+j"), Q("1+i"), Q("0"))
    assert ne.a == Q("1+j") and ne.b == Q("i-j")
    assert ne.c == -Q("1+i") / 2 + Q("1+j") / 4
    assert ne.shift == F(1, 2)


def test_shifted_equation_solutions_move_back():
    # canonical form equal to the fixed-real-part point example, reached with k0 = 1
    a, b, c = Q("1+j"), Q("i+2j+k"), Q("-1/4+5/2i+3/4j+5/2k")
    e_ = b + a
    f = c + e_ / 2 - a / 4
    ne = normalize(a, e_, f)
    assert ne.equation == QuadEquation(a, b, c) and ne.shift == F(1, 2)
    s = solve(a, e_, f)
    assert s.points == (Q("-1+i+k"),)
    x = s.points[0]
    assert a * x * x + e_ * x + f == 0


def test_leading_coefficient_must_be_zero_divisor():
    with pytest.raises(Unsupported):
        solve(Q("1+i"), Q("i"), Q("1"))
    with pytest.raises(NotZeroDivisor):
        solve(Q("0"), Q("i"), Q("1"))


def test_branch_solvers_check_preconditions():
    with pytest.raises(NotNormalized):
        as_normalized(eq("2+2j", "i", "1"))
    with pytest.raises(NotNormalized):
        solve_pure_quadratic(Q("2+2j"), Q("1"))
    with pytest.raises(WrongBranch):
        sz_solve_pab_nonzero(eq("1+j", "2i+k", "1"))
    with pytest.raises(WrongBranch):
        si_solve_pab_zero(eq("1+j", "i+2j+k", "1"))
    with pytest.raises(WrongBranch):
        sz_solve_delta_2b1(eq("1+j", "-i+k", "1"))
    with pytest.raises(WrongBranch):
        sz_solve_delta_zero(eq("1+j", "i+k", "1"))
    with pytest.raises(WrongBranch):
        si_solve_pab_nonzero(eq("1+j", "0", "1"))


def test_normalized_random_inputs_are_canonical():
    rng = random.Random(31)
    for _ in range(100):
        ne = normalize(zero_divisor(rng), quat(rng), quat(rng))
        assert ne.a.x0 == 1 and ne.a.x1 == 0 and ne.a.x2 ** 2 + ne.a.x3 ** 2 == 1 and ne.b.x0 == 0


# square roots and the pure quadratic


def test_square_roots_of_one():
    s = sqrt_split(Q("1"))
    assert set(s.points) == {Q("1"), Q("-1")}
    assert s.contains(Q("j")) and s.contains(Q("i+j+k")) and not s.contains(Q("i"))


def test_square_roots_of_minus_one_and_2j():
    assert sqrt_split(Q("-1")).contains(Q("i"))
    assert sqrt_split(Q("2j")).is_empty()


@settings(deadline=None)
@given(quats)
def test_sqrt_split_is_complete_and_sound(x):
    s = sqrt_split(x * x)
    assert s.contains(x)
    for p in s.points:
        assert p * p == x * x if p.is_exact else max(abs(v) for v in (p * p - (x * x).to_float())) < 1e-9


def test_pure_quadratic_solvability():
    assert solve_pure_quadratic(Q("1+j"), Q("-1-j")).solvable
    assert not solve_pure_quadratic(Q("1+j"), Q("1")).solvable
    assert solve_pure_quadratic(Q("1+k"), Q("1+2i+2j+k")).solvable
    assert solve(Q("1+j"), Q("0"), Q("1")).is_empty()


def test_pure_quadratic_roots_for_y():
    pq = solve_pure_quadratic(Q("1+j"), Q("-1-j"))
    s = pq.roots_for(Q("1"))
    assert s.contains(Q("j")) and s.contains(Q("2i+2j+k"))
    for y in (Q("0"), Q("1"), Q("3-i+j"), Q("1/2k")):
        for x in pq.roots_for(y).points:
            assert residual(QuadEquation(Q("1+j"), Q("0"), Q("-1-j")), x).ok()


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6), quats)
def test_pure_quadratic_is_complete(seed, x):
    a = normalized_a(random.Random(seed))
    c = -(a * x * x)
    s = solve(a, SplitQuaternion(0), c)
    assert s.contains(x)


# fixed real part


def test_fixed_real_part_perturbed_is_empty():
    e = eq("1+j", "i+2j+k", "-1/4+7/2i+3/4j+5/2k")
    assert analyze(e).fixed.F != 0
    assert sz_solve_pab_nonzero(e).is_empty()


def test_fixed_real_part_example_has_no_invertible_solutions():
    assert si_solve(eq("1+j", "i+2j+k", "-1/4+5/2i+3/4j+5/2k"))[1].is_empty()


# isotropic linear term


def test_isotropic_plane_variant_is_empty():
    assert solve(eq("1+j", "i+k", "-1+i-j+2k")).is_empty()


def test_quartic_guard_excludes_boundary():
    ne = as_normalized(eq("1+k", "i+j", "1+2i+2j+k"))
    assert semi_explicit_points(ne, F(1), F(2)) == []
    pts = semi_explicit_points(ne, F(1), F(1))
    assert len(pts) == 2


def test_quartic_family_points_are_roots():
    e = eq("1+j", "-i+k", "-1+i-j-k")
    for x2, x3 in [(F(1), F(1)), (F(0), F(2)), (F(-3), F(1, 2))]:
        for x in semi_explicit_points(as_normalized(e), x2, x3):
            r = e.evaluate(x)
            assert max(abs(float(v)) for v in r) < 1e-9


def test_exact_quartic_root_at_one_one():
    pts = semi_explicit_points(as_normalized(eq("1+j", "-i+k", "-1+i-j-k")), F(1), F(1))
    assert Q("-2+2i+j+k") in pts


# invertible 2 x0 a + b


def test_cubic_branch_point():
    _, s = si_solve(eq("1+j", "i+j", "-1+i"))
    assert s.points == (Q("-1"),)


def test_closed_form_for_perturbed_affine_example():
    # The published "empty" outcome for this perturbation does not hold: I_b + 2 P_ac = 2,
    # so the closed form applies and yields a genuine root.
    e = eq("1+j", "2i+k", "-3/4+1+3/4j")
    bd = BranchData.of(as_normalized(e))
    assert bd.I_b + 2 * bd.P_ac == 2
    s = solve(e)
    assert s.points == (Q("2/3i+5/6k"),) and not s.families
    assert e.evaluate(s.points[0]) == 0


def test_affine_si_family_requires_defect_zero():
    e = eq("1+j", "2i+k", "-3/4+3/4j")
    bd = BranchData.of(as_normalized(e))
    assert (bd.delta, bd.t1, bd.t2, bd.affine_si_defect()) == (3, F(3, 2), 0, 0)


# whole-solver invariants


def _instances(n: int, seed: int) -> list[QuadEquation]:
    rng = random.Random(seed)
    out = [e.equation for e in ENTRIES]
    while len(out) < n:
        a = normalized_a(rng)
        kind = rng.random()
        if kind < 0.4:
            b = pure_imag(rng)
        else:
            s = F(rng.randint(-3, 3))
            b1 = rng.choice((s, -s, F(rng.randint(-3, 3))))
            b = SplitQuaternion(0, b1, s * a.x3, -s * a.x2)
        x = quat(rng, 2)
        out.append(QuadEquation(a, b, -(a * x * x + b * x)))
    return out


def test_branch_consistency():
    rng = random.Random(0)
    for e in _instances(120, 32):
        an = analyze(e)
        ne = an.normalized
        for part in an.parts:
            members = list(part.solutions.points) + [p for f in part.solutions.families for p in f.sample(rng, 10)]
            for x in members:
                n = qform(2 * x.x0 * ne.a + ne.b)
                if part.branch == "SZ":
                    assert abs(n) < 1e-9
                elif part.branch == "SI":
                    assert abs(n) > 1e-9


def test_first_real_system_for_invertible_branch():
    for e in _instances(120, 33):
        an = analyze(e)
        if an.data is None:
            continue
        bd = an.data
        for part in an.parts:
            if part.branch != "SI":
                continue
            for x in part.solutions.points:
                T, N = 2 * x.x0, qform(x)
                r1 = N * (2 * T * bd.P_ab + bd.I_b + 2 * bd.P_ac) - bd.I_c
                r2 = 2 * bd.P_ab * T * T + (2 * bd.P_ac + bd.I_b) * T - 2 * N * bd.P_ab + 2 * bd.P_bc
                assert abs(r1) < 1e-8 and abs(r2) < 1e-8


def test_second_real_system_componentwise():
    rng = random.Random(1)
    for e in _instances(80, 34):
        an = analyze(e)
        ne = an.normalized
        a2, a3 = ne.a.x2, ne.a.x3
        b1, b2, b3 = ne.b.x1, ne.b.x2, ne.b.x3
        c0, c1, c2, c3 = ne.c
        s = an.normalized_solutions
        for x in list(s.points) + [p for f in s.families for p in f.sample(rng, 5)]:
            x0, x1, x2, x3 = x
            w = x0 ** 2 - x1 ** 2 + x2 ** 2 + x3 ** 2
            rows = [
                w + 2 * a2 * x0 * x2 + 2 * a3 * x0 * x3 - b1 * x1 + b2 * x2 + b3 * x3 + c0,
                2 * x0 * x1 - 2 * a2 * x0 * x3 + 2 * a3 * x0 * x2 + b1 * x0 - b2 * x3 + b3 * x2 + c1,
                2 * x0 * x2 + a2 * w + 2 * a3 * x0 * x1 - b1 * x3 + b2 * x0 + b3 * x1 + c2,
                2 * x0 * x3 - 2 * a2 * x0 * x1 + a3 * w + b1 * x2 - b2 * x1 + b3 * x0 + c3,
            ]
            scale = max(1.0, *(abs(float(v)) for v in x)) ** 2
            assert all(abs(r) < 1e-9 * scale for r in rows)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_planted_root_is_member(seed):
    rng = random.Random(seed)
    d, e_, y = zero_divisor(rng), quat(rng), quat(rng, 2)
    assert solve(d, e_, -(d * y * y + e_ * y)).contains(y)


def test_sz_dispatch_names():
    assert sz_solve(eq("1+j", "i+j", "-1+i"))[0] == "P_ab != 0"
    assert sz_solve(eq("1+j", "i+k", "1-i"))[0] == "P_ab = 0, delta = 2 b1"
    assert sz_solve(eq("1+k", "i+j", "1+2i+2j+k"))[0] == "P_ab = 0, delta = 0"
    assert sz_solve(eq("1+j", "2i+k", "1"))[1].is_empty()
