"""Random exact inputs shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction

from splitquad import SplitQuaternion, parse_quaternion

Q = parse_quaternion


def rat(rng: random.Random, span: int = 3, dens=(1, 1, 2, 3, 4)) -> Fraction:
    d = rng.choice(dens)
    return Fraction(rng.randint(-span * d, span * d), d)


def quat(rng: random.Random, span: int = 3) -> SplitQuaternion:
    return SplitQuaternion(*(rat(rng, span) for _ in range(4)))


def pure_imag(rng: random.Random, span: int = 3) -> SplitQuaternion:
    return SplitQuaternion(0, rat(rng, span), rat(rng, span), rat(rng, span))


def unit_pair(rng: random.Random) -> tuple[Fraction, Fraction]:
    """Rational (u, v) with u^2 + v^2 = 1."""
    t = rat(rng, 2)
    u, v = (1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)
    if rng.random() < 0.5:
        u, v = v, u
    return u, v


def normalized_a(rng: random.Random) -> SplitQuaternion:
    a2, a3 = unit_pair(rng)
    return SplitQuaternion(1, 0, a2, a3)


def zero_divisor(rng: random.Random) -> SplitQuaternion:
    """(alpha + beta i)(1 + u j + v k) with alpha + beta i nonzero."""
    while True:
        al, be = rat(rng), rat(rng)
        if al or be:
            break
    u, v = unit_pair(rng)
    return SplitQuaternion(al, be, 0, 0) * SplitQuaternion(1, 0, u, v)


def any_class(rng: random.Random) -> SplitQuaternion:
    """Zero, a zero divisor or (usually) an invertible element, roughly a third each."""
    r = rng.random()
    if r < 0.1:
        return SplitQuaternion(0)
    if r < 0.45:
        return zero_divisor(rng)
    return quat(rng)
