"""Roots of real polynomials of degree <= 4 with rational coefficients.

Rational roots are recovered exactly.  What is left after exact deflation is
irreducible over Q; its real roots are counted exactly with a Sturm sequence,
located with :func:`numpy.roots` and Newton-polished against exact evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from .errors import IdenticallyZero

Number = Union[Fraction, float]

MERGE_RTOL = 1e-8


@dataclass(frozen=True)
class RealPoly:
    """Polynomial with coefficients listed from the constant term upwards."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Sequence):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_roots(cls, roots: Sequence, lead=1) -> RealPoly:
        p = cls([lead])
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + (float(c) if isinstance(x, (float, complex)) else c)
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, RealPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: RealPoly) -> RealPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return RealPoly([x + y for x, y in zip(a, b)])

    def __sub__(self, other: RealPoly) -> RealPoly:
        return self + other.scale(-1)

    def __mul__(self, other: RealPoly) -> RealPoly:
        if self.is_zero() or other.is_zero():
            return RealPoly([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RealPoly(out)

    def scale(self, k) -> RealPoly:
        return RealPoly([c * k for c in self.coeffs])

    def monic(self) -> RealPoly:
        return self.scale(1 / self.lead)

    def derivative(self) -> RealPoly:
        return RealPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def divmod(self, other: RealPoly) -> tuple[RealPoly, RealPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - dq - 1, -1, -1):
            f = rem[k + dq] / other.lead
            quot[k] = f
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= f * c
        return RealPoly(quot), RealPoly(rem[:dq])

    def __floordiv__(self, other: RealPoly) -> RealPoly:
        return self.divmod(other)[0]

    def __mod__(self, other: RealPoly) -> RealPoly:
        return self.divmod(other)[1]

    def max_abs_coeff(self) -> Fraction:
        return max((abs(c) for c in self.coeffs), default=Fraction(0))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for n in range(self.degree, -1, -1):
            c = self.coeffs[n]
            if c == 0:
                continue
            mag = abs(c)
            body = "" if (mag == 1 and n) else str(mag)
            if n:
                body += ("*" if body else "") + ("x" if n == 1 else f"x^{n}")
            terms.append(("-" if c < 0 else "+", body))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_gcd(a: RealPoly, b: RealPoly) -> RealPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def squarefree_decomposition(p: RealPoly) -> list[tuple[RealPoly, int]]:
    """Yun's algorithm: monic square-free factors s_i with p ~ prod s_i^i."""
    f = p.monic()
    df = f.derivative()
    g = poly_gcd(f, df)
    b = f // g
    c = df // g
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b // a
        c = d // a
        d = c - b.derivative()
        i += 1
    return out


@dataclass(frozen=True)
class RealRoot:
    value: Number
    multiplicity: int
    residual: float = 0.0

    @property
    def exact(self) -> bool:
        return isinstance(self.value, Fraction)


@dataclass(frozen=True)
class ComplexPair:
    """Conjugate pair z, conj(z) stored as T = 2 Re z and N = |z|^2."""

    T: Number
    N: Number
    multiplicity: int = 1


@dataclass(frozen=True)
class RootList:
    real: tuple[RealRoot, ...]
    pairs: tuple[ComplexPair, ...]

    def values(self) -> list[Number]:
        return [r.value for r in self.real]

    @property
    def total_multiplicity(self) -> int:
        return sum(r.multiplicity for r in self.real) + 2 * sum(c.multiplicity for c in self.pairs)


def _integer_form(p: RealPoly) -> list[int]:
    den = math.lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    g = math.gcd(*ints)
    return [v // g for v in ints]


def _convergents(x: Fraction, max_den: int):
    """Continued-fraction convergents of x with denominator at most max_den."""
    h0, h1, k0, k1 = 0, 1, 1, 0
    while True:
        a = math.floor(x)
        h0, h1 = h1, a * h1 + h0
        k0, k1 = k1, a * k1 + k0
        if k1 > max_den:
            return
        yield Fraction(h1, k1)
        frac = x - a
        if frac == 0:
            return
        x = 1 / frac


def _rational_candidates(p: RealPoly, approx: Sequence[float]) -> list[Fraction]:
    """Rationals near the approximations that pass the rational root test."""
    ints = _integer_form(p)
    lead, const = abs(ints[-1]), abs(ints[0])
    cands: list[Fraction] = []
    if const == 0:
        cands.append(Fraction(0))
    for r in approx:
        if not math.isfinite(r):
            continue
        for c in _convergents(Fraction(r), lead):
            if lead % c.denominator == 0 and (c.numerator == 0 or const % c.numerator == 0):
                cands.append(c)
    return cands


def _approx_roots(p: RealPoly) -> np.ndarray:
    return np.roots([float(c) for c in reversed(p.coeffs)])


def _sturm_count(p: RealPoly) -> int:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        seq.append((seq[-2] % seq[-1]).scale(-1))
    seq = [s for s in seq if not s.is_zero()]

    def changes(signs):
        signs = [s for s in signs if s != 0]
        return sum(1 for u, v in zip(signs, signs[1:]) if u != v)

    at_pos = [1 if s.lead > 0 else -1 for s in seq]
    at_neg = [(1 if s.lead > 0 else -1) * (-1) ** s.degree for s in seq]
    return changes(at_neg) - changes(at_pos)


def _polish_real(p: RealPoly, r: float, steps: int = 8) -> float:
    dp = p.derivative()
    for _ in range(steps):
        xr = Fraction(r)
        slope = dp(xr)
        if slope == 0:
            break
        nxt = float(xr - p(xr) / slope)
        if nxt == r:
            break
        r = nxt
    return r


def _polish_complex(p: RealPoly, z: complex, steps: int = 6) -> complex:
    dp = p.derivative()
    for _ in range(steps):
        slope = dp(z)
        if slope == 0:
            break
        z = z - p(z) / slope
    return z


def _roots_of_squarefree(s: RealPoly) -> tuple[list[Number], list[tuple[Number, Number]]]:
    """Real roots and conjugate pairs (T, N) of a monic square-free polynomial."""
    reals: list[Number] = []
    pairs: list[tuple[Number, Number]] = []
    if s.degree <= 0:
        return reals, pairs
    approx = [z.real for z in _approx_roots(s) if abs(z.imag) <= 1e-6 * (1 + abs(z))]
    rest = s
    for cand in _rational_candidates(s, approx):
        if rest.degree == 0:
            break
        if cand not in reals and rest(cand) == 0:
            reals.append(cand)
            rest = rest // RealPoly([-cand, 1])
    rest = rest.monic()
    d = rest.degree
    if d == 1:
        reals.append(-rest.coeffs[0])
    elif d == 2:
        c, b = rest.coeffs[0], rest.coeffs[1]
        disc = b * b - 4 * c
        if disc < 0:
            pairs.append((-b, c))
        else:
            sq = math.sqrt(disc)
            # stable pairing of the two roots
            q = -(float(b) + math.copysign(sq, float(b))) / 2
            for r in (q, float(c) / q):
                reals.append(_polish_real(rest, r))
    elif d >= 3:
        n_real = _sturm_count(rest)
        zs = sorted(_approx_roots(rest), key=lambda z: abs(z.imag))
        for z in zs[:n_real]:
            reals.append(_polish_real(rest, float(z.real)))
        for z in zs[n_real:]:
            if z.imag > 0:
                z = _polish_complex(rest, complex(z))
                pairs.append((2 * z.real, abs(z) ** 2))
    return reals, pairs


def _merge(roots: list[RealRoot]) -> list[RealRoot]:
    roots = sorted(roots, key=lambda r: float(r.value))
    out: list[RealRoot] = []
    for r in roots:
        if out:
            prev = out[-1]
            close = abs(float(prev.value) - float(r.value)) <= MERGE_RTOL * max(1.0, abs(float(r.value)))
            if close and not (prev.exact and r.exact):
                keep = prev if prev.exact or not r.exact else r
                out[-1] = RealRoot(keep.value, prev.multiplicity + r.multiplicity, keep.residual)
                continue
        out.append(r)
    return out


def real_roots(p: RealPoly) -> RootList:
    """All real roots with multiplicity, plus complex pairs as (T, N)."""
    if p.is_zero():
        raise IdenticallyZero("the zero polynomial has no isolated roots")
    if p.degree > 4:
        raise ValueError(f"degree {p.degree} > 4 is not supported")
    reals: list[RealRoot] = []
    pairs: list[ComplexPair] = []
    for factor, mult in squarefree_decomposition(p):
        rs, cs = _roots_of_squarefree(factor)
        for r in rs:
            res = abs(p(r if isinstance(r, Fraction) else Fraction(r)))
            reals.append(RealRoot(r, mult, float(res)))
        pairs.extend(ComplexPair(T, N, mult) for T, N in cs)
    return RootList(tuple(_merge(reals)), tuple(pairs))


def _same(u: Number, v: Number) -> bool:
    if isinstance(u, Fraction) and isinstance(v, Fraction):
        return u == v
    return abs(float(u) - float(v)) <= 1e-12 * max(1.0, abs(float(u)), abs(float(v)))


def _exact_pair(p: RealPoly, T: Number, N: Number) -> tuple[Number, Number]:
    """Rational (T, N) when a float pair is an exact rational factor of p (irrational roots)."""
    lead = abs(_integer_form(p)[-1])
    Ts = [c for c in _convergents(Fraction(float(T)), lead) if abs(float(c) - float(T)) <= 1e-7 * max(1.0, abs(float(T)))]
    Ns = [c for c in _convergents(Fraction(float(N)), lead) if abs(float(c) - float(N)) <= 1e-7 * max(1.0, abs(float(N)))]
    for t in Ts[-3:]:
        for n in Ns[-3:]:
            if (p % RealPoly([n, -t, 1])).is_zero():
                return t, n
    return T, N


def quadratic_divisors(p: RealPoly) -> list[tuple[Number, Number]]:
    """Every monic real quadratic x^2 - T x + N dividing p, as (T, N)."""
    if p.is_zero():
        raise IdenticallyZero("every quadratic divides the zero polynomial")
    if p.degree <= 1:
        return []
    roots = real_roots(p)
    out: list[tuple[Number, Number]] = []

    def add(T, N):
        if not (isinstance(T, Fraction) and isinstance(N, Fraction)):
            T, N = _exact_pair(p, T, N)
        if not any(_same(T, t) and _same(N, n) for t, n in out):
            out.append((T, N))

    rs = roots.real
    for i, ri in enumerate(rs):
        for rj in rs[i:]:
            if rj is ri and ri.multiplicity < 2:
                continue
            add(ri.value + rj.value, ri.value * rj.value)
    for c in roots.pairs:
        add(c.T, c.N)
    return out
