"""Independent checks: residuals, exhaustive grid search, and set audits."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import SplitQuaternion, format_scalar, parse_rational
from .errors import ParseError
from .sets import SolutionSet

FLOAT_TOL = 1e-9


@dataclass(frozen=True)
class ResidualReport:
    value: SplitQuaternion
    max_abs: float | Fraction
    exact_zero: bool

    def ok(self, tol: float = FLOAT_TOL) -> bool:
        return self.exact_zero or (not self.value.is_exact and self.max_abs < tol)


def residual(eq, x: SplitQuaternion) -> ResidualReport:
    r = eq.a * x * x + eq.b * x + eq.c
    m = max(abs(v) for v in r)
    return ResidualReport(r, m, r.is_exact and not r)


@dataclass(frozen=True)
class GridSpec:
    """Per-coordinate ranges lo..hi (inclusive) with a positive step."""

    ranges: tuple[tuple[Fraction, Fraction, Fraction], ...]

    def __post_init__(self):
        if len(self.ranges) != 4:
            raise ValueError("a grid needs four coordinate ranges")
        for lo, hi, step in self.ranges:
            if step <= 0:
                raise ValueError("grid steps must be positive")

    @classmethod
    def uniform(cls, lo, hi, step) -> GridSpec:
        r = (Fraction(lo), Fraction(hi), Fraction(step))
        return cls((r,) * 4)

    @classmethod
    def standard(cls) -> GridSpec:
        return cls.uniform(-2, 2, Fraction(1, 2))

    @classmethod
    def parse(cls, text: str) -> GridSpec:
        parts = text.split(":")
        if len(parts) != 3:
            raise ParseError(f"grid must look like lo:hi:step, got {text!r}")
        lo, hi, step = (parse_rational(p) for p in parts)
        if step <= 0:
            raise ParseError("grid step must be positive")
        return cls.uniform(lo, hi, step)

    def axis(self, i: int) -> list[Fraction]:
        lo, hi, step = self.ranges[i]
        if hi < lo:
            return []
        return [lo + n * step for n in range(int((hi - lo) // step) + 1)]

    @property
    def size(self) -> int:
        return math.prod(len(self.axis(i)) for i in range(4))

    @property
    def is_uniform(self) -> bool:
        return all(r == self.ranges[0] for r in self.ranges)

    def __str__(self) -> str:
        lo, hi, step = self.ranges[0]
        if self.is_uniform:
            return f"{lo}:{hi}:{step} in every coordinate"
        return "; ".join(f"{lo}:{hi}:{step}" for lo, hi, step in self.ranges)


def _qmul(x, y):
    x0, x1, x2, x3 = x
    y0, y1, y2, y3 = y
    return (
        x0 * y0 - x1 * y1 + x2 * y2 + x3 * y3,
        x0 * y1 + x1 * y0 - x2 * y3 + x3 * y2,
        x0 * y2 + x2 * y0 - x1 * y3 + x3 * y1,
        x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
    )


def brute_force_roots(eq, grid: GridSpec, max_points: int = 10 ** 7) -> list[SplitQuaternion]:
    """Every grid point with exactly zero residual, in lexicographic order."""
    axes = [grid.axis(i) for i in range(4)]
    if any(not ax for ax in axes):
        return []
    if grid.size > max_points:
        raise ValueError(f"grid has {grid.size} points; limit is {max_points}")
    # scale x = X / s and the equation by D s^2 so everything is an integer
    s = math.lcm(*(v.denominator for ax in axes for v in ax))
    coeffs = [v for q in (eq.a, eq.b, eq.c) for v in q]
    if not all(isinstance(v, Fraction) for v in coeffs):
        raise ValueError("brute force needs exact coefficients")
    D = math.lcm(*(v.denominator for v in coeffs))
    A = [int(v * D) for v in eq.a]
    B = [int(v * D * s) for v in eq.b]
    C = [int(v * D * s * s) for v in eq.c]
    iaxes = [[int(v * s) for v in ax] for ax in axes]
    M = max(abs(v) for ax in iaxes for v in ax)
    bound = 16 * max(map(abs, A)) * M * M + 4 * max(map(abs, B)) * M + max(map(abs, C))
    dtype = np.int64 if bound < 2 ** 62 else object

    hits: list[SplitQuaternion] = []
    rest = np.array(np.meshgrid(*(np.array(ax, dtype=dtype) for ax in iaxes[1:]), indexing="ij"))
    rest = rest.reshape(3, -1)
    for X0 in iaxes[0]:
        X = (np.full(rest.shape[1], X0, dtype=dtype), rest[0], rest[1], rest[2])
        sq = _qmul(X, X)
        r = [u + v + w for u, v, w in zip(_qmul(A, sq), _qmul(B, X), C)]
        mask = (r[0] == 0) & (r[1] == 0) & (r[2] == 0) & (r[3] == 0)
        for idx in np.nonzero(mask)[0]:
            hits.append(SplitQuaternion(Fraction(int(X0), s), *(Fraction(int(X[k][idx]), s) for k in (1, 2, 3))))
    return hits


@dataclass
class VerifyReport:
    grid: GridSpec
    checked_points: int = 0
    checked_samples: int = 0
    unsound: list[tuple[SplitQuaternion, float]] = field(default_factory=list)
    hits: list[SplitQuaternion] = field(default_factory=list)
    missing: list[SplitQuaternion] = field(default_factory=list)
    extra: list[SplitQuaternion] = field(default_factory=list)

    @property
    def sound(self) -> bool:
        return not self.unsound

    @property
    def complete(self) -> bool:
        return not self.missing and not self.extra

    @property
    def passed(self) -> bool:
        return self.sound and self.complete

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "sound": self.sound,
            "complete_on_grid": self.complete,
            "grid": str(self.grid),
            "grid_points": self.grid.size,
            "checked_points": self.checked_points,
            "checked_samples": self.checked_samples,
            "grid_hits": len(self.hits),
            "unsound": [{"x": x.to_json(), "residual": format_scalar(r)} for x, r in self.unsound],
            "missing": [x.to_json() for x in self.missing],
            "extra": [x.to_json() for x in self.extra],
        }

    def to_text(self) -> str:
        lines = [
            f"grid: {self.grid} ({self.grid.size} points)",
            f"soundness: {'ok' if self.sound else 'FAILED'} "
            f"({self.checked_points} points, {self.checked_samples} family samples)",
            f"grid completeness: {'ok' if self.complete else 'FAILED'} ({len(self.hits)} grid roots)",
        ]
        lines += [f"  residual {format_scalar(r)} at {x}" for x, r in self.unsound]
        lines += [f"  grid root not in the set: {x}" for x in self.missing]
        lines += [f"  set member on the grid that is not a root: {x}" for x in self.extra]
        return "\n".join(lines)


def check_solution_set(
    eq,
    s: SolutionSet,
    grid: GridSpec | None = None,
    samples: int = 100,
    seed: int = 0,
) -> VerifyReport:
    grid = grid or GridSpec.standard()
    rep = VerifyReport(grid)
    rng = random.Random(seed)
    for x in s.points:
        rep.checked_points += 1
        r = residual(eq, x)
        if not r.ok():
            rep.unsound.append((x, r.max_abs))
    for fam in s.families:
        for x in fam.sample(rng, samples):
            rep.checked_samples += 1
            r = residual(eq, x)
            if not r.ok():
                rep.unsound.append((x, r.max_abs))

    rep.hits = brute_force_roots(eq, grid)
    hitset = set(rep.hits)
    on_grid = _members_on_grid(s, grid)
    rep.missing = [x for x in rep.hits if x not in on_grid or not s.contains(x)]
    rep.extra = sorted(on_grid - hitset, key=tuple)
    return rep


def _members_on_grid(s: SolutionSet, grid: GridSpec) -> set[SplitQuaternion]:
    axes = [set(grid.axis(i)) for i in range(4)]
    values = sorted(set().union(*axes))
    return {x for x in s.grid_members(values) if all(v in ax for v, ax in zip(x, axes))}
