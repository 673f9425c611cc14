"""Solution sets: isolated points plus parametric families.

A family maps parameter values to points through component expressions.
Each parameter also has an *extractor*, a linear expression in the point
coordinates ``x0..x3`` that recovers it, so membership is decided by
extracting the parameters and re-evaluating.  Square-root branches use the
reserved sign variable ``pm``; semi-explicit families carry an auxiliary
unknown fixed as a real root of a polynomial whose coefficients depend on the
parameters.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .algebra import SplitQuaternion, format_scalar
from .errors import IdenticallyZero
from .expr import Const, Constraint, Expr, OutOfDomain, Var, add, infix, lift, parse_expr
from .realroots import RealPoly, real_roots

Number = Union[Fraction, float]

COORDS = ("x0", "x1", "x2", "x3")
SIGN = "pm"
FLOAT_TOL = 1e-9


class Shape(enum.Enum):
    AFFINE = "affine"
    POLY_IN_PARAMS = "poly-in-params"
    SQRT_BRANCH = "sqrt-branch"
    SEMI_EXPLICIT = "semi-explicit"


@dataclass(frozen=True)
class Aux:
    """Unknown ``name`` ranging over real roots of sum(coeffs[n] * name^n)."""

    name: str
    coeffs: tuple[Expr, ...]
    extractor: Expr

    def poly(self, env: Mapping[str, Number]) -> RealPoly:
        return RealPoly([c.evaluate(env) for c in self.coeffs])

    def roots(self, env: Mapping[str, Number]) -> list[Number]:
        try:
            return real_roots(self.poly(env)).values()
        except IdenticallyZero:
            return []

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "coeffs": [c.to_prefix() for c in self.coeffs],
            "extractor": self.extractor.to_prefix(),
        }

    @classmethod
    def from_json(cls, data: dict) -> Aux:
        return cls(data["name"], tuple(parse_expr(c) for c in data["coeffs"]), parse_expr(data["extractor"]))


def _close(u: Number, v: Number, tol: float) -> bool:
    if tol == 0:
        return u == v
    return abs(u - v) <= tol * max(1.0, abs(float(u)), abs(float(v)))


def _number(v) -> Number:
    if isinstance(v, (Fraction, float)):
        return v
    return lift(v).evaluate({})


def _coord_env(x: SplitQuaternion) -> dict[str, Number]:
    return dict(zip(COORDS, x))


def random_rational(rng: random.Random, span: int = 3) -> Fraction:
    return Fraction(rng.randint(-8 * span, 8 * span), rng.choice((1, 2, 3, 4, 8)))


@dataclass(frozen=True)
class Family:
    shape: Shape
    params: tuple[str, ...]
    components: tuple[Expr, Expr, Expr, Expr]
    constraints: tuple[Constraint, ...] = ()
    extractors: tuple[tuple[str, Expr], ...] = ()
    aux: Aux | None = None
    label: str = ""

    def __post_init__(self):
        given = dict(self.extractors)
        missing = [p for p in self.params if p not in given and p not in COORDS]
        if missing:
            raise ValueError(f"no extractor for parameters {missing}")
        full = tuple((p, given.get(p, Var(p))) for p in self.params)
        object.__setattr__(self, "extractors", full)
        object.__setattr__(self, "components", tuple(lift(c) for c in self.components))

    @property
    def dim(self) -> int:
        return len(self.params)

    @property
    def has_sign(self) -> bool:
        return any(SIGN in c.free_vars() for c in self.components) or any(
            SIGN in k.expr.free_vars() for k in self.constraints
        )

    def _signs(self) -> tuple[int, ...]:
        return (1, -1) if self.has_sign else (0,)

    def _point(self, env: Mapping[str, Number], tol: float) -> SplitQuaternion | None:
        if not all(k.holds(env, tol) for k in self.constraints):
            return None
        try:
            return SplitQuaternion(*(c.evaluate(env) for c in self.components))
        except OutOfDomain:
            return None

    def evaluate(self, values: Mapping[str, Number] | Sequence[Number]) -> list[SplitQuaternion]:
        """All points for one parameter assignment (0, 1 or a few)."""
        if not isinstance(values, Mapping):
            values = dict(zip(self.params, values))
        env = {p: _number(values[p]) for p in self.params}
        exact = all(isinstance(v, Fraction) for v in env.values())
        envs = [env]
        if self.aux is not None:
            envs = [{**env, self.aux.name: r} for r in self.aux.roots(env)]
        out: list[SplitQuaternion] = []
        for e in envs:
            tol = 0.0 if exact and all(isinstance(v, Fraction) for v in e.values()) else FLOAT_TOL
            for s in self._signs():
                pt = self._point({**e, SIGN: Fraction(s)} if s else e, tol)
                if pt is not None and pt not in out:
                    out.append(pt)
        return out

    def member(self, x: SplitQuaternion, tol: float | None = None) -> dict[str, Number] | None:
        """Parameter assignment producing ``x``, or None."""
        if tol is None:
            tol = 0.0 if x.is_exact else FLOAT_TOL
        coords = _coord_env(x)
        env = {p: ext.evaluate(coords) for p, ext in self.extractors}
        if self.aux is not None:
            t = self.aux.extractor.evaluate(coords)
            poly = self.aux.poly(env)
            if poly.is_zero():
                return None
            scale = max(1.0, float(poly.max_abs_coeff())) * max(1.0, abs(float(t))) ** poly.degree
            if not _close(poly(t), 0, tol * scale if tol else 0):
                return None
            env[self.aux.name] = t
        for s in self._signs():
            e = {**env, SIGN: Fraction(s)} if s else env
            pt = self._point(e, tol)
            if pt is not None and all(_close(u, v, tol) for u, v in zip(pt, x)):
                return e
        return None

    def contains(self, x: SplitQuaternion, tol: float | None = None) -> bool:
        return self.member(x, tol) is not None

    def sample(self, rng: random.Random, n: int, span: int = 3) -> list[SplitQuaternion]:
        out: list[SplitQuaternion] = []
        for _ in range(50 * n):
            if len(out) >= n:
                break
            out.extend(self.evaluate({p: random_rational(rng, span) for p in self.params}))
        return out[:n] if self.params else out

    def grid_points(self, values: Sequence[Fraction]) -> set[SplitQuaternion]:
        """Exact members whose four coordinates all lie in ``values``."""
        grid = set(values)
        used = sorted(set().union(*(ext.free_vars() for _, ext in self.extractors)))
        if not set(used) <= set(COORDS):
            raise ValueError("extractors must be expressions in x0..x3")
        found: set[SplitQuaternion] = set()
        for combo in itertools.product(values, repeat=len(used)):
            coords = dict(zip(used, combo))
            params = {p: ext.evaluate(coords) for p, ext in self.extractors}
            for pt in self.evaluate(params):
                if pt.is_exact and all(v in grid for v in pt):
                    found.add(pt)
        return found

    def shifted(self, h: Fraction) -> Family:
        """The family {x - h : x in self} for a real scalar h."""
        if h == 0:
            return self
        sub: dict[str, Expr] = {}
        extractors = []
        for p, ext in self.extractors:
            if ext == Var("x0"):
                sub[p] = add(Var(p), Const(h))
                extractors.append((p, ext))
            else:
                extractors.append((p, ext.subs({"x0": add(Var("x0"), Const(h))})))
        comps = [c.subs(sub) for c in self.components]
        comps[0] = add(comps[0], Const(-h))
        aux = self.aux
        if aux is not None:
            aux = Aux(
                aux.name,
                tuple(c.subs(sub) for c in aux.coeffs),
                aux.extractor.subs({"x0": add(Var("x0"), Const(h))}),
            )
        return replace(
            self,
            components=tuple(comps),
            constraints=tuple(k.subs(sub) for k in self.constraints),
            extractors=tuple(extractors),
            aux=aux,
        )

    def describe(self) -> str:
        body = " + ".join(
            f"({infix(c)}){unit}" if unit else f"({infix(c)})" for c, unit in zip(self.components, ("", "i", "j", "k"))
        )
        quant = ", ".join(self.params) or "-"
        extra = []
        if self.aux is not None:
            poly = " + ".join(f"({infix(c)})*{self.aux.name}^{n}" for n, c in enumerate(self.aux.coeffs))
            extra.append(f"{self.aux.name} real root of {poly} = 0")
        if self.has_sign:
            extra.append("pm in {+1, -1}")
        extra.extend(f"{infix(k.expr)} {k.op} 0" for k in self.constraints)
        tail = f"; {'; '.join(extra)}" if extra else ""
        return f"[{self.shape.value}] x = {body}  for all {quant}{tail}"

    def to_json(self) -> dict:
        out = {
            "shape": self.shape.value,
            "label": self.label,
            "params": list(self.params),
            "components": [c.to_prefix() for c in self.components],
            "constraints": [k.to_text() for k in self.constraints],
            "extractors": {p: e.to_prefix() for p, e in self.extractors},
        }
        if self.aux is not None:
            out["aux"] = self.aux.to_json()
        return out

    @classmethod
    def from_json(cls, data: dict) -> Family:
        return cls(
            Shape(data["shape"]),
            tuple(data["params"]),
            tuple(parse_expr(c) for c in data["components"]),
            tuple(Constraint.parse(k) for k in data.get("constraints", ())),
            tuple((p, parse_expr(e)) for p, e in data.get("extractors", {}).items()),
            Aux.from_json(data["aux"]) if data.get("aux") else None,
            data.get("label", ""),
        )


@dataclass(frozen=True)
class SolutionSet:
    points: tuple[SplitQuaternion, ...] = ()
    families: tuple[Family, ...] = ()
    notes: tuple[str, ...] = field(default=(), compare=False)

    @classmethod
    def of(cls, points: Iterable[SplitQuaternion] = (), families: Iterable[Family] = (), notes=()) -> SolutionSet:
        uniq: list[SplitQuaternion] = []
        for p in points:
            if p not in uniq:
                uniq.append(p)
        return cls(tuple(uniq), tuple(families), tuple(notes))

    def is_empty(self) -> bool:
        return not self.points and not self.families

    @property
    def dim(self) -> int:
        if self.families:
            return max(f.dim for f in self.families)
        return 0 if self.points else -1

    def contains(self, x: SplitQuaternion, tol: float | None = None) -> bool:
        if tol is None:
            tol = 0.0 if x.is_exact else FLOAT_TOL
        if any(all(_close(u, v, tol) for u, v in zip(p, x)) for p in self.points):
            return True
        return any(f.contains(x, tol) for f in self.families)

    def union(self, other: SolutionSet) -> SolutionSet:
        return SolutionSet.of(self.points + other.points, self.families + other.families, self.notes + other.notes)

    def shifted(self, h: Fraction) -> SolutionSet:
        return SolutionSet.of(
            (p - h for p in self.points), (f.shifted(h) for f in self.families), self.notes
        )

    def grid_members(self, values: Sequence[Fraction]) -> set[SplitQuaternion]:
        grid = set(values)
        out = {p for p in self.points if p.is_exact and all(v in grid for v in p)}
        for f in self.families:
            out |= f.grid_points(values)
        return out

    def describe(self) -> str:
        if self.is_empty():
            return "no solutions"
        lines = [f"point {p}" for p in self.points]
        lines += [f"family {f.label}: {f.describe()}" if f.label else f"family {f.describe()}" for f in self.families]
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "points": [p.to_json() for p in self.points],
            "families": [f.to_json() for f in self.families],
        }

    @classmethod
    def from_json(cls, data: dict) -> SolutionSet:
        return cls.of(
            (SplitQuaternion.from_json(p) for p in data.get("points", ())),
            (Family.from_json(f) for f in data.get("families", ())),
        )


def point_text(x: SplitQuaternion) -> str:
    return ", ".join(format_scalar(v) for v in x)
