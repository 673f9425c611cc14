"""Split-quaternion arithmetic over exact rationals.

The basis is 1, i, j, k with i^2 = -1, j^2 = k^2 = 1, ij = k, jk = -i, ki = j.
Components are kept as :class:`fractions.Fraction`; a float-valued quaternion is
the floating mirror used only for irrational roots and for reporting.
"""

from __future__ import annotations

import enum
import math
import re as _re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, Union

from . import _linalg
from .errors import NotInvertible, ParseError

Scalar = Fraction
Number = Union[Fraction, float]

_RATIONAL = _re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer; anything else is rejected."""
    m = _RATIONAL.fullmatch(text.replace("−", "-"))
    if m is None:
        raise ParseError(f"not a rational number: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def as_scalar(value) -> Number:
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        return value
    raise TypeError(f"cannot use {type(value).__name__} as a scalar")


def format_scalar(value: Number) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


class Kind(enum.Enum):
    ZERO = "zero"
    ZERO_DIVISOR = "zero-divisor"
    INVERTIBLE = "invertible"


class SplitQuaternion:
    """Immutable element x0 + x1 i + x2 j + x3 k."""

    __slots__ = ("x0", "x1", "x2", "x3")

    def __init__(self, x0=0, x1=0, x2=0, x3=0):
        for name, v in zip(self.__slots__, (x0, x1, x2, x3)):
            object.__setattr__(self, name, as_scalar(v))

    def __setattr__(self, name, value):
        raise AttributeError("SplitQuaternion is immutable")

    @classmethod
    def from_coords(cls, coords: Sequence) -> SplitQuaternion:
        if len(coords) != 4:
            raise ValueError("a split quaternion needs exactly 4 coordinates")
        return cls(*coords)

    # container protocol

    def __iter__(self) -> Iterator[Number]:
        return iter((self.x0, self.x1, self.x2, self.x3))

    def __getitem__(self, i: int) -> Number:
        return (self.x0, self.x1, self.x2, self.x3)[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, float)):
            other = SplitQuaternion(other)
        if not isinstance(other, SplitQuaternion):
            return NotImplemented
        return tuple(self) == tuple(other)

    def __hash__(self) -> int:
        return hash(tuple(self))

    def __bool__(self) -> bool:
        return any(v != 0 for v in self)

    @property
    def is_exact(self) -> bool:
        return not any(isinstance(v, float) for v in self)

    def to_float(self) -> SplitQuaternion:
        return SplitQuaternion(*(float(v) for v in self))

    # arithmetic

    def __neg__(self) -> SplitQuaternion:
        return SplitQuaternion(-self.x0, -self.x1, -self.x2, -self.x3)

    def __add__(self, other) -> SplitQuaternion:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return SplitQuaternion(*(u + v for u, v in zip(self, other)))

    __radd__ = __add__

    def __sub__(self, other) -> SplitQuaternion:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return SplitQuaternion(*(u - v for u, v in zip(self, other)))

    def __rsub__(self, other) -> SplitQuaternion:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> SplitQuaternion:
        if isinstance(other, (int, Fraction, float)) and not isinstance(other, bool):
            return SplitQuaternion(*(v * other for v in self))
        if not isinstance(other, SplitQuaternion):
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other) -> SplitQuaternion:
        if isinstance(other, (int, Fraction, float)) and not isinstance(other, bool):
            return SplitQuaternion(*(other * v for v in self))
        return NotImplemented

    def __truediv__(self, other) -> SplitQuaternion:
        if isinstance(other, (int, Fraction, float)) and not isinstance(other, bool):
            if isinstance(other, int):
                other = Fraction(other)
            return SplitQuaternion(*(v / other for v in self))
        return NotImplemented

    def conjugate(self) -> SplitQuaternion:
        return conjugate(self)

    # text and JSON forms

    def __repr__(self) -> str:
        return f"SplitQuaternion({', '.join(repr(format_scalar(v)) for v in self)})"

    def __str__(self) -> str:
        terms = []
        for v, unit in zip(self, ("", "i", "j", "k")):
            if v == 0:
                continue
            mag = abs(v)
            s = format_scalar(mag)
            if unit and mag == 1:
                s = ""
            sign = "-" if v < 0 else "+"
            terms.append((sign, s + unit))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += sign + body
        return out

    def to_text(self) -> str:
        """Canonical ``x0 + x1 i + x2 j + x3 k`` with every component written."""
        out = format_scalar(self.x0)
        for v, unit in zip((self.x1, self.x2, self.x3), "ijk"):
            sign = "-" if v < 0 else "+"
            out += f" {sign} {format_scalar(abs(v))} {unit}"
        return out

    def to_json(self) -> dict:
        out = {f"x{n}": format_scalar(v) for n, v in enumerate(self)}
        if not self.is_exact:
            out["float"] = True
        return out

    @classmethod
    def parse(cls, text: str) -> SplitQuaternion:
        return parse_quaternion(text)

    @classmethod
    def from_json(cls, data) -> SplitQuaternion:
        if isinstance(data, str):
            return parse_quaternion(data)
        if isinstance(data, dict):
            unknown = set(data) - {"x0", "x1", "x2", "x3", "float"}
            if unknown:
                raise ParseError(f"unexpected quaternion keys: {sorted(unknown)}")
            if data.get("float"):
                return cls(*(float(data.get(f"x{n}", "0")) for n in range(4)))
            return cls(*(_json_scalar(data.get(f"x{n}", "0")) for n in range(4)))
        if isinstance(data, (list, tuple)):
            if len(data) != 4:
                raise ParseError("a quaternion list needs 4 entries")
            return cls(*(_json_scalar(v) for v in data))
        raise ParseError(f"cannot read a quaternion from {type(data).__name__}")


def _json_scalar(v) -> Fraction:
    if isinstance(v, bool) or isinstance(v, float):
        raise ParseError(f"non-rational value {v!r}; write rationals as strings 'p/q'")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return parse_rational(v)
    raise ParseError(f"non-rational value {v!r}")


def _coerce(value) -> SplitQuaternion | None:
    if isinstance(value, SplitQuaternion):
        return value
    if isinstance(value, (int, Fraction, float)) and not isinstance(value, bool):
        return SplitQuaternion(value)
    return None


_TERM = _re.compile(r"\s*([+-]*)\s*(\d+(?:\s*/\s*\d+)?)?\s*\*?\s*([ijk])?\s*")


def parse_quaternion(text: str) -> SplitQuaternion:
    """Read ``"-1/4+5/2i+3/4j+5/2k"`` or ``"1 + 0 i - 2 j + 1/3 k"``."""
    s = text.replace("−", "-").strip()
    if not s:
        raise ParseError("empty quaternion")
    coords = [Fraction(0)] * 4
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ParseError(f"cannot parse quaternion {text!r} at offset {pos}")
        if not first and not m.group(1):
            raise ParseError(f"missing operator in {text!r} at offset {pos}")
        sign = -1 if m.group(1).count("-") % 2 else 1
        coef = parse_rational(m.group(2).replace(" ", "")) if m.group(2) else Fraction(1)
        idx = " ijk".index(m.group(3)) if m.group(3) else 0
        coords[idx] += sign * coef
        pos = m.end()
        first = False
    return SplitQuaternion(*coords)


ONE = SplitQuaternion(1)
I = SplitQuaternion(0, 1)
J = SplitQuaternion(0, 0, 1)
K = SplitQuaternion(0, 0, 0, 1)
ZERO = SplitQuaternion()


def mul(x: SplitQuaternion, y: SplitQuaternion) -> SplitQuaternion:
    x0, x1, x2, x3 = x
    y0, y1, y2, y3 = y
    return SplitQuaternion(
        x0 * y0 - x1 * y1 + x2 * y2 + x3 * y3,
        x0 * y1 + x1 * y0 - x2 * y3 + x3 * y2,
        x0 * y2 + x2 * y0 - x1 * y3 + x3 * y1,
        x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
    )


def conjugate(x: SplitQuaternion) -> SplitQuaternion:
    return SplitQuaternion(x.x0, -x.x1, -x.x2, -x.x3)


def re(x: SplitQuaternion) -> Number:
    return x.x0


def im(x: SplitQuaternion) -> SplitQuaternion:
    return SplitQuaternion(0, x.x1, x.x2, x.x3)


def qform(x: SplitQuaternion) -> Number:
    """x0^2 + x1^2 - x2^2 - x3^2, i.e. conj(x) * x."""
    return x.x0 * x.x0 + x.x1 * x.x1 - x.x2 * x.x2 - x.x3 * x.x3


def inner(x: SplitQuaternion, y: SplitQuaternion) -> Number:
    return x.x0 * y.x0 + x.x1 * y.x1 - x.x2 * y.x2 - x.x3 * y.x3


def classify(x: SplitQuaternion, tol: float = 0.0) -> Kind:
    if not x:
        return Kind.ZERO
    n = qform(x)
    if n == 0 or (tol and abs(n) <= tol * max(abs(v) for v in x) ** 2):
        return Kind.ZERO_DIVISOR
    return Kind.INVERTIBLE


def inverse(x: SplitQuaternion) -> SplitQuaternion:
    n = qform(x)
    if n == 0:
        raise NotInvertible(f"{x} is not invertible (I_x = 0)")
    return conjugate(x) / n


def pinv(x: SplitQuaternion, tol: float = 0.0) -> SplitQuaternion:
    """Moore-Penrose inverse, using x = t1 + t2 j with complex t1, t2."""
    kind = classify(x, tol)
    if kind is Kind.ZERO:
        return ZERO
    if kind is Kind.INVERTIBLE:
        return inverse(x)
    # (conj(t1) + t2 j) / (4 |t1|^2); |t1| = |t2| != 0 for a nonzero zero divisor
    t1_sq = x.x0 * x.x0 + x.x1 * x.x1
    return SplitQuaternion(x.x0, -x.x1, x.x2, x.x3) / (4 * t1_sq)


def left_matrix(q: SplitQuaternion) -> list[list[Number]]:
    """Real 4x4 matrix of y -> q * y in the basis 1, i, j, k."""
    cols = [list(mul(q, e)) for e in (ONE, I, J, K)]
    return [[cols[c][r] for c in range(4)] for r in range(4)]


class LinearKind(enum.Enum):
    EMPTY = "empty"
    POINT = "point"
    AFFINE = "affine"


@dataclass(frozen=True)
class LinearSolutionSet:
    """Solutions of a x = d: ``base + projector @ y`` for all real y."""

    kind: LinearKind
    base: SplitQuaternion = ZERO
    projector: tuple[tuple[Number, ...], ...] = ((0,) * 4,) * 4
    rank: int = 0

    def point(self, y: SplitQuaternion | Sequence) -> SplitQuaternion:
        if self.kind is LinearKind.EMPTY:
            raise ValueError("empty solution set has no points")
        y = list(y)
        return self.base + SplitQuaternion(*_linalg.matvec(self.projector, y))

    def directions(self) -> list[SplitQuaternion]:
        if self.kind is not LinearKind.AFFINE:
            return []
        return [SplitQuaternion(*v) for v in _linalg.column_basis(self.projector)]

    def contains(self, x: SplitQuaternion) -> bool:
        if self.kind is LinearKind.EMPTY:
            return False
        if self.kind is LinearKind.POINT:
            return x == self.base
        diff = list(x - self.base)
        return _linalg.solve_affine(self.projector, diff) is not None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind.value}
        if self.kind is not LinearKind.EMPTY:
            out["base"] = self.base.to_json()
        if self.kind is LinearKind.AFFINE:
            out["projector"] = [[format_scalar(v) for v in row] for row in self.projector]
            out["rank"] = self.rank
        return out


def solve_linear(a: SplitQuaternion, d: SplitQuaternion) -> LinearSolutionSet:
    """Complete solution set of a x = d."""
    kind = classify(a)
    if kind is Kind.INVERTIBLE:
        return LinearSolutionSet(LinearKind.POINT, inverse(a) * d)
    if kind is Kind.ZERO:
        if d:
            return LinearSolutionSet(LinearKind.EMPTY)
        eye = tuple(tuple(row) for row in _linalg.identity(4))
        return LinearSolutionSet(LinearKind.AFFINE, ZERO, eye, 4)
    ap = pinv(a)
    if a * ap * d != d:
        return LinearSolutionSet(LinearKind.EMPTY)
    proj = left_matrix(ONE - ap * a)
    return LinearSolutionSet(
        LinearKind.AFFINE,
        ap * d,
        tuple(tuple(row) for row in proj),
        _linalg.rank(proj),
    )


def sqrt_exact(value: Number) -> Number:
    """Square root, exact when ``value`` is the square of a rational."""
    if value < 0:
        raise ValueError("square root of a negative number")
    if isinstance(value, Fraction):
        n, d = value.numerator, value.denominator
        rn, rd = math.isqrt(n), math.isqrt(d)
        if rn * rn == n and rd * rd == d:
            return Fraction(rn, rd)
    return math.sqrt(value)
