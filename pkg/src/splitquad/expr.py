"""Tiny expression trees for the components of parametric solution families.

Only +, -, *, /, ^2 and sqrt are needed.  Expressions serialize to a prefix
grammar such as ``(+ x0 (* -1/2 (sqrt (+ (^2 x1) 3))))`` and parse back.
"""

from __future__ import annotations

import math
import re as _re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from .algebra import parse_rational
from .errors import ParseError

Number = Union[Fraction, float]


class OutOfDomain(ValueError):
    """Raised when a parameter assignment leaves an expression's domain."""


SQRT_SLACK = 1e-12


class Expr:
    __slots__ = ()

    def evaluate(self, env: Mapping[str, Number]) -> Number:
        raise NotImplementedError

    def subs(self, mapping: Mapping[str, Expr]) -> Expr:
        raise NotImplementedError

    def free_vars(self) -> frozenset[str]:
        raise NotImplementedError

    def to_prefix(self) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.to_prefix()

    # building

    def __add__(self, other) -> Expr:
        return add(self, lift(other))

    def __radd__(self, other) -> Expr:
        return add(lift(other), self)

    def __sub__(self, other) -> Expr:
        return add(self, neg(lift(other)))

    def __rsub__(self, other) -> Expr:
        return add(lift(other), neg(self))

    def __mul__(self, other) -> Expr:
        return mul(self, lift(other))

    def __rmul__(self, other) -> Expr:
        return mul(lift(other), self)

    def __truediv__(self, other) -> Expr:
        return div(self, lift(other))

    def __rtruediv__(self, other) -> Expr:
        return div(lift(other), self)

    def __neg__(self) -> Expr:
        return neg(self)

    def __pow__(self, n: int) -> Expr:
        if n != 2:
            raise ValueError("only squares are supported")
        return Square(self)


@dataclass(frozen=True, eq=True)
class Const(Expr):
    value: Number

    def evaluate(self, env):
        return self.value

    def subs(self, mapping):
        return self

    def free_vars(self):
        return frozenset()

    def to_prefix(self):
        v = self.value
        if isinstance(v, float):
            return repr(v)
        return str(v)


@dataclass(frozen=True, eq=True)
class Var(Expr):
    name: str

    def evaluate(self, env):
        try:
            return env[self.name]
        except KeyError:
            raise KeyError(f"no value for parameter {self.name!r}") from None

    def subs(self, mapping):
        return mapping.get(self.name, self)

    def free_vars(self):
        return frozenset((self.name,))

    def to_prefix(self):
        return self.name


@dataclass(frozen=True, eq=True)
class Add(Expr):
    terms: tuple[Expr, ...]

    def evaluate(self, env):
        return sum((t.evaluate(env) for t in self.terms), Fraction(0))

    def subs(self, mapping):
        out: Expr = Const(Fraction(0))
        for t in self.terms:
            out = add(out, t.subs(mapping))
        return out

    def free_vars(self):
        return frozenset().union(*(t.free_vars() for t in self.terms))

    def to_prefix(self):
        return "(+ " + " ".join(t.to_prefix() for t in self.terms) + ")"


@dataclass(frozen=True, eq=True)
class Mul(Expr):
    factors: tuple[Expr, ...]

    def evaluate(self, env):
        acc: Number = Fraction(1)
        for f in self.factors:
            acc = acc * f.evaluate(env)
        return acc

    def subs(self, mapping):
        out: Expr = Const(Fraction(1))
        for f in self.factors:
            out = mul(out, f.subs(mapping))
        return out

    def free_vars(self):
        return frozenset().union(*(f.free_vars() for f in self.factors))

    def to_prefix(self):
        return "(* " + " ".join(f.to_prefix() for f in self.factors) + ")"


@dataclass(frozen=True, eq=True)
class Div(Expr):
    num: Expr
    den: Expr

    def evaluate(self, env):
        d = self.den.evaluate(env)
        if d == 0:
            raise OutOfDomain("division by zero")
        return self.num.evaluate(env) / d

    def subs(self, mapping):
        return div(self.num.subs(mapping), self.den.subs(mapping))

    def free_vars(self):
        return self.num.free_vars() | self.den.free_vars()

    def to_prefix(self):
        return f"(/ {self.num.to_prefix()} {self.den.to_prefix()})"


@dataclass(frozen=True, eq=True)
class Square(Expr):
    arg: Expr

    def evaluate(self, env):
        v = self.arg.evaluate(env)
        return v * v

    def subs(self, mapping):
        inner = self.arg.subs(mapping)
        if isinstance(inner, Const):
            return Const(inner.value * inner.value)
        return Square(inner)

    def free_vars(self):
        return self.arg.free_vars()

    def to_prefix(self):
        return f"(^2 {self.arg.to_prefix()})"


@dataclass(frozen=True, eq=True)
class Sqrt(Expr):
    arg: Expr

    def evaluate(self, env):
        return sqrt_value(self.arg.evaluate(env))

    def subs(self, mapping):
        return Sqrt(self.arg.subs(mapping))

    def free_vars(self):
        return self.arg.free_vars()

    def to_prefix(self):
        return f"(sqrt {self.arg.to_prefix()})"


def sqrt_value(v: Number) -> Number:
    if v < 0:
        if isinstance(v, float) and v > -SQRT_SLACK:
            return 0.0
        raise OutOfDomain("square root of a negative value")
    if isinstance(v, Fraction):
        rn, rd = math.isqrt(v.numerator), math.isqrt(v.denominator)
        if rn * rn == v.numerator and rd * rd == v.denominator:
            return Fraction(rn, rd)
    return math.sqrt(v)


def lift(value) -> Expr:
    if isinstance(value, Expr):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not expressions")
    if isinstance(value, int):
        return Const(Fraction(value))
    if isinstance(value, (Fraction, float)):
        return Const(value)
    if isinstance(value, str):
        return Var(value)
    raise TypeError(f"cannot lift {type(value).__name__} to an expression")


def _is_const(e: Expr, v=None) -> bool:
    return isinstance(e, Const) and (v is None or e.value == v)


def add(a: Expr, b: Expr) -> Expr:
    terms = list(a.terms if isinstance(a, Add) else (a,)) + list(b.terms if isinstance(b, Add) else (b,))
    consts = [t.value for t in terms if isinstance(t, Const)]
    rest = [t for t in terms if not isinstance(t, Const)]
    total = sum(consts, Fraction(0))
    if total != 0:
        rest.append(Const(total))
    if not rest:
        return Const(Fraction(0))
    if len(rest) == 1:
        return rest[0]
    return Add(tuple(rest))


def mul(a: Expr, b: Expr) -> Expr:
    factors = list(a.factors if isinstance(a, Mul) else (a,)) + list(b.factors if isinstance(b, Mul) else (b,))
    coef: Number = Fraction(1)
    rest = []
    for f in factors:
        if isinstance(f, Const):
            coef = coef * f.value
        else:
            rest.append(f)
    if coef == 0:
        return Const(Fraction(0))
    if not rest:
        return Const(coef)
    if coef != 1 and len(rest) == 1 and isinstance(rest[0], Add):
        out: Expr = Const(Fraction(0))
        for t in rest[0].terms:
            out = add(out, mul(Const(coef), t))
        return out
    if coef != 1:
        rest.insert(0, Const(coef))
    if len(rest) == 1:
        return rest[0]
    return Mul(tuple(rest))


def neg(a: Expr) -> Expr:
    return mul(Const(Fraction(-1)), a)


def div(a: Expr, b: Expr) -> Expr:
    if _is_const(b):
        if b.value == 0:
            raise ZeroDivisionError("constant zero denominator")
        return mul(Const(1 / b.value if isinstance(b.value, float) else Fraction(1) / b.value), a)
    if _is_const(a, 0):
        return a
    return Div(a, b)


def sqrt(a) -> Expr:
    a = lift(a)
    if isinstance(a, Const) and not isinstance(a.value, float) and a.value >= 0:
        return Const(sqrt_value(a.value))
    return Sqrt(a)


def linear(coeffs: Mapping[str, Number], const: Number = 0) -> Expr:
    """sum(coeffs[v] * v) + const."""
    out: Expr = lift(const)
    for name, c in coeffs.items():
        out = add(out, mul(lift(c), Var(name)))
    return out


# prefix grammar

_TOKEN = _re.compile(r"\s*(\(|\)|[^\s()]+)")
_OPS = {"+": 2, "-": 1, "*": 2, "/": 2, "^2": 1, "sqrt": 1}


def _tokens(text: str) -> list[str]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"bad expression near offset {pos}: {text!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


def _atom(tok: str) -> Expr:
    if _re.fullmatch(r"[A-Za-z_]\w*", tok):
        return Var(tok)
    if _re.fullmatch(r"[+-]?\d+(/\d+)?", tok):
        return Const(parse_rational(tok))
    try:
        return Const(float(tok))
    except ValueError:
        raise ParseError(f"bad atom {tok!r}") from None


def parse_expr(text: str) -> Expr:
    toks = _tokens(text)
    pos = 0

    def walk() -> Expr:
        nonlocal pos
        if pos >= len(toks):
            raise ParseError("unexpected end of expression")
        tok = toks[pos]
        pos += 1
        if tok == ")":
            raise ParseError("unexpected ')'")
        if tok != "(":
            return _atom(tok)
        if pos >= len(toks) or toks[pos] not in _OPS:
            raise ParseError(f"unknown operator in {text!r}")
        op = toks[pos]
        pos += 1
        args = []
        while pos < len(toks) and toks[pos] != ")":
            args.append(walk())
        if pos >= len(toks):
            raise ParseError("missing ')'")
        pos += 1
        if len(args) < _OPS[op] or (op in ("^2", "sqrt", "/") and len(args) != _OPS[op]):
            raise ParseError(f"wrong arity for {op!r}")
        if op == "+":
            return Add(tuple(args))
        if op == "*":
            return Mul(tuple(args))
        if op == "-":
            return neg(args[0]) if len(args) == 1 else add(args[0], neg(args[1]))
        if op == "/":
            return Div(args[0], args[1])
        if op == "^2":
            return Square(args[0])
        return Sqrt(args[0])

    out = walk()
    if pos != len(toks):
        raise ParseError(f"trailing tokens in {text!r}")
    return out


OPS = ("==", ">=", ">", "!=")


@dataclass(frozen=True)
class Constraint:
    """``expr op 0`` for op in ==, >=, >, !=."""

    expr: Expr
    op: str

    def __post_init__(self):
        if self.op not in OPS:
            raise ValueError(f"unknown constraint operator {self.op!r}")

    def holds(self, env: Mapping[str, Number], tol: float = 0.0) -> bool:
        try:
            v = self.expr.evaluate(env)
        except OutOfDomain:
            return False
        if self.op == "==":
            return abs(v) <= tol
        if self.op == ">=":
            return v >= -tol
        if self.op == ">":
            return v > tol
        return abs(v) > tol

    def subs(self, mapping: Mapping[str, Expr]) -> Constraint:
        return Constraint(self.expr.subs(mapping), self.op)

    def to_text(self) -> str:
        return f"{self.expr.to_prefix()} {self.op} 0"

    @classmethod
    def parse(cls, text: str) -> Constraint:
        parts = text.strip().rsplit(None, 2)
        if len(parts) != 3 or parts[2] != "0" or parts[1] not in OPS:
            raise ParseError(f"bad constraint {text!r}")
        body, op, _ = parts
        if not body:
            raise ParseError(f"bad constraint {text!r}")
        return cls(parse_expr(body), op)


def infix(e: Expr) -> str:
    """Human-readable rendering; not meant to be parsed back."""
    if isinstance(e, Const):
        return e.to_prefix()
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Add):
        out = infix(e.terms[0])
        for t in e.terms[1:]:
            s = infix(t)
            out += f" - {s[1:]}" if s.startswith("-") else f" + {s}"
        return out
    if isinstance(e, Mul):
        parts = []
        lead = ""
        for f in e.factors:
            if isinstance(f, Const) and f is e.factors[0]:
                if f.value == -1:
                    lead = "-"
                    continue
                parts.append(infix(f))
            else:
                s = infix(f)
                parts.append(f"({s})" if isinstance(f, (Add, Div)) else s)
        return lead + "*".join(parts)
    if isinstance(e, Div):
        num, den = infix(e.num), infix(e.den)
        if isinstance(e.num, (Add, Mul)):
            num = f"({num})"
        if not isinstance(e.den, (Var, Const)):
            den = f"({den})"
        return f"{num}/{den}"
    if isinstance(e, Square):
        s = infix(e.arg)
        return f"({s})^2" if not isinstance(e.arg, Var) else f"{s}^2"
    if isinstance(e, Sqrt):
        return f"sqrt({infix(e.arg)})"
    raise TypeError(type(e).__name__)
