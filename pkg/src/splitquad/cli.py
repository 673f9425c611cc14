"""Command-line front end.

Exit codes: 0 ok, 1 input error, 2 no solutions (or unsolvable),
3 companion polynomial identically zero, 4 a verification or corpus check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from itertools import product

from . import corpus
from .algebra import SplitQuaternion, parse_quaternion, parse_rational
from .companion import solve_via_companion
from .errors import ParseError, SplitQuadError
from .sets import Shape, SolutionSet
from .solver import Analysis, QuadEquation, analyze, normalize, solve_pure_quadratic
from .verify import GridSpec, check_solution_set

OK, INPUT_ERROR, EMPTY, INAPPLICABLE, CHECK_FAILED = 0, 1, 2, 3, 4

# (x2, x3) values tried when the caller gives no --params
DEFAULT_PARAMS = [(Fraction(1), Fraction(1))] + [
    (Fraction(u), Fraction(v)) for u, v in product((-1, 0, 2), repeat=2)
]


class InputError(Exception):
    pass


def _quaternion(doc: dict, key: str) -> SplitQuaternion:
    if key not in doc:
        raise InputError(f"missing coefficient {key!r}")
    return SplitQuaternion.from_json(doc[key])


def read_document(path: str | None) -> QuadEquation:
    """Equation from a JSON document; "unnormalized" {d, e, f} takes precedence."""
    try:
        text = sys.stdin.read() if path in (None, "-") else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise InputError(str(exc)) from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError("the document must be a JSON object")
    raw = doc.get("unnormalized")
    if raw is None:
        return QuadEquation(*(_quaternion(doc, k) for k in "abc"))
    src = QuadEquation(*(_quaternion(raw, k) for k in "def"))
    if any(k in doc for k in "abc"):
        given = QuadEquation(*(_quaternion(doc, k) for k in "abc"))
        ne = normalize(*src)
        if given != ne.equation:
            raise InputError(f"a, b, c do not match the canonical form of d, e, f: {ne.equation}")
    return src


def parse_params(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError(f"--params wants x2,x3, got {text!r}")
    return parse_rational(parts[0].strip()), parse_rational(parts[1].strip())


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _semi_samples(an: Analysis, params) -> list[dict]:
    out = []
    for fam in an.solutions.families:
        if fam.shape is not Shape.SEMI_EXPLICIT:
            continue
        for x2, x3 in params:
            pts = fam.evaluate({"x2": x2, "x3": x3})
            out.append({"x2": str(x2), "x3": str(x3), "points": [p.to_json() for p in pts],
                        "text": [str(p) for p in pts]})
    return out


def cmd_solve(args) -> int:
    eq = read_document(args.input)
    an = analyze(eq)
    ne = an.normalized
    payload = {
        "equation": eq.to_json(),
        "normalized": {**ne.equation.to_json(), "shift": str(ne.shift)},
        "parts": [{"branch": p.branch, "case": p.case, "solutions": p.solutions.to_json()} for p in an.parts],
        "solutions": an.solutions.to_json(),
    }
    lines = [f"equation: {eq}", f"canonical form: {ne.equation}  (x = y + {ne.shift})" if ne.shift else
             f"canonical form: {ne.equation}"]
    for p in an.parts:
        lines.append(f"[{p.branch}] {p.case}")
    lines += ["solutions:", _indent(an.solutions.describe())]

    found = not an.solutions.is_empty()
    if args.y is not None:
        if ne.b:
            raise InputError("--y applies only when the canonical linear coefficient is 0")
        pure = solve_pure_quadratic(ne.a, ne.c)
        if not pure.solvable:
            found = False
        roots = pure.roots_for(parse_quaternion(args.y)).shifted(ne.shift) if pure.solvable else SolutionSet()
        payload["y"] = {"y": args.y, "solutions": roots.to_json()}
        lines += [f"square roots for y = {args.y}:", _indent(roots.describe())]

    params = [parse_params(args.params)] if args.params else DEFAULT_PARAMS
    samples = _semi_samples(an, params)
    if samples:
        payload["semi_explicit"] = samples
        lines.append("quartic-root family at sample (x2, x3):")
        for s in samples:
            lines.append(f"  ({s['x2']}, {s['x3']}): " + ("; ".join(s["text"]) or "none"))
    _emit(args, payload, "\n".join(lines))
    return OK if found else EMPTY


def cmd_companion(args) -> int:
    eq = read_document(args.input)
    rep = solve_via_companion(eq)
    if not rep.applicable:
        msg = "companion polynomial identically zero"
        _emit(args, {"applicable": False, "message": msg, "poly": rep.to_json()["poly"]}, msg)
        return INAPPLICABLE
    lines = [f"companion polynomial: {rep.poly}", f"quadratic divisors x^2 - T x + N: {len(rep.divisors)}"]
    for d in rep.divisors:
        lines.append(f"  T = {d.T}, N = {d.N}")
        if d.linear is not None:
            lines.append(f"    linear solutions: {d.linear.kind.value}")
        if d.note:
            lines.append(f"    {d.note}")
        lines.append(_indent(d.solutions.describe(), 4))
    lines += ["union:", _indent(rep.solutions.describe())]
    _emit(args, rep.to_json(), "\n".join(lines))
    return OK if not rep.solutions.is_empty() else EMPTY


def cmd_verify(args) -> int:
    eq = read_document(args.input)
    grid = GridSpec.parse(args.grid) if args.grid else GridSpec.standard()
    rep = check_solution_set(eq, analyze(eq).solutions, grid, samples=args.samples, seed=args.seed)
    _emit(args, rep.to_json(), rep.to_text())
    return OK if rep.passed else CHECK_FAILED


def cmd_corpus(args) -> int:
    if args.list:
        for e in corpus.ENTRIES:
            print(f"{e.id:28} {e.title}")
        return OK
    chosen = corpus.select(args.only)
    if not chosen:
        raise InputError(f"no corpus entry matches {args.only!r}")
    results = [e.run() for e in chosen]
    if args.json:
        print(json.dumps({"passed": all(r.passed for r in results), "results": [r.to_json() for r in results]},
                         indent=2))
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.id:28} {r.title}")
            for c in r.checks:
                if not c.ok:
                    print(f"      {c.name}: {c.detail}")
        print(f"{sum(r.passed for r in results)}/{len(results)} passed")
    return OK if all(r.passed for r in results) else CHECK_FAILED


def _indent(text: str, n: int = 2) -> str:
    return "\n".join(" " * n + line for line in text.splitlines())


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="splitquad", description="Quadratic equations over split quaternions.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(sp):
        sp.add_argument("input", nargs="?", help="equation document (JSON); stdin when omitted or '-'")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        return sp

    s = with_input(sub.add_parser("solve", help="complete solution set"))
    s.add_argument("--y", help="square roots for this y (only when the linear term vanishes)")
    s.add_argument("--params", help="x2,x3 at which to evaluate the quartic-root family")
    s.set_defaults(func=cmd_solve)

    c = with_input(sub.add_parser("companion", help="solve via the companion polynomial"))
    c.set_defaults(func=cmd_companion)

    v = with_input(sub.add_parser("verify", help="check the solution set against a grid search"))
    v.add_argument("--grid", help="lo:hi:step for every coordinate (default -2:2:1/2)")
    v.add_argument("--samples", type=int, default=100, help="samples per family")
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("corpus", help="run the worked equations against their expected answers")
    k.add_argument("--only", help="entry id, or a substring of ids")
    k.add_argument("--json", action="store_true")
    k.add_argument("--list", action="store_true", help="list entry ids")
    k.set_defaults(func=cmd_corpus)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, SplitQuadError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
