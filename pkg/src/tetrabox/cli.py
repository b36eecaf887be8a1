"""``tetrabox`` command-line front end.

Exit codes: 0 success, 1 a check failed (or the element is outside the
requested subalgebra), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import NotInSubalgebra, TetraboxError
from .loop import LoopElem, bracket, canonical_pair, decompose_nine, is_like_definitional, is_like_structural, loop_prime
from .onsager import Basis, coords
from .parse import parse_value
from .ring import ring_prime
from .verify import DEFAULT_MAX, DEFAULT_PAIR_DEPTH, SUITES, run_suite

EXIT_OK, EXIT_CHECK, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


def _read_expr(text: str) -> str:
    return sys.stdin.read().strip() if text == "-" else text


def _value(text: str):
    return parse_value(_read_expr(text))


def _loop(text: str) -> LoopElem:
    v = _value(text)
    if not isinstance(v, LoopElem):
        raise _UsageError(f"expected a loop element, got the scalar {v}")
    return v


def _value_json(v):
    if isinstance(v, LoopElem):
        return v.to_json()
    return {"value": str(v)}


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print(text)


def cmd_eval(args) -> int:
    v = _value(args.expr)
    _emit(args, str(v), _value_json(v))
    return EXIT_OK


def cmd_bracket(args) -> int:
    v = bracket(_loop(args.left), _loop(args.right))
    _emit(args, str(v), v.to_json())
    return EXIT_OK


def cmd_prime(args) -> int:
    v = _value(args.expr)
    v = loop_prime(v, args.prime) if isinstance(v, LoopElem) else ring_prime(v, args.prime)
    _emit(args, str(v), _value_json(v))
    return EXIT_OK


def cmd_decompose(args) -> int:
    grid = decompose_nine(_loop(args.expr))
    _emit(args, grid.render(), grid.to_json())
    return EXIT_OK


def cmd_coords(args) -> int:
    u = _loop(args.expr)
    try:
        c = coords(u, Basis(args.basis), args.prime)
    except NotInSubalgebra as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK
    _emit(args, c.render(), c.to_json())
    return EXIT_OK


def _pair(text: str):
    digits = text[1:] if text.startswith("x") else text
    if len(digits) != 2 or not digits.isdigit():
        raise _UsageError(f"generator pair must look like 12 or x03, got {text!r}")
    pair = (int(digits[0]), int(digits[1]))
    try:
        return canonical_pair(pair)[0]
    except (KeyError, ValueError) as exc:
        raise _UsageError(f"invalid generator pair {text!r}") from exc


def cmd_like(args) -> int:
    pair = _pair(args.pair)
    u = _loop(args.expr)
    structural = is_like_structural(pair, u)
    definitional = is_like_definitional(pair, u)
    label = f"x{pair[0]}{pair[1]}"
    payload = {"pair": label, "structural": structural, "definitional": definitional}
    text = f"{label}-like: {'yes' if structural else 'no'} (structural), {'yes' if definitional else 'no'} (definitional)"
    _emit(args, text, payload)
    return EXIT_OK if structural and definitional else EXIT_CHECK


def cmd_verify(args) -> int:
    max_n = DEFAULT_MAX if args.max is None else args.max
    pair_depth = DEFAULT_PAIR_DEPTH if args.max is None else max(2, args.max // 2)
    checks = run_suite(args.suite, max_n, pair_depth, args.seed)
    failed = [c for c in checks if not c.passed]
    if args.format == "json":
        payload = {
            "suite": args.suite,
            "max": max_n,
            "pair_depth": pair_depth,
            "total": len(checks),
            "failed": len(failed),
            "checks": [c.to_json() for c in checks],
        }
        print(json.dumps(payload, ensure_ascii=False))
    else:
        shown = checks if args.verbose else failed
        for c in shown:
            line = f"{c.status.upper():4}  {c.name}"
            if not c.passed and (c.lhs or c.rhs):
                line += f"\n      lhs: {c.lhs}\n      rhs: {c.rhs}"
            print(line)
        print(f"{args.suite}: {len(checks) - len(failed)}/{len(checks)} checks passed")
    return EXIT_CHECK if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tetrabox",
        description="Exact computations in the tetrahedron algebra via the three-point sl2 loop algebra.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    p.add_argument("expr", help="expression, or - to read stdin")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("bracket", parents=[common], help="Lie bracket of two loop elements")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("prime", parents=[common], help="apply the order-three automorphism")
    p.add_argument("expr")
    p.add_argument("--prime", type=int, choices=(0, 1, 2), default=1, help="number of applications")
    p.set_defaults(func=cmd_prime)

    p = sub.add_parser("decompose", parents=[common], help="nine-way direct-sum decomposition")
    p.add_argument("expr")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("coords", parents=[common], help="coordinates in a basis of O, O' or O''")
    p.add_argument("expr")
    p.add_argument("--basis", choices=[b.value for b in Basis], default="ab")
    p.add_argument("--prime", type=int, choices=(0, 1, 2), default=0)
    p.set_defaults(func=cmd_coords)

    p = sub.add_parser("like", parents=[common], help="test x_ij-likeness")
    p.add_argument("pair", help="generator pair such as 12, 03 or x31")
    p.add_argument("expr")
    p.set_defaults(func=cmd_like)

    p = sub.add_parser("verify", parents=[common], help="run verification sweeps")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max", type=int, default=None, help=f"sequence depth N (default {DEFAULT_MAX}); table depth N/2")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--verbose", "-v", action="store_true", help="list passing checks too")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "max", None) is not None and args.max < 2:
        print("error: --max must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (_UsageError, ArithmeticError, TetraboxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
