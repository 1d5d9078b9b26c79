"""Command-line front end.

All subcommands are deterministic: identical invocations produce identical
bytes.  Exit codes: 0 success or verified, 1 verification failure, 2 usage
error, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from .coefficients import table, via_quotient, via_recursion_fib, via_recursion_luc
from .errors import DomainError, ResourceError
from .interpretations import PAIR_BUDGET, recursion_task_cases, theorem_cases
from .lucas import check_lemma1, lucas_F, lucas_L, lucas_factorial
from .partitions import enumerate_in_rect
from .poly import BivariatePolynomial, UnivariatePolynomial
from .reports import IdentityReport
from .specializations import FIBONOMIAL, QBINOMIAL, lnomial, specialize
from .tilings import CIRCULAR, LINEAR, LINEAR_NOLEAD, enumerate_tilings

_TILING_KINDS = {"linear": LINEAR, "nolead": LINEAR_NOLEAD, "circular": CIRCULAR}
_METHODS = {
    "quotient": via_quotient,
    "rec-fib": via_recursion_fib,
    "rec-luc": via_recursion_luc,
}


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {text}")
    return value


def _latex_bivar(p: BivariatePolynomial) -> str:
    if p.is_zero():
        return "0"
    rendered = []
    for a, b, c in p.terms():
        mag = abs(c)
        factors = []
        if a:
            factors.append("s" if a == 1 else f"s^{{{a}}}")
        if b:
            factors.append("t" if b == 1 else f"t^{{{b}}}")
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = " ".join(factors)
        else:
            body = " ".join([str(mag)] + factors)
        rendered.append(("-" if c < 0 else "+", body))
    sign, body = rendered[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in rendered[1:]:
        out += f" {sign} {body}"
    return out


def _latex_univar(u: UnivariatePolynomial) -> str:
    if u.is_zero():
        return "0"
    rendered = []
    for power in range(u.degree, -1, -1):
        c = u.coeff_at(power)
        if not c:
            continue
        mag = abs(c)
        if power == 0:
            body = str(mag)
        else:
            var = "q" if power == 1 else f"q^{{{power}}}"
            body = var if mag == 1 else f"{mag} {var}"
        rendered.append(("-" if c < 0 else "+", body))
    sign, body = rendered[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in rendered[1:]:
        out += f" {sign} {body}"
    return out


def _render_bivar(p: BivariatePolynomial, fmt: str) -> str:
    if fmt == "text":
        return p.canonical_text()
    if fmt == "json":
        return json.dumps(p.to_json_dict())
    return _latex_bivar(p)


def _render_value(value, fmt: str) -> str:
    if isinstance(value, UnivariatePolynomial):
        if fmt == "text":
            return value.canonical_text()
        if fmt == "json":
            return json.dumps(value.to_json_dict())
        return _latex_univar(value)
    if fmt == "json":
        return json.dumps({"value": str(value)})
    return str(value)


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("text", "json", "latex"), default="text"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lucasnomial",
        description="Exact Lucas polynomial and lucasnomial computations, "
        "tiling enumeration, and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lucas", help="print a sequence polynomial")
    p.add_argument("kind", choices=("F", "L", "factorial"))
    p.add_argument("n", type=_nonneg)
    _add_format(p)
    p.set_defaults(func=_cmd_lucas)

    p = sub.add_parser("lucasnomial", help="print a lucasnomial coefficient")
    p.add_argument("n", type=_nonneg)
    p.add_argument("k", type=int)
    p.add_argument("--method", choices=sorted(_METHODS), default="quotient")
    _add_format(p)
    p.set_defaults(func=_cmd_lucasnomial)

    p = sub.add_parser("table", help="print the coefficient triangle")
    p.add_argument("n", type=_nonneg, metavar="N")
    _add_format(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("tilings", help="list tilings of a strip")
    p.add_argument("kind", choices=sorted(_TILING_KINDS))
    p.add_argument("n", type=_nonneg)
    p.add_argument("--weights", action="store_true")
    p.set_defaults(func=_cmd_tilings)

    p = sub.add_parser("partitions", help="list partitions in a rectangle")
    p.add_argument("m", type=_nonneg)
    p.add_argument("n", type=_nonneg)
    p.add_argument("--complement", action="store_true")
    p.set_defaults(func=_cmd_partitions)

    p = sub.add_parser("verify", help="verify an identity family exhaustively")
    p.add_argument("kind", choices=("lemma1", "recursions", "theorem"))
    p.add_argument("--m-max", type=_nonneg, default=None)
    p.add_argument("--n-max", type=_nonneg, default=None)
    p.add_argument("--mode", choices=("enumerate", "gf"), default="gf")
    p.add_argument("--flavor", choices=("linear", "circular", "both"), default="both")
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--budget", type=_nonneg, default=PAIR_BUDGET)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("specialize", help="evaluate a coefficient at a preset")
    p.add_argument("n", type=_nonneg)
    p.add_argument("k", type=int)
    p.add_argument(
        "--preset", choices=("fibonomial", "lnomial", "qbinomial"), required=True
    )
    p.add_argument("--ell", type=int, default=None)
    _add_format(p)
    p.set_defaults(func=_cmd_specialize)

    return parser


def _cmd_lucas(args) -> int:
    seq = {"F": lucas_F, "L": lucas_L, "factorial": lucas_factorial}[args.kind]
    print(_render_bivar(seq(args.n), args.format))
    return 0


def _cmd_lucasnomial(args) -> int:
    poly = _METHODS[args.method](args.n, args.k)
    print(_render_bivar(poly, args.format))
    return 0


def _cmd_table(args) -> int:
    triangle = table(args.n)
    if args.format == "json":
        doc = {"rows": [[p.to_json_dict() for p in row] for row in triangle.rows]}
        print(json.dumps(doc))
        return 0
    joiner = " & " if args.format == "latex" else " | "
    render = _latex_bivar if args.format == "latex" else (
        lambda p: p.canonical_text()
    )
    for row in triangle.rows:
        print(joiner.join(render(p) for p in row))
    return 0


def _cmd_tilings(args) -> int:
    for tiling in enumerate_tilings(_TILING_KINDS[args.kind], args.n):
        line = tiling.text()
        if args.weights:
            line += "\t" + tiling.weight().canonical_text()
        print(line)
    return 0


def _cmd_partitions(args) -> int:
    for part in enumerate_in_rect(args.m, args.n):
        line = part.text()
        if args.complement:
            line += "\t" + part.complement().text()
        print(line)
    return 0


def _cmd_verify(args) -> int:
    if args.kind == "lemma1":
        m_max = 12 if args.m_max is None else args.m_max
        n_max = 12 if args.n_max is None else args.n_max
        tasks = [(m, n) for m in range(1, m_max + 1) for n in range(n_max + 1)]
        runner = lambda mn: check_lemma1(*mn).cases
        rng = f"1<=m<={m_max}, 0<=n<={n_max}"
    elif args.kind == "recursions":
        # single triangle bound m+n <= N, taken from whichever flag is given
        bound = max(12 if args.m_max is None else args.m_max,
                    12 if args.n_max is None else args.n_max)
        tasks = [
            (m, n) for m in range(1, bound + 1) for n in range(bound - m + 1)
        ]
        runner = lambda mn: recursion_task_cases(*mn)
        rng = f"m>=1, n>=0, m+n<={bound}"
    else:
        m_max = 5 if args.m_max is None else args.m_max
        n_max = 5 if args.n_max is None else args.n_max
        tasks = [(m, n) for m in range(m_max + 1) for n in range(n_max + 1)]
        runner = lambda mn: theorem_cases(
            mn[0], mn[1], args.flavor, args.mode, args.budget
        )
        rng = f"0<=m<={m_max}, 0<=n<={n_max}, flavor={args.flavor}, mode={args.mode}"

    if args.parallel:
        with ThreadPoolExecutor() as pool:
            results = pool.map(runner, tasks)
            collected = _collect(results, stream=args.format == "text")
    else:
        collected = _collect(map(runner, tasks), stream=args.format == "text")

    report = IdentityReport(args.kind, rng, tuple(collected))
    if args.format == "json":
        print(json.dumps(report.to_dict()))
    else:
        print(report.summary())
    return 0 if report.passed else 1


def _collect(results, stream: bool):
    collected = []
    for cases in results:
        for case in cases:
            if stream:
                print(case.line())
            collected.append(case)
    return collected


def _cmd_specialize(args) -> int:
    if args.preset == "fibonomial":
        preset = FIBONOMIAL
    elif args.preset == "qbinomial":
        preset = QBINOMIAL
    else:
        if args.ell is None:
            print("error: --preset lnomial requires --ell", file=sys.stderr)
            return 2
        preset = lnomial(args.ell)
    value = specialize(args.n, args.k, preset)
    print(_render_value(value, args.format))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    raise SystemExit(main())
