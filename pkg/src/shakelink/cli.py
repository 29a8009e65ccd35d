"""``shakelink`` command line.

Exit codes: 0 success, 1 computation or verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .construct import closure
from .milnor import MultiIndex, format_mu, linking_matrix, mu
from .milnor.series import DegreeTooLarge
from .pd import DiagramError, StringLinkDiagram, emit_pd, parse_pd, validate

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _emit(lines, fmt: str, payload) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def read_diagram(path: str):
    try:
        text = Path(path).read_text("utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        d = parse_pd(text)
    except DiagramError as exc:
        raise InputError(f"{path}: {exc}") from None
    problems = validate(d)
    if problems:
        raise InputError(f"{path}: invalid diagram: " + "; ".join(str(v) for v in problems))
    return d


def _closed(d):
    # string-link invariants are read off the closure
    return closure(d) if isinstance(d, StringLinkDiagram) else d


# ---------------------------------------------------------------- subcommands

def cmd_mu(args) -> int:
    d = _closed(read_diagram(args.path))
    try:
        I = MultiIndex.parse(args.index)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if len(I) < 2 or any(not 1 <= i <= d.m for i in I):
        raise InputError(f"index {I} must have length >= 2 with entries in 1..{d.m}")
    if args.degree is not None and args.degree < len(I):
        raise InputError(f"--degree {args.degree} is below |I| = {len(I)}")
    r = mu(d, I, args.degree)
    payload = {"I": str(I), "value": r.mu, "delta": r.delta, "mubar": r.mu_bar, "q": r.q_used}
    _emit([format_mu(I, r)], args.format, payload)
    return EXIT_OK


def cmd_lk(args) -> int:
    d = _closed(read_diagram(args.path))
    lk = linking_matrix(d)
    lines = [f"lk i={i} j={j} value={v}" for (i, j), v in sorted(lk.items())]
    _emit(lines, args.format, [{"i": i, "j": j, "value": v} for (i, j), v in sorted(lk.items())])
    return EXIT_OK


def cmd_fixtures(args) -> int:
    from .lab import fixtures as fx
    from .lab.recipe_io import RecipeSchemaError, resolve_string_link

    if args.name is None:
        _emit(list(fx.FIXTURES), args.format, list(fx.FIXTURES))
        return EXIT_OK
    try:
        K = resolve_string_link(args.knot) if args.knot else None
        d = fx.fixture(args.name, K, args.m)
    except (fx.UnknownFixture, RecipeSchemaError) as exc:
        raise InputError(exc.args[0]) from None
    except (DiagramError, ValueError) as exc:
        raise InputError(str(exc)) from None
    text = emit_pd(d)
    if args.out:
        Path(args.out).write_text(text, "utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_build(args) -> int:
    from .lab.recipe_io import RecipePreconditionError, RecipeSchemaError, load_recipe, run_recipe
    from .plotting import plot_report

    try:
        recipe = load_recipe(args.recipe)
    except RecipeSchemaError as exc:
        raise InputError(str(exc)) from None
    try:
        report = run_recipe(recipe, args.seed)
    except RecipeSchemaError as exc:
        raise InputError(str(exc)) from None
    except RecipePreconditionError as exc:
        print(f"error: precondition failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "before.pd").write_text(emit_pd(report.before), "utf-8")
    (out / "after.pd").write_text(emit_pd(report.after), "utf-8")
    lines = report.lines()
    (out / "report.txt").write_text("\n".join(lines) + "\n", "utf-8")
    (out / "report.json").write_text(json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n", "utf-8")
    plot_report(report, out / "report.png")
    _emit(lines, args.format, report.to_json())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_verify(args) -> int:
    from .lab.suites import SUITES, run

    if args.suite not in (*SUITES, "all"):
        raise InputError(f"unknown suite {args.suite!r}; choose from {', '.join((*SUITES, 'all'))}")
    results = run(args.suite, args.seed)
    lines = [line for r in results for line in r.lines()]
    payload = [r.to_json() for r in results]
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"verify-{args.suite}.txt").write_text("\n".join(lines) + "\n", "utf-8")
    _emit(lines, args.format, payload)
    return EXIT_OK if all(r.failed == 0 for r in results) else EXIT_FAIL


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="shakelink", description="Milnor invariants and shake-concordance experiments on link diagrams.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("lines", "json"), default="lines")

    s = sub.add_parser("mu", parents=[fmt], help="Milnor invariant of one multi-index")
    s.add_argument("path")
    s.add_argument("--index", required=True, help="multi-index as digits, e.g. 123")
    s.add_argument("--degree", type=int, help="truncation degree q (default |I|)")
    s.set_defaults(func=cmd_mu)

    s = sub.add_parser("lk", parents=[fmt], help="pairwise linking numbers")
    s.add_argument("path")
    s.set_defaults(func=cmd_lk)

    s = sub.add_parser("fixtures", parents=[fmt], help="list fixtures or print one in PD form")
    s.add_argument("name", nargs="?")
    s.add_argument("--knot", help="knot for h and L (e.g. trefoil)")
    s.add_argument("--m", type=int, help="component count for unlink")
    s.add_argument("--out", help="write the PD text here instead of stdout")
    s.set_defaults(func=cmd_fixtures)

    s = sub.add_parser("build", parents=[fmt], help="run a recipe file and write endpoints and report")
    s.add_argument("recipe")
    s.add_argument("--out", required=True)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("verify", parents=[fmt], help="run a verification suite")
    s.add_argument("suite", help="magnus, oracle, additivity, pairs or all")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", help="also write the check lines to a file in this directory")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DegreeTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (DiagramError, ArithmeticError, ValueError) as exc:
        print(f"error: computation failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
