"""``smoothsum`` command line.

Exit codes: 0 success, 1 usage, 2 expression parse error, 3 domain or
truncation error, 4 internal-consistency failure.

Setting ``SMOOTHSUM_INJECT="family:key=value[;...]"`` overwrites memoized
constants before the command runs (e.g. ``bernoulli:4=1/31``); it exists so
the verification suite can be shown to catch corrupted caches.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .errors import ConsistencyError, DomainError, ParseError, TruncationError
from .genfunc import taylor_coeffs
from .numbers import (
    CACHE,
    bernoulli,
    eulerian_numbers,
    extended_gregory,
    gregory_coefficient,
    gregory_polynomial,
    hirzebruch,
)
from .parser import parse_genfunc
from .ramanujan import all_methods, gauge_expand, smoothed_sum
from .records import Output, OutputRecord, render
from .tables import TABLES
from .verify import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_DOMAIN, EXIT_CONSISTENCY = 0, 1, 2, 3, 4

# CLI spellings -> library method tags
METHOD_ALIASES = {
    "closed": "closed",
    "asym": "asymptotic",
    "intuitive": "intuitive",
    "regularize": "regularized",
    "bernoulli": "bernoulli",
    "all": "all",
}


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--paper-form", action="store_true", default=argparse.SUPPRESS)

    p = _ArgumentParser(prog="smoothsum", description="Exact Ramanujan smoothed sums.", parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def add(name, help_text):
        return sub.add_parser(name, help=help_text, parents=[common])

    s = add("bernoulli", "Bernoulli number B_n (B_1 = -1/2)")
    s.add_argument("--n", type=_nonneg, required=True)

    s = add("eulerian", "row n of the Eulerian triangle")
    s.add_argument("--n", type=_nonneg, required=True)

    s = add("gregory", "Gregory coefficient G_n")
    s.add_argument("--n", type=_nonneg, required=True)
    s.add_argument("--signed", action="store_true", help="coefficients of -x/log(1-x)")

    s = add("gregory-poly", "Gregory polynomial G_m(u)")
    s.add_argument("--m", type=_nonneg, required=True)
    s.add_argument("--u", type=_rational)

    s = add("extgregory", "extended Gregory coefficient")
    s.add_argument("--s", type=_positive, required=True)
    s.add_argument("--n", type=_nonneg, required=True)

    s = add("hirzebruch", "Hirzebruch number h_k")
    s.add_argument("--k", type=_nonneg, required=True)

    s = add("smooth", "smoothed sum of a power or figurate series")
    s.add_argument("family", choices=("power", "figurate"))
    s.add_argument("--k", type=_positive, required=True)
    s.add_argument("--m", type=_rational, default=Fraction(1))
    s.add_argument("--method", choices=tuple(METHOD_ALIASES), default="closed")

    s = add("coeffs", "Taylor coefficients of a generating function")
    s.add_argument("--expr", required=True)
    s.add_argument("--n", type=_nonneg, required=True)

    s = add("expand", "gauge expansion at x = exp(-t)")
    s.add_argument("--expr", required=True)
    s.add_argument("--gauge", action="store_true", required=True)
    s.add_argument("--order", type=_nonneg)

    s = add("table", "regenerate a summary table")
    s.add_argument("which", choices=sorted(TABLES))

    s = add("verify", "run self-check suites")
    s.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    return p


# commands ------------------------------------------------------------------


def _single(command: str, index: str, value, **fields) -> Output:
    return Output(command, [OutputRecord(index=index, value=value, fields=fields)])


def cmd_bernoulli(args) -> Output:
    return _single("bernoulli", f"n={args.n}", bernoulli(args.n))


def cmd_eulerian(args) -> Output:
    row = eulerian_numbers(args.n)
    out = Output("eulerian")
    for j, a in enumerate(row):
        out.records.append(OutputRecord(index=f"n={args.n},j={j}", value=Fraction(a)))
    return out


def cmd_gregory(args) -> Output:
    return _single("gregory", f"n={args.n}", gregory_coefficient(args.n, signed=args.signed))


def cmd_gregory_poly(args) -> Output:
    gp = gregory_polynomial(args.m)
    if args.u is None:
        return Output("gregory-poly", [OutputRecord(index=f"m={args.m}", fields={"polynomial": str(gp)})])
    return _single("gregory-poly", f"m={args.m},u={args.u}", gp(args.u))


def cmd_extgregory(args) -> Output:
    return Output(
        "extgregory",
        [
            OutputRecord(
                index=f"s={args.s},n={args.n}",
                value=extended_gregory(args.s, args.n),
                paper_den=(hirzebruch(args.n), args.s),
            )
        ],
    )


def cmd_hirzebruch(args) -> Output:
    return _single("hirzebruch", f"k={args.k}", Fraction(hirzebruch(args.k)))


def cmd_smooth(args) -> Output:
    method = METHOD_ALIASES[args.method]
    index = f"{args.family},k={args.k},m={args.m}"
    out = Output("smooth")
    results = all_methods(args.family, args.k, args.m) if method == "all" else [
        smoothed_sum(args.family, args.k, args.m, method)
    ]
    for r in results:
        out.records.append(OutputRecord(index=index, value=r.value, method=r.method))
    values = {r.value for r in results}
    if len(values) > 1:
        detail = ", ".join(f"{r.method}={r.value}" for r in results)
        raise _Disagreement(out, f"methods disagree: {detail}")
    return out


def cmd_coeffs(args) -> Output:
    g = parse_genfunc(args.expr)
    out = Output("coeffs")
    for n, c in enumerate(taylor_coeffs(g, args.n)):
        out.records.append(OutputRecord(index=f"n={n}", value=c))
    return out


def cmd_expand(args) -> Output:
    g = parse_genfunc(args.expr)
    exp = gauge_expand(g, args.order)
    rec = OutputRecord(
        index=args.expr,
        value=exp.constant,
        method="asymptotic",
        divergent={p: c for p, c in exp.divergent.items() if c != 0},
        tail=list(exp.tail),
    )
    return Output("expand", [rec])


def cmd_table(args) -> Output:
    return TABLES[args.which]()


def cmd_verify(args) -> Output:
    out = Output("verify")
    failed = []
    for r in run_suite(args.suite):
        fields = {"status": "PASS" if r.ok else "FAIL"}
        if r.detail:
            fields["detail"] = r.detail
        out.records.append(OutputRecord(index=r.name, fields=fields))
        if not r.ok:
            failed.append(r.name)
    if failed:
        raise _Disagreement(out, "failed checks: " + ", ".join(failed))
    return out


COMMANDS = {
    "bernoulli": cmd_bernoulli,
    "eulerian": cmd_eulerian,
    "gregory": cmd_gregory,
    "gregory-poly": cmd_gregory_poly,
    "extgregory": cmd_extgregory,
    "hirzebruch": cmd_hirzebruch,
    "smooth": cmd_smooth,
    "coeffs": cmd_coeffs,
    "expand": cmd_expand,
    "table": cmd_table,
    "verify": cmd_verify,
}


class _Disagreement(Exception):
    """Consistency failure that still has output worth printing."""

    def __init__(self, output: Output, message: str):
        super().__init__(message)
        self.output = output


# fault injection -------------------------------------------------------------


def _parse_key(text: str):
    parts = [int(p) for p in text.split(",")]
    return parts[0] if len(parts) == 1 else tuple(parts)


def apply_injections(spec: str) -> None:
    """Apply ``family:key=value`` overrides separated by ``;``."""
    for item in filter(None, (s.strip() for s in spec.split(";"))):
        try:
            target, value = item.split("=", 1)
            family, key = target.split(":", 1)
            CACHE.put(family.strip(), _parse_key(key.strip()), Fraction(value.strip()))
        except (ValueError, KeyError, ZeroDivisionError):
            raise UsageError(f"bad SMOOTHSUM_INJECT entry {item!r}")


# entry points ------------------------------------------------------------------


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        apply_injections(os.environ.get("SMOOTHSUM_INJECT", ""))
    except UsageError as exc:
        print(f"smoothsum: error: {exc}", file=stderr)
        return EXIT_USAGE
    fmt_name = getattr(args, "format", "text")
    paper_form = getattr(args, "paper_form", False)

    try:
        output = COMMANDS[args.command](args)
    except _Disagreement as exc:
        stdout.write(render(exc.output, fmt_name, paper_form))
        print(f"smoothsum: consistency failure: {exc}", file=stderr)
        return EXIT_CONSISTENCY
    except ParseError as exc:
        print(f"smoothsum: parse error: {exc}", file=stderr)
        return EXIT_PARSE
    except ConsistencyError as exc:
        print(f"smoothsum: consistency failure: {exc}", file=stderr)
        return EXIT_CONSISTENCY
    except (DomainError, TruncationError) as exc:
        print(f"smoothsum: domain error: {exc}", file=stderr)
        return EXIT_DOMAIN
    stdout.write(render(output, fmt_name, paper_form))
    return EXIT_OK


def main() -> None:
    sys.exit(run())
