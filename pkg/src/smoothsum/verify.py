"""Self-checks run by ``smoothsum verify``.

Each check returns ``(ok, detail)``.  The ``all`` suite additionally audits
the number caches against fresh recomputation, so a corrupted memo entry
is reported even when no table happens to read it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable

from . import published as pub
from .errors import SmoothSumError
from .genfunc import (
    RationalGF,
    abel_value,
    figurate_difference_decompose,
    gf_sub,
    taylor_coeffs,
    twist,
)
from .numbers import (
    CACHE,
    bernoulli,
    eulerian_derivative_at_one,
    eulerian_polynomial,
    extended_gregory,
    gen_bernoulli_number,
    gen_bernoulli_poly,
    gregory_coefficient,
    gregory_polynomial_eval,
    hirzebruch,
)
from .parser import parse_genfunc
from .ramanujan import (
    all_methods,
    closed_figurate,
    closed_power_sum,
    gauge_expand,
    intuitive_solve,
    regularization_check,
    shift_constant_poly,
    smoothed_bernoulli_form,
)
from .series import (
    Polynomial,
    TruncatedLaurentSeries,
    log_factor_series,
    series_reciprocal,
    toeplitz_inverse,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


Check = Callable[[], tuple[bool, str]]

F = Fraction


def _first_failure(cases) -> tuple[bool, str]:
    for label, lhs, rhs in cases:
        if lhs != rhs:
            return False, f"{label}: {lhs} != {rhs}"
    return True, ""


# tables --------------------------------------------------------------------


def check_table1():
    cases = []
    for km1, printed in pub.TABLE1_SUMS.items():
        k = km1 + 1
        for s in all_methods("power", k):
            cases.append((f"k-1={km1} {s.method}", s.value, F(printed)))
        seq = taylor_coeffs(RationalGF.power_sum(k), len(pub.TABLE1_SEQUENCES[km1]) + 1)[1:]
        cases.append((f"k-1={km1} sequence", seq, [F(v) for v in pub.TABLE1_SEQUENCES[km1]]))
    return _first_failure(cases)


def check_table3():
    cases = []
    for k, printed in pub.TABLE3_DECOMPOSITIONS.items():
        dec = figurate_difference_decompose(k)
        cases.append((f"k={k} decomposition", dec.terms, {j: F(d) for j, d in printed.items()}))
        g = RationalGF.figurate(k)
        cases.append((f"k={k} difference", gf_sub(g, twist(g)), parse_genfunc(pub.TABLE3_DIFFERENCES[k])))
    known: dict[int, Fraction] = {}
    for k, printed in pub.TABLE3_SUMS.items():
        known[k] = intuitive_solve("figurate", k, dict(known))
        cases.append((f"k={k} sum", known[k], F(printed)))
    return _first_failure(cases)


def check_table4():
    cases = []
    for k, printed in pub.TABLE4_SUMS_REDUCED.items():
        for s in all_methods("figurate", k):
            cases.append((f"k={k} {s.method}", s.value, F(printed)))
        cases.append((f"k={k} gregory", (-1) ** k * gregory_coefficient(k), F(printed)))
        seq = taylor_coeffs(RationalGF.figurate(k, 0), 7)
        cases.append((f"k={k} sequence", seq, [F(v) for v in pub.FIGURATE_SEQUENCES[k]]))
    return _first_failure(cases)


def check_table5():
    cases = []
    for s, nums in pub.TABLE5_NUMERATORS.items():
        for n, num in enumerate(nums):
            h = pub.TABLE5_DENOMINATOR_BASES[n]
            cases.append((f"s={s} n={n}", extended_gregory(s, n), F(num, h**s)))
            cases.append((f"h_{n}", hirzebruch(n), h))
    for n, forms in pub.EXTENDED_GREGORY_FORMS.items():
        for i, form in enumerate(forms):
            for s in range(1, 6):
                cases.append((f"form {i} of n={n} at s={s}", form(s), extended_gregory(s, n)))
    return _first_failure(cases)


def check_expansions():
    cases = []
    for text, printed in pub.EXPANSIONS.items():
        g = parse_genfunc(text)
        top = max(printed)
        exp = gauge_expand(g, top + g.a)
        for p in range(min(printed), top + 1):
            cases.append((f"{text} t^{p}", exp.coefficient(p), F(printed.get(p, 0))))
    return _first_failure(cases)


def check_shift_polynomial():
    m = Polynomial.x()
    cases = [("k=2 polynomial", shift_constant_poly(2), m * m / 2 - m + F(5, 12))]
    for mv in range(4):
        exp = gauge_expand(RationalGF.figurate(2, mv), 3)
        cases.append((f"m={mv} constant", exp.constant, shift_constant_poly(2)(F(mv))))
        cases.append((f"m={mv} t^1", exp.coefficient(1), F(1 - 5 * mv + 6 * mv**2 - 2 * mv**3, 12)))
    return _first_failure(cases)


def check_errata():
    """Known misprints: the corrected value holds and the printed one fails."""
    cases = []
    for k in range(2, 9):
        p = eulerian_polynomial(k - 1)(F(-1))
        corrected = (-1) ** k * 2**k * (2**k - 1) * bernoulli(k) / k
        printed = (-1) ** (k - 1) * 2**k * (2**k - 1) * bernoulli(k) / k
        cases.append((f"P_{k-1}(-1) corrected", p, corrected))
        if printed != 0 and p == printed:
            return False, f"printed sign unexpectedly holds at k={k}"
    printed_p7 = Polynomial(
        [pub.TABLE1_P7_PRINTED[0] + pub.TABLE1_P7_PRINTED_TRAILING_CONSTANT] + pub.TABLE1_P7_PRINTED[1:]
    )
    if printed_p7 == eulerian_polynomial(7):
        return False, "printed P_7 numerator unexpectedly matches"
    cases.append(("P_7", eulerian_polynomial(7), Polynomial([1, 120, 1191, 2416, 1191, 120, 1])))
    if pub.EXTENDED_GREGORY_G4_PRINTED(1) == extended_gregory(1, 4):
        return False, "printed simplified n=4 extended Gregory form unexpectedly holds"
    mismatch = [
        k
        for k, shift in pub.TABLE4_GF_COLUMN_SHIFT.items()
        if gauge_expand(RationalGF.figurate(k, shift)).constant != F(pub.TABLE4_SUMS_REDUCED[k])
    ]
    if not mismatch:
        return False, "printed generating-function column unexpectedly reproduces the sums"
    return _first_failure(cases)


# identities ------------------------------------------------------------------


def check_bernoulli_odd():
    return _first_failure((f"B_{n}", bernoulli(n), 0) for n in range(3, 42, 2))


def check_eulerian():
    cases = []
    for n in range(0, 16):
        p = eulerian_polynomial(n)
        cases.append((f"P_{n}(1)", p(F(1)), factorial(n)))
        if n >= 1:
            cases.append((f"P_{n} palindrome", list(p.coeffs), list(reversed(p.coeffs))))
    for k in range(2, 21):
        cases.append((
            f"P_{k-1}(-1)",
            eulerian_polynomial(k - 1)(F(-1)),
            (-1) ** k * 2**k * (2**k - 1) * bernoulli(k) / k,
        ))
    for k in range(1, 11):
        g = RationalGF.power_sum(k)
        cases.append((f"Carlitz k={k}", taylor_coeffs(g, 30), [F(n ** (k - 1)) if n else F(0) for n in range(30)]))
    return _first_failure(cases)


def check_gregory():
    recip = series_reciprocal(log_factor_series(31))
    cases = [(f"Gbar_{n}", gregory_coefficient(n, signed=True), recip[n]) for n in range(31)]
    cases += [(f"ext(1,{n})", extended_gregory(1, n), recip[n]) for n in range(21)]
    for s in range(1, 5):
        for n in range(9):
            cases.append((f"h_{n}^{s} | den", (hirzebruch(n) ** s) % extended_gregory(s, n).denominator, 0))
    return _first_failure(cases)


def check_gregory_polynomials():
    rng = random.Random(20250101)
    cases = []
    for m in range(1, 13):
        for _ in range(20):
            u = F(rng.randint(-40, 40), rng.randint(1, 9))
            if u in (0, -1):
                continue
            lhs = gregory_polynomial_eval(m, u + 1)
            g_prev = gregory_polynomial_eval(m - 1, u)
            rhs = ((u - m) * gregory_polynomial_eval(m, u) - (u - m + 1) * g_prev) / (u + 1)
            cases.append((f"shift m={m} u={u}", lhs, rhs))
    for k in range(2, 16):
        cases.append((f"kG_k(k)+G_k(k-1) k={k}", k * gregory_polynomial_eval(k, k) + gregory_polynomial_eval(k, k - 1), 0))
    for k in range(2, 21):
        cases.append((f"B_{k}/k!", bernoulli(k) / factorial(k), (-1) ** k * k * gregory_polynomial_eval(k, k)))
    for m in range(2, 21):
        cases.append((f"B_{m}^({m-1})", gen_bernoulli_number(m, m - 1) / ((m - 1) * factorial(m)), -gregory_coefficient(m)))
    return _first_failure(cases)


def check_eulerian_derivatives():
    cases = []
    for u in range(1, 13):
        for m in range(0, u):
            d = eulerian_derivative_at_one(u, m)
            cases.append((f"P_{u}^({m})(1) via G", d, (-1) ** m * factorial(u) * (u - m) * factorial(m) * gregory_polynomial_eval(m, u)))
            cases.append((f"P_{u}^({m})(1) via B", d, factorial(u) * gen_bernoulli_number(m, m - u)))
        for m in range(u, u + 3):
            cases.append((f"P_{u}^({m})(1)", eulerian_derivative_at_one(u, m), 0))
    return _first_failure(cases)


def check_gen_bernoulli():
    cases = []
    for n in range(0, 13):
        for k in range(1, 13):
            cases.append((f"B_{n}^({k})({k})", gen_bernoulli_poly(n, k, k), (-1) ** n * gen_bernoulli_number(n, k)))
            cases.append((
                f"(k-1)B_{n}^({k})(k-1)",
                (k - 1) * gen_bernoulli_poly(n, k, k - 1),
                (k - n - 1) * gen_bernoulli_poly(n, k - 1, k - 1),
            ))
    for k in range(2, 13):
        cases.append((
            f"k={k} (54)",
            (k - 1) * gen_bernoulli_poly(k, k, k - 1) / factorial(k),
            (-1) ** (k + 1) * gen_bernoulli_number(k, k - 1) / factorial(k),
        ))
    for k in range(1, 16):
        cases.append((f"k={k} (55)", gen_bernoulli_poly(k, k, k - 1) / factorial(k), (-1) ** k * gregory_coefficient(k)))
    return _first_failure(cases)


def check_genfunc_identities():
    cases = []
    for k in range(1, 13):
        g = RationalGF.power_sum(k)
        p = eulerian_polynomial(k - 1)
        expected = RationalGF(Polynomial.monomial(2, 2**k) * p.stretch(2), k, k)
        cases.append((f"power difference k={k}", gf_sub(g, twist(g)), expected))
        cases.append((
            f"twisted abel k={k}",
            abel_value(twist(g)),
            (-1) ** (k - 1) * bernoulli(k) * (1 - 2**k) / k,
        ))
        dec = figurate_difference_decompose(k)
        f = RationalGF.figurate(k)
        cases.append((f"recombine k={k}", dec.recombine(), gf_sub(f, twist(f))))
    for k in range(1, 11):
        coeffs = taylor_coeffs(RationalGF.figurate(k), 51)
        cases.append((f"figurate k={k}", coeffs, [F(comb(n + k - 2, n - 1)) if n else F(0) for n in range(51)]))
    return _first_failure(cases)


def check_method_agreement():
    cases = []
    for k in range(1, 13):
        for fam in ("power", "figurate"):
            values = [s.value for s in all_methods(fam, k)]
            cases.append((f"{fam} k={k}", values, [values[0]] * len(values)))
        exp = gauge_expand(RationalGF.power_sum(k))
        cases.append((f"vanishing k={k}", [exp.divergent[-j] for j in range(1, k)], [0] * (k - 1)))
        const, report = regularization_check(k, k + 2)
        cases.append((f"regularized k={k}", const, closed_power_sum(k)))
        if k >= 2:
            cases.append((f"-k!G_k(k) k={k}", const, -factorial(k) * gregory_polynomial_eval(k, k)))
        cases.append((f"figurate closed k={k}", closed_figurate(k), smoothed_bernoulli_form(k, 1)))
    return _first_failure(cases)


def check_shift_law():
    cases = []
    for k in range(1, 9):
        for m in range(0, k + 1):
            exp = gauge_expand(RationalGF.figurate(k, m))
            cases.append((f"k={k} m={m}", exp.constant, smoothed_bernoulli_form(k, m)))
    mm = Polynomial.x()
    for k in range(1, 11):
        p = shift_constant_poly(k)
        reflected = p.compose(Polynomial([k, -1])) * (-1) ** k
        cases.append((f"reflection k={k}", reflected, p))
    cases.append(("roots k=2", shift_constant_poly(2), (mm - 1) * (mm - 1) / 2 - F(1, 12)))
    return _first_failure(cases)


def check_toeplitz():
    rng = random.Random(7)
    rows = [
        [1, -2, 3, -4, 5, -6, 7, -8, 9],
        [1, -1, 1, -1, 1, -1, 1, -1, 1],
        [1] * 10,
        [F(1, n) for n in range(1, 33)],
    ]
    rows += [[F(rng.randint(1, 9))] + [F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(31)] for _ in range(5)]
    cases = []
    for row in rows:
        for n in (9, 32):
            inv = toeplitz_inverse(row, n)
            recip = series_reciprocal(TruncatedLaurentSeries(row[:n] + [0] * (n - len(row[:n])), 0, n))
            cases.append((f"n={n} row0", inv[0], recip.coefficients(0, n)))
            cases.append((f"n={n} shifted rows", [inv[i][i:] for i in range(n)], [inv[0][: n - i] for i in range(n)]))
    return _first_failure(cases)


def check_parser_roundtrip():
    corpus = [RationalGF.power_sum(k).render() for k in range(1, 9)]
    corpus += [f"x/(1-x)^{k}" for k in range(1, 8)]
    corpus += [f"x/(1+x)^{k}" for k in range(1, 8)]
    corpus += [f"x^{k-1}/(1-x)^{k}" for k in range(1, 8)]
    corpus += list(pub.TABLE3_DIFFERENCES.values())
    corpus += [figurate_difference_decompose(k).render() for k in range(1, 8)]
    corpus += list(pub.EXPANSIONS)
    corpus += ["x*(1+x)*(1+10*x+x^2)/(1-x)^5", "x*(1+x)*(1+56*x+246*x^2+56*x^3+x^4)/(1-x)^7"]
    cases = []
    for text in corpus:
        g = parse_genfunc(text)
        cases.append((text, parse_genfunc(g.render()), g))
    return _first_failure(cases)


def check_cache():
    bad = CACHE.audit()
    if bad:
        family, key, value, fresh = bad[0]
        return False, f"cache {family}[{key}] = {value}, recomputed {fresh}"
    return True, ""


SUITES: dict[str, dict[str, Check]] = {
    "tables": {
        "table1": check_table1,
        "table3": check_table3,
        "table4": check_table4,
        "table5": check_table5,
        "expansions": check_expansions,
        "shift_polynomial": check_shift_polynomial,
        "errata": check_errata,
    },
    "identities": {
        "bernoulli_odd": check_bernoulli_odd,
        "eulerian": check_eulerian,
        "eulerian_derivatives": check_eulerian_derivatives,
        "gregory": check_gregory,
        "gregory_polynomials": check_gregory_polynomials,
        "gen_bernoulli": check_gen_bernoulli,
        "genfunc": check_genfunc_identities,
        "method_agreement": check_method_agreement,
        "shift_law": check_shift_law,
        "toeplitz": check_toeplitz,
    },
    "parser": {"roundtrip": check_parser_roundtrip},
}


def run_suite(name: str) -> list[CheckResult]:
    if name == "all":
        checks = {k: v for suite in SUITES.values() for k, v in suite.items()}
        checks["cache"] = check_cache
    else:
        checks = dict(SUITES[name])
    results = []
    for check_name, fn in checks.items():
        try:
            ok, detail = fn()
        except SmoothSumError as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(check_name, ok, detail))
    return results
