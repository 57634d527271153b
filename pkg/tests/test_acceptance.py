"""Acceptance criteria, each checked exactly and within its runtime bound.

Every criterion prints one ``PASS``/``FAIL`` line in the pytest terminal
summary (or on stdout when this file is run directly).  Two criteria contain
a case that cannot hold as stated; they are run unchanged, reported as FAIL,
marked as strict expected failures, and paired with a test pinning the
failure set to exactly the known cases.
"""

import random
import time
from fractions import Fraction
from math import comb, factorial

import pytest

from smoothsum import published as pub
from smoothsum.genfunc import (
    RationalGF,
    abel_value,
    figurate_difference_decompose,
    gf_sub,
    taylor_coeffs,
    twist,
)
from smoothsum.numbers import (
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
from smoothsum.parser import parse_genfunc
from smoothsum.ramanujan import (
    closed_figurate,
    closed_power_sum,
    gauge_expand,
    intuitive_solve,
    regularization_check,
    shift_constant_poly,
    smoothed_bernoulli_form,
    smoothed_sum,
)
from smoothsum.series import (
    Polynomial,
    TruncatedLaurentSeries,
    log_factor_series,
    series_reciprocal,
    toeplitz_inverse,
)

F = Fraction
RESULTS: dict[int, str] = {}


class Checker:
    def __init__(self):
        self.failures: list[str] = []

    def eq(self, label, lhs, rhs):
        if lhs != rhs:
            self.failures.append(f"{label}: {lhs} != {rhs}")

    def true(self, label, cond):
        if not cond:
            self.failures.append(label)


def evaluate(number, name, bound, fn):
    CACHE.clear()
    chk = Checker()
    start = time.perf_counter()
    fn(chk)
    elapsed = time.perf_counter() - start
    if elapsed >= bound:
        chk.failures.append(f"runtime {elapsed:.2f}s exceeds {bound}s")
    status = "PASS" if not chk.failures else "FAIL"
    line = f"criterion {number} {name}: {status} ({elapsed:.2f}s < {bound}s)"
    if chk.failures:
        line += " -- " + "; ".join(chk.failures[:4])
        if len(chk.failures) > 4:
            line += f"; ... {len(chk.failures) - 4} more"
    RESULTS[number] = line
    return chk.failures


# 1 -------------------------------------------------------------------------


def table1_reproduction(chk):
    expected = [F(-1, 2), F(-1, 12), 0, F(1, 120), 0, F(-1, 252), 0, F(1, 240)]
    for km1, value in enumerate(expected):
        for method in ("closed", "asymptotic", "intuitive", "regularized"):
            chk.eq(f"k-1={km1} {method}", smoothed_sum("power", km1 + 1, method=method).value, value)
    chk.eq("k-1=3 coefficients", taylor_coeffs(RationalGF.power_sum(4), 6)[1:], [1, 8, 27, 64, 125])


# 2 -------------------------------------------------------------------------


def table4_reproduction(chk):
    expected = ["-1/2", "-1/12", "-1/24", "-19/720", "-3/160", "-863/60480", "-275/24192"]
    chk.eq("unreduced alias k=5", F("-27/1440"), F(expected[4]))
    chk.eq("unreduced alias k=7", F("-1375/120960"), F(expected[6]))
    for k, value in enumerate(expected, start=1):
        for method in ("closed", "asymptotic", "intuitive", "bernoulli"):
            chk.eq(f"k={k} {method}", smoothed_sum("figurate", k, method=method).value, F(value))


# 3 -------------------------------------------------------------------------


def table3_ledger(chk):
    printed = {
        1: {1: 2},
        2: {2: 4},
        3: {3: 8, 2: -2},
        4: {4: 16, 3: -8},
        5: {5: 32, 4: -24, 3: 2},
        6: {6: 64, 5: -64, 4: 12},
        7: {7: 128, 6: -160, 5: 48, 4: -2},
    }
    sums = ["-1/2", "-1/12", "-1/24", "-19/720", "-27/1440", "-863/60480", "-1375/120960"]
    known = {}
    for k in range(1, 8):
        chk.eq(f"k={k} d", figurate_difference_decompose(k).terms, printed[k])
        known[k] = intuitive_solve("figurate", k, dict(known))
        chk.eq(f"k={k} c", known[k], F(sums[k - 1]))


# 4 -------------------------------------------------------------------------


def _displayed_extended_gregory_forms():
    """Every displayed symbolic form, in printed spelling."""
    forms = {n: list(fs) for n, fs in pub.EXTENDED_GREGORY_FORMS.items()}
    forms[4][1] = pub.EXTENDED_GREGORY_G4_PRINTED
    return forms


def table5_reproduction(chk):
    for s, nums in pub.TABLE5_NUMERATORS.items():
        for col, num in enumerate(nums, start=1):
            n = col - 1
            h = pub.TABLE5_DENOMINATOR_BASES[n]
            value = extended_gregory(s, n)
            chk.eq(f"s={s} column {col}", value, F(num, h**s))
            chk.eq(f"h_{n}", hirzebruch(n), h)
            chk.true(f"s={s} n={n} denominator divides h^s", (h**s) % value.denominator == 0)
    for n, forms in _displayed_extended_gregory_forms().items():
        for i, form in enumerate(forms):
            for s in range(1, 6):
                chk.eq(f"symbolic n={n} form {i} s={s}", form(s), extended_gregory(s, n))


# 5 -------------------------------------------------------------------------


def gauge_expansions(chk):
    for text, printed in pub.EXPANSIONS.items():
        g = parse_genfunc(text)
        exp = gauge_expand(g, max(printed) + g.a)
        for p in range(min(printed), max(printed) + 1):
            chk.eq(f"{text} t^{p}", exp.coefficient(p), F(printed.get(p, 0)))
    twisted = gauge_expand(parse_genfunc("-4*x^2/(1-x^2)^2"))
    chk.eq("-4x^2/(1-x^2)^2 constant", twisted.constant, F(1, 3))
    alt = gauge_expand(parse_genfunc("x/(1+x)^2"), 6)
    chk.eq("x/(1+x)^2", [alt.constant, *alt.tail], [F(1, 4), 0, F(-1, 16), 0, F(1, 96), 0, F(-17, 11520)])


# 6 -------------------------------------------------------------------------


def shift_polynomial(chk):
    m = Polynomial.x()
    chk.eq("polynomial", shift_constant_poly(2), m * m / 2 - m + F(5, 12))
    for mv in range(4):
        exp = gauge_expand(RationalGF.figurate(2, mv), 3)
        chk.eq(f"m={mv} constant", exp.constant, shift_constant_poly(2)(F(mv)))
        chk.eq(f"m={mv} t^1", exp.coefficient(1), F(1 - 5 * mv + 6 * mv**2 - 2 * mv**3, 12))


# 7 -------------------------------------------------------------------------


def regularization(chk):
    for k in range(1, 13):
        const, report = regularization_check(k)
        chk.true(f"k={k} cancellation", report.cancelled)
        chk.eq(f"k={k} constant", const, (-1) ** (k - 1) * bernoulli(k) / k)


# 8 -------------------------------------------------------------------------


def identity_suites(chk):
    rng = random.Random(8)
    # Bernoulli and Eulerian
    for n in range(3, 42, 2):
        chk.eq(f"B_{n}", bernoulli(n), 0)
    for k in range(1, 21):
        chk.eq(f"P_{k-1}(1)", eulerian_polynomial(k - 1)(F(1)), factorial(k - 1))
        chk.eq(f"sum P_{k-1}", sum(eulerian_polynomial(k - 1).coeffs), factorial(k - 1))
    for k in range(2, 21):
        chk.eq(f"P_{k-1}(-1)", eulerian_polynomial(k - 1)(F(-1)), (-1) ** k * 2**k * (2**k - 1) * bernoulli(k) / k)
    for n in range(1, 16):
        c = list(eulerian_polynomial(n).coeffs)
        chk.eq(f"P_{n} palindrome", c, c[::-1])
    # Gregory coefficients and polynomials
    recip = series_reciprocal(log_factor_series(31))
    for n in range(31):
        chk.eq(f"Gbar_{n}", gregory_coefficient(n, signed=True), recip[n])
    for m in range(1, 13):
        for _ in range(20):
            u = F(rng.randint(-50, 50), rng.randint(1, 9))
            if u in (0, -1):
                continue
            rhs = ((u - m) * gregory_polynomial_eval(m, u) - (u - m + 1) * gregory_polynomial_eval(m - 1, u)) / (u + 1)
            chk.eq(f"shift m={m} u={u}", gregory_polynomial_eval(m, u + 1), rhs)
    for k in range(1, 16):
        chk.eq(f"kG_k(k)+G_k(k-1) k={k}", k * gregory_polynomial_eval(k, k) + gregory_polynomial_eval(k, k - 1), 0)
    for k in range(2, 21):
        chk.eq(f"B_{k}/k!", bernoulli(k) / factorial(k), (-1) ** k * k * gregory_polynomial_eval(k, k))
    for m in range(2, 21):
        chk.eq(f"B_{m}^({m-1})", gen_bernoulli_number(m, m - 1) / ((m - 1) * factorial(m)), -gregory_coefficient(m))
    # generalized Bernoulli
    for n in range(0, 13):
        for k in range(1, 13):
            chk.eq(f"B_{n}^({k})({k})", gen_bernoulli_poly(n, k, k), (-1) ** n * gen_bernoulli_number(n, k))
            chk.eq(
                f"order lowering n={n} k={k}",
                (k - 1) * gen_bernoulli_poly(n, k, k - 1),
                (k - n - 1) * gen_bernoulli_poly(n, k - 1, k - 1),
            )
    for k in range(2, 13):
        chk.eq(
            f"diagonal k={k}",
            (k - 1) * gen_bernoulli_poly(k, k, k - 1) / factorial(k),
            (-1) ** (k + 1) * gen_bernoulli_number(k, k - 1) / factorial(k),
        )
    for k in range(1, 16):
        chk.eq(f"Gregory from B k={k}", gen_bernoulli_poly(k, k, k - 1) / factorial(k), (-1) ** k * gregory_coefficient(k))
    # Eulerian derivatives at 1
    for u in range(1, 13):
        for m in range(0, u + 3):
            d = eulerian_derivative_at_one(u, m)
            if m >= u:
                chk.eq(f"P_{u}^({m})(1)", d, 0)
                continue
            chk.eq(f"P_{u}^({m})(1) gen", d, factorial(u) * gen_bernoulli_number(m, m - u))
            chk.eq(
                f"P_{u}^({m})(1) gregory",
                d,
                (-1) ** m * factorial(u) * (u - m) * factorial(m) * gregory_polynomial_eval(m, u),
            )
    # extended Gregory
    for n in range(21):
        chk.eq(f"ext(1,{n})", extended_gregory(1, n), gregory_coefficient(n, signed=True))
    for s in range(1, 5):
        for n in range(9):
            chk.true(f"h_{n}^{s} | den", (hirzebruch(n) ** s) % extended_gregory(s, n).denominator == 0)
    for n, forms in _displayed_extended_gregory_forms().items():
        for i, form in enumerate(forms):
            for s in range(1, 6):
                chk.eq(f"symbolic n={n} form {i} s={s}", form(s), extended_gregory(s, n))
    # Toeplitz inverse against the series reciprocal
    rows = [
        lambda j: (-1) ** j * (j + 1),
        lambda j: (-1) ** j,
        lambda j: 1,
        lambda j: F(1, j + 1),
    ]
    for i in range(6):
        c = [F(rng.randint(1, 9))] + [F(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(31)]
        rows.append(lambda j, c=c: c[j])
    for i, gen in enumerate(rows):
        for n in (9, 32):
            row = [gen(j) for j in range(n)]
            r = series_reciprocal(TruncatedLaurentSeries(row, 0, n))
            chk.eq(f"toeplitz row {i} n={n}", toeplitz_inverse(row, n)[0], r.coefficients(0, n))
    # generating functions
    x = Polynomial.x()
    for k in range(1, 11):
        chk.eq(f"figurate k={k}", taylor_coeffs(RationalGF.figurate(k), 51)[1:], [comb(n + k - 2, n - 1) for n in range(1, 51)])
        chk.eq(f"Carlitz k={k}", taylor_coeffs(RationalGF.power_sum(k), 51)[1:], [n ** (k - 1) for n in range(1, 51)])
    for k in range(1, 13):
        g = RationalGF.power_sum(k)
        chk.eq(f"power difference k={k}", gf_sub(g, twist(g)), RationalGF(x * x * 2**k * eulerian_polynomial(k - 1).stretch(2), k, k))
        f = RationalGF.figurate(k)
        chk.eq(f"recombination k={k}", figurate_difference_decompose(k).recombine(), gf_sub(f, twist(f)))
    corpus = [RationalGF.power_sum(k).render() for k in range(1, 9)]
    corpus += [f"x/(1-x)^{k}" for k in range(1, 8)] + [f"x^{k - 1}/(1-x)^{k}" for k in range(1, 8)]
    corpus += list(pub.TABLE3_DIFFERENCES.values()) + list(pub.EXPANSIONS)
    for text in corpus:
        g = parse_genfunc(text)
        chk.eq(f"round trip {text}", parse_genfunc(g.render()), g)
    for i in range(20):
        g = RationalGF(Polynomial([rng.randint(-5, 5) for _ in range(rng.randint(1, 5))]), 0, rng.randint(0, 3))
        a = abel_value(g)
        errs = [abs(g(1 - F(1, 2**p)) - a) for p in range(4, 17)]
        chk.true(f"abel convergence {g.render()}", all(e2 <= e1 for e1, e2 in zip(errs, errs[1:])))
    # smoothed sums
    for k in range(1, 13):
        exp = gauge_expand(RationalGF.power_sum(k))
        const, report = regularization_check(k)
        chk.eq(f"power agreement k={k}", [exp.constant, intuitive_solve("power", k), const], [closed_power_sum(k)] * 3)
        chk.eq(f"vanishing divergence k={k}", [exp.divergent[-j] for j in range(1, k)], [0] * (k - 1))
        fig = [gauge_expand(RationalGF.figurate(k)).constant, intuitive_solve("figurate", k), smoothed_bernoulli_form(k, 1)]
        chk.eq(f"figurate agreement k={k}", fig, [closed_figurate(k)] * 3)
        chk.eq(
            f"twisted abel k={k}",
            abel_value(twist(RationalGF.power_sum(k))),
            (-1) ** (k - 1) * bernoulli(k) * (1 - 2**k) / k,
        )
    for k in range(1, 9):
        for mv in range(0, k + 1):
            chk.eq(f"shift law k={k} m={mv}", gauge_expand(RationalGF.figurate(k, mv)).constant, smoothed_bernoulli_form(k, mv))
    for k in range(1, 11):
        p = shift_constant_poly(k)
        chk.eq(f"reflection k={k}", p.compose(Polynomial([k, -1])) * (-1) ** k, p)
        _, report = regularization_check(k)
        chk.eq(f"eps pole k={k}", report.generating[-k], factorial(k - 1))
        for j in range(1, k):
            chk.eq(f"eps term k={k} m={j}", report.generating[j - k], factorial(k) * gregory_polynomial_eval(j, k))
    chk.eq("roots", shift_constant_poly(2), (x - 1) * (x - 1) / 2 - F(1, 12))


# 9 -------------------------------------------------------------------------


def errata(chk):
    # sign of P_{k-1}(-1)
    for k in range(2, 21):
        value = eulerian_polynomial(k - 1)(F(-1))
        base = 2**k * (2**k - 1) * bernoulli(k) / k
        chk.eq(f"corrected sign k={k}", value, (-1) ** k * base)
        if base:
            chk.true(f"printed sign fails k={k}", value != (-1) ** (k - 1) * base)
    # P_7 numerator
    p7 = eulerian_polynomial(7)
    chk.eq("corrected P_7", p7.coeffs, (1, 120, 1191, 2416, 1191, 120, 1))
    printed = Polynomial([pub.TABLE1_P7_PRINTED[0] + pub.TABLE1_P7_PRINTED_TRAILING_CONSTANT] + pub.TABLE1_P7_PRINTED[1:])
    chk.true("printed P_7 fails", printed != p7)
    printed_gf = RationalGF(printed * Polynomial.x(), 8, 0)
    chk.true("printed P_7 fails to generate n^7", taylor_coeffs(printed_gf, 4)[1:] != [1, 128, 2187])
    # generating-function column of the figurate table
    wrong = []
    for k in range(1, 8):
        target = F(pub.TABLE4_SUMS_REDUCED[k])
        chk.eq(f"corrected column k={k}", gauge_expand(RationalGF.figurate(k, 1)).constant, target)
        if gauge_expand(RationalGF.figurate(k, k - 1)).constant != target:
            wrong.append(k)
    chk.eq("printed column fails", wrong, [1, 3, 5, 7])


CRITERIA = {
    1: ("Table 1 reproduction", 5, table1_reproduction),
    2: ("Table 4 reproduction", 5, table4_reproduction),
    3: ("Table 3 ledger", 1, table3_ledger),
    4: ("Table 5 reproduction", 5, table5_reproduction),
    5: ("gauge expansions", 2, gauge_expansions),
    6: ("shift polynomial", 1, shift_polynomial),
    7: ("regularization", 5, regularization),
    8: ("identity suites", 30, identity_suites),
    9: ("errata detection", 5, errata),
}

# cases that cannot hold as stated
KNOWN_FAILURES = {
    4: {f"symbolic n=4 form 1 s={s}" for s in range(1, 6)},
    8: {f"symbolic n=4 form 1 s={s}" for s in range(1, 6)} | {"kG_k(k)+G_k(k-1) k=1"},
}


def run_criterion(number):
    name, bound, fn = CRITERIA[number]
    return evaluate(number, name, bound, fn)


@pytest.mark.parametrize("number", [1, 2, 3, 5, 6, 7, 9])
def test_criterion(number):
    assert run_criterion(number) == []


@pytest.mark.xfail(strict=True, reason="printed simplified n=4 form is misprinted")
def test_criterion_4():
    assert run_criterion(4) == []


@pytest.mark.xfail(strict=True, reason="diagonal Gregory identity fails at k=1; printed n=4 form is misprinted")
def test_criterion_8():
    assert run_criterion(8) == []


@pytest.mark.parametrize("number", [4, 8])
def test_only_known_failures(number):
    failures = run_criterion(number)
    labels = {f.split(":")[0] for f in failures}
    assert labels == KNOWN_FAILURES[number]


if __name__ == "__main__":
    for number in CRITERIA:
        run_criterion(number)
        print(RESULTS[number])
