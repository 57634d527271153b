import threading
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from smoothsum.errors import DomainError
from smoothsum.numbers import (
    CACHE,
    bernoulli,
    binomial_figurate,
    eulerian_derivative_at_one,
    eulerian_numbers,
    eulerian_polynomial,
    extended_gregory,
    gen_bernoulli_number,
    gen_bernoulli_poly,
    gen_bernoulli_scaled,
    gregory_coefficient,
    gregory_polynomial,
    gregory_polynomial_eval,
    hirzebruch,
)
from smoothsum.published import EULERIAN, GREGORY, HIRZEBRUCH
from smoothsum.series import Polynomial, log_factor_series, series_reciprocal

F = Fraction

rationals = st.fractions(min_value=-30, max_value=30, max_denominator=9)


# published values --------------------------------------------------------


def test_bernoulli_values():
    assert [bernoulli(n) for n in range(9)] == [1, F(-1, 2), F(1, 6), 0, F(-1, 30), 0, F(1, 42), 0, F(-1, 30)]
    assert bernoulli(12) == F(-691, 2730)


@pytest.mark.parametrize("n", [3, 5, 9, 21, 41])
def test_odd_bernoulli_vanish(n):
    assert bernoulli(n) == 0


def test_eulerian_published():
    for n, coeffs in EULERIAN.items():
        assert list(eulerian_polynomial(n).coeffs) == coeffs


def test_gregory_published():
    assert [gregory_coefficient(n) for n in range(7)] == [F(g) for g in GREGORY]
    assert gregory_coefficient(3, signed=True) == F(-1, 24)


def test_hirzebruch_published():
    assert [hirzebruch(k) for k in range(7)] == HIRZEBRUCH


def test_negative_indices_rejected():
    for fn in (bernoulli, eulerian_polynomial, gregory_coefficient, gregory_polynomial, hirzebruch):
        with pytest.raises(DomainError):
            fn(-1)
    with pytest.raises(DomainError):
        extended_gregory(0, 3)


# Eulerian identities -----------------------------------------------------


@pytest.mark.parametrize("n", range(0, 20))
def test_eulerian_at_one_is_factorial(n):
    assert eulerian_polynomial(n)(F(1)) == factorial(n)
    assert sum(eulerian_numbers(n)) == factorial(n)


@pytest.mark.parametrize("n", range(1, 16))
def test_eulerian_palindrome(n):
    c = eulerian_numbers(n)
    assert c == c[::-1]


@pytest.mark.parametrize("k", range(2, 21))
def test_eulerian_at_minus_one(k):
    expected = (-1) ** k * 2**k * (2**k - 1) * bernoulli(k) / k
    assert eulerian_polynomial(k - 1)(F(-1)) == expected


def test_eulerian_at_minus_one_small_cases():
    assert eulerian_polynomial(1)(F(-1)) == 1
    assert eulerian_polynomial(3)(F(-1)) == -2


# Gregory -----------------------------------------------------------------


def test_gregory_recursion_matches_reciprocal():
    r = series_reciprocal(log_factor_series(31))
    assert [gregory_coefficient(n, signed=True) for n in range(31)] == r.coefficients(0, 31)


def test_gregory_polynomial_low_orders():
    assert str(gregory_polynomial(0)) == "1/u"
    assert gregory_polynomial_eval(0, 4) == F(1, 4)
    assert gregory_polynomial(1).poly == Polynomial([F(-1, 2)])
    with pytest.raises(DomainError):
        gregory_polynomial_eval(0, 0)


@pytest.mark.parametrize("m", range(1, 10))
def test_gregory_polynomial_at_one_is_gregory(m):
    # (-x/log(1-x))^1 / 1 has coefficients Gbar_m
    assert gregory_polynomial_eval(m, 1) == gregory_coefficient(m, signed=True)


@given(st.integers(1, 12), rationals.filter(lambda u: u not in (0, -1)))
def test_gregory_shift_identity(m, u):
    lhs = gregory_polynomial_eval(m, u + 1)
    rhs = ((u - m) * gregory_polynomial_eval(m, u) - (u - m + 1) * gregory_polynomial_eval(m - 1, u)) / (u + 1)
    assert lhs == rhs


@pytest.mark.parametrize("k", range(2, 16))
def test_gregory_diagonal_identity(k):
    assert k * gregory_polynomial_eval(k, k) + gregory_polynomial_eval(k, k - 1) == 0


def test_gregory_diagonal_identity_fails_at_one():
    # the shift identity at u = 0, m = 1 multiplies u by G_0(u) = 1/u, which
    # does not vanish; the diagonal identity therefore starts at k = 2
    assert 1 * gregory_polynomial_eval(1, 1) + gregory_polynomial_eval(1, 0) == -1


@pytest.mark.parametrize("k", range(2, 21))
def test_bernoulli_from_gregory_polynomial(k):
    assert bernoulli(k) / factorial(k) == (-1) ** k * k * gregory_polynomial_eval(k, k)


def test_bernoulli_from_gregory_polynomial_k1_flagged():
    # at k = 1 the identity would force B_1 = +1/2
    assert (-1) * gregory_polynomial_eval(1, 1) == F(1, 2) != bernoulli(1)


@pytest.mark.parametrize("m", range(2, 21))
def test_gen_bernoulli_gregory_link(m):
    assert gen_bernoulli_number(m, m - 1) / ((m - 1) * factorial(m)) == -gregory_coefficient(m)


# Eulerian derivatives ----------------------------------------------------


@pytest.mark.parametrize("u", range(1, 11))
def test_eulerian_derivatives_at_one(u):
    for m in range(0, u):
        d = eulerian_derivative_at_one(u, m)
        assert d == factorial(u) * gen_bernoulli_number(m, m - u)
        assert d == (-1) ** m * factorial(u) * (u - m) * factorial(m) * gregory_polynomial_eval(m, u)
    for m in range(u, u + 3):
        assert eulerian_derivative_at_one(u, m) == 0


# extended Gregory / Hirzebruch -------------------------------------------


@pytest.mark.parametrize("n", range(0, 21))
def test_extended_gregory_reduces_to_gregory(n):
    assert extended_gregory(1, n) == gregory_coefficient(n, signed=True)


@pytest.mark.parametrize("s", range(1, 5))
def test_extended_gregory_denominators(s):
    for n in range(9):
        assert (hirzebruch(n) ** s) % extended_gregory(s, n).denominator == 0


def test_hirzebruch_bounds_gregory_denominators():
    for n in range(25):
        assert hirzebruch(n) % gregory_coefficient(n).denominator == 0


# generalized Bernoulli ---------------------------------------------------


def test_gen_bernoulli_order_one_is_bernoulli():
    for n in range(12):
        assert gen_bernoulli_number(n, 1) == bernoulli(n)


def test_gen_bernoulli_polynomial_argument():
    m = Polynomial.x()
    p = gen_bernoulli_scaled(2, 1, m)
    assert isinstance(p, Polynomial)
    assert p == (m * m - m + F(1, 6)) / 2


def test_gen_bernoulli_negative_order():
    # (t/(e^t-1))^-1 = (e^t-1)/t has coefficients 1/(j+1)!
    for n in range(8):
        assert gen_bernoulli_number(n, -1) == F(factorial(n), factorial(n + 1))


@given(st.integers(0, 12), st.integers(1, 12))
def test_gen_bernoulli_reflection_at_order(n, k):
    assert gen_bernoulli_poly(n, k, k) == (-1) ** n * gen_bernoulli_number(n, k)


@given(st.integers(0, 12), st.integers(1, 12))
def test_gen_bernoulli_order_lowering(n, k):
    lhs = (k - 1) * gen_bernoulli_poly(n, k, k - 1)
    assert lhs == (k - n - 1) * gen_bernoulli_poly(n, k - 1, k - 1)


@pytest.mark.parametrize("k", range(2, 13))
def test_gen_bernoulli_diagonal(k):
    lhs = (k - 1) * gen_bernoulli_poly(k, k, k - 1) / factorial(k)
    assert lhs == (-1) ** (k + 1) * gen_bernoulli_number(k, k - 1) / factorial(k)


@pytest.mark.parametrize("k", range(1, 16))
def test_gen_bernoulli_gives_gregory(k):
    assert gen_bernoulli_poly(k, k, k - 1) / factorial(k) == (-1) ** k * gregory_coefficient(k)


def test_binomial_figurate():
    assert [binomial_figurate(n, 3) for n in range(6)] == [comb(n + 2, n) for n in range(6)]


# cache -------------------------------------------------------------------


def test_cache_matches_recomputation():
    bernoulli(20)
    extended_gregory(3, 6)
    gregory_polynomial(6)
    assert CACHE.audit() == []


def test_cache_audit_detects_corruption():
    bernoulli(4)
    try:
        CACHE.put("bernoulli", 4, F(1, 31))
        bad = CACHE.audit()
        assert ("bernoulli", 4, F(1, 31), F(-1, 30)) in bad
    finally:
        CACHE.clear("bernoulli")
    assert bernoulli(4) == F(-1, 30)


def test_cache_concurrent_access():
    CACHE.clear("extended_gregory")
    results = []

    def work():
        results.append([extended_gregory(2, n) for n in range(12)])

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == results[0] for r in results)
    assert CACHE.audit() == []
