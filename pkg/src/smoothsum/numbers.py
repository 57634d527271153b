"""Bernoulli, Eulerian, Gregory and Hirzebruch number families.

Every family is memoized in a :class:`NumberCache`.  The caches only save
work: a hit is always equal to a fresh computation, which
:meth:`NumberCache.audit` checks entry by entry.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Hashable, Union

from .errors import DomainError
from .series import (
    Polynomial,
    TruncatedLaurentSeries,
    series_pow,
    series_reciprocal,
)


class NumberCache:
    """Thread-safe memo table of ``(family, key) -> value``."""

    def __init__(self):
        self._lock = threading.RLock()
        self._tables: dict[str, dict[Hashable, object]] = {}
        self._builders: dict[str, Callable[[Hashable], object]] = {}

    def register(self, family: str, builder: Callable[[Hashable], object]) -> None:
        self._builders[family] = builder
        self._tables.setdefault(family, {})

    def get(self, family: str, key: Hashable):
        table = self._tables[family]
        with self._lock:
            if key in table:
                return table[key]
        value = self._builders[family](key)
        with self._lock:
            return table.setdefault(key, value)

    def put(self, family: str, key: Hashable, value) -> None:
        """Overwrite an entry.  Exists for fault injection in tests."""
        with self._lock:
            self._tables[family][key] = value

    def clear(self, family: str | None = None) -> None:
        with self._lock:
            for name, table in self._tables.items():
                if family is None or name == family:
                    table.clear()

    def entries(self) -> list[tuple[str, Hashable, object]]:
        with self._lock:
            return [(f, k, v) for f, t in self._tables.items() for k, v in list(t.items())]

    def audit(self) -> list[tuple[str, Hashable, object, object]]:
        """Recompute every cached entry from scratch; return the mismatches."""
        bad = []
        with self._lock:
            snapshot = self.entries()
            saved = {f: dict(t) for f, t in self._tables.items()}
            for t in self._tables.values():
                t.clear()
            try:
                for family, key, value in snapshot:
                    fresh = self._builders[family](key)
                    if fresh != value:
                        bad.append((family, key, value, fresh))
            finally:
                for f, t in self._tables.items():
                    t.clear()
                    t.update(saved[f])
        return bad


CACHE = NumberCache()


# Bernoulli ---------------------------------------------------------------


def _bernoulli_block(n: int) -> tuple[Fraction, ...]:
    # t/(e^t - 1) is the reciprocal of sum t^k/(k+1)!
    s = TruncatedLaurentSeries([Fraction(1, factorial(k + 1)) for k in range(n + 1)], 0, n + 1)
    r = series_reciprocal(s)
    return tuple(r[i] * factorial(i) for i in range(n + 1))


def bernoulli(n: int) -> Fraction:
    """Bernoulli number with ``B_1 = -1/2``."""
    if n < 0:
        raise DomainError("bernoulli index must be nonnegative")
    return CACHE.get("bernoulli", n)


CACHE.register("bernoulli", lambda n: _bernoulli_block(n)[n])


# Eulerian ----------------------------------------------------------------


def eulerian_numbers(n: int) -> list[int]:
    """Row ``n`` of the Eulerian triangle ``A(n, 0..n-1)``; row 0 is ``[1]``."""
    row = [1]
    for k in range(1, n + 1):
        prev = row + [0]
        row = [(m + 1) * prev[m] + (k - m) * (prev[m - 1] if m else 0) for m in range(k)]
    return row


def eulerian_polynomial(n: int) -> Polynomial:
    """Eulerian polynomial ``P_n`` with ``sum_j j**n x**(j-1) = P_n(x)/(1-x)**(n+1)``."""
    if n < 0:
        raise DomainError("eulerian index must be nonnegative")
    return CACHE.get("eulerian", n)


CACHE.register("eulerian", lambda n: Polynomial(eulerian_numbers(n)))


def eulerian_derivative_at_one(u: int, m: int) -> Fraction:
    return eulerian_polynomial(u).deriv(m)(Fraction(1))


# Gregory -----------------------------------------------------------------


def _signed_gregory(n: int) -> Fraction:
    if n == 0:
        return Fraction(1)
    return -sum(gregory_coefficient(n - k, signed=True) / (k + 1) for k in range(1, n + 1))


CACHE.register("gregory", _signed_gregory)


def gregory_coefficient(n: int, signed: bool = False) -> Fraction:
    """Gregory coefficient.

    ``signed=True`` gives the coefficients of ``-x/log(1-x)``
    (1, -1/2, -1/12, -1/24, ...); otherwise those of ``x/log(1+x)``.
    """
    if n < 0:
        raise DomainError("gregory index must be nonnegative")
    for i in range(n):  # warm the cache bottom-up, keeps recursion shallow
        CACHE.get("gregory", i)
    g = CACHE.get("gregory", n)
    return g if signed or n % 2 == 0 else -g


@dataclass(frozen=True)
class GregoryPolynomial:
    """``G_m(u)``: coefficient ``m`` of ``(-x/log(1-x))**u / u``.

    For ``m >= 1`` the value is ``poly(u)``; for ``m == 0`` it is
    ``poly(u)/u`` with ``poly == 1``.
    """

    m: int
    poly: Polynomial

    def __call__(self, u) -> Fraction:
        u = Fraction(u)
        if self.m == 0:
            if u == 0:
                raise DomainError("G_0(u) = 1/u is undefined at u = 0")
            return self.poly(u) / u
        return self.poly(u)

    def __str__(self) -> str:
        body = self.poly.render("u")
        return f"{body}/u" if self.m == 0 else body


def _gregory_bar_polys(m: int) -> list[Polynomial]:
    # Gbar_0 = 1, Gbar_1 = -u/2,
    # Gbar_{i+1} = -u/(i+2) - 1/(i+1) * sum_{n=1..i} (u(i-n+1) + n)/(i-n+2) * Gbar_n
    u = Polynomial.x()
    bars = [Polynomial([1]), u * Fraction(-1, 2)]
    for i in range(1, m):
        acc = Polynomial()
        for n in range(1, i + 1):
            acc = acc + (u * (i - n + 1) + n) * bars[n] / (i - n + 2)
        bars.append(u * Fraction(-1, i + 2) - acc / (i + 1))
    return bars[: m + 1]


def _gregory_polynomial(m: int) -> GregoryPolynomial:
    if m == 0:
        return GregoryPolynomial(0, Polynomial([1]))
    bar = _gregory_bar_polys(m)[m]
    quot, rem = bar.divmod(Polynomial.x())
    assert rem.is_zero()
    return GregoryPolynomial(m, quot)


CACHE.register("gregory_poly", _gregory_polynomial)


def gregory_polynomial(m: int) -> GregoryPolynomial:
    if m < 0:
        raise DomainError("gregory polynomial order must be nonnegative")
    return CACHE.get("gregory_poly", m)


def gregory_polynomial_eval(m: int, u) -> Fraction:
    return gregory_polynomial(m)(u)


def _extended_gregory(key: tuple[int, int]) -> Fraction:
    s, n = key
    if n == 0:
        return Fraction(1)
    return -sum(extended_gregory(s, n - k) / Fraction((k + 1) ** s) for k in range(1, n + 1))


CACHE.register("extended_gregory", _extended_gregory)


def extended_gregory(s: int, n: int) -> Fraction:
    """Reciprocal-series coefficients of ``sum x**n/(n+1)**s``."""
    if s < 1 or n < 0:
        raise DomainError("extended_gregory needs s >= 1 and n >= 0")
    for i in range(n):
        CACHE.get("extended_gregory", (s, i))
    return CACHE.get("extended_gregory", (s, n))


# Hirzebruch --------------------------------------------------------------


def primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, flag in enumerate(sieve) if flag]


def hirzebruch(k: int) -> int:
    """``prod_{p <= k+1} p**floor(k/(p-1))`` over primes ``p``."""
    if k < 0:
        raise DomainError("hirzebruch index must be nonnegative")
    out = 1
    for p in primes_upto(k + 1):
        out *= p ** (k // (p - 1))
    return out


# generalized Bernoulli ---------------------------------------------------


def _gen_bernoulli_numbers(key: tuple[int, int]) -> tuple[Fraction, ...]:
    # coefficients B_j^(k)/j! of (t/(e^t-1))^k, j = 0..n
    k, n = key
    s = TruncatedLaurentSeries([Fraction(1, factorial(j + 1)) for j in range(n + 1)], 0, n + 1)
    p = series_pow(s, -k)
    return tuple(p[j] for j in range(n + 1))


CACHE.register("gen_bernoulli", _gen_bernoulli_numbers)

Arg = Union[int, Fraction, Polynomial]


def gen_bernoulli_scaled(n: int, k: int, x: Arg):
    """``B_n^(k)(x)/n!`` as the coefficient convolution of
    ``(t/(e^t-1))**k`` with ``exp(x t)``.

    ``x`` may be a rational or a :class:`Polynomial` (symbolic argument).
    Negative ``k`` is allowed.
    """
    if n < 0:
        raise DomainError("index must be nonnegative")
    nums = CACHE.get("gen_bernoulli", (k, n))
    if not isinstance(x, Polynomial):
        x = Fraction(x)
    acc = Fraction(0)
    xp = Fraction(1)
    for j in range(n + 1):
        acc = acc + nums[n - j] * xp / factorial(j)
        xp = xp * x
    return acc


def gen_bernoulli_poly(n: int, k: int, x) -> Fraction:
    """Generalized Bernoulli polynomial ``B_n^(k)(x)`` at rational ``x``."""
    return gen_bernoulli_scaled(n, k, Fraction(x)) * factorial(n)


def gen_bernoulli_number(n: int, k: int) -> Fraction:
    """``B_n^(k) = B_n^(k)(0)``."""
    return gen_bernoulli_poly(n, k, 0)


def binomial_figurate(n: int, k: int) -> int:
    """``C(n + k - 1, n)``."""
    return comb(n + k - 1, n)


__all__ = [
    "CACHE",
    "GregoryPolynomial",
    "NumberCache",
    "bernoulli",
    "binomial_figurate",
    "eulerian_derivative_at_one",
    "eulerian_numbers",
    "eulerian_polynomial",
    "extended_gregory",
    "gen_bernoulli_number",
    "gen_bernoulli_poly",
    "gen_bernoulli_scaled",
    "gregory_coefficient",
    "gregory_polynomial",
    "gregory_polynomial_eval",
    "hirzebruch",
    "primes_upto",
]
