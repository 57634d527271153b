"""Smoothed sums of divergent series by four independent routes.

* closed forms in Bernoulli numbers and Gregory coefficients;
* the constant term of the gauge expansion ``x = exp(-t)``, ``t -> 0+``;
* the twist-and-difference algebra (solve ``c - a1 c - a2 = Abel value``);
* subtraction of ``(k-1)!/(-log x)**k`` in the variable ``eps = 1 - x``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Mapping, Sequence, Union

from .errors import ConsistencyError, DomainError
from .genfunc import (
    ONE_MINUS_X,
    RationalGF,
    abel_value,
    figurate_difference_decompose,
    gf_sub,
    twist,
)
from .numbers import (
    bernoulli,
    eulerian_polynomial,
    gen_bernoulli_scaled,
    gregory_coefficient,
)
from .series import (
    Polynomial,
    TruncatedLaurentSeries,
    exp_series,
    gauge_series,
    log_factor_series,
    series_pow,
)

FAMILIES = ("power", "figurate")
METHODS = ("closed", "asymptotic", "intuitive", "regularized", "bernoulli")
# methods that apply to each family, in reporting order
FAMILY_METHODS = {
    "power": ("closed", "asymptotic", "intuitive", "regularized"),
    "figurate": ("closed", "asymptotic", "intuitive", "bernoulli"),
}
DEFAULT_TAIL = 6


@dataclass(frozen=True)
class AsymptoticExpansion:
    """Laurent expansion in ``t`` split at the constant term.

    ``divergent`` holds every power ``-pole..-1``, zeros included, so a
    vanishing coefficient is recorded rather than implied.
    """

    divergent: dict[int, Fraction]
    constant: Fraction
    tail: tuple[Fraction, ...]
    order: int

    @classmethod
    def from_series(cls, s: TruncatedLaurentSeries, pole: int) -> AsymptoticExpansion:
        divergent = {p: s[p] for p in range(-pole, 0)}
        tail = tuple(s[p] for p in range(1, s.order))
        return cls(divergent, s[0], tail, s.order)

    def coefficient(self, power: int) -> Fraction:
        if power < 0:
            return self.divergent.get(power, Fraction(0))
        if power == 0:
            return self.constant
        return self.tail[power - 1]


@dataclass(frozen=True)
class SmoothedSum:
    value: Fraction
    method: str
    diagnostics: object = None


def gauge_expand(g: RationalGF, order: int | None = None, shift: Union[int, Fraction] = 0) -> AsymptoticExpansion:
    """Expand ``x**shift * g(x)`` at ``x = exp(-t)`` around ``t = 0``.

    ``order`` counts the terms of the regular factor ``t**a g``; the
    expansion is therefore exact for powers up to ``order - a``.  A rational
    ``shift`` multiplies by ``exp(-shift t)``.
    """
    a = g.a
    if order is None:
        order = a + DEFAULT_TAIL
    if order < a:
        raise DomainError(f"order {order} is below the pole order {a}")
    n = order + 1
    x = gauge_series(n)
    # 1 - exp(-t) = t * w(t),  w = sum (-1)^j t^j/(j+1)!
    w = TruncatedLaurentSeries([Fraction((-1) ** j, factorial(j + 1)) for j in range(n)], 0, n)
    h = g.num(x)
    if not isinstance(h, TruncatedLaurentSeries):
        h = TruncatedLaurentSeries([h], 0, n)
    if shift:
        h = h * exp_series(-Fraction(shift), n)
    if a:
        h = h * series_pow(w, -a)
    if g.b:
        h = h * series_pow(1 + x, -g.b)
    return AsymptoticExpansion.from_series(h.shift(-a), a)


# closed forms --------------------------------------------------------------


def closed_power_sum(k: int) -> Fraction:
    """Smoothed sum of ``n**(k-1)``: ``(-1)**(k-1) B_k / k``."""
    if k < 1:
        raise DomainError("k must be positive")
    return (-1) ** (k - 1) * bernoulli(k) / k


def closed_figurate(k: int) -> Fraction:
    """Smoothed sum of ``C(n+k-1, n)``: the signed Gregory coefficient."""
    if k < 1:
        raise DomainError("k must be positive")
    return gregory_coefficient(k, signed=True)


def shift_constant_poly(k: int) -> Polynomial:
    """``B_k^(k)(k - m)/k!`` as a polynomial in the shift ``m``."""
    if k < 1:
        raise DomainError("k must be positive")
    arg = Polynomial([k, -1])  # k - m
    out = gen_bernoulli_scaled(k, k, arg)
    return out if isinstance(out, Polynomial) else Polynomial([out])


def smoothed_bernoulli_form(k: int, m: Union[int, Fraction] = 1) -> Fraction:
    """``B_k^(k)(k - m)/k!``, the constant term for ``x**m/(1-x)**k``."""
    if k < 1:
        raise DomainError("k must be positive")
    return gen_bernoulli_scaled(k, k, k - Fraction(m))


# intuitive method ------------------------------------------------------------


@dataclass(frozen=True)
class IntuitiveLedger:
    """Bookkeeping of one twist-and-difference solve.

    ``c (1 - a1) = abel + a2``; ``a2`` collects the known smoothed sums of
    the lower-order pieces of the difference.
    """

    abel: Fraction
    a1: Fraction
    a2: Fraction
    terms: dict[int, Fraction] = field(default_factory=dict)

    @property
    def value(self) -> Fraction:
        if self.a1 == 1:
            raise DomainError("degenerate ledger: a1 = 1")
        return (self.abel + self.a2) / (1 - self.a1)


def intuitive_general(F: Polynomial, k: int, a1: Fraction, a2: Fraction) -> Fraction:
    """Solve for ``x F(x)/(1-x)**k`` given the difference ledger ``a1, a2``."""
    abel = F(Fraction(-1)) / Fraction(2) ** k
    return IntuitiveLedger(abel, Fraction(a1), Fraction(a2)).value


def _power_ledger(k: int) -> IntuitiveLedger:
    g = RationalGF.power_sum(k)
    tw = twist(g)
    diff = gf_sub(g, tw)
    sq = g.squared()
    # the difference must be a constant multiple of g(x^2)
    ratio = diff.num.coeffs[-1] / sq.num.coeffs[-1]
    if (diff.a, diff.b) != (sq.a, sq.b) or diff.num != sq.num * ratio:
        raise ConsistencyError(f"difference for k={k} is not a multiple of g(x^2)")
    return IntuitiveLedger(abel_value(tw), ratio, Fraction(0), {k: ratio})


def _figurate_ledger(k: int, memo: Mapping[int, Fraction]) -> IntuitiveLedger:
    g = RationalGF.figurate(k)
    tw = twist(g)
    dec = figurate_difference_decompose(k)
    if dec.recombine() != gf_sub(g, tw):
        raise ConsistencyError(f"decomposition for k={k} does not recombine")
    a2 = Fraction(0)
    for j, d in dec.terms.items():
        if j == k:
            continue
        if j not in memo:
            raise DomainError(f"missing smoothed sum for figurate order {j}")
        a2 += d * memo[j]
    return IntuitiveLedger(abel_value(tw), dec.terms.get(k, Fraction(0)), a2, dict(dec.terms))


def _memo_map(memo) -> dict[int, Fraction]:
    if memo is None:
        return {}
    if isinstance(memo, Mapping):
        return {int(j): Fraction(v) for j, v in memo.items()}
    return {j + 1: Fraction(v) for j, v in enumerate(memo)}


def intuitive_solve(
    family: str,
    k: int,
    memo: Union[Sequence[Fraction], Mapping[int, Fraction], None] = None,
) -> Fraction:
    """Smoothed sum by the twist-and-difference method.

    For the figurate family ``memo`` holds the sums of lower orders, either
    as a mapping ``{j: s_j}`` or a sequence ``[s_1, s_2, ...]``.  Without a
    memo they are computed progressively from ``k = 1``.
    """
    return intuitive_ledger(family, k, memo).value


def intuitive_ledger(family: str, k: int, memo=None) -> IntuitiveLedger:
    if k < 1:
        raise DomainError("k must be positive")
    if family == "power":
        return _power_ledger(k)
    if family != "figurate":
        raise DomainError(f"unknown family {family!r}")
    if memo is None:
        known: dict[int, Fraction] = {}
        for j in range(1, k):
            known[j] = _figurate_ledger(j, known).value
    else:
        known = _memo_map(memo)
    return _figurate_ledger(k, known)


# regularization ------------------------------------------------------------


@dataclass(frozen=True)
class RegularizationReport:
    """Both expansions in ``eps = 1 - x`` and their principal parts."""

    k: int
    generating: TruncatedLaurentSeries
    comparator: TruncatedLaurentSeries
    rows: tuple[tuple[int, Fraction, Fraction], ...]

    @property
    def cancelled(self) -> bool:
        return all(lhs == rhs for _, lhs, rhs in self.rows)


def regularization_check(k: int, order: int | None = None) -> tuple[Fraction, RegularizationReport]:
    """Constant of ``x P_{k-1}(x)/(1-x)**k - (k-1)!/(-log x)**k`` at ``x -> 1``.

    ``order`` is the number of ``eps`` terms carried in each expansion.
    """
    if k < 1:
        raise DomainError("k must be positive")
    if order is None:
        order = k + 2
    if order < k + 2:
        raise DomainError("order must be at least k + 2")
    # (1 - eps) P_{k-1}(1 - eps) eps^-k, a finite Laurent polynomial
    one_minus_eps = Polynomial([1, -1])
    numer = one_minus_eps * eulerian_polynomial(k - 1).compose(one_minus_eps)
    gen = TruncatedLaurentSeries.from_polynomial(numer, order).shift(-k)
    # (k-1)!/(-log(1-eps))^k = (k-1)! eps^-k u(eps)^-k
    comp = (series_pow(log_factor_series(order), -k) * factorial(k - 1)).shift(-k)
    rows = tuple((p, gen[p], comp[p]) for p in range(-k, 0))
    report = RegularizationReport(k, gen, comp, rows)
    if not report.cancelled:
        raise ConsistencyError(f"divergent parts do not cancel for k={k}: {rows}")
    return gen[0] - comp[0], report


# dispatcher ------------------------------------------------------------------


def smoothed_sum(family: str, k: int, m: Union[int, Fraction] = 1, method: str = "closed") -> SmoothedSum:
    """Smoothed sum of the power (``n**(k-1)``) or figurate family.

    ``m`` is the index shift: the generating function is
    ``x**m P_{k-1}(x)/(1-x)**k`` or ``x**m/(1-x)**k``.
    """
    if family not in FAMILIES:
        raise DomainError(f"unknown family {family!r}")
    if method not in METHODS:
        raise DomainError(f"unknown method {method!r}")
    if k < 1:
        raise DomainError("k must be positive")
    m = Fraction(m)
    if method not in FAMILY_METHODS[family]:
        raise DomainError(f"method {method!r} does not apply to the {family} family")
    if method in ("intuitive", "regularized") and m != 1:
        raise DomainError(f"method {method!r} requires m = 1")

    if method == "asymptotic":
        if family == "power":
            g, shift = RationalGF.power_sum(k), m - 1
        else:
            g, shift = RationalGF.figurate(k, 0), m
        exp = gauge_expand(g, shift=shift)
        return SmoothedSum(exp.constant, method, exp)
    if method == "closed":
        if family == "power":
            if m != 1:
                raise DomainError("the power-sum closed form requires m = 1")
            return SmoothedSum(closed_power_sum(k), method)
        if m == 1:
            return SmoothedSum(closed_figurate(k), method)
        return SmoothedSum(smoothed_bernoulli_form(k, m), method)
    if method == "bernoulli":
        return SmoothedSum(smoothed_bernoulli_form(k, m), method)
    if method == "intuitive":
        ledger = intuitive_ledger(family, k)
        return SmoothedSum(ledger.value, method, ledger)
    value, report = regularization_check(k, k + 2)
    return SmoothedSum(value, method, report)


def all_methods(family: str, k: int, m: Union[int, Fraction] = 1) -> list[SmoothedSum]:
    """Every method applicable to ``(family, m)``."""
    m = Fraction(m)
    methods = FAMILY_METHODS[family]
    if m != 1:
        methods = tuple(x for x in methods if x not in ("intuitive", "regularized"))
        if family == "power":
            methods = tuple(x for x in methods if x != "closed")
    return [smoothed_sum(family, k, m, meth) for meth in methods]


__all__ = [
    "AsymptoticExpansion",
    "IntuitiveLedger",
    "RegularizationReport",
    "SmoothedSum",
    "all_methods",
    "closed_figurate",
    "closed_power_sum",
    "gauge_expand",
    "intuitive_general",
    "intuitive_ledger",
    "intuitive_solve",
    "regularization_check",
    "shift_constant_poly",
    "smoothed_bernoulli_form",
    "smoothed_sum",
]
