"""Rational generating functions with denominators ``(1-x)**a (1+x)**b``."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import DomainError
from .series import Polynomial, TruncatedLaurentSeries, series_pow

ONE_MINUS_X = Polynomial([1, -1])
ONE_PLUS_X = Polynomial([1, 1])


def _deflate(num: Polynomial, factor: Polynomial, root: int, power: int) -> tuple[Polynomial, int]:
    while power > 0 and not num.is_zero() and num(Fraction(root)) == 0:
        num, rem = num.divmod(factor)
        assert rem.is_zero()
        power -= 1
    return num, power


@dataclass(frozen=True)
class RationalGF:
    """``num(x) / ((1-x)**a * (1+x)**b)`` in lowest terms.

    Construction cancels any factor ``(1-x)`` or ``(1+x)`` shared between
    numerator and denominator.  The zero function is stored with
    ``a = b = 0``.
    """

    num: Polynomial
    a: int = 0
    b: int = 0

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise DomainError("denominator exponents must be nonnegative")
        num = self.num if isinstance(self.num, Polynomial) else Polynomial(self.num)
        if num.is_zero():
            a = b = 0
        else:
            num, a = _deflate(num, ONE_MINUS_X, 1, self.a)
            num, b = _deflate(num, ONE_PLUS_X, -1, self.b)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def power_sum(cls, k: int) -> RationalGF:
        """``x P_{k-1}(x) / (1-x)**k``, whose coefficients are ``n**(k-1)``."""
        from .numbers import eulerian_polynomial

        if k < 1:
            raise DomainError("k must be positive")
        return cls(Polynomial.x() * eulerian_polynomial(k - 1), k, 0)

    @classmethod
    def figurate(cls, k: int, shift: int = 1) -> RationalGF:
        """``x**shift / (1-x)**k``, the figurate binomial sequence."""
        if k < 1:
            raise DomainError("k must be positive")
        return cls(Polynomial.monomial(shift), k, 0)

    def denominator(self) -> Polynomial:
        return ONE_MINUS_X**self.a * ONE_PLUS_X**self.b

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _over(self, a: int, b: int) -> Polynomial:
        """Numerator rewritten over ``(1-x)**a (1+x)**b`` (``a >= self.a``, ...)."""
        return self.num * ONE_MINUS_X ** (a - self.a) * ONE_PLUS_X ** (b - self.b)

    def __add__(self, other: RationalGF) -> RationalGF:
        if not isinstance(other, RationalGF):
            return NotImplemented
        a, b = max(self.a, other.a), max(self.b, other.b)
        return RationalGF(self._over(a, b) + other._over(a, b), a, b)

    def __neg__(self) -> RationalGF:
        return RationalGF(-self.num, self.a, self.b)

    def __sub__(self, other: RationalGF) -> RationalGF:
        if not isinstance(other, RationalGF):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> RationalGF:
        if isinstance(other, (int, Fraction)):
            return RationalGF(self.num * other, self.a, self.b)
        if isinstance(other, Polynomial):
            return RationalGF(self.num * other, self.a, self.b)
        if isinstance(other, RationalGF):
            return RationalGF(self.num * other.num, self.a + other.a, self.b + other.b)
        return NotImplemented

    __rmul__ = __mul__

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        den = self.denominator()(x)
        if den == 0:
            raise DomainError(f"pole at x = {x}")
        return self.num(x) / den

    def squared(self) -> RationalGF:
        """``g(x**2)``; ``(1-x**2) = (1-x)(1+x)`` so both exponents get ``a``."""
        if self.b:
            raise DomainError("x -> x^2 substitution only for denominators (1-x)^a")
        return RationalGF(self.num.stretch(2), self.a, self.a)

    def render(self) -> str:
        """Text in the parser grammar; ``(1-x^2)`` groups matching powers."""
        num = self.num.render()
        if self.a == 0 and self.b == 0:
            return num
        common = min(self.a, self.b)
        factors = []
        if common:
            factors.append("(1-x^2)" + (f"^{common}" if common > 1 else ""))
        if self.a > common:
            e = self.a - common
            factors.append("(1-x)" + (f"^{e}" if e > 1 else ""))
        if self.b > common:
            e = self.b - common
            factors.append("(1+x)" + (f"^{e}" if e > 1 else ""))
        den = factors[0] if len(factors) == 1 else "(" + "*".join(factors) + ")"
        if len([c for c in self.num.coeffs if c]) > 1:
            num = f"({num})"
        return f"{num}/{den}"

    def __str__(self) -> str:
        return self.render()


def taylor_coeffs(g: RationalGF, n: int) -> list[Fraction]:
    """First ``n`` Taylor coefficients of ``g`` at 0."""
    if n < 1:
        raise DomainError("need at least one coefficient")
    s = TruncatedLaurentSeries.from_polynomial(g.num, n)
    if g.a:
        s = s * series_pow(TruncatedLaurentSeries([1, -1], 0, n), -g.a)
    if g.b:
        s = s * series_pow(TruncatedLaurentSeries([1, 1], 0, n), -g.b)
    return s.coefficients(0, n)


def twist(g: RationalGF) -> RationalGF:
    """Alternating counterpart: ``(-1)**v g(-x)`` with ``v`` the valuation.

    Coefficient ``n`` picks up the sign ``(-1)**(n + v)``, so the leading
    coefficient keeps its sign and ``twist(twist(g)) == g``.
    """
    if g.is_zero():
        return g
    v = g.num.valuation
    num = g.num.reflect()
    if v % 2:
        num = -num
    return RationalGF(num, g.b, g.a)


def gf_sub(g1: RationalGF, g2: RationalGF) -> RationalGF:
    return g1 - g2


def abel_value(g: RationalGF) -> Fraction:
    """Value at ``x = 1`` of a generating function without a pole there."""
    if g.a > 0:
        raise DomainError("generating function has a pole at x = 1")
    return g.num(Fraction(1)) / 2**g.b


@dataclass(frozen=True)
class Decomposition:
    """``sum_j terms[j] * x**2 / (1 - x**2)**j``."""

    terms: dict[int, Fraction] = field(default_factory=dict)

    def recombine(self) -> RationalGF:
        total = RationalGF(Polynomial())
        x2 = Polynomial.monomial(2)
        for j, d in self.terms.items():
            total = total + RationalGF(x2 * d, j, j)
        return total

    def render(self) -> str:
        parts = []
        for j in sorted(self.terms, reverse=True):
            d = self.terms[j]
            mag = abs(d)
            coeff = "" if mag == 1 else f"{mag}*"
            den = "(1-x^2)" + (f"^{j}" if j > 1 else "")
            body = f"{coeff}x^2/{den}"
            if not parts:
                parts.append(("-" if d < 0 else "") + body)
            else:
                parts.append((" - " if d < 0 else " + ") + body)
        return "".join(parts) or "0"


def figurate_difference_decompose(k: int) -> Decomposition:
    """Partial fractions of the figurate difference in powers of ``1/(1-x**2)``.

    ``Q(y) = sum_j q_j (1-y)**j`` by a Taylor shift at ``y = 1``; the term
    ``q_j`` lands on ``x**2/(1-x**2)**(k-j)``.
    """
    if k < 1:
        raise DomainError("k must be positive")
    q = Polynomial(2 * comb(k, 2 * j + 1) for j in range((k - 1) // 2 + 1))
    shifted = q.taylor_shift(1)
    terms = {}
    for j, r in enumerate(shifted):
        d = r if j % 2 == 0 else -r
        if d:
            terms[k - j] = d
    return Decomposition(terms)


__all__ = [
    "Decomposition",
    "RationalGF",
    "abel_value",
    "figurate_difference_decompose",
    "gf_sub",
    "taylor_coeffs",
    "twist",
]
