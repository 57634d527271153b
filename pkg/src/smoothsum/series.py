"""Exact polynomials and truncated Laurent series over the rationals.

Scalars are :class:`fractions.Fraction`, which already keeps every value in
lowest terms with a positive denominator.  A :class:`TruncatedLaurentSeries`
remembers how far its coefficients are known; asking for a coefficient at or
beyond ``order`` raises :class:`TruncationError` instead of returning zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

from .errors import DomainError, TruncationError

Scalar = Union[int, Fraction]


def _frac(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def _strip(coeffs: Iterable) -> tuple[Fraction, ...]:
    out = [_frac(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial, ``coeffs[i]`` multiplies ``x**i``.

    Trailing zeros are stripped, so the zero polynomial has no coefficients.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    @classmethod
    def constant(cls, c: Scalar) -> Polynomial:
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1) -> Polynomial:
        if n < 0:
            raise DomainError("monomial exponent must be nonnegative")
        return cls([0] * n + [c])

    @classmethod
    def x(cls) -> Polynomial:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> int:
        """Index of the lowest nonzero coefficient (``-1`` for zero)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    # arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial([other])
        return NotImplemented

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> Polynomial:
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("polynomial division by zero scalar")
        return Polynomial(c / other for c in self.coeffs)

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise DomainError("negative power of a polynomial")
        result = Polynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, divisor: Polynomial) -> tuple[Polynomial, Polynomial]:
        """Euclidean division: ``self = q*divisor + r`` with ``deg r < deg divisor``."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dlead = divisor.coeffs[-1]
        dd = divisor.degree
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for i in range(len(rem) - dd - 1, -1, -1):
            q = rem[i + dd] / dlead
            quot[i] = q
            if q:
                for j, c in enumerate(divisor.coeffs):
                    rem[i + j] -= q * c
        return Polynomial(quot), Polynomial(rem[:dd] if dd > 0 else [])

    def __floordiv__(self, divisor: Polynomial) -> Polynomial:
        return self.divmod(divisor)[0]

    def __mod__(self, divisor: Polynomial) -> Polynomial:
        return self.divmod(divisor)[1]

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        return self / self.coeffs[-1]

    def gcd(self, other: Polynomial) -> Polynomial:
        """Monic greatest common divisor (zero if both are zero)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    # evaluation and substitution ------------------------------------------

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a scalar, polynomial or series."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def deriv(self, m: int = 1) -> Polynomial:
        p = self
        for _ in range(m):
            p = Polynomial(i * c for i, c in enumerate(p.coeffs) if i)
        return p

    def reflect(self) -> Polynomial:
        """``p(-x)``."""
        return Polynomial(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def stretch(self, k: int = 2) -> Polynomial:
        """``p(x**k)``."""
        out = [Fraction(0)] * (k * self.degree + 1 if self.coeffs else 0)
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return Polynomial(out)

    def compose(self, inner: Polynomial) -> Polynomial:
        result = self(inner)
        return result if isinstance(result, Polynomial) else Polynomial([result])

    def taylor_shift(self, a: Scalar) -> list[Fraction]:
        """Coefficients ``r`` with ``p(x) = sum r[j] * (x - a)**j``.

        Repeated synthetic division by ``(x - a)``.
        """
        a = _frac(a)
        cur = list(self.coeffs)
        out: list[Fraction] = []
        while cur:
            # synthetic division of cur by (x - a)
            carry = Fraction(0)
            quot = [Fraction(0)] * (len(cur) - 1)
            for i in range(len(cur) - 1, -1, -1):
                carry = carry * a + cur[i]
                if i:
                    quot[i - 1] = carry
            out.append(carry)
            cur = quot
        return out

    # display ---------------------------------------------------------------

    def render(self, var: str = "x") -> str:
        """Expression text accepted by the generating-function parser."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Polynomial({self.render()})"


@dataclass(frozen=True)
class TruncatedLaurentSeries:
    """``sum coeffs[i] * t**(valuation + i)`` known for powers below ``order``.

    Normalized so that a nonzero series has a nonzero leading coefficient;
    the zero series has no coefficients and ``valuation == order``.
    """

    valuation: int
    coeffs: tuple[Fraction, ...]
    order: int

    def __init__(self, coeffs: Iterable[Scalar], valuation: int = 0, order: int | None = None):
        cs = [_frac(c) for c in coeffs]
        if order is None:
            order = valuation + len(cs)
        if valuation > order:
            raise DomainError("valuation exceeds truncation order")
        cs = cs[: order - valuation]
        lead = 0
        while lead < len(cs) and cs[lead] == 0:
            lead += 1
        if lead == len(cs):
            valuation, cs = order, []
        else:
            valuation, cs = valuation + lead, cs[lead:]
        # pad known zeros up to the order
        cs += [Fraction(0)] * (order - valuation - len(cs))
        object.__setattr__(self, "valuation", valuation)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", order)

    @classmethod
    def one(cls, order: int) -> TruncatedLaurentSeries:
        return cls([1], 0, order)

    @classmethod
    def from_polynomial(cls, p: Polynomial, order: int) -> TruncatedLaurentSeries:
        return cls(p.coeffs, 0, order)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def precision(self) -> int:
        """Number of coefficients known past the valuation."""
        return self.order - self.valuation

    def __getitem__(self, n: int) -> Fraction:
        if n >= self.order:
            raise TruncationError(f"coefficient of power {n} unknown (order {self.order})")
        if n < self.valuation:
            return Fraction(0)
        return self.coeffs[n - self.valuation]

    def coefficients(self, start: int, stop: int) -> list[Fraction]:
        return [self[n] for n in range(start, stop)]

    def truncate(self, order: int) -> TruncatedLaurentSeries:
        if order > self.order:
            raise TruncationError(f"cannot raise order {self.order} to {order}")
        return TruncatedLaurentSeries(self.coeffs, self.valuation, order)

    def shift(self, k: int) -> TruncatedLaurentSeries:
        """Multiply by ``t**k``."""
        return TruncatedLaurentSeries(self.coeffs, self.valuation + k, self.order + k)

    def principal_part(self) -> dict[int, Fraction]:
        return {n: self[n] for n in range(min(self.valuation, 0), min(0, self.order))}

    # arithmetic ---------------------------------------------------------

    def _lift(self, other) -> TruncatedLaurentSeries:
        if isinstance(other, TruncatedLaurentSeries):
            return other
        if isinstance(other, (int, Fraction)):
            # an exact scalar never limits the order
            return TruncatedLaurentSeries([other], 0, max(self.order, 1))
        return NotImplemented

    def __add__(self, other) -> TruncatedLaurentSeries:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return series_arith(self, other, "add")

    __radd__ = __add__

    def __sub__(self, other) -> TruncatedLaurentSeries:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return series_arith(self, other, "sub")

    def __rsub__(self, other) -> TruncatedLaurentSeries:
        return (-self) + other

    def __neg__(self) -> TruncatedLaurentSeries:
        return TruncatedLaurentSeries([-c for c in self.coeffs], self.valuation, self.order)

    def __mul__(self, other) -> TruncatedLaurentSeries:
        if isinstance(other, (int, Fraction)):
            return TruncatedLaurentSeries([c * other for c in self.coeffs], self.valuation, self.order)
        if not isinstance(other, TruncatedLaurentSeries):
            return NotImplemented
        return series_arith(self, other, "mul")

    __rmul__ = __mul__

    def __truediv__(self, other) -> TruncatedLaurentSeries:
        if isinstance(other, (int, Fraction)):
            return self * (1 / _frac(other))
        if not isinstance(other, TruncatedLaurentSeries):
            return NotImplemented
        return self * series_reciprocal(other)

    def __pow__(self, e: int) -> TruncatedLaurentSeries:
        return series_pow(self, e)

    def __repr__(self) -> str:
        terms = ", ".join(str(c) for c in self.coeffs)
        return f"TruncatedLaurentSeries(valuation={self.valuation}, [{terms}], order={self.order})"


def series_arith(a: TruncatedLaurentSeries, b: TruncatedLaurentSeries, op: str) -> TruncatedLaurentSeries:
    """Add, subtract or multiply two truncated Laurent series exactly."""
    if op in ("add", "sub"):
        order = min(a.order, b.order)
        lo = min(a.valuation, b.valuation, order)
        sign = 1 if op == "add" else -1
        return TruncatedLaurentSeries(
            [a[n] + sign * b[n] for n in range(lo, order)], lo, order
        )
    if op != "mul":
        raise DomainError(f"unknown series operation {op!r}")
    order = min(a.order + b.valuation, b.order + a.valuation)
    val = a.valuation + b.valuation
    if a.is_zero() or b.is_zero():
        return TruncatedLaurentSeries([], order, order)
    n = order - val
    out = [Fraction(0)] * max(n, 0)
    ac, bc = a.coeffs, b.coeffs
    for i in range(min(n, len(ac))):
        ai = ac[i]
        if ai:
            for j in range(min(n - i, len(bc))):
                out[i + j] += ai * bc[j]
    return TruncatedLaurentSeries(out, val, order)


def series_reciprocal(s: TruncatedLaurentSeries) -> TruncatedLaurentSeries:
    """Multiplicative inverse; valuation is negated, precision kept."""
    if s.is_zero():
        raise DomainError("reciprocal of a zero series")
    c = s.coeffs
    n = s.precision
    inv0 = 1 / c[0]
    r = [inv0]
    for j in range(1, n):
        acc = sum((c[i] * r[j - i] for i in range(1, min(j, len(c) - 1) + 1)), Fraction(0))
        r.append(-acc * inv0)
    return TruncatedLaurentSeries(r, -s.valuation, -s.valuation + n)


def series_pow(s: TruncatedLaurentSeries, e: int) -> TruncatedLaurentSeries:
    """Integer power by binary exponentiation; ``e < 0`` inverts first."""
    if e < 0:
        return series_pow(series_reciprocal(s), -e)
    if e == 0:
        return TruncatedLaurentSeries.one(max(s.precision, 0))
    result = None
    base = s
    while e:
        if e & 1:
            result = base if result is None else result * base
        e >>= 1
        if e:
            base = base * base
    return result


def exp_series(c: Scalar, order: int) -> TruncatedLaurentSeries:
    """``exp(c*t)`` with exact coefficients ``c**n / n!``."""
    c = _frac(c)
    return TruncatedLaurentSeries([c**n / factorial(n) for n in range(order)], 0, order)


def gauge_series(order: int) -> TruncatedLaurentSeries:
    """``exp(-t)`` truncated at ``order``."""
    if order < 1:
        raise DomainError("order must be at least 1")
    return exp_series(-1, order)


def log_factor_series(order: int) -> TruncatedLaurentSeries:
    """``-log(1 - t)/t = sum t**n/(n + 1)`` truncated at ``order``."""
    if order < 1:
        raise DomainError("order must be at least 1")
    return TruncatedLaurentSeries([Fraction(1, n + 1) for n in range(order)], 0, order)


Matrix = list[list[Fraction]]


def toeplitz_matrix(first_row: Sequence[Scalar], n: int) -> Matrix:
    """Upper-triangular Toeplitz matrix; missing row entries are zero."""
    row = [_frac(c) for c in first_row[:n]] + [Fraction(0)] * max(n - len(first_row), 0)
    return [[row[j - i] if j >= i else Fraction(0) for j in range(n)] for i in range(n)]


def toeplitz_inverse(first_row: Sequence[Scalar], n: int) -> Matrix:
    """Inverse of the ``n x n`` upper-triangular Toeplitz matrix of ``first_row``.

    Solved column by column with back substitution on the explicit matrix,
    independently of :func:`series_reciprocal`.
    """
    if n < 1:
        raise DomainError("matrix size must be positive")
    if not first_row or first_row[0] == 0:
        raise DomainError("singular Toeplitz matrix (zero diagonal)")
    t = toeplitz_matrix(first_row, n)
    inv = [[Fraction(0)] * n for _ in range(n)]
    for col in range(n):
        for i in range(n - 1, -1, -1):
            acc = Fraction(1 if i == col else 0)
            for j in range(i + 1, n):
                acc -= t[i][j] * inv[j][col]
            inv[i][col] = acc / t[i][i]
    return inv


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    return [[sum((a[i][k] * b[k][j] for k in range(m)), Fraction(0)) for j in range(p)] for i in range(n)]
