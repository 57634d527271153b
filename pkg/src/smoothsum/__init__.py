"""Exact Ramanujan smoothed sums of divergent power and figurate series."""

from .errors import (
    ConsistencyError,
    DomainError,
    ParseError,
    SmoothSumError,
    TruncationError,
    UnsupportedDenominatorError,
)
from .genfunc import RationalGF, abel_value, figurate_difference_decompose, taylor_coeffs, twist
from .numbers import (
    CACHE,
    bernoulli,
    eulerian_polynomial,
    extended_gregory,
    gen_bernoulli_poly,
    gregory_coefficient,
    gregory_polynomial,
    hirzebruch,
)
from .parser import parse_genfunc
from .ramanujan import (
    AsymptoticExpansion,
    gauge_expand,
    intuitive_solve,
    regularization_check,
    shift_constant_poly,
    smoothed_sum,
)
from .series import Polynomial, TruncatedLaurentSeries, series_reciprocal

__version__ = "0.1.0"
