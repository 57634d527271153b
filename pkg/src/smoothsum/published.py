"""Published reference values, transcribed as printed.

Values the source prints unreduced (``-27/1440``) are kept in that form
here as strings; comparisons go through :class:`fractions.Fraction`.
Known misprints are recorded next to their corrected values.
"""

from fractions import Fraction

# Table 1: k-1 -> smoothed sum of n**(k-1)
TABLE1_SUMS = {
    0: "-1/2", 1: "-1/12", 2: "0", 3: "1/120",
    4: "0", 5: "-1/252", 6: "0", 7: "1/240",
}
TABLE1_SEQUENCES = {
    0: [1, 1, 1, 1, 1, 1, 1],
    1: [1, 2, 3, 4, 5, 6, 7],
    2: [1, 4, 9, 16, 25, 36, 49],
    3: [1, 8, 27, 64, 125, 216, 343],
    4: [1, 16, 81, 256, 625, 1296],
    5: [1, 32, 243, 1024, 3125, 7776],
    6: [1, 64, 729, 4096, 15625],
    7: [1, 128, 2187, 16384, 78125],
}
# numerator of x P_7(x)/(1-x)^8 as printed: the last term lost its x^6
TABLE1_P7_PRINTED = [1, 120, 1191, 2416, 1191, 120]  # + "1" as a constant
TABLE1_P7_PRINTED_TRAILING_CONSTANT = 1

# Table 2 / Table 4 sequences C(n+k-1, n), n = 0..6
FIGURATE_SEQUENCES = {
    1: [1, 1, 1, 1, 1, 1, 1],
    2: [1, 2, 3, 4, 5, 6, 7],
    3: [1, 3, 6, 10, 15, 21, 28],
    4: [1, 4, 10, 20, 35, 56, 84],
    5: [1, 5, 15, 35, 70, 126, 210],
    6: [1, 6, 21, 56, 126, 252, 462],
    7: [1, 7, 28, 84, 210, 462, 924],
}

# Table 3: decomposition coefficients d_j and the solved constants
TABLE3_DECOMPOSITIONS = {
    1: {1: 2},
    2: {2: 4},
    3: {3: 8, 2: -2},
    4: {4: 16, 3: -8},
    5: {5: 32, 4: -24, 3: 2},
    6: {6: 64, 5: -64, 4: 12},
    7: {7: 128, 6: -160, 5: 48, 4: -2},
}
TABLE3_SUMS = {
    1: "-1/2", 2: "-1/12", 3: "-1/24", 4: "-19/720",
    5: "-27/1440", 6: "-863/60480", 7: "-1375/120960",
}
# difference x/(1-x)^k - x/(1+x)^k as printed, numerator over (1-x^2)^k
TABLE3_DIFFERENCES = {
    1: "2*x^2/(1-x^2)",
    2: "4*x^2/(1-x^2)^2",
    3: "2*x^2*(x^2+3)/(1-x^2)^3",
    4: "8*x^2*(x^2+1)/(1-x^2)^4",
    5: "2*x^2*(x^4+10*x^2+5)/(1-x^2)^5",
    6: "4*x^2*(x^2+3)*(3*x^2+1)/(1-x^2)^6",
    7: "2*x^2*(x^6+21*x^4+35*x^2+7)/(1-x^2)^7",
}

# Table 4: every column (smoothed, asymptotic, Gregory) prints the same value
TABLE4_SUMS = TABLE3_SUMS
TABLE4_SUMS_REDUCED = {
    1: "-1/2", 2: "-1/12", 3: "-1/24", 4: "-19/720",
    5: "-3/160", 6: "-863/60480", 7: "-275/24192",
}
# printed generating-function column: x^(k-1)/(1-x)^k
TABLE4_GF_COLUMN_SHIFT = {k: k - 1 for k in range(1, 8)}

# Table 5: extended Gregory numerators over h_n^s; column j holds index j-1
TABLE5_NUMERATORS = {
    1: [1, -1, -1, -1, -19, -27, -863],
    2: [1, -1, -7, -13, -6911, -18453, -23419855],
    3: [1, -1, -37, -115, -1572859, -7346157, -347737791311],
    4: [1, -1, -175, -865, -292581071, -2315047233, -3980321414135551],
    5: [1, -1, -781, -5971, -48979036099, -215760166559 * 3, -40003092470353818383],
}
TABLE5_DENOMINATOR_BASES = [1, 2, 12, 24, 720, 1440, 60480]

# Gregory coefficients G_n, n = 0..6, and Hirzebruch numbers h_k, k = 0..6
GREGORY = ["1", "1/2", "-1/12", "1/24", "-19/720", "3/160", "-863/60480"]
HIRZEBRUCH = [1, 2, 12, 24, 720, 1440, 60480]

# first six Eulerian polynomials, ascending coefficients
EULERIAN = {
    0: [1],
    1: [1],
    2: [1, 1],
    3: [1, 4, 1],
    4: [1, 11, 11, 1],
    5: [1, 26, 66, 26, 1],
    6: [1, 57, 302, 302, 57, 1],
}

# gauge expansions: power of t -> coefficient
EXPANSIONS = {
    "x/(1-x)^2": {-2: "1", 0: "-1/12", 2: "1/240", 4: "-1/6048", 6: "1/172800"},
    "-4*x^2/(1-x^2)^2": {-2: "-1", 0: "1/3", 2: "-1/15", 4: "4/378", 6: "-4/2700"},
    "x/(1+x)^2": {0: "1/4", 2: "-1/16", 4: "1/96", 6: "-17/11520"},
    "x*(1+4*x+x^2)/(1-x)^4": {-4: "6", 0: "1/120", 2: "-1/504"},
    "16*x^2*(1+4*x^2+x^4)/(1-x^2)^4": {-4: "6", 0: "16/120", 2: "-8/63"},
    "x*(1-4*x+x^2)/(1+x)^4": {0: "-1/8", 2: "1/8", 4: "-17/384"},
}


def frac(text) -> Fraction:
    return Fraction(text)


# symbolic extended Gregory coefficients as functions of s, n = 0..5;
# each entry lists the printed forms (fraction form first, then simplified)
def _p(base: int, s: int) -> Fraction:
    return Fraction(base) ** s


EXTENDED_GREGORY_FORMS = {
    0: [lambda s: Fraction(1)],
    1: [lambda s: -1 / _p(2, s)],
    2: [
        lambda s: (_p(3, s) - _p(2, s) ** 2) / _p(2**2 * 3, s),
        lambda s: 1 / _p(2**2, s) - 1 / _p(3, s),
    ],
    3: [
        lambda s: ((2 * _p(2, s) ** 2 - _p(3, s)) * _p(4, s) - _p(2, s) ** 3 * _p(3, s)) / _p(2**3 * 3 * 4, s),
        lambda s: 2 / (_p(2, s) * _p(3, s)) - 1 / _p(2**3, s) - 1 / _p(4, s),
    ],
    4: [
        lambda s: (
            -_p(2, s) ** 4 * (_p(3, s) ** 2 - _p(5, s)) * _p(4, s)
            + 2 * _p(2, s) ** 3 * _p(3, s) ** 2 * _p(5, s)
            - 3 * _p(2, s) ** 2 * _p(3, s) * _p(4, s) * _p(5, s)
            + _p(3, s) ** 2 * _p(4, s) * _p(5, s)
        )
        / _p(2**4 * 3**2 * 4 * 5, s),
        lambda s: 1 / _p(2**4, s) - 3 / (_p(2**2, s) * _p(3, s)) + 2 / (_p(2, s) * _p(4, s)) + 1 / _p(3**2, s) - 1 / _p(5, s),
    ],
    5: [
        lambda s: (
            -_p(2, s) ** 5 * (_p(3, s) * _p(4, s) - 2 * _p(6, s)) * _p(3, s) * _p(5, s)
            + _p(2, s) ** 4 * (2 * _p(3, s) ** 2 - 3 * _p(5, s)) * _p(4, s) * _p(6, s)
            - 3 * _p(2, s) ** 3 * _p(3, s) ** 2 * _p(5, s) * _p(6, s)
            + 4 * _p(2, s) ** 2 * _p(3, s) * _p(4, s) * _p(5, s) * _p(6, s)
            - _p(3, s) ** 2 * _p(4, s) * _p(5, s) * _p(6, s)
        )
        / _p(2**5 * 3**2 * 4 * 5 * 6, s),
        lambda s: (
            -1 / _p(2**5, s)
            + 4 / (_p(2**3, s) * _p(3, s))
            - 3 / (_p(2**2, s) * _p(4, s))
            - 3 / (_p(2, s) * _p(3**2, s))
            + 2 / (_p(3, s) * _p(4, s))
            + 2 / (_p(2, s) * _p(5, s))
            - 1 / _p(6, s)
        ),
    ],
}
# the simplified n = 4 form as printed has +1/3^s where 1/(3^2)^s is meant
EXTENDED_GREGORY_G4_PRINTED = (
    lambda s: 1 / _p(2**4, s) - 3 / (_p(2**2, s) * _p(3, s)) + 2 / (_p(2, s) * _p(4, s)) + 1 / _p(3, s) - 1 / _p(5, s)
)
