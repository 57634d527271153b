"""Regenerate the summary tables from the library."""

from __future__ import annotations

from fractions import Fraction

from .genfunc import RationalGF, figurate_difference_decompose, gf_sub, taylor_coeffs, twist
from .numbers import extended_gregory, gregory_coefficient, hirzebruch
from .ramanujan import (
    closed_power_sum,
    gauge_expand,
    intuitive_ledger,
)
from .records import Output, OutputRecord

P7_NOTE = (
    "numerator of x*P_7(x) corrected to end in +120x^5+x^6; "
    "the printed table ends in +120x^5+1"
)
TABLE4_NOTE = (
    "generating-function column uses x/(1-x)^k; the printed column "
    "x^(k-1)/(1-x)^k gives the opposite sign for odd k >= 3 and +1/2 at k = 1"
)


def table1(rows: int = 8, terms: int = 7) -> Output:
    """Smoothed sums of ``n**(k-1)`` for ``k-1 = 0..rows-1``."""
    out = Output("table 1")
    for km1 in range(rows):
        k = km1 + 1
        g = RationalGF.power_sum(k)
        seq = taylor_coeffs(g, terms + 1)[1:]
        rec = OutputRecord(
            index=f"k-1={km1}",
            value=closed_power_sum(k),
            fields={"sequence": seq, "generating_function": g.render()},
        )
        if km1 == 7:
            rec.footnote = P7_NOTE
        out.records.append(rec)
    out.footnotes.append("smoothed sum is (-1)^(k-1) B_k / k with B_1 = -1/2")
    return out


def table3(rows: int = 7) -> Output:
    out = Output("table 3")
    for k in range(1, rows + 1):
        g = RationalGF.figurate(k)
        ledger = intuitive_ledger("figurate", k)
        out.records.append(
            OutputRecord(
                index=f"k={k}",
                value=ledger.value,
                method="intuitive",
                fields={
                    "difference": gf_sub(g, twist(g)).render(),
                    "decomposition": figurate_difference_decompose(k).render(),
                    "abel": ledger.abel,
                    "a1": ledger.a1,
                    "a2": ledger.a2,
                },
                paper_den=hirzebruch(k),
            )
        )
    return out


def table4(rows: int = 7, terms: int = 7) -> Output:
    out = Output("table 4")
    known: dict[int, Fraction] = {}
    for k in range(1, rows + 1):
        g = RationalGF.figurate(k)
        value = intuitive_ledger("figurate", k, known).value
        known[k] = value
        seq = taylor_coeffs(g, terms + 1)[1:]
        asym = gauge_expand(g).constant
        greg = (-1) ** k * gregory_coefficient(k)
        h = hirzebruch(k)
        out.records.append(
            OutputRecord(
                index=f"k={k}",
                value=value,
                fields={
                    "sequence": seq,
                    "generating_function": g.render(),
                    "asymptotic": asym,
                    "gregory": greg,
                },
                paper_den=h,
            )
        )
    out.footnotes.append(TABLE4_NOTE)
    return out


def table5(s_max: int = 5, columns: int = 7) -> Output:
    """Extended Gregory coefficients; column ``j`` holds index ``j - 1``."""
    out = Output("table 5")
    for s in range(1, s_max + 1):
        for n in range(columns):
            out.records.append(
                OutputRecord(
                    index=f"s={s},n={n}",
                    value=extended_gregory(s, n),
                    paper_den=(hirzebruch(n), s),
                )
            )
    out.footnotes.append("denominators divide h_n^s; printed column j corresponds to n = j - 1")
    return out


TABLES = {"1": table1, "3": table3, "4": table4, "5": table5}
