"""Print the smoothed sum of x^m/(1-x)^k as a polynomial in m, with its
reflection check and the values at integer m."""

import argparse
from dataclasses import dataclass
from fractions import Fraction

from smoothsum.genfunc import RationalGF
from smoothsum.ramanujan import gauge_expand, shift_constant_poly
from smoothsum.series import Polynomial


@dataclass
class Config:
    k_max: int = 6
    m_max: int = 4


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--k-max", type=int, default=Config.k_max)
    p.add_argument("--m-max", type=int, default=Config.m_max)
    args = p.parse_args()
    cfg = Config(args.k_max, args.m_max)

    for k in range(1, cfg.k_max + 1):
        poly = shift_constant_poly(k)
        reflected = poly.compose(Polynomial([k, -1])) * (-1) ** k
        print(f"k={k}: {poly.render('m')}   reflection {'holds' if reflected == poly else 'FAILS'}")
        row = []
        for m in range(cfg.m_max + 1):
            value = poly(Fraction(m))
            check = gauge_expand(RationalGF.figurate(k, m)).constant
            row.append(f"m={m}: {value}" + ("" if value == check else " (!)"))
        print("    " + ", ".join(row))


if __name__ == "__main__":
    main()
