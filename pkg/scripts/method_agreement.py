"""Tabulate every smoothed-sum method for both families and time them."""

import argparse
import time
from dataclasses import dataclass

from smoothsum.numbers import CACHE
from smoothsum.ramanujan import FAMILY_METHODS, smoothed_sum


@dataclass
class Config:
    k_max: int = 12
    cold: bool = False  # clear the number caches before each k


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--k-max", type=int, default=Config.k_max)
    p.add_argument("--cold", action="store_true")
    cfg = Config(**{k.replace("-", "_"): v for k, v in vars(p.parse_args()).items()})

    for family, methods in FAMILY_METHODS.items():
        print(f"{family}: " + ", ".join(methods))
        for k in range(1, cfg.k_max + 1):
            if cfg.cold:
                CACHE.clear()
            cells, timings = [], []
            for method in methods:
                t0 = time.perf_counter()
                cells.append(smoothed_sum(family, k, method=method).value)
                timings.append(time.perf_counter() - t0)
            agree = "ok" if len(set(cells)) == 1 else "DISAGREE"
            ms = " ".join(f"{1000 * t:6.1f}" for t in timings)
            print(f"  k={k:2d}  {str(cells[0]):>22}  {agree}  ms: {ms}")


if __name__ == "__main__":
    main()
