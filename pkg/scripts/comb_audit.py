"""Exhaustive window-spread audits of the superposed and sum combs."""

import argparse
import os
import time

from fantomlab.comb_analysis import CYCLIC, LINEAR, audit_sum_combs, audit_superposed


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--x-max", type=int, default=5)
    ap.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    args = ap.parse_args()
    for x in range(1, args.x_max + 1):
        for scan in (CYCLIC, LINEAR):
            t = time.perf_counter()
            audits = [audit_superposed(x, "canceled", scan), audit_sum_combs(x, scan, workers=args.workers)]
            for a in audits:
                verdict = "holds" if a.holds else f"{a.violations} violations"
                print(f"x={x} {scan:<6} {a.mode:<8} bound={a.bound:<3} worst={a.worst_spread:<3} "
                      f"(W={a.worst_W}, e={a.worst_target}) {verdict}")
            print(f"  {time.perf_counter() - t:.2f}s")


if __name__ == "__main__":
    main()
