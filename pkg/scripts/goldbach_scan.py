"""Minimal Goldbach witnesses for every even number up to --max."""

import argparse
import os
import time

from fantomlab.goldbach_verifier import conjecture_scan, sieve


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max", type=int, default=10**7)
    ap.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--prime-cache", default=None)
    args = ap.parse_args()
    t = time.perf_counter()
    table = sieve(args.max, cache=args.prime_cache)
    print(f"sieve to {args.max}: {len(table)} primes in {time.perf_counter() - t:.2f}s")
    t = time.perf_counter()
    res = conjecture_scan(args.max, workers=args.workers, table=table)
    print(f"{res.evens} evens, {len(res.violations)} violations, "
          f"largest minimal witness {res.max_min_q} at {res.max_min_q_at}, "
          f"checksum {res.checksum} ({time.perf_counter() - t:.2f}s)")


if __name__ == "__main__":
    main()
