"""Print C(p_x^2 + 1, x) for x = 2..X with exact and decimal values."""

import argparse

from fantomlab.bound_evaluator import crossover_scan, render


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--x-max", type=int, default=30)
    args = ap.parse_args()
    res = crossover_scan(args.x_max)
    print(f"{'x':>3} {'p_x':>5} {'e':>7} {'density':>10} {'C':>12}")
    for r in res.rows:
        mark = "  <- first C > 1" if r.x == res.first_x else ""
        print(f"{r.x:>3} {r.p_x:>5} {r.e:>7} {render(r.density):>10} {r.C_decimal:>12}{mark}")
    print(f"first crossover: x={res.first_x}, increasing from x={res.increasing_from}")


if __name__ == "__main__":
    main()
