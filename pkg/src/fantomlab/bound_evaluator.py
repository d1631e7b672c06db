"""Exact-rational evaluation of the density and the lower bound C(e, x).

    C(e, x) = 1/2 * density(x) * (e / 2) - 1 - 2x + 2

At the canonical point e = p_x**2 + 1 the factor e / 2 is the place count
(p_x**2 + 1) / 2. All comparisons use Fraction; the decimal rendering is
for display only.
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass
from fractions import Fraction

from .primal_core import first_primes, nth_prime

HALF = Fraction(1, 2)


def density(x: int) -> Fraction:
    """prod over i = 2..x of (1 - 2/p_i)."""
    if x < 2:
        raise ValueError("density needs x >= 2")
    d = Fraction(1)
    for p in first_primes(x)[1:]:
        d *= Fraction(p - 2, p)
    return d


def render(q: Fraction, digits: int = 6) -> str:
    """Decimal with ``digits`` significant digits, computed from the exact value."""
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        v = decimal.Decimal(q.numerator) / decimal.Decimal(q.denominator)
    return format(v, "f")


@dataclass(frozen=True)
class BoundReport:
    x: int
    p_x: int
    e: int
    density: Fraction
    half_count: Fraction  # 1/2, ordered pairs counted twice
    places: Fraction  # e / 2
    summand_one: int  # -1
    variance: int  # -2x
    evenness: int  # +2
    C: Fraction

    @property
    def crossover(self) -> bool:
        return self.C > 1

    @property
    def C_decimal(self) -> str:
        return render(self.C)

    def to_dict(self) -> dict:
        return {
            "x": self.x,
            "p_x": self.p_x,
            "e": self.e,
            "density": self.density,
            "terms": {
                "half_count": self.half_count,
                "places": self.places,
                "summand_one": self.summand_one,
                "variance": self.variance,
                "evenness": self.evenness,
            },
            "C": self.C,
            "crossover": self.crossover,
        }


def c_of(e: int, x: int, dens: Fraction | None = None) -> BoundReport:
    if x < 2:
        raise ValueError("C needs x >= 2")
    if e % 2:
        raise ValueError(f"C is evaluated at even numbers, got {e}")
    d = density(x) if dens is None else dens
    places = Fraction(e, 2)
    C = HALF * d * places - 1 - 2 * x + 2
    return BoundReport(
        x=x, p_x=nth_prime(x), e=e, density=d, half_count=HALF, places=places,
        summand_one=-1, variance=-2 * x, evenness=2, C=C,
    )


def canonical_point(x: int) -> int:
    return nth_prime(x) ** 2 + 1


@dataclass
class CrossoverResult:
    x_max: int
    first_x: int | None
    rows: list[BoundReport]
    increasing_from: int | None  # start of the longest increasing suffix

    @property
    def first(self) -> BoundReport | None:
        if self.first_x is None:
            return None
        return self.rows[self.first_x - 2]


def crossover_scan(x_max: int) -> CrossoverResult:
    """C(p_x**2 + 1, x) for x = 2..x_max and the first x with C > 1."""
    if x_max < 2:
        raise ValueError("x_max must be >= 2")
    rows = []
    d = Fraction(1)
    primes = first_primes(x_max)
    for x in range(2, x_max + 1):
        p = primes[x - 1]
        d *= Fraction(p - 2, p)
        rows.append(c_of(p * p + 1, x, dens=d))
    first = next((r.x for r in rows if r.crossover), None)
    start = rows[-1].x
    for prev, cur in zip(reversed(rows[:-1]), reversed(rows)):
        if prev.C < cur.C:
            start = prev.x
        else:
            break
    return CrossoverResult(x_max, first, rows, start if len(rows) > 1 else None)


def c_sweep(x: int) -> list[BoundReport]:
    """C(e, x) for every even e in [p_x**2 + 1, p_{x+1}**2 - 1]."""
    p, q = first_primes(x + 1)[-2:]
    d = density(x)
    lo = p * p + 1
    return [c_of(e, x, dens=d) for e in range(lo, q * q, 2)]


def sweep_slope(x: int) -> Fraction:
    """C(e + 2, x) - C(e, x), constant in e."""
    return density(x) / 2
