"""Segmented sieving and the stringent Goldbach checks.

The stringent form at threshold p_x: every even e with p_x**2 < e < p_{x+1}**2
is q + r with primes q, r > p_x. The all-evens scan uses, for each e, the
largest prime P with P**2 < e, which is the strictest threshold at e.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from .bound_evaluator import c_of, density
from .primal_core import GuardError, first_primes, nth_prime, primorial

DEFAULT_MAX_SIEVE = 200_000_000
CACHE_MAGIC = b"FNTP"
CACHE_VERSION = 1
_HEADER = struct.Struct("<4sHQ")

_sieve_guard = {"max": DEFAULT_MAX_SIEVE}


def set_max_sieve(limit: int) -> None:
    if limit < 2:
        raise ValueError("max sieve must be at least 2")
    _sieve_guard["max"] = int(limit)


class PrimeTable:
    """Primality of every integer up to ``limit``; one flag per odd number."""

    def __init__(self, limit: int, odd_flags: np.ndarray):
        self.limit = int(limit)
        self.odd = odd_flags  # odd[i] <=> 2i + 1 is prime
        self.odd.setflags(write=False)

    def is_prime(self, n: int) -> bool:
        n = int(n)
        if n > self.limit or n < 0:
            raise ValueError(f"{n} is outside the sieved range [0, {self.limit}]")
        if n % 2 == 0:
            return n == 2
        return bool(self.odd[n >> 1])

    __contains__ = is_prime

    def mask(self, values: np.ndarray) -> np.ndarray:
        """Vectorized primality for an array of integers within range."""
        v = np.asarray(values, dtype=np.int64)
        out = np.zeros(v.shape, dtype=bool)
        odd = (v & 1) == 1
        out[odd] = self.odd[v[odd] >> 1]
        out[v == 2] = True
        return out

    def primes(self) -> np.ndarray:
        odd_primes = 2 * np.flatnonzero(self.odd) + 1
        if self.limit >= 2:
            return np.concatenate([[2], odd_primes]).astype(np.int64)
        return odd_primes.astype(np.int64)

    def __len__(self) -> int:
        return int(self.odd.sum()) + (1 if self.limit >= 2 else 0)

    # cache file: header (magic, version, limit) then one bit per odd number
    def save(self, path) -> None:
        with open(path, "wb") as fh:
            fh.write(_HEADER.pack(CACHE_MAGIC, CACHE_VERSION, self.limit))
            fh.write(np.packbits(self.odd, bitorder="little").tobytes())

    @classmethod
    def load(cls, path) -> "PrimeTable":
        data = Path(path).read_bytes()
        if len(data) < _HEADER.size:
            raise ValueError("prime cache is truncated")
        magic, version, limit = _HEADER.unpack_from(data)
        if magic != CACHE_MAGIC:
            raise ValueError("not a prime cache file")
        if version != CACHE_VERSION:
            raise ValueError(f"unsupported prime cache version {version}")
        n_odd = (limit + 1) // 2
        bits = np.frombuffer(data, dtype=np.uint8, offset=_HEADER.size)
        if len(bits) * 8 < n_odd:
            raise ValueError("prime cache is truncated")
        odd = np.unpackbits(bits, count=n_odd, bitorder="little").astype(bool)
        return cls(limit, odd)


def sieve(limit: int, segment: int = 1 << 22, cache: str | Path | None = None) -> PrimeTable:
    """Odd-only segmented sieve of Eratosthenes up to ``limit`` inclusive."""
    if limit < 2:
        raise ValueError("sieve limit must be >= 2")
    if limit > _sieve_guard["max"]:
        raise GuardError("sieve", limit, _sieve_guard["max"])
    if cache is not None and Path(cache).exists():
        table = PrimeTable.load(cache)
        if table.limit >= limit:
            return table if table.limit == limit else PrimeTable(limit, table.odd[: (limit + 1) // 2].copy())
    n_odd = (limit + 1) // 2  # odd numbers 1, 3, ..., <= limit
    odd = np.ones(n_odd, dtype=bool)
    odd[0] = False  # 1
    root = math.isqrt(limit)
    base = np.ones(root // 2 + 1, dtype=bool)
    base[0] = False
    for i in range(1, (math.isqrt(root) // 2) + 1):
        if base[i]:
            p = 2 * i + 1
            base[p * p // 2 :: p] = False
    base_primes = 2 * np.flatnonzero(base) + 1
    base_primes = base_primes[base_primes <= root]
    for lo in range(0, n_odd, segment):
        hi = min(n_odd, lo + segment)
        seg = odd[lo:hi]
        for p in base_primes.tolist():
            start = p * p // 2  # index of p*p
            if start >= hi:
                break
            if start < lo:
                # first odd multiple of p at or above 2*lo + 1
                first = -(-(2 * lo + 1) // p) * p
                if first % 2 == 0:
                    first += p
                start = first // 2
            seg[start - lo :: p] = False
    table = PrimeTable(limit, odd)
    if cache is not None:
        table.save(cache)
    return table


# ---------------------------------------------------------------------------
# prime window


@dataclass
class WindowReport:
    x: int
    lo: int  # p_x, exclusive
    hi: int  # p_{x+1}**2, exclusive
    units: int
    counterexamples: list = field(default_factory=list)
    next_composite_unit: int | None = None

    @property
    def passed(self) -> bool:
        return not self.counterexamples and self.next_composite_unit == self.hi


def unit_mask(values: np.ndarray, primes) -> np.ndarray:
    v = np.asarray(values, dtype=np.int64)
    m = np.ones(v.shape, dtype=bool)
    for p in primes:
        m &= v % p != 0
    return m


def prime_window_check(x: int, table: PrimeTable | None = None) -> WindowReport:
    """Units in (p_x, p_{x+1}**2) are exactly the primes there."""
    primes = first_primes(x + 1)
    p, q = primes[-2], primes[-1]
    hi = q * q
    table = table if table is not None and table.limit >= hi else sieve(hi)
    v = np.arange(p + 1, hi + 1, dtype=np.int64)
    units = unit_mask(v, primes[:-1])
    is_p = table.mask(v)
    inside = v < hi
    bad = v[inside & (units != is_p)]
    composite_units = v[units & ~is_p]
    return WindowReport(
        x=x, lo=p, hi=hi, units=int(units[inside].sum()),
        counterexamples=[int(b) for b in bad],
        next_composite_unit=int(composite_units[0]) if len(composite_units) else None,
    )


# ---------------------------------------------------------------------------
# unit pairs and the bound audit


def unit_pairs(e: int, x: int):
    """Unordered pairs (a, e - a), 2 <= a <= e/2, both coprime to L(p_x)."""
    if e % 2:
        raise ValueError(f"expected an even number, got {e}")
    L = primorial(x)
    return [(a, e - a) for a in range(2, e // 2 + 1)
            if math.gcd(a, L) == 1 and math.gcd(e - a, L) == 1]


def unit_pair_count(e: int, x: int) -> int:
    """Number of unit pairs; summand 1 is excluded."""
    return len(unit_pairs(e, x))


@dataclass(frozen=True)
class AuditRecord:
    e: int
    x: int
    empirical_pairs: int
    C_bound: Fraction

    @property
    def slack(self) -> Fraction:
        return self.empirical_pairs - self.C_bound


def bound_audit(x: int, evens=None) -> list[AuditRecord]:
    """Empirical unit-pair counts against C(e, x) over (p_x**2, p_{x+1}**2)."""
    if x < 2:
        raise ValueError("bound audit needs x >= 2")
    p, q = first_primes(x + 1)[-2:]
    evens = range(p * p + 1, q * q, 2) if evens is None else evens
    d = density(x)
    return [AuditRecord(e, x, unit_pair_count(e, x), c_of(e, x, dens=d).C) for e in evens]


# ---------------------------------------------------------------------------
# stringent checks


@dataclass(frozen=True)
class GoldbachWitness:
    e: int
    q: int
    r: int
    threshold: int

    @property
    def stringent(self) -> bool:
        return self.q > self.threshold and self.r > self.threshold


def min_witnesses(evens: np.ndarray, thresholds: np.ndarray, table: PrimeTable,
                  odd_primes: np.ndarray | None = None) -> np.ndarray:
    """Smallest prime q > threshold with e - q prime and q <= e - q; 0 if none."""
    evens = np.asarray(evens, dtype=np.int64)
    thresholds = np.asarray(thresholds, dtype=np.int64)
    out = np.zeros(len(evens), dtype=np.int64)
    if len(evens) == 0:
        return out
    if odd_primes is None:
        odd_primes = table.primes()
    lo = int(thresholds.min())
    cands = odd_primes[odd_primes > lo]
    open_idx = np.arange(len(evens))
    for q in cands.tolist():
        e = evens[open_idx]
        if 2 * q > int(e.max()):
            break
        ok = (q > thresholds[open_idx]) & (2 * q <= e)
        ok[ok] = table.mask(e[ok] - q)
        out[open_idx[ok]] = q
        open_idx = open_idx[~ok]
        if len(open_idx) == 0:
            break
    return out


def all_witnesses(e: int, threshold: int, table: PrimeTable) -> list[GoldbachWitness]:
    return [GoldbachWitness(e, q, e - q, threshold)
            for q in range(threshold + 1, e // 2 + 1) if table.is_prime(q) and table.is_prime(e - q)]


@dataclass
class StringentReport:
    x: int
    threshold: int
    lo: int
    hi: int
    evens: int
    witnesses: list[GoldbachWitness]
    violations: list[int]

    @property
    def passed(self) -> bool:
        return not self.violations


def stringent_check(x: int, table: PrimeTable | None = None) -> StringentReport:
    p, q = first_primes(x + 1)[-2:]
    lo, hi = p * p, q * q
    table = table if table is not None and table.limit >= hi else sieve(hi)
    evens = np.arange(lo + 2 - lo % 2, hi, 2, dtype=np.int64)
    qs = min_witnesses(evens, np.full(len(evens), p), table)
    wit = [GoldbachWitness(int(e), int(w), int(e - w), p) for e, w in zip(evens, qs) if w]
    bad = [int(e) for e, w in zip(evens, qs) if not w]
    return StringentReport(x, p, lo, hi, len(evens), wit, bad)


def strict_threshold(e: int) -> int:
    """Largest prime P with P**2 < e."""
    x = 1
    while nth_prime(x + 1) ** 2 < e:
        x += 1
    return nth_prime(x)


@dataclass
class ScanResult:
    e_max: int
    evens: int
    violations: list[int]
    max_min_q: int  # largest minimal witness seen
    max_min_q_at: int
    checksum: int  # sum of minimal witnesses, a cheap fingerprint

    @property
    def passed(self) -> bool:
        return not self.violations


_worker_table: PrimeTable | None = None


def _init_worker(limit: int, odd: np.ndarray) -> None:
    global _worker_table
    _worker_table = PrimeTable(limit, odd)


def _scan_chunk(bounds):
    lo, hi = bounds  # evens in [lo, hi)
    table = _worker_table
    evens = np.arange(lo, hi, 2, dtype=np.int64)
    roots = np.array([math.isqrt(int(e) - 1) for e in evens], dtype=np.int64)
    odd_primes = table.primes()
    # largest prime P with P*P < e, i.e. P <= isqrt(e - 1)
    pos = np.searchsorted(odd_primes, roots, side="right") - 1
    thresholds = odd_primes[pos]
    qs = min_witnesses(evens, thresholds, table, odd_primes)
    return evens, qs


def conjecture_scan(e_max: int, workers: int = 1, table: PrimeTable | None = None,
                    chunk: int = 50_000) -> ScanResult:
    """Every even 4 < e <= e_max against its strictest threshold."""
    global _worker_table
    if e_max < 6:
        return ScanResult(e_max, 0, [], 0, 0, 0)
    table = table if table is not None and table.limit >= e_max else sieve(e_max)
    bounds = [(lo, min(lo + chunk, e_max + 1)) for lo in range(6, e_max + 1, chunk)]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers, initializer=_init_worker,
                                 initargs=(table.limit, table.odd)) as pool:
            parts = list(pool.map(_scan_chunk, bounds))
    else:
        _worker_table = table
        parts = [_scan_chunk(b) for b in bounds]
    evens = np.concatenate([p[0] for p in parts])
    qs = np.concatenate([p[1] for p in parts])
    violations = [int(e) for e in evens[qs == 0]]
    i = int(np.argmax(qs))
    return ScanResult(e_max, len(evens), violations, int(qs[i]), int(evens[i]), int(qs.sum()))
