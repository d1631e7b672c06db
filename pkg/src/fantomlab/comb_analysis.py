"""Window counts over the superposed combs of a fantom system.

A comb is the set of multiples of one prime. For a 0/1 sequence over
[1, L] we slide a window of length W across every offset and record how
far the window count can move (max - min). Cyclic scans wrap around the
period L; linear scans only use windows lying inside [1, L].
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .primal_core import PrimeBasis, check_guard, fantom_direct

CYCLIC = "cyclic"
LINEAR = "linear"


@dataclass(frozen=True)
class WindowSpreadReport:
    x: int
    W: int
    mode: str
    min_count: int
    max_count: int
    claim_bound: int | None
    scan: str

    @property
    def spread(self) -> int:
        return self.max_count - self.min_count

    @property
    def claim_holds(self) -> bool | None:
        if self.claim_bound is None:
            return None
        return self.spread <= self.claim_bound

    def to_dict(self) -> dict:
        d = asdict(self)
        d["spread"] = self.spread
        d["claim_holds"] = self.claim_holds
        return d


def window_counts(seq: np.ndarray, W: int, scan: str = CYCLIC) -> np.ndarray:
    """Counts of ones in every window of length W, one per start offset."""
    seq = np.asarray(seq, dtype=np.int64)
    n = len(seq)
    if not 1 <= W <= n:
        raise ValueError(f"window {W} outside [1, {n}]")
    if scan == CYCLIC:
        ext = np.concatenate([[0], np.cumsum(np.concatenate([seq, seq[: W - 1]]))])
        return ext[W : W + n] - ext[:n]
    if scan == LINEAR:
        pre = np.concatenate([[0], np.cumsum(seq)])
        return pre[W:] - pre[: n - W + 1]
    raise ValueError(f"unknown scan {scan!r}")


def spread_table(seq: np.ndarray, scan: str = CYCLIC) -> tuple[np.ndarray, np.ndarray]:
    """Minimum and maximum window count for every W in 1..n at once."""
    seq = np.asarray(seq)
    n = len(seq)
    dtype = np.int32 if n < 2**30 else np.int64
    pre = np.zeros(2 * n + 1, dtype=dtype)
    np.cumsum(np.concatenate([seq, seq]), out=pre[1:])
    mins = np.empty(n, dtype=np.int64)
    maxs = np.empty(n, dtype=np.int64)
    if scan not in (CYCLIC, LINEAR):
        raise ValueError(f"unknown scan {scan!r}")
    # row W of the view is pre[W : W + n]
    shifted = sliding_window_view(pre, n)
    big = np.iinfo(dtype).max
    rows = max(1, (1 << 22) // n) if scan == CYCLIC else 64
    for lo in range(1, n + 1, rows):
        hi = min(n + 1, lo + rows)
        if scan == CYCLIC:
            sums = shifted[lo:hi] - pre[None, :n]
            mins[lo - 1 : hi - 1] = sums.min(axis=1)
            maxs[lo - 1 : hi - 1] = sums.max(axis=1)
            continue
        # linear: offsets o <= n - W; a rectangle valid for every row of
        # the block plus a small ragged edge handled with a mask
        rect = n - hi + 2
        sums = shifted[lo:hi, :rect] - pre[None, :rect]
        edge = shifted[lo:hi, rect : n - lo + 1] - pre[None, rect : n - lo + 1]
        widths = np.arange(lo, hi)[:, None]
        outside = np.arange(rect, n - lo + 1)[None, :] > n - widths
        mins[lo - 1 : hi - 1] = np.minimum(
            sums.min(axis=1, initial=big), np.where(outside, big, edge).min(axis=1, initial=big)
        )
        maxs[lo - 1 : hi - 1] = np.maximum(
            sums.max(axis=1, initial=-1), np.where(outside, -1, edge).max(axis=1, initial=-1)
        )
    return mins, maxs


def comb(p: int, L_total: int) -> np.ndarray:
    """Teeth of the comb of p over positions 1..L_total."""
    seq = np.zeros(L_total, dtype=np.int64)
    seq[p - 1 :: p] = 1
    return seq


def tooth_spread(p: int, W: int, L_total: int, scan: str = CYCLIC) -> WindowSpreadReport:
    if not 1 <= W <= L_total or p > L_total:
        raise ValueError("need 1 <= W <= L_total and p <= L_total")
    c = window_counts(comb(p, L_total), W, scan)
    return WindowSpreadReport(0, W, f"single-comb {p}", int(c.min()), int(c.max()), 1, scan)


def unit_sequence(x: int) -> np.ndarray:
    """1 at position v in [1, L] iff v is a unit."""
    fs = fantom_direct(x)
    return np.roll(fs.indicator, -1).astype(np.int64)


def superposed_sequence(x: int, mode: str) -> np.ndarray:
    units = unit_sequence(x)
    if mode == "units":
        return units
    if mode == "canceled":
        return 1 - units
    raise ValueError(f"unknown mode {mode!r}")


def superposed_spread(x: int, W: int, mode: str = "canceled", scan: str = CYCLIC) -> WindowSpreadReport:
    check_guard(PrimeBasis.of(x).L)
    c = window_counts(superposed_sequence(x, mode), W, scan)
    return WindowSpreadReport(x, W, mode, int(c.min()), int(c.max()), x, scan)


def sum_comb_sequence(x: int, e: int) -> np.ndarray:
    """g(a) = 1 iff a and e - a (reduced into (0, L]) are both units, a in [1, L]."""
    if e % 2:
        raise ValueError(f"target must be even, got {e}")
    fs = fantom_direct(x)
    L = fs.basis.L
    a = np.arange(1, L + 1, dtype=np.int64)
    return (fs.indicator[a % L] & fs.indicator[(e - a) % L]).astype(np.int64)


def sum_comb_spread(x: int, e: int, W: int, scan: str = CYCLIC) -> WindowSpreadReport:
    check_guard(PrimeBasis.of(x).L)
    c = window_counts(sum_comb_sequence(x, e), W, scan)
    return WindowSpreadReport(x, W, f"sum-comb {e}", int(c.min()), int(c.max()), 2 * x, scan)


@dataclass
class CombAudit:
    """Aggregate of an exhaustive scan over every window length."""

    x: int
    mode: str
    scan: str
    bound: int
    windows: int
    violations: int
    worst_spread: int
    worst_W: int
    worst_target: int | None = None

    @property
    def holds(self) -> bool:
        return self.violations == 0


def audit_superposed(x: int, mode: str, scan: str = CYCLIC) -> CombAudit:
    check_guard(PrimeBasis.of(x).L)
    mins, maxs = spread_table(superposed_sequence(x, mode), scan)
    spreads = maxs - mins
    i = int(np.argmax(spreads))
    return CombAudit(x, mode, scan, x, len(spreads), int((spreads > x).sum()), int(spreads[i]), i + 1)


def _sum_comb_worker(args):
    x, targets, scan = args
    out = []
    for e in targets:
        mins, maxs = spread_table(sum_comb_sequence(x, e), scan)
        s = maxs - mins
        out.append((e, int((s > 2 * x).sum()), int(s.max()), int(np.argmax(s)) + 1))
    return out


def audit_sum_combs(x: int, scan: str = CYCLIC, targets=None, workers: int = 1) -> CombAudit:
    """Every even target e in (0, L] and every window length 1..L."""
    L = PrimeBasis.of(x).L
    check_guard(L)
    targets = list(range(2, L + 1, 2)) if targets is None else list(targets)
    chunks = [targets[i::workers] for i in range(workers)] if workers > 1 else [targets]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_sum_comb_worker, [(x, c, scan) for c in chunks]))
    else:
        parts = [_sum_comb_worker((x, targets, scan))]
    rows = sorted(r for part in parts for r in part)
    violations = sum(r[1] for r in rows)
    worst = max(rows, key=lambda r: (r[2], -r[0]))
    return CombAudit(
        x, "sum-comb", scan, 2 * x, len(rows) * L, violations, worst[2], worst[3], worst_target=worst[0]
    )
