"""Representation-count tables RS(p_x) and PRS(p_x) and the claims about them.

Every sum of two summands is reduced mod L with its representative taken
in (0, L], so the class of 0 is keyed as the even number L. Sums of two
different summands are counted once per order.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

import numpy as np

from .ntt import cyclic_convolve
from .primal_core import (
    FantomSystem,
    PrimeBasis,
    check_guard,
    fantom_direct,
    fantom_recursive,
    primorial,
    unit_count,
)

RS = "RS"
PRS = "PRS"


@dataclass(frozen=True, eq=False)
class RepCountTable:
    basis: PrimeBasis
    kind: str
    evens: np.ndarray  # 2, 4, ..., L
    counts: np.ndarray  # r(e), aligned with evens

    @property
    def L(self) -> int:
        return self.basis.L

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    def __getitem__(self, e: int) -> int:
        e = int(e)
        if e % 2 or not 2 <= e <= self.L:
            raise KeyError(e)
        return int(self.counts[e // 2 - 1])

    def as_dict(self) -> dict[int, int]:
        return {int(e): int(c) for e, c in zip(self.evens, self.counts)}


def _table_from_classes(basis: PrimeBasis, kind: str, by_class: np.ndarray) -> RepCountTable:
    """Turn counts indexed by class k mod L into a table keyed by evens in (0, L]."""
    L = basis.L
    evens = np.arange(2, L + 1, 2, dtype=np.int64)
    counts = by_class[evens % L].astype(np.int64)
    odd_mass = int(by_class.sum()) - int(counts.sum())
    if odd_mass:
        raise AssertionError(f"{odd_mass} sums fell on odd classes")
    evens.setflags(write=False)
    counts.setflags(write=False)
    return RepCountTable(basis, kind, evens, counts)


def _indicator(L: int, members: np.ndarray) -> np.ndarray:
    ind = np.zeros(L, dtype=np.int64)
    np.add.at(ind, np.asarray(members, dtype=np.int64) % L, 1)
    return ind


def pair_sum_classes(left: np.ndarray, right: np.ndarray, L: int) -> np.ndarray:
    """Quadratic oracle: histogram of (a + b) mod L over ordered pairs."""
    out = np.zeros(L, dtype=np.int64)
    right = np.asarray(right, dtype=np.int64)
    for chunk in np.array_split(np.asarray(left, dtype=np.int64), max(1, len(left) // 256)):
        sums = (chunk[:, None] + right[None, :]) % L
        out += np.bincount(sums.ravel(), minlength=L)
    return out


def rs_table(x: int, method: str = "ntt", system: FantomSystem | None = None) -> RepCountTable:
    """r(e) for every even e in [2, L(p_x)] over ordered unit pairs.

    ``method="pairs"`` enumerates all ordered pairs instead of convolving;
    it is the oracle for small x.
    """
    fs = system if system is not None else fantom_direct(x)
    L = fs.basis.L
    if method == "ntt":
        by_class = cyclic_convolve(fs.indicator.astype(np.int64))
    elif method == "pairs":
        by_class = pair_sum_classes(fs.residues, fs.residues, L)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _table_from_classes(fs.basis, RS, by_class)


def rs_count_crt(e: int, primes) -> int:
    """Closed form of r(e) from the Chinese remainder theorem.

    Mod each p there are p - 1 ordered unit pairs summing to 0 and p - 2
    summing to any nonzero class, and the counts multiply across primes.
    """
    return math.prod((p - 1) if e % p == 0 else (p - 2) for p in primes)


def prs_table(x: int, method: str = "ntt") -> RepCountTable:
    """Counts over ordered pairs of presystem PF(p_x) elements, mod L(p_x)."""
    if x < 2:
        raise ValueError("PRS needs x >= 2")
    step = fantom_recursive(x)
    basis = step.system.basis
    L = basis.L
    if method == "ntt":
        by_class = cyclic_convolve(_indicator(L, step.presystem))
    elif method == "pairs":
        by_class = pair_sum_classes(step.presystem, step.presystem, L)
    elif method == "lift":
        return prs_by_lifting(x)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _table_from_classes(basis, PRS, by_class)


def _reduce_even(e: np.ndarray | int, L: int):
    """Representative of e mod L in (0, L]."""
    return (np.asarray(e) - 1) % L + 1


def prs_by_lifting(x: int, rs_prev: RepCountTable | None = None) -> RepCountTable:
    """PRS(p_x) from p_x * r_RS(x-1)(e mod L(p_{x-1}))."""
    prev = rs_prev if rs_prev is not None else rs_table(x - 1)
    basis = PrimeBasis.of(x)
    check_guard(basis.L)
    evens = np.arange(2, basis.L + 1, 2, dtype=np.int64)
    idx = _reduce_even(evens, prev.L) // 2 - 1
    counts = basis.p_x * prev.counts[idx]
    evens.setflags(write=False)
    counts.setflags(write=False)
    return RepCountTable(basis, PRS, evens, counts)


# ---------------------------------------------------------------------------
# checks


@dataclass
class CheckResult:
    claim: str
    passed: bool
    params: dict
    evidence: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)


def verify_symmetry(table: RepCountTable) -> CheckResult:
    """r(e) = r(L - e) for evens in [2, L - 2], and r(L) = A(p_x)."""
    L = table.L
    inner = table.counts[:-1]
    mirrored = inner[::-1]
    bad = [int(table.evens[i]) for i in np.flatnonzero(inner != mirrored)]
    violations: list = [(e, L - e) for e in bad if 2 * e <= L]
    center_ok = table[L] == table.basis.A
    if not center_ok:
        violations.append(("r(L)", table[L], table.basis.A))
    n_keys = len(table.evens)
    pairs = (n_keys - 1) // 2
    has_mid = (n_keys - 1) % 2 == 1
    desc = f"{n_keys} even keys, {pairs} mirror pairs"
    if has_mid:
        desc += ", 1 self-mirrored"
    desc += " + center"
    return CheckResult(
        claim="rs.symmetry",
        passed=not violations,
        params={"x": table.basis.x},
        evidence={"keys": desc, "r_L": table[L], "A": table.basis.A},
        violations=violations,
    )


def min_bound(x: int) -> int:
    """prod over i = 2..x of (p_i - 2)."""
    return math.prod(p - 2 for p in PrimeBasis.of(x).primes[1:])


def min_rep_check(x: int, table: RepCountTable | None = None) -> CheckResult:
    t = table if table is not None else rs_table(x)
    i = int(np.argmin(t.counts))
    observed = int(t.counts[i])
    bound = min_bound(x)
    return CheckResult(
        claim="rs.min_count",
        passed=observed >= bound,
        params={"x": x},
        evidence={"observed_min": observed, "argmin": int(t.evens[i]), "bound": bound},
    )


def balance_identity(x: int) -> tuple[int, int]:
    """Both sides of A(p_x)^2 = A_prev^2 p^2 - 2 p A_prev^2 + A_prev^2."""
    A_prev = unit_count(x - 1)
    p = PrimeBasis.of(x).p_x
    lhs = unit_count(x) ** 2
    rhs = A_prev**2 * p**2 - 2 * p * A_prev**2 + A_prev**2
    return lhs, rhs


def balance_check(x: int, rs: RepCountTable | None = None, prs: RepCountTable | None = None,
                  with_tables: bool = True) -> CheckResult:
    if x < 2:
        raise ValueError("balance needs x >= 2")
    lhs, rhs = balance_identity(x)
    ev = {"A_x_sq": lhs, "identity_rhs": rhs}
    ok = lhs == rhs
    if with_tables:
        rs = rs if rs is not None else rs_table(x)
        prs = prs if prs is not None else prs_table(x)
        A_prev = unit_count(x - 1)
        p = rs.basis.p_x
        ev["rs_total"] = rs.total
        ev["prs_total"] = prs.total
        ev["prs_expected"] = A_prev**2 * p**2
        ok = ok and rs.total == lhs and prs.total == A_prev**2 * p**2
    return CheckResult(claim="sums.balance", passed=ok, params={"x": x}, evidence=ev)


def lifting_check(x: int, prs: RepCountTable | None = None) -> CheckResult:
    direct = prs if prs is not None else prs_table(x)
    lifted = prs_by_lifting(x)
    bad = np.flatnonzero(direct.counts != lifted.counts)
    return CheckResult(
        claim="prs.lifting",
        passed=len(bad) == 0,
        params={"x": x},
        evidence={"keys": len(direct.evens)},
        violations=[int(direct.evens[i]) for i in bad],
    )


@dataclass(frozen=True, eq=False)
class EpsilonLedger:
    x: int
    canceling: tuple[int, ...]
    evens: np.ndarray
    prs_count: np.ndarray
    rs_count: np.ndarray
    touching: np.ndarray  # ordered pairs (k, b), k in K, b in PF
    epsilon: np.ndarray  # ordered pairs in K x K

    @property
    def reduction(self) -> np.ndarray:
        return self.prs_count - self.rs_count

    @property
    def epsilon_total(self) -> int:
        return int(self.epsilon.sum())

    def placements(self) -> dict[int, int]:
        return {int(e): int(c) for e, c in zip(self.evens, self.epsilon) if c}

    def row(self, e: int) -> dict:
        i = int(e) // 2 - 1
        return {
            "prs_count": int(self.prs_count[i]),
            "rs_count": int(self.rs_count[i]),
            "reduction": int(self.reduction[i]),
            "epsilon": int(self.epsilon[i]),
        }


def epsilon_ledger(x: int) -> EpsilonLedger:
    """Bookkeeping of the transition PRS(p_x) -> RS(p_x).

    A pair is canceled when it touches K; inclusion-exclusion gives
    reduction(e) = 2 * touching(e) - epsilon(e), which is checked by
    :func:`ledger_check` against the difference of the two tables.
    """
    if x < 2:
        raise ValueError("epsilon ledger needs x >= 2")
    step = fantom_recursive(x)
    L = step.system.basis.L
    K = _indicator(L, step.canceling)
    PF = _indicator(L, step.presystem)
    rs = rs_table(x, system=step.system)
    prs = _table_from_classes(step.system.basis, PRS, cyclic_convolve(PF))
    evens = rs.evens
    touching = cyclic_convolve(K, PF)[evens % L]
    eps = cyclic_convolve(K)[evens % L]
    return EpsilonLedger(
        x=x,
        canceling=tuple(int(k) for k in step.canceling),
        evens=evens,
        prs_count=prs.counts,
        rs_count=rs.counts,
        touching=touching,
        epsilon=eps,
    )


def ledger_check(led: EpsilonLedger) -> CheckResult:
    A_prev = unit_count(led.x - 1)
    p = PrimeBasis.of(led.x).p_x
    red = led.reduction
    bad = np.flatnonzero(red != 2 * led.touching - led.epsilon)
    violations = [int(led.evens[i]) for i in bad]
    if (red < 0).any():
        violations += [("negative", int(e)) for e in led.evens[red < 0]]
    ok = (
        not violations
        and led.epsilon_total == A_prev**2
        and int(red.sum()) == 2 * p * A_prev**2 - A_prev**2
    )
    return CheckResult(
        claim="sums.epsilon",
        passed=ok,
        params={"x": led.x},
        evidence={
            "canceling": list(led.canceling) if len(led.canceling) <= 16 else len(led.canceling),
            "epsilon_total": led.epsilon_total,
            "A_prev_sq": A_prev**2,
            "reduction_total": int(red.sum()),
            "placements": led.placements() if led.x <= 3 else len(led.placements()),
        },
        violations=violations,
    )


def induction_check(x: int, rs: RepCountTable | None = None,
                    rs_prev: RepCountTable | None = None) -> CheckResult:
    """r_x(e) >= (p_x - 2) * r_{x-1}(e mod L(p_{x-1})) for every even e."""
    if x < 2:
        raise ValueError("induction needs x >= 2")
    rs = rs if rs is not None else rs_table(x)
    rs_prev = rs_prev if rs_prev is not None else rs_table(x - 1)
    p = rs.basis.p_x
    idx = _reduce_even(rs.evens, rs_prev.L) // 2 - 1
    floor = (p - 2) * rs_prev.counts[idx]
    margin = rs.counts - floor
    bad = np.flatnonzero(margin < 0)
    tight = int((margin == 0).sum())
    return CheckResult(
        claim="rs.induction",
        passed=len(bad) == 0,
        params={"x": x},
        evidence={"keys": len(rs.evens), "equalities": tight, "min_margin": int(margin.min())},
        violations=[int(rs.evens[i]) for i in bad],
    )


def block_audit(x: int, led: EpsilonLedger | None = None) -> CheckResult:
    """Per block of L(p_{x-1}) consecutive numbers, the canceled and remaining mass.

    Two readings are audited: the block sum of reductions against
    2 * A_prev^2 (sum-of-counts), and each even's reduction against
    2 * r_{x-1}(e mod L_prev) (per-even).
    """
    led = led if led is not None else epsilon_ledger(x)
    A_prev = unit_count(x - 1)
    L_prev = primorial(x - 1)
    p = PrimeBasis.of(x).p_x
    per_block = L_prev // 2
    red = led.reduction.reshape(p, per_block)
    rem = led.rs_count.reshape(p, per_block)
    cap = 2 * A_prev**2
    floor = (p - 2) * A_prev**2
    rs_prev = rs_table(x - 1)
    per_even_cap = 2 * np.tile(rs_prev.counts, p)
    blocks = []
    violations = []
    for b in range(p):
        lo = b * L_prev + 2
        hi = (b + 1) * L_prev
        r_sum = int(red[b].sum())
        rem_sum = int(rem[b].sum())
        blocks.append({"block": [lo, hi], "reduction": r_sum, "remaining": rem_sum})
        if r_sum > cap:
            violations.append({"block": [lo, hi], "reduction": r_sum, "cap": cap})
        if rem_sum < floor:
            violations.append({"block": [lo, hi], "remaining": rem_sum, "floor": floor})
    per_even_bad = np.flatnonzero(led.reduction > per_even_cap)
    return CheckResult(
        claim="sums.blocks",
        passed=not violations,
        params={"x": x},
        evidence={
            "cap": cap,
            "floor": floor,
            "max_block_reduction": int(red.sum(axis=1).max()),
            "min_block_remaining": int(rem.sum(axis=1).min()),
            "per_even_violations": len(per_even_bad),
            "per_even_min_margin": int((per_even_cap - led.reduction).min()),
            "blocks": blocks if p <= 7 else len(blocks),
        },
        violations=violations,
    )


# ---------------------------------------------------------------------------
# grids


def grid_rows(x: int, kind: str = PRS):
    """Summands, canceled set and the addition table of even representatives."""
    if kind == PRS:
        if x < 2:
            raise ValueError("PRS grid needs x >= 2")
        step = fantom_recursive(x)
        summands = np.sort(step.presystem)
        canceled = set(int(k) for k in step.canceling)
        L = step.system.basis.L
    elif kind == RS:
        fs = fantom_direct(x)
        summands = fs.residues
        canceled = set()
        L = fs.basis.L
    else:
        raise ValueError(f"unknown kind {kind!r}")
    check_guard(len(summands) ** 2, "grid")
    s = summands.astype(np.int64)
    cells = _reduce_even(s[:, None] + s[None, :], L)
    return [int(v) for v in s], canceled, cells


def export_grid(x: int, kind: str = PRS, fmt: str = "text") -> str:
    summands, canceled, cells = grid_rows(x, kind)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["summand", *summands, "flag"])
        for i, a in enumerate(summands):
            flag = ""
            if a in canceled:
                hits = [str(b) for b in summands if b in canceled]
                flag = "K;X:" + " ".join(hits)
            w.writerow([a, *(int(c) for c in cells[i]), flag])
        return buf.getvalue()
    if fmt != "text":
        raise ValueError(f"unknown grid format {fmt!r}")
    width = max(len(str(int(cells.max()))), len(str(summands[-1]))) + 2
    head = "".ljust(width) + "|" + "".join(
        (f"{b}*" if b in canceled else str(b)).rjust(width) for b in summands
    )
    lines = [f"{kind}({PrimeBasis.of(x).p_x}) L={PrimeBasis.of(x).L}", head, "-" * len(head)]
    for i, a in enumerate(summands):
        row = []
        for j, b in enumerate(summands):
            c = str(int(cells[i, j]))
            if a in canceled and b in canceled:
                c = f"[{c}]"
            elif a in canceled or b in canceled:
                c = f"{c}x"
            row.append(c.rjust(width))
        label = f"{a}*" if a in canceled else str(a)
        lines.append(label.ljust(width) + "|" + "".join(row) + ("  K" if a in canceled else ""))
    lines.append("* canceling summand; x canceled sum; [ ] intersection of two canceling summands")
    return "\n".join(lines) + "\n"
