"""Command-line front end: ``fantomlab <subcommand> [options]``.

Exit status: 0 when every claim is verified or passes its audit, 2 when any
claim is violated or fails its audit, 1 on usage or resource errors.
"""

from __future__ import annotations

import argparse
import dataclasses
import os
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import bound_evaluator as be
from . import comb_analysis as ca
from . import goldbach_verifier as gv
from . import primal_core as pc
from . import sum_systems as ss
from .reports import ClaimReport, audit, emit, exit_status, theorem

ENV_WORKERS = "FANTOMLAB_WORKERS"
COMMANDS = (
    "fantom", "rs", "prs", "epsilon", "induction", "blocks", "combs", "bound",
    "crossover", "window", "stringent", "scan", "audit", "grid", "all",
)
# listings and tables are spelled out in full up to this many entries
INLINE_LIMIT = 64


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    x: int | None = None
    x_max: int | None = None
    e: int | None = None
    w: int | None = None
    max: int | None = None
    kind: str = "PRS"
    scan_mode: str = "both"
    grid_format: str = "text"
    grid_output: str | None = None
    format: str = "text"
    output: str | None = None
    workers: int = 1
    max_L: int = pc.DEFAULT_MAX_L
    max_sieve: int = gv.DEFAULT_MAX_SIEVE
    prime_cache: str | None = None
    timing: bool = False
    inject_fault: bool = False

    def validate(self) -> None:
        if self.max_L < 2 or self.max_sieve < 2:
            raise UsageError("usage error: guard limits must be positive (>= 2)")
        if self.workers < 1:
            raise UsageError("usage error: worker count must be >= 1")
        for name in ("x", "x_max", "w", "max"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise UsageError(f"usage error: --{name.replace('_', '-')} must be >= 1")
        if self.e is not None and self.e % 2:
            raise UsageError(f"odd input: --e must be an even number, got {self.e}")


_FIELDS = {f.name: f for f in dataclasses.fields(RunConfig)}
_INT_KEYS = {"x", "x_max", "e", "w", "max", "workers", "max_L", "max_sieve"}
_BOOL_KEYS = {"timing", "inject_fault"}


def read_config_file(path: str) -> dict:
    """Flat ``key = value`` lines; ``#`` starts a comment."""
    out = {}
    try:
        with open(path) as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise UsageError(f"usage error: cannot read config file {path}: {exc.strerror}") from exc
    for n, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"usage error: {path}:{n}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key == "max_l":
            key = "max_L"
        if key not in _FIELDS or key == "command":
            raise UsageError(f"usage error: {path}:{n}: unknown config key {key!r}")
        if key in _INT_KEYS:
            try:
                out[key] = int(value.replace("_", ""))
            except ValueError:
                raise UsageError(f"usage error: {path}:{n}: {key} needs an integer") from None
        elif key in _BOOL_KEYS:
            out[key] = value.lower() in ("1", "true", "yes", "on")
        else:
            out[key] = value
    return out


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"usage error: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    g = common.add_argument_group("common options")
    g.add_argument("--format", choices=("json", "csv", "text"), default=None,
                   help="report format (default text)")
    g.add_argument("--output", default=None, help="write reports to this path")
    g.add_argument("--workers", type=int, default=None,
                   help=f"worker processes (env {ENV_WORKERS}, default: CPU count)")
    g.add_argument("--max-L", dest="max_L", type=int, default=None,
                   help=f"largest primorial materialized (default {pc.DEFAULT_MAX_L})")
    g.add_argument("--max-sieve", type=int, default=None,
                   help=f"largest sieve limit (default {gv.DEFAULT_MAX_SIEVE})")
    g.add_argument("--prime-cache", default=None, help="prime cache file to read or create")
    g.add_argument("--config", default=None, help="flat key=value config file")
    g.add_argument("--timing", action="store_true", default=None,
                   help="add wall-clock timings (output is then not byte-stable)")
    g.add_argument("--inject-fault", action="store_true", default=None, help=argparse.SUPPRESS)

    parser = _Parser(prog="fantomlab", description="Fantom residue systems and Goldbach checks.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, help_, *flags):
        p = sub.add_parser(name, parents=[common], help=help_)
        for flag in flags:
            if flag == "x":
                p.add_argument("--x", type=int, default=None, help="prime index (p_1 = 2)")
            elif flag == "x_max":
                p.add_argument("--x-max", type=int, default=None)
            elif flag == "e":
                p.add_argument("--e", type=int, default=None, help="even target")
            elif flag == "w":
                p.add_argument("--w", type=int, default=None, help="window length")
            elif flag == "max":
                p.add_argument("--max", type=int, default=None, help="upper limit")
            elif flag == "kind":
                p.add_argument("--kind", choices=("RS", "PRS"), default=None)
            elif flag == "scan":
                p.add_argument("--scan-mode", choices=("cyclic", "linear", "both"), default=None)
            elif flag == "grid":
                p.add_argument("--grid-format", choices=("text", "csv"), default=None)
                p.add_argument("--grid-output", default=None)
        return p

    add("fantom", "list F(p_x) and check its construction", "x")
    add("rs", "RS(p_x) representation counts", "x")
    add("prs", "PRS(p_x) counts and the lifting identity", "x")
    add("epsilon", "epsilon ledger of PRS -> RS", "x")
    add("induction", "per-even induction inequality", "x")
    add("blocks", "per-block cancellation audit", "x")
    add("combs", "comb window spreads", "x", "w", "e", "scan")
    add("bound", "evaluate C(e, x) exactly", "x", "e")
    add("crossover", "first x with C(p_x^2 + 1, x) > 1", "x_max")
    add("window", "units in (p_x, p_{x+1}^2) are primes", "x")
    add("stringent", "stringent Goldbach form per window", "x", "max")
    add("scan", "stringent form for every even up to --max", "max")
    add("audit", "empirical unit pairs against C", "x", "e")
    add("grid", "export an addition grid", "x", "kind", "grid")
    add("all", "full battery up to --x", "x")
    return parser


def default_workers() -> int:
    return os.cpu_count() or 1


def make_config(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    values: dict = {}
    if ns.config:
        values.update(read_config_file(ns.config))
    env = os.environ.get(ENV_WORKERS)
    if env is not None:
        try:
            values["workers"] = int(env)
        except ValueError:
            raise UsageError(f"usage error: {ENV_WORKERS} must be an integer, got {env!r}") from None
    for key, value in vars(ns).items():
        if key in _FIELDS and value is not None:
            values[key] = value
    values.setdefault("workers", default_workers())
    cfg = RunConfig(**values)
    cfg.validate()
    return cfg


# ---------------------------------------------------------------------------
# subcommands; each returns (payload text or None, reports)


def _need_x(cfg: RunConfig, minimum: int = 1, default: int | None = None) -> int:
    x = cfg.x if cfg.x is not None else default
    if x is None:
        raise UsageError(f"usage error: {cfg.command} needs --x")
    if x < minimum:
        raise UsageError(f"usage error: {cfg.command} needs --x >= {minimum}")
    return x


def _inline(values):
    values = [int(v) for v in values]
    return values if len(values) <= INLINE_LIMIT else {"count": len(values)}


def cmd_fantom(cfg: RunConfig, x: int):
    direct = pc.fantom_direct(x)
    residues = direct.residues
    if cfg.inject_fault:
        residues = residues[1:]
    step = pc.fantom_recursive(x)
    L, A = direct.basis.L, direct.basis.A
    params = {"x": x, "p_x": direct.basis.p_x}
    reports = [
        theorem("fantom.construction", np.array_equal(residues, step.system.residues), params,
                {"L": L, "A": A, "residues": _inline(residues)}),
    ]
    A_prev = pc.unit_count(x - 1) if x > 1 else 1
    reports.append(theorem(
        "fantom.unit_count",
        len(residues) == A == (direct.basis.p_x - 1) * A_prev,
        params, {"count": len(residues), "A": A},
    ))
    res_set = np.zeros(L + 1, dtype=bool)
    res_set[residues] = True
    mirror_ok = bool(np.all(res_set[L - residues])) and res_set[1] and not res_set[L]
    reports.append(theorem("fantom.symmetry", mirror_ok, params, {"residues": len(residues)}))
    if x > 1:
        pf = np.sort(step.presystem)
        cancel = np.setdiff1d(pf, step.system.residues)
        ok = np.array_equal(cancel, step.canceling) and len(step.canceling) == A_prev
        reports.append(theorem("fantom.presystem", ok, params, {
            "presystem": _inline(pf), "canceling": _inline(step.canceling)}))
    mults = direct.residues if A <= 4096 else direct.residues[:256]
    bad = [int(m) for m in mults
           if not np.array_equal(np.sort(m * direct.residues % L), direct.residues)]
    ev = {"multipliers_checked": len(mults), "of": A, "failures": bad}
    if x == 3:
        ev["times_7"] = pc.multiply_residues(3, 7, direct).residue_parts
    reports.append(theorem("fantom.permutation", not bad, params, ev))
    payload = " ".join(str(int(r)) for r in residues)
    return payload, reports


def _faulty(table: ss.RepCountTable) -> ss.RepCountTable:
    counts = table.counts.copy()
    counts[0] += 1
    return ss.RepCountTable(table.basis, table.kind, table.evens, counts)


def _as_report(res: ss.CheckResult, kind=theorem) -> ClaimReport:
    ev = dict(res.evidence)
    if res.violations:
        ev["violations"] = res.violations[:INLINE_LIMIT]
        ev["violation_count"] = len(res.violations)
    return kind(res.claim, res.passed, res.params, ev)


def cmd_rs(cfg: RunConfig, x: int):
    table = ss.rs_table(x)
    if cfg.inject_fault:
        table = _faulty(table)
    params = {"x": x}
    crt = np.array([ss.rs_count_crt(int(e), table.basis.primes) for e in table.evens])
    ok = np.array_equal(table.counts, crt)
    ev = {"keys": len(table.evens), "total": table.total, "closed_form_agrees": bool(ok)}
    if x <= 4:
        oracle = ss.rs_table(x, method="pairs")
        same = np.array_equal(oracle.counts, table.counts)
        ev["pair_oracle_agrees"] = bool(same)
        ok = ok and same
    if len(table.evens) <= INLINE_LIMIT:
        ev["table"] = table.as_dict()
    reports = [
        theorem("rs.table", ok, params, ev),
        _as_report(ss.verify_symmetry(table)),
        _as_report(ss.min_rep_check(x, table)),
    ]
    if x >= 2:
        reports.append(_as_report(ss.balance_check(x, rs=table)))
    payload = " ".join(f"{e}:{c}" for e, c in table.as_dict().items()) if x <= 4 else None
    return payload, reports


def cmd_prs(cfg: RunConfig, x: int):
    x = max(x, 2)
    prs = ss.prs_table(x)
    if cfg.inject_fault:
        prs = _faulty(prs)
    res = ss.lifting_check(x, prs)
    res.evidence.update({"total": prs.total, "r_2": prs[2], "r_L": prs[prs.L]})
    if len(prs.evens) <= INLINE_LIMIT:
        res.evidence["table"] = prs.as_dict()
    reports = [_as_report(res), _as_report(ss.balance_check(x, prs=prs))]
    payload = " ".join(f"{e}:{c}" for e, c in prs.as_dict().items()) if x <= 4 else None
    return payload, reports


def cmd_epsilon(cfg: RunConfig, x: int):
    x = max(x, 2)
    led = ss.epsilon_ledger(x)
    if cfg.inject_fault:
        led = dataclasses.replace(led, epsilon=led.epsilon + (np.arange(len(led.epsilon)) == 0))
    return None, [_as_report(ss.ledger_check(led))]


def cmd_induction(cfg: RunConfig, x: int):
    x = max(x, 2)
    rs = ss.rs_table(x)
    if cfg.inject_fault:
        rs = ss.RepCountTable(rs.basis, rs.kind, rs.evens, rs.counts - 1)
    return None, [_as_report(ss.induction_check(x, rs=rs))]


def cmd_blocks(cfg: RunConfig, x: int):
    x = max(x, 2)
    return None, [_as_report(ss.block_audit(x), kind=audit)]


def _single_comb_report(x: int) -> ClaimReport:
    L = pc.primorial(x)
    checked, bad = 0, []
    for p in pc.first_primes(x):
        mins, maxs = ca.spread_table(ca.comb(p, L))
        spread = maxs - mins
        widths = np.arange(1, L + 1)
        expect_zero = widths % p == 0
        wrong = (spread > 1) | ((spread == 0) != expect_zero)
        checked += L
        bad += [(p, int(w)) for w in widths[wrong]]
    return theorem("comb.single", not bad, {"x": x, "L": L},
                   {"windows": checked, "violations": bad[:INLINE_LIMIT]})


def _comb_audit_report(a: ca.CombAudit) -> ClaimReport:
    claim = "comb.sum" if a.mode == "sum-comb" else "comb.superposed"
    params = {"x": a.x, "mode": a.mode, "scan": a.scan}
    ev = {"bound": a.bound, "scanned": a.windows, "violations": a.violations,
          "worst_spread": a.worst_spread, "worst_W": a.worst_W}
    if a.worst_target is not None:
        ev["worst_target"] = a.worst_target
    return audit(claim, a.holds, params, ev)


def cmd_combs(cfg: RunConfig, x: int):
    L = pc.primorial(x)
    pc.check_guard(L)
    scans = ("cyclic", "linear") if cfg.scan_mode == "both" else (cfg.scan_mode,)
    reports = []
    if cfg.w is not None:
        if cfg.w > L:
            raise UsageError(f"usage error: --w must be <= L = {L}")
        for scan in scans:
            for mode in ("canceled", "units"):
                r = ca.superposed_spread(x, cfg.w, mode, scan)
                reports.append(audit("comb.superposed", bool(r.claim_holds),
                                     {"x": x, "W": cfg.w, "mode": mode, "scan": scan}, r.to_dict()))
            if cfg.e is not None:
                r = ca.sum_comb_spread(x, cfg.e, cfg.w, scan)
                reports.append(audit("comb.sum", bool(r.claim_holds),
                                     {"x": x, "W": cfg.w, "e": cfg.e, "scan": scan}, r.to_dict()))
        return None, reports
    reports.append(_single_comb_report(x))
    for scan in scans:
        for mode in ("canceled", "units"):
            reports.append(_comb_audit_report(ca.audit_superposed(x, mode, scan)))
        targets = None if cfg.e is None else [cfg.e]
        reports.append(_comb_audit_report(
            ca.audit_sum_combs(x, scan, targets=targets, workers=min(cfg.workers, max(1, L // 64)))))
    return None, reports


def cmd_bound(cfg: RunConfig, x: int):
    x = max(x, 2)
    e = cfg.e if cfg.e is not None else be.canonical_point(x)
    rep = be.c_of(e, x)
    places = pc.primorial(x) // 2
    cross = Fraction(ss.min_bound(x), places)
    params = {"x": x, "e": e}
    ev = rep.to_dict()
    ev["C_decimal"] = rep.C_decimal
    reports = [theorem("bound.density", rep.density == cross, {"x": x},
                       {"density": rep.density, "min_bound": ss.min_bound(x), "places": places}),
               theorem("bound.c", True, params, ev)]
    sweep = be.c_sweep(x)
    slope = be.sweep_slope(x)
    steps = [b.C - a.C for a, b in zip(sweep, sweep[1:])]
    ok = all(s == slope for s in steps) and slope > 0
    reports.append(theorem("bound.sweep", ok, {"x": x}, {
        "from": sweep[0].e, "to": sweep[-1].e, "slope": slope,
        "C_first": sweep[0].C, "C_last": sweep[-1].C}))
    return None, reports


def cmd_crossover(cfg: RunConfig):
    x_max = cfg.x_max if cfg.x_max is not None else 20
    if x_max < 2:
        raise UsageError("usage error: --x-max must be >= 2")
    res = be.crossover_scan(x_max)
    # consistent with the stated crossover at 53**2 + 1
    ok = res.first_x == 16 if x_max >= 16 else res.first_x is None
    ev = {
        "first": None if res.first is None else {
            "x": res.first.x, "p_x": res.first.p_x, "e": res.first.e,
            "C": res.first.C, "C_decimal": res.first.C_decimal},
        "increasing_suffix_from": res.increasing_from,
        "rows": [[r.x, r.p_x, r.e, r.C_decimal] for r in res.rows],
    }
    return None, [audit("bound.crossover", ok, {"x_max": x_max}, ev)]


def _table_for(cfg: RunConfig, limit: int) -> gv.PrimeTable:
    return gv.sieve(limit, cache=cfg.prime_cache)


def cmd_window(cfg: RunConfig, x: int):
    reports = []
    hi = pc.nth_prime(x + 1) ** 2
    table = _table_for(cfg, hi)
    if cfg.inject_fault:
        odd = table.odd.copy()
        odd[hi >> 1] = True
        table = gv.PrimeTable(table.limit, odd)
    for k in range(1, x + 1):
        r = gv.prime_window_check(k, table)
        reports.append(theorem("window.primes", r.passed, {"x": k}, {
            "window": [r.lo, r.hi], "units": r.units,
            "counterexamples": r.counterexamples[:INLINE_LIMIT],
            "first_composite_unit": r.next_composite_unit}))
    return None, reports


def _stringent_report(r: gv.StringentReport) -> ClaimReport:
    ev = {"window": [r.lo, r.hi], "evens": r.evens, "violations": r.violations[:INLINE_LIMIT]}
    if r.witnesses:
        shown = r.witnesses if len(r.witnesses) <= 3 else [r.witnesses[0], r.witnesses[-1]]
        ev["witnesses"] = [[w.e, w.q, w.r] for w in shown]
        ev["max_min_q"] = max(w.q for w in r.witnesses)
    return theorem("goldbach.stringent", r.passed, {"x": r.x, "p_x": r.threshold}, ev)


def _broken_table(table: gv.PrimeTable) -> gv.PrimeTable:
    odd = table.odd.copy()
    odd[6:] = False  # primes above 11 vanish
    return gv.PrimeTable(table.limit, odd)


def cmd_stringent(cfg: RunConfig):
    if cfg.max is not None:
        xs = []
        k = 1
        while pc.nth_prime(k + 1) ** 2 <= cfg.max:
            xs.append(k)
            k += 1
        if not xs:
            raise UsageError("usage error: --max must be at least 9")
    else:
        xs = [_need_x(cfg)]
    table = _table_for(cfg, pc.nth_prime(xs[-1] + 1) ** 2)
    if cfg.inject_fault:
        table = _broken_table(table)
    return None, [_stringent_report(gv.stringent_check(k, table)) for k in xs]


def cmd_scan(cfg: RunConfig):
    e_max = cfg.max if cfg.max is not None else 1_000_000
    table = _table_for(cfg, max(e_max, 2))
    if cfg.inject_fault:
        table = _broken_table(table)
    res = gv.conjecture_scan(e_max, workers=cfg.workers, table=table)
    return None, [theorem("goldbach.scan", res.passed, {"max": e_max}, {
        "evens": res.evens, "violation_count": len(res.violations),
        "violations": res.violations[:INLINE_LIMIT],
        "max_min_q": res.max_min_q, "max_min_q_at": res.max_min_q_at,
        "witness_checksum": res.checksum})]


def cmd_audit(cfg: RunConfig, x: int):
    x = max(x, 2)
    evens = None if cfg.e is None else [cfg.e]
    records = gv.bound_audit(x, evens)
    if not records:
        raise UsageError("usage error: no even numbers to audit")
    worst = min(records, key=lambda r: (r.slack, r.e))
    ev = {"records": len(records), "min_slack": worst.slack, "min_slack_at": worst.e}
    shown = records if len(records) <= 8 else [records[0], worst]
    ev["sample"] = [{"e": r.e, "empirical_pairs": r.empirical_pairs, "C": r.C_bound,
                     "slack": r.slack} for r in shown]
    return None, [audit("goldbach.bound_audit", worst.slack >= 0, {"x": x, "e": cfg.e}, ev)]


def cmd_grid(cfg: RunConfig, x: int):
    kind = cfg.kind
    if kind == "PRS" and x < 2:
        raise UsageError("usage error: a PRS grid needs --x >= 2")
    doc = ss.export_grid(x, kind, cfg.grid_format)
    summands, canceled, cells = ss.grid_rows(x, kind)
    table = ss.prs_table(x) if kind == "PRS" else ss.rs_table(x)
    hist = np.bincount((cells // 2 - 1).ravel(), minlength=len(table.evens))
    ok = np.array_equal(hist, table.counts)
    report = theorem("grid.export", ok, {"x": x, "kind": kind, "grid_format": cfg.grid_format}, {
        "summands": len(summands), "canceled": sorted(canceled), "cells_match_table": bool(ok)})
    if cfg.grid_output:
        with open(cfg.grid_output, "w", newline="") as fh:
            fh.write(doc)
        return None, [report]
    return doc.rstrip("\n"), [report]


def cmd_all(cfg: RunConfig, x: int):
    reports = []
    for k in range(1, x + 1):
        reports += cmd_fantom(cfg, k)[1]
        reports += cmd_rs(cfg, k)[1]
        if k >= 2:
            reports += cmd_prs(cfg, k)[1]
            reports += cmd_epsilon(cfg, k)[1]
            reports += cmd_induction(cfg, k)[1]
            reports += cmd_blocks(cfg, k)[1]
            reports += cmd_bound(cfg, k)[1]
            reports += cmd_audit(dataclasses.replace(cfg, e=None), k)[1]
        if k <= 5:
            reports += cmd_combs(dataclasses.replace(cfg, w=None, e=None, scan_mode="both"), k)[1]
    reports += cmd_crossover(dataclasses.replace(cfg, x_max=20))[1]
    reports += cmd_window(cfg, x)[1]
    reports += cmd_stringent(dataclasses.replace(cfg, max=None, x=x))[1]
    reports += cmd_scan(dataclasses.replace(cfg, max=pc.nth_prime(x + 1) ** 2))[1]
    return None, reports


def dispatch(cfg: RunConfig):
    c = cfg.command
    if c == "crossover":
        return cmd_crossover(cfg)
    if c == "scan":
        return cmd_scan(cfg)
    if c == "stringent":
        return cmd_stringent(cfg)
    handlers = {
        "fantom": cmd_fantom, "rs": cmd_rs, "prs": cmd_prs, "epsilon": cmd_epsilon,
        "induction": cmd_induction, "blocks": cmd_blocks, "combs": cmd_combs,
        "bound": cmd_bound, "window": cmd_window, "audit": cmd_audit, "grid": cmd_grid,
        "all": cmd_all,
    }
    minimum = 2 if c in ("prs", "epsilon", "induction", "blocks", "bound", "audit") else 1
    default = 16 if c == "audit" else None
    return handlers[c](cfg, _need_x(cfg, minimum, default))


def run(argv=None) -> tuple[int, str]:
    """Execute one command and write its document; returns (exit status, document)."""
    cfg = make_config(argv)
    pc.set_max_L(cfg.max_L)
    gv.set_max_sieve(cfg.max_sieve)
    try:
        start = time.perf_counter()
        payload, reports = dispatch(cfg)
        if cfg.timing:
            elapsed = time.perf_counter() - start
            for r in reports:
                r.timing = elapsed
    finally:
        pc.set_max_L(pc.DEFAULT_MAX_L)
        gv.set_max_sieve(gv.DEFAULT_MAX_SIEVE)
    doc = emit(reports, cfg.format)
    if payload is not None and cfg.format == "text":
        doc = payload + "\n" + doc
    if cfg.output:
        with open(cfg.output, "w", newline="") as fh:
            fh.write(doc)
    else:
        sys.stdout.write(doc)
    return exit_status(reports), doc


def main(argv=None) -> int:
    try:
        status, _ = run(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except pc.GuardError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"output error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    return status


if __name__ == "__main__":
    sys.exit(main())
