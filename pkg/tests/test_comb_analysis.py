import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fantomlab import comb_analysis as ca


def scan_oracle(seq, W, cyclic=True):
    n = len(seq)
    starts = range(n) if cyclic else range(n - W + 1)
    return [sum(seq[(o + k) % n] for k in range(W)) for o in starts]


def test_tooth_spread_examples():
    r = ca.tooth_spread(3, 7, 30)
    assert (r.min_count, r.max_count, r.spread) == (2, 3, 1)
    assert ca.tooth_spread(3, 6, 30).spread == 0
    assert ca.tooth_spread(5, 5, 30).spread == 0


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.integers(1, 210))
def test_single_comb_spread_at_most_one(p, W):
    r = ca.tooth_spread(p, W, 210)
    assert r.spread <= 1
    assert (r.spread == 0) == (W % p == 0)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=1, max_size=40), st.data())
def test_window_counts_match_oracle(seq, data):
    W = data.draw(st.integers(1, len(seq)))
    arr = np.array(seq)
    assert ca.window_counts(arr, W, "cyclic").tolist() == scan_oracle(seq, W)
    assert ca.window_counts(arr, W, "linear").tolist() == scan_oracle(seq, W, cyclic=False)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=1, max_size=150))
def test_spread_table_matches_per_window(seq):
    arr = np.array(seq)
    for scan in ("cyclic", "linear"):
        mins, maxs = ca.spread_table(arr, scan)
        for W in range(1, len(seq) + 1):
            c = ca.window_counts(arr, W, scan)
            assert (mins[W - 1], maxs[W - 1]) == (c.min(), c.max())


def test_superposed_examples():
    r = ca.superposed_spread(2, 5, "canceled")
    # n' in cyclic windows of length 5 over 1..6: counts 3 or 4
    assert (r.min_count, r.max_count) == (3, 4)
    assert r.claim_bound == 2 and r.claim_holds
    assert ca.superposed_spread(1, 2).spread == 0
    r = ca.superposed_spread(3, 15, "units")
    oracle = scan_oracle([1 if math.gcd(v, 30) == 1 else 0 for v in range(1, 31)], 15)
    assert (r.min_count, r.max_count) == (min(oracle), max(oracle))


def test_sum_comb_examples():
    r = ca.sum_comb_spread(2, 6, 6)
    assert (r.min_count, r.max_count, r.spread) == (2, 2, 0)
    assert ca.sum_comb_spread(3, 30, 30).spread == 0
    r = ca.sum_comb_spread(3, 2, 10)
    g = [1 if math.gcd(a, 30) == 1 and math.gcd((2 - a) % 30, 30) == 1 else 0 for a in range(1, 31)]
    oracle = scan_oracle(g, 10)
    assert r.spread == max(oracle) - min(oracle)
    assert r.claim_bound == 6


def test_sum_comb_rejects_odd():
    with pytest.raises(ValueError):
        ca.sum_comb_sequence(3, 7)


@pytest.mark.parametrize("x", range(1, 5))
def test_full_period_spread_zero(x):
    L = math.prod([2, 3, 5, 7][:x])
    assert ca.superposed_spread(x, L).spread == 0
    assert ca.sum_comb_spread(x, 2, L).spread == 0


def test_sum_comb_full_period_count_is_rep_count():
    from fantomlab.sum_systems import rs_table

    t = rs_table(3)
    for e in range(2, 31, 2):
        assert ca.sum_comb_spread(3, e, 30).min_count == t[e]


def test_audits_record_outcomes_at_x4():
    # the x-bound is exceeded for x = 4; recorded, not raised
    a = ca.audit_superposed(4, "canceled")
    assert a.worst_spread == 5 and not a.holds
    s = ca.audit_sum_combs(4)
    assert s.holds and s.worst_spread == 6


def test_sum_comb_audit_independent_of_workers():
    assert ca.audit_sum_combs(4, workers=1) == ca.audit_sum_combs(4, workers=3)
