import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import primes_td
from fantomlab import primal_core as pc


def test_first_primes_small():
    assert pc.first_primes(1) == [2]
    assert pc.first_primes(3) == [2, 3, 5]


def test_first_primes_16th_is_53():
    assert pc.first_primes(16) == primes_td(16)
    assert pc.first_primes(16)[-1] == 53


@pytest.mark.parametrize("bad", [0, -1])
def test_index_must_be_positive(bad):
    for fn in (pc.first_primes, pc.primorial, pc.unit_count):
        with pytest.raises(ValueError):
            fn(bad)


def test_primorial_values():
    assert pc.primorial(2) == 6
    assert pc.primorial(3) == 30
    assert pc.primorial(16) == 32589158477190044730
    assert pc.primorial(16) > 2**64


def test_unit_count_values():
    assert pc.unit_count(2) == 2
    assert pc.unit_count(3) == 8
    assert pc.unit_count(16) == math.prod(p - 1 for p in primes_td(16)) == 4434961926979584000
    assert pc.unit_count(10) == 1021870080


@pytest.mark.parametrize("x, listing", [
    (1, [1]),
    (2, [1, 5]),
    (3, [1, 7, 11, 13, 17, 19, 23, 29]),
])
def test_fantom_listings(x, listing):
    assert pc.fantom_direct(x).tolist() == listing
    assert pc.fantom_recursive(x).system.tolist() == listing


@pytest.mark.parametrize("x", range(1, 8))
def test_direct_matches_gcd_oracle_and_recursion(x):
    fs = pc.fantom_direct(x)
    L = fs.basis.L
    assert fs.tolist() == [a for a in range(1, L + 1) if math.gcd(a, L) == 1]
    assert np.array_equal(fs.residues, pc.fantom_recursive(x).system.residues)
    assert len(fs) == pc.unit_count(x)
    if x > 1:
        assert pc.unit_count(x) == (fs.basis.p_x - 1) * pc.unit_count(x - 1)


def test_recursive_agrees_at_x8():
    assert np.array_equal(pc.fantom_direct(8).residues, pc.fantom_recursive(8).system.residues)


def test_presystem_examples():
    s2 = pc.fantom_recursive(2)
    assert sorted(s2.presystem.tolist()) == [1, 3, 5]
    assert s2.canceling.tolist() == [3]
    s3 = pc.fantom_recursive(3)
    assert sorted(s3.presystem.tolist()) == [1, 5, 7, 11, 13, 17, 19, 23, 25, 29]
    assert s3.canceling.tolist() == [5, 25]


@pytest.mark.parametrize("x", range(2, 7))
def test_canceling_is_presystem_minus_system(x):
    step = pc.fantom_recursive(x)
    removed = set(step.presystem.tolist()) - set(step.system.tolist())
    assert removed == set(step.canceling.tolist())
    assert len(step.canceling) == pc.unit_count(x - 1)


@pytest.mark.parametrize("x", range(1, 7))
def test_symmetry(x):
    fs = pc.fantom_direct(x)
    L = fs.basis.L
    assert 1 in fs and L not in fs
    for r in fs.tolist():
        assert L - r in fs


def test_multiply_by_seven():
    dec = pc.multiply_residues(3, 7)
    assert dec.residue_parts == [7, 19, 17, 1, 29, 13, 11, 23]
    assert all(raw == a * 30 + r for raw, a, r in dec.entries)


def test_multiply_by_one_is_identity():
    dec = pc.multiply_residues(3, 1)
    assert dec.residue_parts == pc.fantom_direct(3).tolist()
    assert set(dec.quotients) == {0}


def test_multiply_five_in_f3():
    dec = pc.multiply_residues(2, 5)
    assert dec.raw == [5, 25]
    assert [(a, r) for _, a, r in dec.entries] == [(0, 5), (4, 1)]


def test_multiplier_must_be_unit():
    with pytest.raises(ValueError):
        pc.multiply_residues(3, 5)


@settings(max_examples=60, deadline=None)
@given(x=st.integers(1, 5), data=st.data())
def test_multiplication_permutes_units(x, data):
    fs = pc.fantom_direct(x)
    m = data.draw(st.sampled_from(fs.tolist()))
    assert pc.is_permutation_of_units(pc.multiply_residues(x, m, fs), fs)


def test_guard_reports_required_size():
    pc.set_max_L(1000)
    with pytest.raises(pc.GuardError) as info:
        pc.fantom_direct(5)
    assert info.value.required == 2310
    assert "2310" in str(info.value)


def test_systems_are_read_only():
    fs = pc.fantom_direct(3)
    with pytest.raises(ValueError):
        fs.residues[0] = 2
