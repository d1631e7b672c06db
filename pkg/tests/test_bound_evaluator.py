from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import primes_td
from fantomlab import bound_evaluator as be
from fantomlab.sum_systems import min_bound


def test_density_small():
    assert be.density(2) == Fraction(1, 3)
    assert be.density(3) == Fraction(1, 5) == Fraction(3, 15)


def test_density_x16():
    ps = primes_td(16)[1:]
    num = den = 1
    for p in ps:
        num *= p - 2
        den *= p
    assert be.density(16) == Fraction(num, den)


@pytest.mark.parametrize("x", range(2, 12))
def test_density_is_min_bound_over_places(x):
    places = 1
    for p in primes_td(x)[1:]:
        places *= p
    assert be.density(x) == Fraction(min_bound(x), places)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 40))
def test_density_recursion(x):
    p = primes_td(x + 1)[-1]
    assert be.density(x + 1) == be.density(x) * Fraction(p - 2, p)


def test_density_needs_x2():
    with pytest.raises(ValueError):
        be.density(1)


def test_c_at_26():
    r = be.c_of(26, 3)
    # 1/2 * 1/5 * 13 - 1 - 6 + 2
    assert r.C == Fraction(-37, 10)
    assert not r.crossover
    assert (r.summand_one, r.variance, r.evenness) == (-1, -6, 2)


def test_c_crossover_points():
    assert be.c_of(2810, 16).C > 1
    assert be.c_of(2210, 15).C <= 1


def test_c_rejects_odd():
    with pytest.raises(ValueError):
        be.c_of(27, 3)


def test_crossover_scan():
    res = be.crossover_scan(20)
    assert res.first_x == 16
    assert res.first.p_x == 53 and res.first.e == 2810
    assert all(r.C <= 1 for r in res.rows if r.x < 16)
    assert be.crossover_scan(10).first_x is None


@pytest.mark.parametrize("x_max", [16, 25, 40])
def test_crossover_stable(x_max):
    assert be.crossover_scan(x_max).first_x == 16


def test_sweep_x3():
    rows = be.c_sweep(3)
    assert [r.e for r in rows] == list(range(26, 49, 2))
    assert all(a.C < b.C for a, b in zip(rows, rows[1:]))
    assert be.sweep_slope(3) == Fraction(1, 10)


@pytest.mark.parametrize("x", [2, 5, 9, 16])
def test_sweep_linear(x):
    rows = be.c_sweep(x)
    slope = be.sweep_slope(x)
    assert all(b.C - a.C == slope for a, b in zip(rows, rows[1:]))


def test_sweep_x16_stays_above_one():
    assert all(r.C > 1 for r in be.c_sweep(16))


@pytest.mark.parametrize("q, text", [
    (Fraction(-37, 10), "-3.7"),
    (Fraction(1, 3), "0.333333"),
    (Fraction(2, 3), "0.666667"),
    (Fraction(1234567), "1234570"),
    (Fraction(0), "0"),
])
def test_render(q, text):
    assert be.render(q) == text
