import math

import pytest


def is_prime_td(n: int) -> bool:
    """Trial division, independent of the package sieves."""
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def primes_td(count: int) -> list[int]:
    out, n = [], 2
    while len(out) < count:
        if is_prime_td(n):
            out.append(n)
        n += 1
    return out


def brute_rs(L: int) -> dict[int, int]:
    units = [a for a in range(1, L + 1) if math.gcd(a, L) == 1]
    table = {e: 0 for e in range(2, L + 1, 2)}
    for a in units:
        for b in units:
            table[(a + b - 1) % L + 1] += 1
    return table


@pytest.fixture(autouse=True)
def _reset_guards():
    from fantomlab import goldbach_verifier as gv
    from fantomlab import primal_core as pc

    yield
    pc.set_max_L(pc.DEFAULT_MAX_L)
    gv.set_max_sieve(gv.DEFAULT_MAX_SIEVE)


_acceptance: list[tuple[str, str, float]] = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        _acceptance.append((name, "PASS" if report.passed else "FAIL", report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, duration in _acceptance:
        terminalreporter.write_line(f"{outcome}  {name}  ({duration:.2f}s)")
