"""Primes, primorials and the fantom (reduced residue) systems F(p_x).

Index convention: ``x`` counts primes from p_1 = 2, so F(5) is ``x = 3``.
Materialized systems carry a numpy indicator where position ``k`` stands
for the residue class k mod L (position 0 is the class of L itself).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

# 2*3*5*7*11*13*17*19, the largest primorial materialized by default
DEFAULT_MAX_L = 9_699_690


class GuardError(RuntimeError):
    """Raised when an object would exceed a configured memory guard."""

    def __init__(self, what: str, required: int, limit: int):
        self.what = what
        self.required = required
        self.limit = limit
        super().__init__(
            f"{what} requires {required} entries, above the guard of {limit}"
        )


_guard = {"max_L": DEFAULT_MAX_L}


def set_max_L(limit: int) -> None:
    if limit < 2:
        raise ValueError("max_L must be at least 2")
    _guard["max_L"] = int(limit)


def get_max_L() -> int:
    return _guard["max_L"]


def check_guard(L: int, what: str = "fantom system") -> None:
    if L > _guard["max_L"]:
        raise GuardError(what, L, _guard["max_L"])


def _require_index(x: int) -> None:
    if not isinstance(x, (int, np.integer)) or isinstance(x, bool):
        raise TypeError(f"prime index must be an integer, got {x!r}")
    if x < 1:
        raise ValueError(f"prime index must be >= 1, got {x}")


@lru_cache(maxsize=None)
def _primes_tuple(x: int) -> tuple[int, ...]:
    # n(log n + log log n) bounds p_n for n >= 6
    bound = 15 if x < 6 else int(x * (math.log(x) + math.log(math.log(x)))) + 1
    while True:
        flags = bytearray([1]) * (bound + 1)
        flags[0:2] = b"\x00\x00"
        for p in range(2, math.isqrt(bound) + 1):
            if flags[p]:
                flags[p * p :: p] = bytearray(len(range(p * p, bound + 1, p)))
        primes = [i for i in range(bound + 1) if flags[i]]
        if len(primes) >= x:
            return tuple(primes[:x])
        bound *= 2


def first_primes(x: int) -> list[int]:
    """The first ``x`` primes in ascending order."""
    _require_index(x)
    return list(_primes_tuple(int(x)))


def nth_prime(x: int) -> int:
    _require_index(x)
    return _primes_tuple(int(x))[-1]


def primorial(x: int) -> int:
    """L(p_x): product of the first ``x`` primes, as a Python int."""
    _require_index(x)
    return math.prod(_primes_tuple(int(x)))


def unit_count(x: int) -> int:
    """A(p_x) = prod(p_i - 1), the number of units in F(p_x)."""
    _require_index(x)
    return math.prod(p - 1 for p in _primes_tuple(int(x)))


@dataclass(frozen=True)
class PrimeBasis:
    x: int
    primes: tuple[int, ...]
    L: int
    A: int

    @classmethod
    def of(cls, x: int) -> "PrimeBasis":
        return cls(x=int(x), primes=tuple(first_primes(x)), L=primorial(x), A=unit_count(x))

    @property
    def p_x(self) -> int:
        return self.primes[-1]


@dataclass(frozen=True, eq=False)
class FantomSystem:
    """Units of Z/L(p_x) listed in [1, L] with an O(1) membership indicator."""

    basis: PrimeBasis
    residues: np.ndarray
    indicator: np.ndarray = field(repr=False)

    def __contains__(self, v: int) -> bool:
        return bool(self.indicator[int(v) % self.basis.L])

    def __len__(self) -> int:
        return len(self.residues)

    def tolist(self) -> list[int]:
        return [int(r) for r in self.residues]


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def _system_from_indicator(basis: PrimeBasis, ind: np.ndarray) -> FantomSystem:
    res = np.flatnonzero(ind).astype(np.int64)
    # class 0 is L itself, never a unit; keep residues in [1, L]
    return FantomSystem(basis, _readonly(res), _readonly(ind))


def fantom_direct(x: int) -> FantomSystem:
    """Sieve [1, L] by each of the first ``x`` primes."""
    basis = PrimeBasis.of(x)
    check_guard(basis.L)
    ind = np.ones(basis.L, dtype=bool)
    for p in basis.primes:
        ind[::p] = False
    return _system_from_indicator(basis, ind)


@dataclass(frozen=True, eq=False)
class RecursiveConstruction:
    """One step F(p_{x-1}) -> F(p_x) through the presystem PF(p_x)."""

    system: FantomSystem
    presystem: np.ndarray
    canceling: np.ndarray


def presystem_step(prev: FantomSystem, p: int) -> RecursiveConstruction:
    L_prev = prev.basis.L
    L = L_prev * p
    check_guard(L)
    shifts = np.arange(p, dtype=np.int64) * L_prev
    pf = (shifts[:, None] + prev.residues[None, :]).ravel()
    canceling = np.sort(prev.residues * p)
    ind = np.zeros(L, dtype=bool)
    ind[pf % L] = True
    ind[canceling % L] = False
    basis = PrimeBasis.of(prev.basis.x + 1)
    return RecursiveConstruction(
        system=_system_from_indicator(basis, ind),
        presystem=_readonly(pf),
        canceling=_readonly(canceling),
    )


def fantom_recursive(x: int) -> RecursiveConstruction:
    """Build F(p_x) from F(2) = {1} by repeated presystem cancellation.

    ``x = 1`` has nothing to line up: F(2) = {1} comes back with PF = {1}
    and an empty canceling set.
    """
    _require_index(x)
    check_guard(primorial(x))
    basis = PrimeBasis.of(1)
    ind = np.array([False, True])
    step = RecursiveConstruction(
        system=_system_from_indicator(basis, ind),
        presystem=_readonly(np.array([1], dtype=np.int64)),
        canceling=_readonly(np.array([], dtype=np.int64)),
    )
    for p in first_primes(x)[1:]:
        step = presystem_step(step.system, p)
    return step


@dataclass(frozen=True)
class ProductDecomposition:
    """m * r = a * L + r' for every unit r, in the input order of F(p_x)."""

    x: int
    m: int
    L: int
    entries: tuple[tuple[int, int, int], ...]  # (raw product, a, r')

    @property
    def raw(self) -> list[int]:
        return [e[0] for e in self.entries]

    @property
    def quotients(self) -> list[int]:
        return [e[1] for e in self.entries]

    @property
    def residue_parts(self) -> list[int]:
        return [e[2] for e in self.entries]


def multiply_residues(x: int, m: int, system: FantomSystem | None = None) -> ProductDecomposition:
    """Multiply every unit of F(p_x) by the unit ``m`` and reduce mod L."""
    fs = system if system is not None else fantom_direct(x)
    L = fs.basis.L
    if math.gcd(int(m), L) != 1:
        raise ValueError(f"multiplier {m} is not coprime to L = {L}")
    entries = []
    for r in fs.residues.tolist():
        raw = int(m) * r
        a, rp = divmod(raw, L)
        entries.append((raw, a, rp))
    return ProductDecomposition(x=fs.basis.x, m=int(m), L=L, entries=tuple(entries))


def is_permutation_of_units(dec: ProductDecomposition, system: FantomSystem) -> bool:
    parts = dec.residue_parts
    return len(parts) == len(system) and sorted(parts) == system.tolist()
