"""Fantom residue systems of primorials and stringent Goldbach checks."""

from .primal_core import (
    FantomSystem,
    GuardError,
    PrimeBasis,
    fantom_direct,
    fantom_recursive,
    first_primes,
    multiply_residues,
    primorial,
    unit_count,
)

__all__ = [
    "FantomSystem",
    "GuardError",
    "PrimeBasis",
    "fantom_direct",
    "fantom_recursive",
    "first_primes",
    "multiply_residues",
    "primorial",
    "unit_count",
]
