"""Exact integer cyclic convolution through a number-theoretic transform.

Works over the prime 469762049 = 7 * 2**26 + 1 (primitive root 3), so
transform lengths up to 2**26 are available and every result below the
modulus is recovered exactly. Residues stay below 2**29, which keeps the
products of two residues inside uint64.
"""

from __future__ import annotations

import numpy as np

MOD = 469_762_049
ROOT = 3
MAX_LOG2 = 26


def _bit_reverse(n: int) -> np.ndarray:
    bits = n.bit_length() - 1
    idx = np.arange(n, dtype=np.int64)
    rev = np.zeros(n, dtype=np.int64)
    for b in range(bits):
        rev |= ((idx >> b) & 1) << (bits - 1 - b)
    return rev


def _transform(a: np.ndarray, invert: bool) -> np.ndarray:
    n = len(a)
    a = a[_bit_reverse(n)].astype(np.uint64)
    length = 2
    while length <= n:
        w = pow(ROOT, (MOD - 1) // length, MOD)
        if invert:
            w = pow(w, MOD - 2, MOD)
        half = length // 2
        tw = np.empty(half, dtype=np.uint64)
        tw[0] = 1
        # powers of w by doubling, each step one vectorized multiply
        filled = 1
        while filled < half:
            step = pow(w, filled, MOD)
            take = min(filled, half - filled)
            tw[filled : filled + take] = tw[:take] * np.uint64(step) % np.uint64(MOD)
            filled += take
        blocks = a.reshape(-1, length)
        u = blocks[:, :half].copy()
        v = blocks[:, half:] * tw % np.uint64(MOD)
        blocks[:, :half] = (u + v) % np.uint64(MOD)
        blocks[:, half:] = (u + np.uint64(MOD) - v) % np.uint64(MOD)
        length *= 2
    if invert:
        n_inv = pow(n, MOD - 2, MOD)
        a = a * np.uint64(n_inv) % np.uint64(MOD)
    return a


def cyclic_convolve(f: np.ndarray, g: np.ndarray | None = None) -> np.ndarray:
    """h[k] = sum over i + j = k (mod n) of f[i] * g[j], exact.

    ``f`` and ``g`` are nonnegative integer arrays of the same length n.
    Raises OverflowError if the result could reach the modulus.
    """
    f = np.asarray(f, dtype=np.int64)
    g = f if g is None else np.asarray(g, dtype=np.int64)
    n = len(f)
    if len(g) != n:
        raise ValueError("operands must have equal length")
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    if (f < 0).any() or (g < 0).any():
        raise ValueError("operands must be nonnegative")
    # a bound on every output coefficient
    if int(f.sum()) * int(g.max(initial=0)) >= MOD:
        raise OverflowError("convolution could exceed the transform modulus")
    size = 1
    while size < 2 * n - 1:
        size *= 2
    if size.bit_length() - 1 > MAX_LOG2:
        raise OverflowError(f"transform length {size} exceeds 2**{MAX_LOG2}")
    fa = np.zeros(size, dtype=np.int64)
    fa[:n] = f
    fa_hat = _transform(fa, invert=False)
    if g is f:
        prod = fa_hat * fa_hat % np.uint64(MOD)
    else:
        ga = np.zeros(size, dtype=np.int64)
        ga[:n] = g
        prod = fa_hat * _transform(ga, invert=False) % np.uint64(MOD)
    linear = _transform(prod, invert=True).astype(np.int64)
    out = linear[:n].copy()
    tail = linear[n : 2 * n - 1]
    out[: len(tail)] += tail
    return out
