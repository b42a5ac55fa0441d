"""Exact modular kernels on int64 arrays for primes below 2**62.

Products of two residues do not fit in 64 bits, so operands are split into
limbs small enough that every partial product (and, for matrix products,
every length-n dot product of limbs) is exact. Matrix products run the limb
products through float64 GEMM: integers below 2**53 are exact in a double,
and an exact integer sum stays exact under any BLAS summation order.
"""

from __future__ import annotations

import numpy as np

_FLOAT_BITS = 53


def fits_int64(p: int) -> bool:
    return p.bit_length() <= 62


def _is_mersenne(p: int) -> bool:
    return p & (p + 1) == 0


def shift_mod(x: np.ndarray, bits: int, p: int) -> np.ndarray:
    """Return ``x * 2**bits mod p`` for int64 ``0 <= x < p``."""
    k = p.bit_length()
    if _is_mersenne(p):
        # 2**k == 1 mod p, so the shift is a k-bit rotation
        bits %= k
        if bits == 0:
            return x
        u = x.astype(np.uint64, copy=False)
        mask = np.uint64(p)
        rot = ((u << np.uint64(bits)) & mask) | (u >> np.uint64(k - bits))
        return rot.astype(np.int64)
    step = 63 - k
    while bits > 0:
        s = min(step, bits)
        x = (x << s) % p
        bits -= s
    return x


def _recombine(parts: list[np.ndarray], w: int, p: int) -> np.ndarray:
    """Reduce ``sum(parts[k] * 2**(w*k))`` mod p, parts nonnegative int64."""
    acc = parts[-1] % p
    for part in reversed(parts[:-1]):
        acc = shift_mod(acc, w, p)
        acc += part % p
        acc[acc >= p] -= p
    return acc


def _split(x: np.ndarray, w: int, count: int) -> list[np.ndarray]:
    mask = (1 << w) - 1
    return [(x >> (w * i)) & mask for i in range(count)]


def mulmod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Elementwise (broadcasting) ``a * b mod p`` for reduced int64 inputs."""
    bits = p.bit_length()
    if bits <= 31:
        return (a * b) % p
    a0, a1 = _split(a, 31, 2)
    b0, b1 = _split(b, 31, 2)
    # each part stays below 2**63
    parts = [a0 * b0, a0 * b1 + a1 * b0, a1 * b1]
    return _recombine(parts, 31, p)


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact ``a @ b mod p`` for reduced int64 operands."""
    inner = a.shape[1]
    bits = p.bit_length()
    # inner * (2**w)**2 < 2**53 keeps every GEMM entry exact
    w = min(bits, (_FLOAT_BITS - inner.bit_length()) // 2)
    if w < 1:
        raise ValueError(f"inner dimension {inner} too large for exact GEMM")
    count = -(-bits // w)
    cols = b.shape[1]
    a_limbs = [x.astype(np.float64) for x in _split(a, w, count)]
    b_cat = np.hstack([x.astype(np.float64) for x in _split(b, w, count)])
    parts = [np.zeros((a.shape[0], cols), dtype=np.int64) for _ in range(2 * count - 1)]
    for i, ai in enumerate(a_limbs):
        prod = (ai @ b_cat).astype(np.int64)
        for j in range(count):
            parts[i + j] += prod[:, j * cols:(j + 1) * cols]
    if count == 1:
        return parts[0] % p
    return _recombine(parts, w, p)
