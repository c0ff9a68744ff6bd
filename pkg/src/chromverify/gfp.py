"""Dense linear algebra over the prime field F_p.

Matrices are numpy ``int64`` arrays holding canonical residues in ``[0, p)``.
Every product of two residues stays below ``2**62`` for ``p < 2**31``, so
reduction after each multiply keeps the arithmetic exact.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

MAX_PRIME = 2**31 - 1


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> int:
    """Return ``p`` unchanged, raising ``ValueError`` unless it is a usable prime."""
    if not isinstance(p, (int, np.integer)) or not is_prime(int(p)) or p > MAX_PRIME:
        raise ValueError(f"modulus must be a prime in [2, 2^31-1], got {p!r}")
    return int(p)


def as_fp_matrix(m, p: int) -> np.ndarray:
    """Copy ``m`` into a 2-d int64 array of canonical residues mod ``p``."""
    a = np.array(m, dtype=np.int64, copy=True)
    if a.ndim == 1:
        a = a.reshape(1, -1) if a.size else a.reshape(0, 0)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {a.shape}")
    return np.mod(a, p)


class RowReduction(NamedTuple):
    rank: int
    pivots: list[int]
    reduced: np.ndarray


def row_reduce(m, p: int) -> RowReduction:
    """Reduced row-echelon form of ``m`` over F_p.

    Pivots are taken as the first nonzero entry scanning columns left to
    right, so the result is fully deterministic.
    """
    p = check_prime(p)
    r = as_fp_matrix(m, p)
    rows, cols = r.shape
    pivots: list[int] = []
    prow = 0
    for col in range(cols):
        if prow == rows:
            break
        nz = np.flatnonzero(r[prow:, col])
        if nz.size == 0:
            continue
        src = prow + int(nz[0])
        if src != prow:
            r[[prow, src]] = r[[src, prow]]
        inv = pow(int(r[prow, col]), -1, p)
        r[prow] = (r[prow] * inv) % p
        factors = r[:, col].copy()
        factors[prow] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            r[hit] = (r[hit] - (np.outer(factors[hit], r[prow]) % p)) % p
        pivots.append(col)
        prow += 1
    return RowReduction(len(pivots), pivots, r)


def rank(m, p: int) -> int:
    a = np.asarray(m)
    if a.size == 0:
        return 0
    return row_reduce(a, p).rank


def kernel_basis(m, p: int) -> list[np.ndarray]:
    """Basis of the right null space ``{v : m @ v == 0 mod p}``.

    One vector per free column, with a 1 in that column; the list is
    ordered by free column index.
    """
    p = check_prime(p)
    a = as_fp_matrix(m, p)
    cols = a.shape[1]
    _, pivots, red = row_reduce(a, p)
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        v = np.zeros(cols, dtype=np.int64)
        v[free] = 1
        for row, pc in enumerate(pivots):
            v[pc] = (-red[row, free]) % p
        basis.append(v)
    return basis


def matmul(a, b, p: int) -> np.ndarray:
    """Matrix product mod ``p`` without int64 overflow.

    Accumulates one rank-1 update at a time, reducing after each, so the
    running sum never exceeds ``2 * p**2``.
    """
    a = as_fp_matrix(a, p)
    b = as_fp_matrix(b, p)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    if a.shape[1] * (p - 1) ** 2 < 2**62:
        return (a @ b) % p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(a.shape[1]):
        out = (out + np.outer(a[:, k], b[k]) % p) % p
    return out
