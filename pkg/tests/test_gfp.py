from itertools import combinations, permutations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromverify import gfp


def det_leibniz(a, p):
    n = len(a)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inv % 2 else 1
        for i in range(n):
            term *= int(a[i][perm[i]])
        total += term
    return total % p


def rank_by_minors(a, p):
    """Largest k with a nonzero k x k minor; brute force."""
    a = np.asarray(a)
    rows, cols = a.shape
    for k in range(min(rows, cols), 0, -1):
        for r in combinations(range(rows), k):
            for c in combinations(range(cols), k):
                if det_leibniz(a[np.ix_(r, c)], p):
                    return k
    return 0


def matrices(max_rows=4, max_cols=4, primes=(2, 3, 5, 7)):
    @st.composite
    def build(draw):
        p = draw(st.sampled_from(primes))
        r = draw(st.integers(1, max_rows))
        c = draw(st.integers(1, max_cols))
        entries = draw(st.lists(st.integers(0, p - 1), min_size=r * c, max_size=r * c))
        return np.array(entries, dtype=np.int64).reshape(r, c), p
    return build()


def test_identity():
    red = gfp.row_reduce(np.eye(2, dtype=int), 5)
    assert red.rank == 2 and red.pivots == [0, 1]


def test_zero_matrix():
    red = gfp.row_reduce(np.zeros((3, 4), dtype=int), 7)
    assert red.rank == 0 and red.pivots == []


def test_single_row_and_duplicates():
    row = [[0, 3, 1]]
    assert gfp.rank(row, 5) == 1
    assert gfp.rank(np.array(row * 4), 5) == 1


def test_random_4x4_against_minors():
    rng = np.random.default_rng(20)
    for _ in range(30):
        m = rng.integers(0, 5, size=(4, 4))
        assert gfp.rank(m, 5) == rank_by_minors(m, 5)


def test_singular_example_against_minors():
    m = np.array([[1, 2, 3, 4], [2, 4, 1, 3], [3, 1, 4, 2], [1, 2, 3, 4]])
    assert gfp.rank(m, 5) == rank_by_minors(m, 5)


def test_large_prime_no_overflow():
    p = 2**31 - 1
    rng = np.random.default_rng(3)
    m = rng.integers(0, p, size=(3, 3))
    m[2] = (m[0] * 7 + m[1] * (p - 2)) % p
    assert gfp.rank(m, p) == rank_by_minors(m, p) == 2
    for v in gfp.kernel_basis(m, p):
        assert not np.any(gfp.matmul(m, v.reshape(-1, 1), p))


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_matches_minor_oracle(mp):
    m, p = mp
    assert gfp.rank(m, p) == rank_by_minors(m, p)


@settings(max_examples=150, deadline=None)
@given(matrices(5, 6))
def test_rank_transpose(mp):
    m, p = mp
    assert gfp.rank(m, p) == gfp.rank(m.T, p)


@settings(max_examples=150, deadline=None)
@given(matrices(5, 6))
def test_rank_nullity_and_kernel(mp):
    m, p = mp
    ker = gfp.kernel_basis(m, p)
    assert gfp.rank(m, p) + len(ker) == m.shape[1]
    for v in ker:
        assert not np.any((m @ v) % p)
    if ker:
        assert gfp.rank(np.array(ker), p) == len(ker)


@settings(max_examples=100, deadline=None)
@given(matrices(5, 6))
def test_row_reduce_idempotent_and_rref(mp):
    m, p = mp
    rank, pivots, red = gfp.row_reduce(m, p)
    again = gfp.row_reduce(red, p)
    assert np.array_equal(again.reduced, red)
    assert again.pivots == pivots
    for r, c in enumerate(pivots):
        assert red[r, c] == 1
        assert np.count_nonzero(red[:, c]) == 1
    assert not np.any(red[rank:])
    # row space preserved: stacking adds no rank
    assert gfp.rank(np.vstack([m % p, red]), p) == rank


def test_identity_kernel_empty_and_zero_kernel_full():
    assert gfp.kernel_basis(np.eye(3, dtype=int), 7) == []
    assert len(gfp.kernel_basis(np.zeros((2, 3), dtype=int), 7)) == 3


@pytest.mark.parametrize("p", [0, 1, 4, 9, 2**31 + 11])
def test_rejects_bad_modulus(p):
    with pytest.raises(ValueError):
        gfp.rank([[1]], p)
