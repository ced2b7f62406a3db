import random
from fractions import Fraction
from math import comb, factorial

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from permrank import permmatrix, perms

FIXED_PRIME = 2147483629  # largest prime below 2**31


def fraction_rank(rows):
    """Independent oracle: Gaussian elimination over exact rationals."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    n_rows, n_cols = len(m), len(m[0]) if m else 0
    for c in range(n_cols):
        pivot = next((i for i in range(rank, n_rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][c]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(n_rows):
            if i != rank and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


small_matrix = st.integers(min_value=1, max_value=6).flatmap(
    lambda rows: st.integers(min_value=1, max_value=6).flatmap(
        lambda cols: st.lists(
            st.lists(st.integers(min_value=-3, max_value=3), min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
)


def test_product_matrix_small_cases():
    assert permmatrix.cycle_product_matrix(1).to_dense().tolist() == [[1]]
    assert permmatrix.cycle_product_matrix(2).to_dense().tolist() == [[0, 1], [1, 0]]
    assert permmatrix.cycle_quotient_matrix(2).to_dense().tolist() == [[0, 1], [1, 0]]


def test_product_matrix_matches_definition():
    for n in (2, 3, 4):
        dense = permmatrix.cycle_product_matrix(n).to_dense()
        group = perms.all_perms(n)
        for i, pi in enumerate(group):
            for j, sigma in enumerate(group):
                assert dense[i, j] == (1 if perms.is_cyclic(perms.compose(sigma, pi)) else 0)


def test_quotient_matrix_matches_definition():
    for n in (2, 3, 4):
        dense = permmatrix.cycle_quotient_matrix(n).to_dense()
        group = perms.all_perms(n)
        for i, pi in enumerate(group):
            for j, sigma in enumerate(group):
                expected = 1 if perms.is_cyclic(perms.compose(sigma, perms.inverse(pi))) else 0
                assert dense[i, j] == expected


def test_quotient_is_row_permuted_product():
    for n in (2, 3, 4, 5):
        p = permmatrix.cycle_product_matrix(n).to_dense()
        q = permmatrix.cycle_quotient_matrix(n).to_dense()
        group = perms.all_perms(n)
        reorder = [perms.perm_rank(perms.inverse(pi)) for pi in group]
        assert (q == p[reorder]).all()


@pytest.mark.parametrize("n", range(1, 6))
def test_row_and_column_sums(n):
    mat = permmatrix.cycle_product_matrix(n)
    assert mat.order == factorial(n)
    assert mat.row_sums().tolist() == [factorial(n - 1)] * factorial(n)
    assert mat.to_dense().sum(axis=0).tolist() == [factorial(n - 1)] * factorial(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_matrices_are_symmetric(n):
    assert permmatrix.cycle_product_matrix(n).is_symmetric()
    assert permmatrix.cycle_quotient_matrix(n).is_symmetric()


@pytest.mark.parametrize("n", range(1, 6))
def test_operator_matrix_equals_quotient_matrix(n):
    assert permmatrix.left_multiplication_matrix(n) == permmatrix.cycle_quotient_matrix(n)


def test_rank_mod_prime_validates_prime():
    with pytest.raises(ValueError):
        permmatrix.rank_mod_prime(np.eye(3, dtype=np.int64), 101)
    with pytest.raises(ValueError):
        permmatrix.rank_mod_prime(np.eye(3, dtype=np.int64), FIXED_PRIME + 2)


def test_rank_mod_prime_basics():
    assert permmatrix.rank_mod_prime(np.eye(5, dtype=np.int64), FIXED_PRIME) == 5
    assert permmatrix.rank_mod_prime(np.ones((4, 4), dtype=np.int64), FIXED_PRIME) == 1
    assert permmatrix.rank_mod_prime(np.zeros((3, 3), dtype=np.int64), FIXED_PRIME) == 0


def test_rank_mod_prime_on_degree_four():
    mat = permmatrix.cycle_product_matrix(4)
    assert permmatrix.rank_mod_prime(mat, FIXED_PRIME) == 20


def test_rank_exact_basics():
    assert permmatrix.rank_exact(np.zeros((4, 4), dtype=np.int64)) == 0
    assert permmatrix.rank_exact(np.eye(6, dtype=np.int64)) == 6
    assert permmatrix.rank_exact([[1, 2], [2, 4]]) == 1


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 2), (3, 6), (4, 20), (5, 70)])
def test_rank_exact_on_cycle_matrices(n, expected):
    assert permmatrix.rank_exact(permmatrix.cycle_product_matrix(n)) == expected
    assert expected == comb(2 * n - 2, n - 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_product_and_quotient_ranks_agree(n):
    p = permmatrix.rank_exact(permmatrix.cycle_product_matrix(n))
    q = permmatrix.rank_exact(permmatrix.cycle_quotient_matrix(n))
    assert p == q


@settings(deadline=None, max_examples=60)
@given(small_matrix)
def test_rank_exact_matches_fraction_oracle(rows):
    assert permmatrix.rank_exact(rows) == fraction_rank(rows)


@settings(deadline=None, max_examples=40)
@given(small_matrix)
def test_modular_rank_matches_fraction_oracle(rows):
    # entries are tiny, so no nonzero minor can be divisible by a 31-bit prime
    arr = np.array(rows, dtype=np.int64)
    expected = fraction_rank(rows)
    assert permmatrix.rank_mod_prime(arr, FIXED_PRIME, use_kernel=False) == expected
    assert permmatrix.rank_mod_prime(arr, FIXED_PRIME, use_kernel=True) == expected


def test_kernel_and_numpy_elimination_agree_on_random_matrices():
    rng = np.random.default_rng(5)
    for _ in range(10):
        size = rng.integers(1, 40)
        arr = rng.integers(0, 2, size=(size, size)).astype(np.int64)
        a = permmatrix.rank_mod_prime(arr, FIXED_PRIME, use_kernel=True)
        b = permmatrix.rank_mod_prime(arr, FIXED_PRIME, use_kernel=False)
        assert a == b


def test_modular_rank_never_exceeds_exact():
    rng = np.random.default_rng(11)
    prime_rng = random.Random(3)
    for _ in range(5):
        arr = rng.integers(-2, 3, size=(8, 8)).astype(np.int64)
        exact = permmatrix.rank_exact(arr)
        for _ in range(3):
            p = permmatrix.random_prime(prime_rng)
            assert permmatrix.rank_mod_prime(arr, p) <= exact


def test_rank_exact_order_cap():
    with pytest.raises(ValueError, match="modular"):
        permmatrix.rank_exact(np.zeros((1001, 1001), dtype=np.int64))


@pytest.mark.parametrize("n", range(1, 7))
def test_modular_rank_equals_known_exact_rank(n):
    # the exact ranks are established by test_rank_exact_on_cycle_matrices
    # and the acceptance suite; random primes must reproduce them
    rng = random.Random(1000 + n)
    mat = permmatrix.cycle_product_matrix(n)
    for _ in range(2):
        assert permmatrix.rank_mod_prime(mat, permmatrix.random_prime(rng)) == comb(
            2 * n - 2, n - 1
        )


def test_is_prime_and_random_prime():
    assert permmatrix.is_prime(2) and permmatrix.is_prime(FIXED_PRIME)
    assert not permmatrix.is_prime(1) and not permmatrix.is_prime(FIXED_PRIME + 2)
    rng = random.Random(0)
    for _ in range(5):
        p = permmatrix.random_prime(rng)
        assert (1 << 29) < p < (1 << 31)
        assert permmatrix.is_prime(p)


def test_certified_rank_exact_path():
    cert = permmatrix.certified_rank(4)
    assert cert.rank == 20
    assert cert.method == "exact-fraction-free"
    assert cert.primes == ()


def test_certified_rank_modular_path_is_seeded():
    cert1 = permmatrix.certified_rank(3, method="modp", seed=42)
    cert2 = permmatrix.certified_rank(3, method="modp", seed=42)
    assert cert1.rank == 6
    assert cert1.method == "modular-multiprime"
    assert len(cert1.primes) == 3
    assert cert1.primes == cert2.primes


def test_certified_rank_degree_eight_gated():
    with pytest.raises(ValueError, match="allow_heavy"):
        permmatrix.certified_rank(8)


def test_packbits_round_trip():
    rng = np.random.default_rng(2)
    dense = rng.integers(0, 2, size=(10, 10)).astype(np.uint8)
    mat = permmatrix.BinaryMatrix.from_dense(dense)
    assert (mat.to_dense() == dense).all()
    assert mat.filled_count() == int(dense.sum())
    assert mat.entry(3, 7) == dense[3, 7]


def test_pbm_round_trip_and_counts(tmp_path):
    for k, filled in ((2, 2), (3, 12), (4, 144)):
        mat = permmatrix.cycle_product_matrix(k)
        path = tmp_path / f"cycle{k}.pbm"
        permmatrix.write_pbm(mat, path)
        back = permmatrix.read_pbm(path)
        assert back.order == factorial(k)
        assert back == permmatrix.BinaryMatrix(mat.order, mat.packed)
        assert back.filled_count() == filled == factorial(k - 1) * factorial(k)
        assert back.is_symmetric()


def test_pbm_header(tmp_path):
    path = tmp_path / "m.pbm"
    permmatrix.write_pbm(permmatrix.cycle_product_matrix(2), path)
    raw = path.read_bytes()
    assert raw.startswith(b"P4\n2 2\n")
    # rows are 01 / 10, MSB-first padded to a byte
    assert raw[7:] == bytes([0b01000000, 0b10000000])
