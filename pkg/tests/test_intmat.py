"""Generator matrices: construction, closed-form products, identities."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aughts import intmat
from aughts.intmat import (
    SmallIntMatrix,
    alternating_row,
    basis_outer,
    full_cycle_matrix,
    identity_matrix,
    k_word_product,
    make_k,
    mat_add,
    mat_mul,
    mat_pow,
    mat_scale,
    matrix_order,
    pivot_outer,
    product_closed_form,
    shift_power,
    sign_pow,
    zero_matrix,
)


def test_alternating_row_invariants():
    for n in range(1, 9):
        for j in range(1, n + 1):
            row = alternating_row(n, j)
            assert len(row) == n
            assert row[0] == sign_pow(j)
            assert all(a * b == -1 for a, b in zip(row, row[1:]))
    with pytest.raises(ValueError):
        alternating_row(3, 4)


def test_matrix_shape_validation():
    with pytest.raises(ValueError):
        SmallIntMatrix(2, (1, 0, 0))
    with pytest.raises(ValueError):
        SmallIntMatrix.from_rows([[1, 0], [0]])


def test_make_k_displays():
    assert make_k(3, 1).rows() == ((-1, 1, -1), (0, 1, 0), (0, 0, 1))
    assert make_k(3, 3).rows() == ((1, 0, 0), (0, 1, 0), (-1, 1, -1))
    assert make_k(1, 1).rows() == ((-1,),)


def test_make_k_index_errors():
    with pytest.raises(ValueError):
        make_k(3, 0)
    with pytest.raises(ValueError):
        make_k(3, 4)


def test_mat_mul_examples():
    k1 = make_k(3, 1)
    assert mat_mul(k1, k1) == identity_matrix(3)
    k2 = make_k(3, 2)
    assert mat_mul(identity_matrix(3), k2) == k2
    assert mat_mul(make_k(4, 2), make_k(4, 3)).rows() == (
        (1, 0, 0, 0),
        (0, 0, -1, 0),
        (-1, 1, -1, 1),
        (0, 0, 0, 1),
    )


def test_mat_mul_dimension_mismatch():
    with pytest.raises(ValueError):
        mat_mul(make_k(3, 1), make_k(4, 1))


def test_mat_mul_overflow_checked():
    big = SmallIntMatrix.from_rows([[2**62, 0], [0, 1]])
    with pytest.raises(OverflowError):
        mat_mul(big, big)


def test_product_closed_form_displays():
    assert product_closed_form(4, [1, 4]).rows() == (
        (0, 0, 0, -1),
        (0, 1, 0, 0),
        (0, 0, 1, 0),
        (1, -1, 1, -1),
    )
    assert product_closed_form(4, [1, 2, 3]).rows() == (
        (0, -1, 0, 0),
        (0, 0, -1, 0),
        (-1, 1, -1, 1),
        (0, 0, 0, 1),
    )
    assert product_closed_form(4, [3, 2, 1]).rows() == (
        (-1, 1, -1, 1),
        (-1, 0, 0, 0),
        (0, -1, 0, 0),
        (0, 0, 0, 1),
    )


def test_product_closed_form_rejects_repeats():
    with pytest.raises(ValueError):
        product_closed_form(4, [1, 2, 1])
    with pytest.raises(ValueError):
        product_closed_form(4, [])
    with pytest.raises(ValueError):
        product_closed_form(4, [5])


def test_full_cycle_order():
    down = full_cycle_matrix(3, "down")
    assert mat_pow(down, 4) == identity_matrix(3)
    for k in range(1, 4):
        assert mat_pow(down, k) != identity_matrix(3)
    assert full_cycle_matrix(1, "up").rows() == ((-1,),)
    assert matrix_order(full_cycle_matrix(1, "up")) == 2


def test_full_cycle_equals_pivot_minus_shift():
    # K(n)...K(1) is the rank-one pivot on row 1 minus the sub-diagonal shift
    for n in range(1, 9):
        expected = mat_add(pivot_outer(n, 1), mat_scale(shift_power(n, 1), -1))
        assert full_cycle_matrix(n, "down") == expected


def test_shift_power():
    assert shift_power(4, 1).rows() == (
        (0, 0, 0, 0),
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (0, 0, 1, 0),
    )
    assert shift_power(4, 4) == zero_matrix(4)
    assert shift_power(4, 0) == identity_matrix(4)
    for k in range(0, 5):
        assert shift_power(4, k) == mat_pow(shift_power(4, 1), k)
    with pytest.raises(ValueError):
        shift_power(4, 5)


@pytest.mark.parametrize("n", range(1, 9))
def test_involution_all_j(n):
    for j in range(1, n + 1):
        k = make_k(n, j)
        assert mat_mul(k, k) == identity_matrix(n)


@pytest.mark.parametrize("n", range(2, 9))
def test_braid_and_palindrome(n):
    for j in range(1, n + 1):
        for ell in range(1, n + 1):
            if j == ell:
                continue
            kj, kl = make_k(n, j), make_k(n, ell)
            assert mat_pow(mat_mul(kj, kl), 3) == identity_matrix(n)
            assert mat_mul(mat_mul(kj, kl), kj) == mat_mul(mat_mul(kl, kj), kl)


def _pair_product_direct(n, j, ell):
    # Id - e_j e_j^T - e_l e_l^T + e_l r_l + (-1)^(j+l) e_j e_l^T
    m = identity_matrix(n)
    m = mat_add(m, mat_scale(basis_outer(n, j, j), -1))
    m = mat_add(m, mat_scale(basis_outer(n, ell, ell), -1))
    m = mat_add(m, pivot_outer(n, ell))
    return mat_add(m, mat_scale(basis_outer(n, j, ell), sign_pow(j + ell)))


@pytest.mark.parametrize("n", range(2, 9))
def test_pair_product_closed_form(n):
    for j in range(1, n + 1):
        for ell in range(1, n + 1):
            if j == ell:
                continue
            expected = _pair_product_direct(n, j, ell)
            assert product_closed_form(n, (j, ell)) == expected
            assert k_word_product(n, (j, ell)) == expected


@pytest.mark.parametrize("n", range(2, 9))
def test_ordered_products_patterns(n):
    for s in range(2, n + 1):
        # ascending 1..s: zeroed diagonal above, -1 right of it, row s alternating
        up = identity_matrix(n)
        for j in range(1, s + 1):
            up = mat_add(up, mat_scale(basis_outer(n, j, j), -1))
        for j in range(1, s):
            up = mat_add(up, mat_scale(basis_outer(n, j, j + 1), -1))
        up = mat_add(up, pivot_outer(n, s))
        assert product_closed_form(n, range(1, s + 1)) == up

        # descending n..n-s+1
        down = identity_matrix(n)
        for j in range(1, s + 1):
            down = mat_add(down, mat_scale(basis_outer(n, n - j + 1, n - j + 1), -1))
        for j in range(1, s):
            down = mat_add(down, mat_scale(basis_outer(n, n - j + 1, n - j), -1))
        down = mat_add(down, pivot_outer(n, n - s + 1))
        assert product_closed_form(n, range(n, n - s, -1)) == down


@pytest.mark.parametrize("n", range(2, 9))
def test_reversed_products_patterns(n):
    for s in range(2, n + 1):
        rev = identity_matrix(n)
        for j in range(1, s + 1):
            rev = mat_add(rev, mat_scale(basis_outer(n, j, j), -1))
        for j in range(2, s + 1):
            rev = mat_add(rev, mat_scale(basis_outer(n, j, j - 1), -1))
        rev = mat_add(rev, pivot_outer(n, 1))
        assert product_closed_form(n, range(s, 0, -1)) == rev

        tail = identity_matrix(n)
        for j in range(1, s + 1):
            tail = mat_add(tail, mat_scale(basis_outer(n, n - j + 1, n - j + 1), -1))
        for j in range(2, s + 1):
            tail = mat_add(tail, mat_scale(basis_outer(n, n - j + 1, n - j + 2), -1))
        tail = mat_add(tail, pivot_outer(n, n))
        assert product_closed_form(n, range(n - s + 1, n + 1)) == tail


@pytest.mark.parametrize("n", range(1, 9))
def test_rank_one_identities(n):
    for j in range(1, n + 1):
        row = alternating_row(n, j)
        assert row[j - 1] == -1
        assert sum(v * v for v in row) == n
        for ell in range(1, n + 1):
            assert row[ell - 1] == sign_pow(j + ell - 1)
            assert alternating_row(n, ell)[j - 1] == row[ell - 1]
            if ell != j:
                lhs = mat_mul(pivot_outer(n, ell), pivot_outer(n, j))
                assert lhs == mat_scale(pivot_outer(n, ell), -1)
        for k in range(1, n + 1):
            assert mat_pow(pivot_outer(n, j), k) == mat_scale(
                pivot_outer(n, j), sign_pow(k + 1)
            )


def test_left_multiplication_changes_one_row():
    rng = random.Random(4242)
    for _ in range(20):
        n = rng.randint(2, 6)
        m = SmallIntMatrix.from_rows(
            [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        )
        j = rng.randint(1, n)
        left = mat_mul(make_k(n, j), m)
        for i in range(1, n + 1):
            if i != j:
                assert left.row(i) == m.row(i)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_closed_form_matches_brute_force(data):
    n = data.draw(st.integers(min_value=1, max_value=8))
    s = data.draw(st.integers(min_value=1, max_value=n))
    js = tuple(
        data.draw(
            st.permutations(range(1, n + 1)).map(lambda p: p[:s]),
            label="distinct indices",
        )
    )
    assert product_closed_form(n, js) == k_word_product(n, js)


def test_unit_entry_guard():
    twos = SmallIntMatrix.from_rows([[2, 0], [0, 2]])
    with pytest.raises(intmat.UnitEntryError):
        intmat.assert_unit_entries(twos)
