"""Symbolic (sigma, h, eps) elements against the matrix oracle."""

import random
from itertools import permutations

import pytest

from aughts.intmat import identity_matrix, make_k, mat_mul
from aughts.signed_perm import (
    NotGroupElementError,
    Permutation,
    SignedPermElement,
    element_order,
    format_element,
    generator,
    identity_element,
    matrix_to_msih,
    msih_inverse,
    msih_mul,
    parse_element,
    to_matrix,
)


def all_elements(n):
    out = []
    for images in permutations(range(1, n + 1)):
        sigma = Permutation.of(images)
        out.append(SignedPermElement.of(sigma, 1, 0))
        for h in range(1, n + 1):
            out.append(SignedPermElement.of(sigma, h, 1))
    return out


def random_element(n, rng):
    images = list(range(1, n + 1))
    rng.shuffle(images)
    eps = rng.randint(0, 1)
    return SignedPermElement.of(Permutation.of(images), rng.randint(1, n), eps)


def test_permutation_basics():
    p = Permutation.of([2, 3, 1])
    assert p.apply(1) == 2
    assert p.inverse().images == (3, 1, 2)
    assert p.then(p.inverse()).is_identity()
    assert p.order() == 3
    assert Permutation.transposition(4, 1, 3).images == (3, 2, 1, 4)
    with pytest.raises(ValueError):
        Permutation.of([1, 1, 2])


def test_composition_convention():
    # in a.then(b) the permutation a acts first
    a = Permutation.of([2, 1, 3])
    b = Permutation.of([1, 3, 2])
    assert a.then(b).images == (3, 1, 2)


def test_to_matrix_generators():
    for n in range(1, 6):
        for h in range(1, n + 1):
            assert to_matrix(generator(n, h)) == make_k(n, h)
    assert to_matrix(identity_element(4)) == identity_matrix(4)


def test_to_matrix_swap_example():
    e = SignedPermElement.of(Permutation.of([2, 1, 3]), 1, 0)
    assert to_matrix(e).rows() == ((0, -1, 0), (-1, 0, 0), (0, 0, 1))


def test_to_matrix_degree_mismatch():
    with pytest.raises(ValueError):
        to_matrix(identity_element(3), 4)


def test_eps0_normalizes_pivot():
    e = SignedPermElement.of(Permutation.of([2, 1]), 2, 0)
    assert e.h == 1
    assert e == SignedPermElement.of(Permutation.of([2, 1]), 1, 0)


def test_msih_mul_identity_and_involution():
    ident = identity_element(3)
    assert msih_mul(ident, ident) == ident
    for j in range(1, 4):
        assert msih_mul(generator(3, j), generator(3, j)) == ident


def test_msih_mul_degree_mismatch():
    with pytest.raises(ValueError):
        msih_mul(identity_element(3), identity_element(4))


def test_oracle_all_pairs_n3():
    elements = all_elements(3)
    assert len(elements) == 24
    mats = {e: to_matrix(e) for e in elements}
    for a in elements:
        for b in elements:
            assert to_matrix(msih_mul(a, b)) == mat_mul(mats[a], mats[b])


def test_oracle_random_pairs_n4():
    rng = random.Random(883)
    for _ in range(200):
        a, b = random_element(4, rng), random_element(4, rng)
        assert to_matrix(msih_mul(a, b)) == mat_mul(to_matrix(a), to_matrix(b))


def test_inverse_generators_self_inverse():
    for n in range(1, 6):
        for h in range(1, n + 1):
            g = generator(n, h)
            assert msih_inverse(g) == g


def test_inverse_flag_free():
    sigma = Permutation.of([3, 1, 2])
    e = SignedPermElement.of(sigma, 1, 0)
    assert msih_inverse(e) == SignedPermElement.of(sigma.inverse(), 1, 0)


def test_inverse_law_random_n5():
    rng = random.Random(97)
    ident = identity_element(5)
    for _ in range(100):
        e = random_element(5, rng)
        assert msih_mul(e, msih_inverse(e)) == ident
        assert msih_mul(msih_inverse(e), e) == ident


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_round_trip_and_inverse_all_elements(n):
    ident = identity_element(n)
    for e in all_elements(n):
        assert matrix_to_msih(to_matrix(e)) == e
        assert msih_mul(e, msih_inverse(e)) == ident


def test_matrix_to_msih_examples():
    assert matrix_to_msih(make_k(3, 2)) == generator(3, 2)
    assert matrix_to_msih(identity_matrix(4)) == identity_element(4)
    # K(2)K(4)K(2): flag-free element whose permutation swaps 2 and 4
    m = mat_mul(mat_mul(make_k(4, 2), make_k(4, 4)), make_k(4, 2))
    decoded = matrix_to_msih(m)
    assert decoded.eps == 0
    assert decoded.sigma.images == (1, 4, 3, 2)
    assert to_matrix(decoded) == m


def test_matrix_to_msih_rejects_non_elements():
    from aughts.intmat import SmallIntMatrix, zero_matrix

    with pytest.raises(NotGroupElementError):
        matrix_to_msih(zero_matrix(3))
    with pytest.raises(NotGroupElementError):
        matrix_to_msih(SmallIntMatrix.from_rows([[2, 0], [0, 1]]))
    with pytest.raises(NotGroupElementError):
        # right sign pattern, but columns collide
        matrix_to_msih(SmallIntMatrix.from_rows([[1, 0], [-1, 0]]))
    with pytest.raises(NotGroupElementError):
        # two full rows
        matrix_to_msih(SmallIntMatrix.from_rows([[-1, 1], [1, -1]]))


def test_element_order_small():
    assert element_order(identity_element(3)) == 1
    assert element_order(generator(3, 1)) == 2
    assert element_order(msih_mul(generator(3, 1), generator(3, 2))) == 3


def test_format_parse_round_trip():
    rng = random.Random(5)
    for _ in range(20):
        e = random_element(4, rng)
        assert parse_element(format_element(e)) == e
    assert format_element(generator(3, 2)) == "M(sigma=[1,2,3];h=2;eps=1)"
    assert parse_element("M(σ=[2,1];h=1;eps=0)") == SignedPermElement.of(
        Permutation.of([2, 1]), 1, 0
    )
    with pytest.raises(ValueError):
        parse_element("not an element")
