from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from infty.cyclicshuffle import (N_matrix, act_N, act_z, apply_e, eigen_basis, eigen_dim,
                                 idempotent_e, necklace_basis, necklace_project, s_bar,
                                 s_matrix, shuffle_s, z_matrix)
from infty.errors import EmptyWord, MixedWeight
from infty.exactlin import RationalMatrix
from infty.gradedspace import LinComb

import oracles

A, B, C = 0, 1, 2


def L(d):
    return LinComb(d)


def test_z_examples():
    assert act_z(L({(A,): 1}), [1]) == L({(A,): 1})
    assert act_z(L({(A, B): 1}), [1, 1]) == L({(B, A): -1})
    # the first letter moves to the end
    assert act_z(L({(A, B, C): 1}), [2, 2, 2]) == L({(B, C, A): 1})


def test_z_rejects_mixed_weight():
    with pytest.raises(MixedWeight):
        act_z(L({(A,): 1, (A, B): 1}), [1, 1])


def test_N_examples():
    assert act_N(L({(A,): 1}), [1]) == L({(A,): 1})
    assert act_N(L({(A, B): 1}), [1, 1]) == L({(A, B): 1, (B, A): -1})
    assert act_N(L({(A, B): 1}), [2, 2]) == L({(A, B): 1, (B, A): 1})


@pytest.mark.parametrize("degrees", [(1, 1), (1, 2), (2, 3)])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_z_has_order_n_and_N_is_its_norm(degrees, n):
    Z = z_matrix(n, degrees)
    P = RationalMatrix.identity(Z.rows)
    total = RationalMatrix.zero(Z.rows, Z.rows)
    for _ in range(n):
        total = total + P
        P = Z @ P
    assert P == RationalMatrix.identity(Z.rows)
    assert total == N_matrix(n, degrees)


def test_s_examples():
    assert shuffle_s(L({(A,): 1}), [1]) == L({(A,): 2})
    assert shuffle_s(L({(A, B): 1}), [1, 1]) == L({(A, B): 3, (B, A): -1})
    assert shuffle_s(L({(A, B): 1, (B, A): 1}), [1, 1]) == L({(A, B): 2, (B, A): 2})
    with pytest.raises(EmptyWord):
        shuffle_s(L({(): 1}), [1])


def test_s_tilde_fixes_the_first_letter():
    x = L({(A, B, C): 1})
    assert shuffle_s(x, [1, 1, 1], "tilde") == L({(A, B, C): 3, (A, C, B): -1})


def test_idempotent_examples():
    assert idempotent_e(1, 1, [1, 1]) == RationalMatrix.identity(2)
    assert idempotent_e(0, 1, [1, 1]).is_zero()
    assert apply_e(1, L({(A, B): 1}), [1, 1]) == L({(A, B): Fraction(1, 2), (B, A): Fraction(1, 2)})
    assert idempotent_e(5, 3, [1]).is_zero()


@pytest.mark.parametrize("degrees", [(1, 1), (1, 2), (2, 2, 1)])
def test_idempotents_resolve_the_identity(degrees):
    for n in range(1, 5):
        Es = [idempotent_e(j, n, degrees) for j in range(n + 1)]
        total = RationalMatrix.zero(Es[0].rows, Es[0].rows)
        S = RationalMatrix.zero(Es[0].rows, Es[0].rows)
        for j, E in enumerate(Es):
            total = total + E
            S = S + E.scale(2 ** j)
            assert E @ E == E
        assert total == RationalMatrix.identity(total.rows)
        assert S == s_matrix(n, degrees)


def test_s_bar_examples():
    assert s_bar({0: L({(1,): 1})}, [1, 1]) == {0: L({(1,): 2})}
    assert s_bar({}, [1]) == {}
    br = L({(A, B): 1, (B, A): 1})
    assert s_bar({0: br}, [1, 1]) == {0: br.scaled(2)}


def test_necklace_examples():
    assert not necklace_project(L({(A, B): 1}) - L({(A, B): 1}), [2, 2])
    assert necklace_project(L({(B, A): 1}), [2, 2]) == L({(A, B): 1})
    assert not necklace_project(L({(A, A): 1}), [1])


@pytest.mark.parametrize("degrees", [(1, 1), (1, 2)])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_necklace_kernel_is_image_of_one_minus_z(degrees, n):
    from infty.gradedspace import enumerate_words
    words = enumerate_words(degrees, n)
    image = [act_z(L({w: 1}), degrees) - L({w: 1}) for w in words]
    # dim words = rank(1 - z) + number of necklaces
    assert len(words) == oracles.dict_rank(image) + len(necklace_basis(degrees, n))
    for v in image:
        assert not necklace_project(v, degrees)


@pytest.mark.parametrize("degrees,top", [((2, 2), 6), ((1, 1), 5), ((1, 2), 5), ((2, 1, 1), 4)])
def test_e1_image_is_the_free_lie_algebra(degrees, top):
    for n in range(1, top + 1):
        lie = oracles.lie_monomials(degrees, n)
        img = eigen_basis(1, n, degrees)
        assert oracles.same_span(img, lie)
        if all(d % 2 == 0 for d in degrees):
            assert len(img) == oracles.witt(len(degrees), n)


def test_witt_numbers_for_two_even_generators():
    assert [eigen_dim(1, n, [2, 2]) for n in range(1, 7)] == [2, 1, 2, 3, 6, 9]


words3 = st.lists(st.integers(0, 2), min_size=1, max_size=5)


@settings(max_examples=40, deadline=None)
@given(words3, st.lists(st.integers(1, 3), min_size=3, max_size=3))
def test_rotation_commutes_with_norm(w, degrees):
    x = L({tuple(w): 1})
    assert act_N(act_z(x, degrees), degrees) == act_N(x, degrees)
    assert not necklace_project(act_z(x, degrees) - x, degrees)


@settings(max_examples=40, deadline=None)
@given(words3, st.lists(st.integers(1, 3), min_size=3, max_size=3))
def test_e1_values_are_primitive(w, degrees):
    x = apply_e(1, L({tuple(w): 1}), degrees)
    assert shuffle_s(x, degrees) == x.scaled(2) if x else True
