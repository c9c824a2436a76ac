import pytest

from infty import GradedBasis, InftyStructure
from infty.cycliccomplex import cyclic_harrison_window, cyclic_window, tsygan_window
from infty.errors import NotCinfty, NotMinimal, NotUnital
from infty.fixtures import (dual_numbers, field, nonstrict_cinf, truncated_polynomial,
                            upper_triangular, zero_structure)
from infty.hodge import (decompose_cyclic, decompose_hochschild, gamma_strip,
                         harrison_I_behaviour, verify_decomposed_les)
from infty.homcomplex import harrison_window, hochschild_b, restrict

import oracles


def test_dual_numbers_rows_sum_to_oracle():
    T = decompose_hochschild(dual_numbers(), range(0, 6), cap=7)
    oracle = oracles.hochschild_chain_dims(oracles.truncated_poly_mult(2), 2, 5)
    assert T.block_diagonal and T.info["complete_splitting"]
    for n in range(0, 6):
        assert T.exact[n]
        assert T.row_sum(n) == T.totals[n] == oracle[n]


def test_harrison_is_the_first_summand():
    S = truncated_polynomial(3)
    T = decompose_hochschild(S, range(0, 5), cap=6)
    H = harrison_window(S, range(0, 5), cap=6)
    for n in range(0, 5):
        assert T.dim(n, 1) == H.cohomology(n)
    # and independently: Theta-words with a Lie bracket tail
    W = hochschild_b(S, range(0, 5), cap=6)
    vecs = {n: oracles.harrison_vectors(S.wdeg, n + 1) for n in W.basis}
    R, _ = restrict(W, vecs)
    summand = T.info["summands"][1]
    for n in W.basis:
        assert R.dim(n) == summand.dim(n)
    assert R.dims() == summand.dims()


def test_zero_structure_gives_eigenspace_dims():
    from infty.cyclicshuffle import eigen_dim
    S = zero_structure((("a", 0), ("b", 0)), "cinf")
    T = decompose_hochschild(S, range(0, 4), cap=5, which="bar")
    for n in range(0, 4):
        for j in range(0, 6):
            assert T.dim(n, j) == eigen_dim(j, n + 1, S.wdeg)


@pytest.mark.parametrize("which", ["bar", "dual", "adjoint"])
@pytest.mark.parametrize("S", [truncated_polynomial(3), nonstrict_cinf()], ids=["x3", "nonstrict"])
def test_block_diagonal_and_complete(which, S):
    T = decompose_hochschild(S, range(0, 3), cap=4, which=which)
    assert T.block_diagonal and T.info["complete_splitting"]
    assert T.sums_ok()


def test_strict_inputs_carry_order():
    T = decompose_hochschild(truncated_polynomial(3), range(0, 3), cap=4)
    assert all(len(k) == 3 for k in T.dims)
    assert all(r["order"] is not None for r in T.rows())


def test_noncommutative_input_is_rejected():
    with pytest.raises(NotCinfty):
        decompose_hochschild(upper_triangular(), 2, cap=3)
    with pytest.raises(NotCinfty):
        decompose_cyclic(upper_triangular(), 2, cap=3)


def test_gamma_strip_width():
    S = dual_numbers()
    T = tsygan_window(S, range(0, 3), cap=6)
    for j in range(0, 4):
        R, subs = gamma_strip(S, T, j)
        assert R.info["width"] == 2 * j + 1
        cols = {lab[0] for n in R.basis for v in R.basis[n] for lab in v}
        assert cols <= set(range(0, 2 * j + 1))
        assert R.info["invariant"]


def test_cyclic_models_split_alike():
    S = dual_numbers()
    C = decompose_cyclic(S, range(0, 5), cap=7)
    G = decompose_cyclic(S, range(0, 5), cap=11, model="tsygan")
    assert C.block_diagonal and G.block_diagonal
    for n in range(0, 5):
        for j in range(0, 6):
            assert C.dim(n, j) == G.dim(n, j)
        assert C.row_sum(n) == C.totals[n] == G.totals[n]


def test_cyclic_first_summand_is_cyclic_harrison():
    S = truncated_polynomial(3)
    C = decompose_cyclic(S, range(0, 5), cap=6)
    H = cyclic_harrison_window(S, range(0, 5), cap=6)
    for n in range(0, 5):
        assert C.dim(n, 1) == H.cohomology(n)


def test_field_cyclic_table():
    C = decompose_cyclic(field(), range(0, 5), cap=6, by_order=True)
    nonzero = {k: v for k, v in C.dims.items() if v}
    assert nonzero == {(0, 0, 1): 1, (2, 1, 3): 1, (4, 2, 5): 1}


def test_decomposed_periodicity_sequence():
    rep = verify_decomposed_les(dual_numbers(), range(0, 4), cap=8, jrange=range(0, 3))
    assert rep["passed"]
    for j, R in rep["per_j"].items():
        assert all(r["pair_matches_HH"] for r in R["rows"] if r["exact"])


def test_harrison_sequence_and_corollary():
    S = truncated_polynomial(3)
    rep = verify_decomposed_les(S, range(0, 6), cap=9, kind="harrison")
    assert rep["passed"] and rep["H_Vstar_matches_strip"]
    beh = harrison_I_behaviour(S, range(0, 6), cap=9)
    assert beh[1]["injective"]
    assert beh[2]["surjective"] and not beh[2]["injective"]
    for i in range(3, 6):
        assert beh[i]["exact"] and beh[i]["injective"] and beh[i]["surjective"]


def test_harrison_sequence_with_linear_part():
    # 1 in degree 0, d b = a with b in degree -1: H(V) is spanned by the unit
    V = GradedBasis([("1", 0), ("a", 0), ("b", -1)])
    S = InftyStructure.from_mcheck("cinf", V, {1: {(2,): {1: 1}},
                                               2: {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1},
                                                   (0, 2): {2: 1}, (2, 0): {2: 1}}}, unit=0)
    rep = verify_decomposed_les(S, range(0, 4), cap=7, kind="harrison")
    assert rep["passed"]
    assert {n: d for n, d in rep["H_Vstar"].items() if d} == {0: 1}


def test_normalised_sequence_splits():
    rep = verify_decomposed_les(dual_numbers(), range(0, 4), cap=6, kind="normalised")
    assert rep["passed"]
    with pytest.raises(NotUnital):
        verify_decomposed_les(dual_numbers(unital=False), 2, cap=3)


def test_csv_columns():
    T = decompose_hochschild(dual_numbers(), range(0, 2), cap=3)
    head = T.to_csv().splitlines()[0]
    assert head == "degree,order,j,dim,exact"
