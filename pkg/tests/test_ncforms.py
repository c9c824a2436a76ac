import random
from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from infty.cyclicshuffle import necklace_project
from infty.errors import IllegalPair, NonzeroOrder, NotInGeometryImage
from infty.gradedspace import LinComb, koszul_sign
from infty.ncforms import (FormRep, bilinear_and_nondegeneracy, cartan_suite, comparison_maps,
                           d0, d_form, euler_field, in_lie_image, lie_and_contraction,
                           one_form_basis, pj_report, poincare_report, random_vector_field,
                           zero_form_basis, zeta, zeta_report)

A, B = 0, 1


def form(geo, fd, payload, degrees):
    return FormRep(geo, fd, LinComb(payload), degrees)


def test_d0_examples():
    assert d0(form("Ass", 0, {(A,): 1}, (1,))).payload == LinComb({(A,): 1})
    assert d0(form("Ass", 0, {(A, B): 1}, (2, 2))).payload == LinComb({(A, B): 1, (B, A): 1})


def test_d0_ignores_the_representative():
    for degrees in ((2, 2), (1, 2), (1, 1)):
        x = d0(form("Ass", 0, {(A, B): 1}, degrees))
        sg = -1 if degrees[0] * degrees[1] % 2 else 1
        y = d0(form("Ass", 0, {(B, A): sg}, degrees))
        assert x == y


@pytest.mark.parametrize("geo", ["Ass", "Com", "Lie"])
def test_d_twice_is_zero(geo):
    for n in range(1, 5):
        for f in zero_form_basis(geo, (1, 2), n):
            assert d_form(d0(f)).is_zero()


@pytest.mark.parametrize("geo", ["Ass", "Com", "Lie"])
@pytest.mark.parametrize("degrees", [(1, 1), (1, 2), (2, 2)])
def test_norm_route_equals_derivation_route(geo, degrees):
    for n in range(1, 5):
        for f in zero_form_basis(geo, degrees, n):
            assert d0(f) == d_form(f)


def test_contraction_kills_zero_forms():
    xi = [LinComb({(A, B): 1}), LinComb({(B, B): 2})]
    f = form("Ass", 0, {(A, B): 1}, (1, 1))
    assert lie_and_contraction(xi, f, "i", 1).is_zero()


@pytest.mark.parametrize("geo", ["Ass", "Com", "Lie"])
def test_euler_field_counts_letters(geo):
    degrees = (1, 2)
    E = euler_field(degrees)
    for n in range(0, 5):
        for f in zero_form_basis(geo, degrees, n):
            assert lie_and_contraction(E, f, "L", 0).payload == f.payload.scaled(n)
        # a 1-form of order n - 1 carries one differential
        for f in one_form_basis(geo, degrees, n):
            assert lie_and_contraction(E, f, "L", 0).payload == f.payload.scaled(n)


@pytest.mark.parametrize("geo", ["Ass", "Com", "Lie"])
@pytest.mark.parametrize("degrees", [(1, 1), (1, 2)])
def test_cartan_identities(geo, degrees):
    rep = cartan_suite(degrees, geo, max_order=3, form_weight=3, trials=2, seed=7)
    assert rep.passed, rep.failures[:3]
    assert rep.info["checked"] > 0


def test_cartan_detects_a_wrong_sign():
    # flipping the sign of d i_xi in L = i d + (-1)^|xi| d i breaks identity (i)
    degrees = (1, 1)
    rng = random.Random(3)
    xi = random_vector_field(degrees, 1, 2, rng)
    broken = 0
    for f in one_form_basis("Ass", degrees, 3):
        lhs = lie_and_contraction(xi, f, "L", 1).payload
        a = lie_and_contraction(xi, d_form(f), "i", 1).payload
        b = d0(lie_and_contraction(xi, f, "i", 1)).payload
        good = FormRep("Ass", 1, lhs - a + b, degrees)
        bad = FormRep("Ass", 1, lhs - a - b, degrees)
        assert good.is_zero()
        broken += not bad.is_zero()
    assert broken


def test_pj_is_factorial():
    f = form("Com", 1, {(A, A, B): 1}, (2, 2))
    y = comparison_maps(comparison_maps(f, "j"), "p")
    assert y.payload == f.payload.scaled(factorial(2))
    for degrees in ((1, 1), (1, 2), (2, 2)):
        assert pj_report(degrees, 4).passed


def test_l_on_weight_one_is_inclusion():
    f = form("Lie", 1, {(A,): 1}, (1, 1))
    assert comparison_maps(f, "l").payload == f.payload
    assert comparison_maps(f, "l").geometry == "Ass"


def partial_symmetrization(w, degrees):
    """sum over permutations sigma of the letters after the first, with Koszul signs."""
    out = LinComb()
    tail = w[1:]
    tdeg = [degrees[g] for g in tail]
    for perm in permutations(range(1, len(tail) + 1)):
        nw = w[:1] + tuple(tail[k - 1] for k in perm)
        out.add_term(nw, koszul_sign(list(perm), tdeg))
    return out


@pytest.mark.parametrize("degrees", [(1, 1), (1, 2), (2, 2)])
def test_j_intertwines_d_and_symmetrization(degrees):
    for n in range(1, 5):
        for f in zero_form_basis("Com", degrees, n):
            (w, c), = f.payload.items()
            lhs = comparison_maps(d0(f), "j")
            partial = form("Ass", 0, necklace_project(partial_symmetrization(w, degrees),
                                                      degrees).scaled(c), degrees)
            assert lhs == d0(partial)
            # full symmetrization overcounts by the n rotations
            full = d0(comparison_maps(f, "i"))
            assert full.payload == lhs.payload.scaled(n)


def test_illegal_pairs():
    with pytest.raises(IllegalPair):
        comparison_maps(form("Ass", 1, {(A,): 1}, (1,)), "j")
    with pytest.raises(IllegalPair):
        comparison_maps(form("Com", 0, {(A,): 1}, (1,)), "j")
    with pytest.raises(IllegalPair):
        comparison_maps(form("Ass", 0, {(A,): 1}, (1,)), "q")


def test_zeta_examples():
    for da, db in ((1, 1), (1, 2), (2, 2)):
        w = form("Ass", "closed2", {(A, B): 1}, (da, db))
        sg = -1 if da * db % 2 else 1
        assert zeta(w) == LinComb({(A, B): 1, (B, A): -sg})
    x = form("Ass", 0, {(A, B, B): 1}, (2, 2))
    assert not zeta(form("Ass", "closed2", d0(x).payload, (2, 2)))


def test_zeta_lie_is_zeta_ass_after_l():
    degrees = (1, 2)
    for n in range(2, 5):
        for f in one_form_basis("Lie", degrees, n):
            w = FormRep("Lie", "closed2", f.payload, degrees)
            assert zeta(w, "Lie") == zeta(comparison_maps(w, "l"), "Ass")


def test_zeta_rejects_forms_outside_the_geometry():
    with pytest.raises(NotInGeometryImage):
        zeta(form("Ass", "closed2", {(A, A, B): 1}, (2, 2)), "Lie")
    with pytest.raises(NotInGeometryImage):
        zeta(form("Ass", "closed2", {(A, B): 1}, (2, 2)), "Com")


@pytest.mark.parametrize("degrees", [(1, 1), (1, 2)])
def test_zeta_bijective_per_slice(degrees):
    rep = zeta_report(degrees, max_order=3)
    assert rep.passed, rep.failures[:2]


@pytest.mark.parametrize("geo", ["Ass", "Com", "Lie"])
def test_poincare_lemma(geo):
    rep = poincare_report((1, 2), geo, max_weight=5)
    assert rep.passed, rep.failures[:2]
    h0 = [r["H0"] for r in rep.info["rows"]]
    assert h0 == ([1, 0, 0, 0, 0, 0] if geo != "Lie" else [0] * 6)


def test_bilinear_examples():
    Bm, nondeg = bilinear_and_nondegeneracy({(0, 1): 1}, (0, 0))
    assert Bm.matrix == [[0, -1], [1, 0]] and nondeg and Bm.symmetry == "skew"
    Bm, nondeg = bilinear_and_nondegeneracy({}, (0, 0))
    assert Bm.rank == 0 and not nondeg
    Bm, nondeg = bilinear_and_nondegeneracy({(0, 1): 1}, (0, 0, 0))
    assert Bm.rank == 2 and not nondeg
    with pytest.raises(NonzeroOrder):
        bilinear_and_nondegeneracy({(0, 1, 1): 1}, (0, 0))


def test_bilinear_from_a_closed_form():
    w = form("Ass", "closed2", {(0, 1): 2, (1, 0): 1}, (1, 1))
    Bm, nondeg = bilinear_and_nondegeneracy(w, (0, 0))
    assert nondeg
    # zeroing a row of the coefficients leaves a degenerate pairing
    Bm, nondeg = bilinear_and_nondegeneracy({(0, 0): 1}, (0, 0))
    assert not nondeg


def test_lie_slices_are_detected():
    degrees = (1, 2)
    for f in one_form_basis("Lie", degrees, 3):
        assert in_lie_image(FormRep("Ass", 1, f.payload, degrees))
    assert not in_lie_image(form("Ass", 1, {(A, A, B): 1}, (2, 2)))


words = st.lists(st.integers(0, 1), min_size=1, max_size=4)


@settings(max_examples=40, deadline=None)
@given(words, st.integers(0, 1), st.integers(0, 10 ** 6))
def test_lie_derivative_commutes_with_d(w, k, seed):
    degrees = (1, 2)
    xi = random_vector_field(degrees, k, 2, random.Random(seed))
    f = form("Ass", 1, {tuple(w): 1}, degrees)
    lhs = lie_and_contraction(xi, d_form(f), "L", k)
    rhs = d_form(lie_and_contraction(xi, f, "L", k))
    sg = -1 if k & 1 else 1
    assert lhs == FormRep("Ass", "closed2", rhs.payload.scaled(sg), degrees)
