from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dcurve import polys
from dcurve.diffring import pw_component
from dcurve.modules import (
    build_a,
    build_malpha,
    build_minfty,
    build_nalpha,
    build_t_mod_a,
    check_relations,
    cyclic_quotient,
    generated_submodule,
    graded_hom_degree_zero,
    graded_isomorphism,
    inner_window,
    is_simple_certified,
    localization_check,
    localize,
    nalpha_shift_map_commutes,
    quotient,
    torsion_submodule,
    twist,
)
from dcurve.opalgebra import HomogeneousComponent
from dcurve.semigroup import NATURALS, PreconditionError, make_semigroup

from oracles import sieve

G23 = make_semigroup([2, 3])
W = (-12, 12)
HALF, THIRD = Fraction(1, 2), Fraction(1, 3)
D_OP = HomogeneousComponent(-1, polys.X)   # d
T_OP = HomogeneousComponent(1, polys.ONE)  # t
E_OP = HomogeneousComponent(0, polys.X)    # E


def inner(m):
    lo, hi = inner_window(m.window)
    return range(lo, hi + 1)


def test_a_piece_dims():
    a = build_a(G23, (0, 6))
    assert [a.dim(d) for d in range(7)] == [1, 0, 1, 1, 1, 1, 1]
    mem = sieve((2, 5), 30)
    a25 = build_a(make_semigroup([2, 5]), (0, 30))
    assert all(a25.dim(n) == (n in mem) for n in range(31))
    assert all(build_a(NATURALS, (0, 10)).dim(n) == 1 for n in range(11))


def test_a_action_of_p_minus_two():
    a = build_a(G23)
    (c,), = a.act(pw_component(G23, -2), 2)
    assert c != 0


def test_nalpha_actions():
    n0 = build_nalpha(0)
    assert n0.act(D_OP, 0) == [[0]]
    nh = build_nalpha(HALF)
    assert nh.act(D_OP, 0) == [[HALF]]
    for n in range(-5, 6):
        assert nh.act(T_OP, n) == [[1]]
        assert nh.act(HomogeneousComponent(0, polys.make([-HALF, 1])), n) == [[n]]


def test_malpha_pieces():
    for g in (NATURALS, G23):
        m = build_malpha(g, HALF)
        assert all(m.dim(d) == 1 for d in inner(m))
    assert build_malpha(G23, 0).tag == build_a(G23).tag
    for bad in (1, Fraction(-1, 2), Fraction(3, 2)):
        with pytest.raises(PreconditionError):
            build_malpha(G23, bad)


@pytest.mark.parametrize("alpha", [HALF, THIRD])
def test_malpha_matches_submodule_of_nalpha(alpha):
    n = build_nalpha(alpha, W, G23)
    sub = quotient(n, generated_submodule(n, [(0, [1])]), "N/De0")
    # D e_0 is all of N_alpha, so the quotient vanishes on the window
    assert all(sub.dim(d) == 0 for d in inner(n))
    assert graded_isomorphism(build_malpha(G23, alpha), n) is not None


def test_minfty_weyl_formulas():
    m = build_minfty(NATURALS)
    assert m.act(E_OP, 0) == [[-1]]
    for j in range(0, 8):
        assert m.dim(-j) == 1 and m.dim(j + 1) == 0
        assert m.act(E_OP, -j) == [[-(j + 1)]]


def test_minfty_is_torsion_and_a_is_not():
    for g in (NATURALS, G23):
        m = build_minfty(g)
        tors = torsion_submodule(m)
        assert all(tors.dim(d) == m.dim(d) for d in m.degrees())
        a = build_a(g)
        assert not any(torsion_submodule(a).dim(d) for d in a.degrees())
        with pytest.raises(PreconditionError):
            localize(m)


def test_t_mod_a_is_torsion():
    m = build_t_mod_a(G23)
    tors = torsion_submodule(m)
    assert all(tors.dim(d) == m.dim(d) for d in m.degrees())


@pytest.mark.parametrize("gamma", [NATURALS, G23])
def test_simples_certified(gamma):
    for m in (build_a(gamma), build_malpha(gamma, HALF), build_malpha(gamma, THIRD), build_minfty(gamma)):
        verdict, cert = is_simple_certified(m)
        assert verdict is True, cert.reason


def test_non_simple_examples():
    m = cyclic_quotient(NATURALS, HomogeneousComponent(0, polys.make([1, 1])))  # d t = E + 1
    verdict, cert = is_simple_certified(m)
    assert verdict is False and cert.witness
    sq = cyclic_quotient(NATURALS, HomogeneousComponent(0, polys.power(polys.make([-HALF, 1]), 2)))
    assert is_simple_certified(sq)[0] is False


def test_inconclusive_on_zero_window():
    verdict, cert = is_simple_certified(build_minfty(NATURALS, (4, 16)))
    assert verdict is None and cert.to_json()["verdict"] == "inconclusive"


def test_hom_examples():
    assert graded_hom_degree_zero(build_a(G23), build_a(G23)).dim == 1
    assert graded_hom_degree_zero(build_malpha(G23, HALF), build_malpha(G23, THIRD)).dim == 0
    assert graded_hom_degree_zero(build_minfty(G23), build_a(G23)).dim == 0


@pytest.mark.parametrize("gamma", [NATURALS, G23])
@pytest.mark.parametrize("alpha", [0, HALF, THIRD])
def test_localization(gamma, alpha):
    assert localization_check(gamma, alpha)


@given(st.fractions(min_value=-3, max_value=3, max_denominator=5), st.integers(-3, 3))
@settings(max_examples=30, deadline=None)
def test_nalpha_shift(beta, k):
    assert nalpha_shift_map_commutes(beta + k, beta, (-8, 8))


def test_nalpha_shift_rejects_non_integer_difference():
    with pytest.raises(PreconditionError):
        nalpha_shift_map_commutes(HALF, THIRD)


def test_twist_pieces():
    m = build_a(G23)
    tw = twist(m, 3)
    assert all(tw.dim(i) == m.dim(i + 3) for i in range(-6, 6))
    assert twist(m, 0) is m


@pytest.mark.parametrize("gamma", [NATURALS, G23])
def test_relations_hold(gamma):
    for m in (build_a(gamma), build_malpha(gamma, HALF), build_minfty(gamma), build_t_mod_a(gamma),
              twist(build_minfty(gamma), 2)):
        assert check_relations(m)


def test_action_respects_grading_and_quotient_relation():
    p = HomogeneousComponent(0, polys.make([-THIRD, 1]))
    m = cyclic_quotient(G23, p)
    # the cyclic vector is killed by its relation
    assert not any(m.apply(p, 0, [1]))
    g = pw_component(G23, 3)
    mat = m.act(g, -2)
    assert len(mat) == m.dim(1) and all(len(r) == m.dim(-2) for r in mat)


def test_cyclic_quotient_rejects_operators_outside_d():
    with pytest.raises(PreconditionError):
        cyclic_quotient(G23, D_OP)
