import pytest
from hypothesis import given, settings, strategies as st

from dcurve import polys
from dcurve.diffring import (
    build_pw,
    dw_basis,
    generator_components,
    generator_degrees,
    generators_of_d,
    gr_generator_exponents,
    prune_to_minimal,
    pw_component,
    symbol,
    verify_gr_generators,
)
from dcurve.linalg import Echelon
from dcurve.opalgebra import HomogeneousComponent, LaurentWeylOperator as Op, apply, membership
from dcurve.semigroup import NATURALS, PreconditionError, gamma_prime, in_gamma_prime, make_semigroup, sigma

from oracles import sieve

G23 = make_semigroup([2, 3])
GAMMAS = [make_semigroup(g) for g in [(2, 3), (2, 5), (3, 4, 5), (3, 5, 7)]]
t, d, E = Op.t(), Op.d(), Op.euler()


def test_pw_examples():
    assert build_pw(G23, 1) == t * E
    assert build_pw(G23, -1) == Op.t(-1) * E * (E - 2)
    assert build_pw(NATURALS, -1) == d


def test_generator_examples():
    assert generator_degrees(G23) == [-3, -2, -1, 1, 2, 3]
    assert set(generators_of_d(NATURALS)) == {E, t, d}
    assert [c.degree for c in generator_components(make_semigroup([3, 4, 5]))] == [-5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5]


@pytest.mark.parametrize("gamma", GAMMAS)
def test_generators_preserve_a(gamma):
    mem = sieve(gamma.generators, 80)
    top = gamma.frobenius + 2 * max(gamma.generators)
    for p in generators_of_d(gamma):
        assert membership(p, gamma)
        for g in range(top + 1):
            if g in mem:
                assert all(e in mem for e in apply(p, {g: 1}))


@pytest.mark.parametrize("gamma", GAMMAS)
def test_pw_degree_order_minimality(gamma):
    for w in range(-12, 13):
        c = pw_component(gamma, w)
        assert c.degree == w and c.order() == sigma(gamma, w)
        assert membership(c.to_operator(), gamma)
        # dropping any root of the product leaves D
        roots = sorted(gamma.omega(w))
        for i in range(len(roots)):
            smaller = HomogeneousComponent(w, polys.from_roots(roots[:i] + roots[i + 1:]))
            assert not membership(smaller.to_operator(), gamma)
        a, b = symbol(c)[0].exponents
        assert in_gamma_prime(gamma, a, b) and b == sigma(gamma, a - b)


def test_dw_basis_examples():
    assert dw_basis(G23, 1, 2) == [t * E, t * E * E]
    assert dw_basis(G23, 0, 0) == [Op.scalar(1)]
    assert dw_basis(NATURALS, -1, 1) == [d]
    assert dw_basis(NATURALS, -1, 2) == [d, d * E]
    assert dw_basis(G23, -1, 1) == []


@given(st.integers(-6, 6), st.lists(st.integers(-3, 3), min_size=1, max_size=5))
@settings(max_examples=80, deadline=None)
def test_dw_basis_spans_members(w, coeffs):
    # a multiple of P_w lies in the span of the D_w basis up to its order
    f = polys.mul(pw_component(G23, w).poly, polys.make(coeffs))
    if not f:
        return
    p = HomogeneousComponent(w, f)
    basis = dw_basis(G23, w, p.order())
    rows = [list(polys.make(b.components()[0].poly)) + [0] * (p.order() + 1 - len(b.components()[0].poly)) for b in basis]
    ech = Echelon(p.order() + 1, rows)
    assert ech.contains(list(f) + [0] * (p.order() + 1 - len(f)))


def test_symbol_examples():
    s = symbol(build_pw(G23, 1), G23)
    assert [m.exponents for m in s] == [(2, 1)]
    assert [m.exponents for m in symbol(E)] == [(1, 1)]
    assert [m.exponents for m in symbol(t**3)] == [(3, 0)]
    with pytest.raises(PreconditionError):
        symbol(d, G23)


@pytest.mark.parametrize("gamma", GAMMAS)
def test_symbol_of_pw(gamma):
    for w in range(-20, 21):
        (m,) = symbol(pw_component(gamma, w))
        assert m.exponents == (sigma(gamma, -w), sigma(gamma, w)) and m.coeff == 1


@given(st.integers(-8, 8), st.integers(-8, 8))
@settings(max_examples=60, deadline=None)
def test_symbols_multiply(v, w):
    a, b = pw_component(G23, v), pw_component(G23, w)
    (sa,), (sb,), (sab,) = symbol(a), symbol(b), symbol(a * b)
    assert sab.exponents == (sa.t_exp + sb.t_exp, sa.xi_exp + sb.xi_exp)


@pytest.mark.parametrize("gamma", GAMMAS)
def test_verify_gr_generators(gamma):
    assert verify_gr_generators(gamma)
    assert (1, 1) in gamma_prime(gamma).minimal_generators


def test_gr_generators_refused_for_weyl():
    with pytest.raises(PreconditionError):
        gr_generator_exponents(NATURALS)


def test_prune_to_minimal():
    assert prune_to_minimal({(1, 0), (0, 1), (1, 1), (2, 1)}) == {(1, 0), (0, 1)}


def test_order_of_pw_is_sigma_cross_check():
    # the order of P_w, read from the normal form, equals sigma(w)
    for gamma in GAMMAS:
        for w in range(-10, 11):
            assert build_pw(gamma, w).order() == sigma(gamma, w)
