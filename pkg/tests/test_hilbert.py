from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dcurve import polys
from dcurve.diffring import pw_component
from dcurve.hilbert import (
    InsufficientData,
    LeftIdealPresentation,
    bernstein_closed_form,
    bernstein_dim,
    bernstein_onset,
    dimension_multiplicity,
    fit_quasi_polynomial,
    is_holonomic,
    module_hilbert,
)
from dcurve.indecomp import word
from dcurve.opalgebra import HomogeneousComponent, LaurentWeylOperator as Op, parse_operator
from dcurve.semigroup import NATURALS, PreconditionError, make_semigroup

from oracles import gamma_prime_count

G23 = make_semigroup([2, 3])
t, d, E = Op.t(), Op.d(), Op.euler()
GENS = [(1,), (2, 3), (2, 5), (3, 4, 5)]


def ideal(gamma, *ops):
    return LeftIdealPresentation(gamma, list(ops))


@pytest.mark.parametrize("gens", GENS)
def test_bernstein_dim_matches_gamma_prime_count(gens):
    gamma = make_semigroup(gens)
    for n in range(0, 16):
        assert bernstein_dim(gamma, n) == gamma_prime_count(gens, 40, n)


@pytest.mark.parametrize("gens", GENS)
def test_bernstein_closed_form_after_onset(gens):
    gamma = make_semigroup(gens)
    for n in range(bernstein_onset(gamma), 60):
        assert bernstein_dim(gamma, n) == bernstein_closed_form(gamma, n)


def test_bernstein_examples():
    assert bernstein_dim(NATURALS, 2) == 6
    assert bernstein_dim(G23, 40) == 41 * 42 // 2 - 2
    for g in (NATURALS, G23):
        assert bernstein_dim(g, -1) == 0


def test_profile_examples():
    assert module_hilbert(NATURALS, ideal(NATURALS, d * t), 20).dims[1:] == tuple(2 * n + 1 for n in range(1, 21))
    assert module_hilbert(NATURALS, ideal(NATURALS, t), 20).dims == tuple(n + 1 for n in range(21))
    prof = module_hilbert(G23, ideal(G23, Op.scalar(1)), 20)
    assert not any(prof.dims) and prof.exact


def test_fit_examples():
    qp = fit_quasi_polynomial(module_hilbert(G23, ideal(G23), 40))
    assert (qp.dimension, qp.multiplicity, qp.period) == (2, 1, 1)
    qp = fit_quasi_polynomial([n + 1 for n in range(40)])
    assert (qp.dimension, qp.multiplicity, qp.period) == (1, 1, 1)
    qp = fit_quasi_polynomial([n // 2 + 1 for n in range(40)])
    assert (qp.dimension, qp.multiplicity, qp.period) == (1, 1, 2)
    # n = 2k + r gives k + 1 in both classes
    assert qp.polys == (polys.make([1, 1]), polys.make([1, 1]))


def test_fit_rejects_short_or_non_quasi_polynomial_input():
    with pytest.raises(InsufficientData) as info:
        fit_quasi_polynomial([1, 2, 3])
    assert info.value.required_n_max
    with pytest.raises(InsufficientData):
        fit_quasi_polynomial([2 ** n for n in range(60)])


def test_zero_module_fit():
    qp = fit_quasi_polynomial([0] * 30)
    assert (qp.dimension, qp.multiplicity) == (-1, 0)


@given(st.integers(1, 4), st.integers(1, 5), st.integers(0, 5), st.integers(0, 3))
@settings(max_examples=40, deadline=None)
def test_fit_predicts_held_out_tail(period, lead, shift, seedling):
    # synthetic quasi-polynomial of degree 1 or 2 with period `period`
    def h(n):
        k, r = divmod(n, period)
        return lead * k * (k + 1) // 2 + (r + seedling) * k + shift + r

    data = [h(n) for n in range(80)]
    qp = fit_quasi_polynomial(data[:60])
    assert all(qp(n) == data[n] for n in range(qp.onset, 80))


def test_dimension_multiplicity_examples():
    assert dimension_multiplicity(NATURALS, ideal(NATURALS, E - Fraction(1, 2))) == (1, 2)
    for g in (NATURALS, G23):
        assert dimension_multiplicity(g, ideal(g)) == (2, 1)
    assert dimension_multiplicity(NATURALS, ideal(NATURALS, word("inf", 3).operator())) == (1, 3)


def test_is_holonomic_examples():
    assert is_holonomic(NATURALS, ideal(NATURALS, d))
    assert not is_holonomic(G23, ideal(G23))
    assert is_holonomic(NATURALS, ideal(NATURALS, (E - Fraction(1, 3)) * (E - 2)))


def test_saturation_agrees_with_principal_route():
    # a non-homogeneous principal ideal, written with two generators that span it
    p = parse_operator("d + t")
    single = module_hilbert(NATURALS, ideal(NATURALS, p), 16)
    double = module_hilbert(NATURALS, ideal(NATURALS, p, t * p), 16)
    assert double.method == "saturation" and double.dims == single.dims


def test_homogeneous_route_examples():
    # D/(Dt + Dd) = 0 and D/(D E + D (E-1)) = 0
    assert not any(module_hilbert(NATURALS, ideal(NATURALS, t, d), 10).dims)
    assert not any(module_hilbert(G23, ideal(G23, E, E - 1), 10).dims)
    # D/(D E^2 + D E (E-1)) = D/DE
    two = module_hilbert(NATURALS, ideal(NATURALS, E * E, E * (E - 1)), 20)
    one = module_hilbert(NATURALS, ideal(NATURALS, E), 20)
    assert two.method == "homogeneous" and two.dims == one.dims


def test_generators_must_lie_in_d():
    with pytest.raises(PreconditionError):
        ideal(G23, d)
    with pytest.raises(PreconditionError):
        module_hilbert(G23, ideal(G23), -1)


@given(st.integers(-3, 3), st.lists(st.integers(-2, 2), max_size=2),
       st.integers(-3, 3), st.lists(st.integers(-2, 2), max_size=2))
@settings(max_examples=25, deadline=None)
def test_multiplicity_is_additive_on_products(v, rv, w, rw):
    p = HomogeneousComponent(v, polys.mul(pw_component(G23, v).poly, polys.from_roots(rv))).to_operator()
    q = HomogeneousComponent(w, polys.mul(pw_component(G23, w).poly, polys.from_roots(rw))).to_operator()
    if p.bernstein_degree() < 1 or q.bernstein_degree() < 1:
        return
    dp, ep = dimension_multiplicity(G23, ideal(G23, p), 40)
    dq, eq = dimension_multiplicity(G23, ideal(G23, q), 40)
    dpq, epq = dimension_multiplicity(G23, ideal(G23, p * q), 40)
    assert dp == dq == dpq == 1
    assert epq == ep + eq
