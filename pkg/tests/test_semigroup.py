import pytest
from hypothesis import given, settings, strategies as st

from dcurve.semigroup import (
    NATURALS,
    PreconditionError,
    gamma_prime,
    in_gamma_prime,
    make_semigroup,
    omega,
    sigma,
)

from oracles import omega_bruteforce, semigroup_gcd, sieve

GENS = [(2, 3), (2, 5), (3, 4, 5), (3, 5), (4, 5, 7), (5, 6, 7, 8)]


@pytest.mark.parametrize("gens", GENS)
def test_gaps_match_sieve(gens):
    g = make_semigroup(gens)
    mem = sieve(gens, 200)
    assert set(g.gaps) == set(range(201)) - mem
    assert g.frobenius == max(set(range(201)) - mem)
    for n in range(-5, 201):
        assert g.contains(n) == (n in mem)


def test_examples():
    g = make_semigroup([2, 3])
    assert g.generators == (2, 3) and g.gaps == frozenset({1}) and g.frobenius == 1
    n = make_semigroup([1])
    assert n.is_full and n.frobenius == -1 and not n.gaps
    assert make_semigroup([4, 6, 2, 3]).generators == (2, 3)


def test_two_generator_frobenius_formula():
    # a b - a - b for coprime a, b
    for a, b in [(2, 3), (3, 5), (4, 7), (5, 9)]:
        assert make_semigroup([a, b]).frobenius == a * b - a - b


@pytest.mark.parametrize("raw,msg", [([4, 6], "gcd must be 1"), ([], "at least one"), ([0, 1], "positive")])
def test_rejects(raw, msg):
    with pytest.raises(PreconditionError, match=msg):
        make_semigroup(raw)


def test_omega_examples():
    g = make_semigroup([2, 3])
    assert omega(g, 1) == {0}
    assert omega(g, -1) == {0, 2}
    assert omega(NATURALS, 5) == frozenset()
    assert sigma(g, 1) == 1 and sigma(g, -1) == 2
    assert all(sigma(NATURALS, w) == 0 for w in range(20))


@pytest.mark.parametrize("gens", GENS)
def test_omega_matches_bruteforce(gens):
    g = make_semigroup(gens)
    for w in range(-25, 26):
        assert omega(g, w) == omega_bruteforce(gens, w)


@given(st.lists(st.integers(1, 12), min_size=1, max_size=4), st.integers(-50, 50))
@settings(max_examples=150, deadline=None)
def test_sigma_identity(gens, w):
    if semigroup_gcd(gens) != 1:
        return
    g = make_semigroup(gens)
    assert sigma(g, -w) == sigma(g, w) + w


@given(st.lists(st.integers(1, 12), min_size=1, max_size=4))
@settings(max_examples=60, deadline=None)
def test_generators_minimal_and_gaps_consistent(gens):
    if semigroup_gcd(gens) != 1:
        return
    g = make_semigroup(gens)
    assert sieve(g.generators, 150) == sieve(gens, 150)
    for a in g.generators:
        others = [b for b in g.generators if b != a]
        assert a not in sieve(others, a) if others else True
    for n in range(0, 3 * max(g.frobenius, 1) + 1):
        assert g.contains(n) != (n in g.gaps)


def test_omega_empty_iff_translation_preserves():
    g = make_semigroup([3, 4, 5])
    for w in range(-10, 15):
        closed = w >= 0 and all(g.contains(x + w) for x in g.elements(g.frobenius + abs(w) + 5))
        assert (omega(g, w) == frozenset()) == closed


def test_gamma_prime_examples():
    g = make_semigroup([2, 3])
    gp = gamma_prime(g)
    assert gp.gap_points == {(1, 0), (0, 1)} and gp.s == 2
    assert (1, 1) in gp.minimal_generators
    assert gamma_prime(NATURALS).s == 0
    with pytest.raises(PreconditionError):
        gamma_prime(NATURALS).minimal_generators


@pytest.mark.parametrize("gens", GENS)
def test_gamma_prime_stable_under_bound(gens):
    g = make_semigroup(gens)
    base = gamma_prime(g)
    bigger = gamma_prime(g, base.search_bound + 10)
    assert base.gap_points == bigger.gap_points
    for m, n in base.gap_points:
        assert not in_gamma_prime(g, m, n)


def test_gamma_prime_bound_too_small():
    with pytest.raises(PreconditionError, match="search bound"):
        gamma_prime(make_semigroup([3, 4, 5]), 0)


def test_gamma_prime_minimal_generators_bruteforce():
    # indecomposables of Gamma' found directly in a larger box
    g = make_semigroup([3, 5])
    box = 20
    pts = {(m, n) for m in range(box) for n in range(box) if (m, n) != (0, 0) and in_gamma_prime(g, m, n)}
    indec = {p for p in pts if not any((p[0] - a, p[1] - b) in pts for a, b in pts if (a, b) != p)}
    assert indec == set(gamma_prime(g).minimal_generators)
