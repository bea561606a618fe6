from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from dcurve import linalg, polys

x = sympy.Symbol("x")
coeffs = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), max_size=6)


def to_sympy(f):
    return sympy.Integer(0) + sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(f))


@given(coeffs, coeffs)
@settings(max_examples=100, deadline=None)
def test_ring_ops_match_sympy(a, b):
    f, g = polys.make(a), polys.make(b)
    assert sympy.expand(to_sympy(polys.mul(f, g)) - to_sympy(f) * to_sympy(g)) == 0
    assert sympy.expand(to_sympy(polys.add(f, g)) - to_sympy(f) - to_sympy(g)) == 0
    if g:
        q, r = polys.divmod_(f, g)
        sq, sr = sympy.div(to_sympy(f), to_sympy(g), x)
        assert sympy.expand(to_sympy(q) - sq) == 0 and sympy.expand(to_sympy(r) - sr) == 0
    if f or g:
        assert sympy.expand(to_sympy(polys.gcd(f, g)) - sympy.gcd(to_sympy(f), to_sympy(g)) / sympy.LC(sympy.gcd(to_sympy(f), to_sympy(g)), x)) == 0


@given(coeffs, st.fractions(min_value=-4, max_value=4, max_denominator=3))
@settings(max_examples=60, deadline=None)
def test_shift_and_falling(a, s):
    f = polys.make(a)
    shifted = polys.shift(f, s)
    assert sympy.expand(to_sympy(shifted) - to_sympy(f).subs(x, x + sympy.Rational(s.numerator, s.denominator))) == 0
    assert polys.from_falling(polys.to_falling(f)) == f


def test_falling_values():
    assert polys.falling(3) == polys.make([0, 2, -3, 1])
    assert polys.falling_value(5, 2) == 20 and polys.falling_value(1, 2) == 0


matrices = st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5)


@given(matrices)
@settings(max_examples=80, deadline=None)
def test_rank_nullspace_determinant_match_sympy(rows):
    m = [[Fraction(a) for a in r] for r in rows]
    sm = sympy.Matrix(rows)
    assert linalg.rank(m) == sm.rank()
    ns = linalg.nullspace(m, 4)
    assert len(ns) == 4 - sm.rank()
    for v in ns:
        assert not any(linalg.matvec(m, v))
    k = min(len(rows), 4)
    sq = [r[:k] for r in rows[:k]]
    assert linalg.determinant([[Fraction(a) for a in r] for r in sq]) == sm[:k, :k].det()


@given(matrices, st.lists(st.integers(-3, 3), min_size=5, max_size=5))
@settings(max_examples=60, deadline=None)
def test_echelon_coords_reconstruct(rows, mix):
    vecs = [[Fraction(a) for a in r] for r in rows]
    ech = linalg.Echelon(4, vecs)
    target = [sum(Fraction(c) * v[j] for c, v in zip(mix, vecs)) for j in range(4)]
    co = ech.coords(target)
    assert co is not None
    rebuilt = [sum(a * vecs[k][j] for k, a in co.items()) for j in range(4)]
    assert rebuilt == target
