"""The ring D of differential operators on k[Gamma]: P_w, generators, symbols."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import polys
from .opalgebra import HomogeneousComponent, LaurentWeylOperator, decompose, membership
from .semigroup import NumericalSemigroup, PreconditionError, gamma_prime, omega


@dataclass(frozen=True)
class SymbolMonomial:
    t_exp: int
    xi_exp: int
    coeff: Fraction

    @property
    def exponents(self) -> tuple[int, int]:
        return (self.t_exp, self.xi_exp)

    def __str__(self) -> str:
        parts = []
        if self.coeff != 1:
            parts.append(str(self.coeff))
        if self.t_exp:
            parts.append("t" if self.t_exp == 1 else f"t^{self.t_exp}")
        if self.xi_exp:
            parts.append("xi" if self.xi_exp == 1 else f"xi^{self.xi_exp}")
        return "*".join(parts) or "1"


def pw_poly(gamma: NumericalSemigroup, w: int) -> tuple:
    """prod_{g in Omega(w)} (x - g)."""
    return polys.from_roots(sorted(omega(gamma, w)))


def pw_component(gamma: NumericalSemigroup, w: int) -> HomogeneousComponent:
    return HomogeneousComponent(w, pw_poly(gamma, w))


def build_pw(gamma: NumericalSemigroup, w: int) -> LaurentWeylOperator:
    """P_w = t^w prod_{g in Omega(w)} (E - g)."""
    return pw_component(gamma, w).to_operator()


def generator_degrees(gamma: NumericalSemigroup) -> list[int]:
    mags = sorted(set(gamma.generators) | set(gamma.gaps))
    if gamma.is_full:
        mags = [1]
    return sorted([-m for m in mags] + mags)


def generator_components(gamma: NumericalSemigroup) -> list[HomogeneousComponent]:
    """E together with P_w for |w| a generator or a gap, sorted by degree."""
    comps = [pw_component(gamma, w) for w in generator_degrees(gamma)]
    comps.append(HomogeneousComponent(0, polys.X))
    return sorted(comps, key=lambda c: (c.degree, c.order()))


def generators_of_d(gamma: NumericalSemigroup) -> list[LaurentWeylOperator]:
    return [c.to_operator() for c in generator_components(gamma)]


def dw_basis(gamma: NumericalSemigroup, w: int, max_order: int) -> list[LaurentWeylOperator]:
    base = pw_poly(gamma, w)
    out = []
    s = 0
    while polys.degree(base) + s <= max_order:
        out.append(HomogeneousComponent(w, polys.mul(base, polys.power(polys.X, s))).to_operator())
        s += 1
    return out


def symbol(p, gamma: NumericalSemigroup | None = None, strict: bool = True) -> list[SymbolMonomial]:
    """Leading form of each homogeneous component, d replaced by xi.

    A component t^w f(E) of order p has leading monomial lc(f) t^(w+p) d^p.
    With ``strict`` and a semigroup given, operators outside D are refused.
    """
    comps = [p] if isinstance(p, HomogeneousComponent) else decompose(p)
    if strict and gamma is not None and not membership(p, gamma):
        raise PreconditionError("operator is not in D")
    out = []
    for c in comps:
        if c.is_zero():
            continue
        k = c.order()
        out.append(SymbolMonomial(c.degree + k, k, polys.lc(c.poly)))
    return out


def gr_generator_exponents(gamma: NumericalSemigroup) -> set[tuple[int, int]]:
    """Symbol exponents of P_w for |w| in generators or gaps, plus (1, 1)."""
    if gamma.is_full:
        raise PreconditionError("the generator set of gr D is stated for Gamma != N0")
    pts = {symbol(pw_component(gamma, w))[0].exponents for w in generator_degrees(gamma)}
    pts.add((1, 1))
    return pts


def prune_to_minimal(points: set[tuple[int, int]]) -> set[tuple[int, int]]:
    """Drop points that are sums of other points of the generated semigroup.

    Brute force: a point is redundant when it is a nonnegative integer
    combination of the remaining points.
    """
    pts = sorted(points)
    keep = set()
    for p in pts:
        others = [q for q in pts if q != p]
        if not _representable(p, others):
            keep.add(p)
    return keep


def _representable(p, gens) -> bool:
    reach = {(0, 0)}
    frontier = [(0, 0)]
    while frontier:
        nxt = []
        for a, b in frontier:
            for g in gens:
                q = (a + g[0], b + g[1])
                if q[0] <= p[0] and q[1] <= p[1] and q not in reach:
                    if q == p:
                        return True
                    reach.add(q)
                    nxt.append(q)
        frontier = nxt
    return False


def verify_gr_generators(gamma: NumericalSemigroup) -> bool:
    """Compare symbol exponents of the D generators with a brute-force
    computation of the minimal generators of Gamma'."""
    formula = prune_to_minimal(gr_generator_exponents(gamma))
    return formula == set(gamma_prime(gamma).minimal_generators)
