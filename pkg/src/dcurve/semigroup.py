"""Numerical semigroups and the combinatorics of Omega, sigma and Gamma'."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd


class PreconditionError(ValueError):
    """A mathematical precondition of an operation is violated."""


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup given by its minimal generators.

    Build instances with :func:`make_semigroup`; the constructor trusts its
    arguments.
    """

    generators: tuple[int, ...]
    frobenius: int
    gaps: frozenset[int] = field(repr=False)

    def __contains__(self, n: int) -> bool:
        return self.contains(n)

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        return n > self.frobenius or n not in self.gaps

    @property
    def is_full(self) -> bool:
        return self.frobenius < 0

    def elements(self, upto: int) -> list[int]:
        return [n for n in range(upto + 1) if self.contains(n)]

    def omega(self, w: int) -> frozenset[int]:
        return omega(self, w)

    def sigma(self, w: int) -> int:
        return sigma(self, w)

    def label(self) -> str:
        if self.is_full:
            return "N0"
        return "<" + ",".join(map(str, self.generators)) + ">"

    def to_json(self, window: tuple[int, int] = (-12, 12)) -> dict:
        lo, hi = window
        return {
            "generators": list(self.generators),
            "gaps": sorted(self.gaps),
            "frobenius": self.frobenius,
            "sigma": {str(w): sigma(self, w) for w in range(lo, hi + 1)},
        }


def make_semigroup(raw_generators) -> NumericalSemigroup:
    gens = sorted(set(int(a) for a in raw_generators))
    if not gens:
        raise PreconditionError("need at least one generator")
    if gens[0] < 1:
        raise PreconditionError("generators must be positive integers")
    g = 0
    for a in gens:
        g = gcd(g, a)
    if g != 1:
        raise PreconditionError(f"gcd must be 1 (got gcd {g} for {gens})")
    # Sieve until min(gens) consecutive members appear; after that every
    # integer is reachable by adding the smallest generator.
    a1 = gens[0]
    member = [True]
    run = 1
    n = 0
    while run < a1:
        n += 1
        ok = any(n - a >= 0 and member[n - a] for a in gens)
        member.append(ok)
        run = run + 1 if ok else 0
    gaps = frozenset(i for i, m in enumerate(member) if not m)
    frob = max(gaps) if gaps else -1

    def contains(k):
        return k >= 0 and (k > frob or k not in gaps)

    minimal = []
    for a in gens:
        # a is redundant when a - b lies in the semigroup for some member 0 < b < a
        if not any(contains(b) and contains(a - b) for b in range(1, a)):
            minimal.append(a)
    return NumericalSemigroup(tuple(minimal), frob, gaps)


NATURALS = make_semigroup([1])


def vanishing_set(source: NumericalSemigroup, target: NumericalSemigroup, w: int) -> frozenset[int]:
    """{g in source : g + w not in target}.

    Since g + w > target.frobenius forces membership, only
    g <= target.frobenius - w needs checking.
    """
    top = target.frobenius - w
    return frozenset(g for g in range(0, max(top, -1) + 1) if source.contains(g) and not target.contains(g + w))


def omega(gamma: NumericalSemigroup, w: int) -> frozenset[int]:
    return vanishing_set(gamma, gamma, w)


def sigma(gamma: NumericalSemigroup, w: int) -> int:
    return len(omega(gamma, w))


@dataclass(frozen=True)
class GammaPrimeData:
    """Lattice data of Gamma' = {(m, n) : n >= sigma(m - n)} in N0^2."""

    gap_points: frozenset[tuple[int, int]]
    s: int
    search_bound: int
    _minimal: frozenset[tuple[int, int]] | None = field(default=None, repr=False)

    @property
    def minimal_generators(self) -> frozenset[tuple[int, int]]:
        if self._minimal is None:
            raise PreconditionError("minimal generators of Gamma' are only described for Gamma != N0")
        return self._minimal


def in_gamma_prime(gamma: NumericalSemigroup, m: int, n: int) -> bool:
    return m >= 0 and n >= 0 and n >= sigma(gamma, m - n)


def _required_bound(gamma: NumericalSemigroup) -> int:
    # a gap point (m, n) has n < sigma(m - n) and |m - n| <= frobenius
    f = gamma.frobenius
    return max([sigma(gamma, -v) for v in range(0, f + 1)] + [0])


def gamma_prime(gamma: NumericalSemigroup, search_bound: int | None = None) -> GammaPrimeData:
    need = _required_bound(gamma)
    if search_bound is None:
        search_bound = 2 * gamma.frobenius + 4
    if search_bound < need:
        raise PreconditionError(f"search bound {search_bound} too small; need at least {need}")
    sig = {v: sigma(gamma, v) for v in range(-search_bound, search_bound + 1)}
    gaps = frozenset(
        (m, n)
        for m in range(search_bound + 1)
        for n in range(search_bound + 1)
        if n < sig[m - n]
    )
    minimal = None
    if not gamma.is_full:
        minimal = _minimal_generators(gamma)
    return GammaPrimeData(gaps, len(gaps), search_bound, minimal)


def _minimal_generators(gamma: NumericalSemigroup) -> frozenset[tuple[int, int]]:
    """Brute-force indecomposables of Gamma'.

    Away from the boundary n = sigma(m - n) one can subtract (1, 1), and far
    out on the boundary one can split off a generator of Gamma, so every
    indecomposable lies in a box of side max sigma(+-w), |w| <= max(F, a_r).
    """
    reach = max(gamma.frobenius, max(gamma.generators))
    box = max(max(sigma(gamma, w), sigma(gamma, -w)) for w in range(reach + 1)) + 1
    pts = [(m, n) for m in range(box + 1) for n in range(box + 1) if (m, n) != (0, 0) and in_gamma_prime(gamma, m, n)]
    member = set(pts)
    out = set()
    for m, n in pts:
        decomposable = any(
            (m - a, n - b) in member
            for a, b in pts
            if a <= m and b <= n and (a, b) != (m, n)
        )
        if not decomposable:
            out.add((m, n))
    return frozenset(out)
