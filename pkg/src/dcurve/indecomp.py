"""Indecomposable graded holonomic modules over the first Weyl algebra.

Words w(beta, n) alternate t and d; D/Dw has length n with factors alternating
between twists of M_0 and of M_inf.  Powers (E - alpha)^n give chains of
twists of M_alpha.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from . import polys
from .ext import INF, label_str
from .hilbert import LeftIdealPresentation, dimension_multiplicity
from .linalg import Echelon, matmul, nullspace
from .modules import (
    DEFAULT_WINDOW,
    DirectSumModel,
    GradedModuleModel,
    SubquotientModel,
    build_a,
    build_malpha,
    build_minfty,
    cyclic_quotient,
    generated_submodule,
    graded_hom_degree_zero,
    graded_isomorphism,
    inner_window,
    is_simple_certified,
    twist,
)
from .opalgebra import LaurentWeylOperator, as_component
from .semigroup import NATURALS, PreconditionError


@dataclass(frozen=True)
class AlternatingWord:
    beta: object
    n: int
    letters: tuple[str, ...]

    def operator(self) -> LaurentWeylOperator:
        op = LaurentWeylOperator.scalar(1)
        for a in self.letters:
            op = op * (LaurentWeylOperator.t() if a == "t" else LaurentWeylOperator.d())
        return op

    def __str__(self) -> str:
        return "*".join(self.letters)


def _beta(beta):
    if beta in (0, "0"):
        return 0
    if beta in (INF, "infty", "oo", "∞"):
        return INF
    raise PreconditionError(f"beta must be 0 or inf, got {beta!r}")


def word(beta, n: int) -> AlternatingWord:
    """Alternating word of length n ending in d for beta = 0 and in t for beta = inf."""
    beta = _beta(beta)
    if n < 1:
        raise PreconditionError("word length must be at least 1")
    last = "d" if beta == 0 else "t"
    other = "t" if last == "d" else "d"
    letters = [last if (n - 1 - i) % 2 == 0 else other for i in range(n)]
    return AlternatingWord(beta, n, tuple(letters))


@dataclass
class Indecomposable:
    kind: str
    presentation: LeftIdealPresentation
    model: GradedModuleModel
    d: int
    e: int
    expected_e: int


def build_indecomposable(kind: str, n: int, beta=None, alpha=None, window=DEFAULT_WINDOW, n_max: int = 40) -> Indecomposable:
    """D/Dw(beta, n) or D/D(E - alpha)^n over the Weyl algebra, with (d, e).

    A word of length n has Bernstein degree n, so e = n.  The power
    (E - alpha)^n has Bernstein degree 2n and e = 2n.
    """
    if kind == "word":
        w = word(beta, n)
        op = w.operator()
        expected = n
        tag = f"D/D({w})"
    elif kind == "power":
        alpha = Fraction(alpha)
        if not 0 < alpha < 1:
            raise PreconditionError("alpha must lie in (0, 1)")
        if n < 1:
            raise PreconditionError("power must be at least 1")
        op = (LaurentWeylOperator.euler() - alpha) ** n
        expected = 2 * n
        tag = f"D/D(E-{label_str(alpha)})^{n}"
    else:
        raise PreconditionError(f"unknown kind {kind!r}")
    pres = LeftIdealPresentation(NATURALS, (op,))
    d, e = dimension_multiplicity(NATURALS, pres, n_max)
    if d != 1 or e != expected:
        raise AssertionError(f"{tag}: (d, e) = ({d}, {e}), expected (1, {expected})")
    model = cyclic_quotient(NATURALS, as_component(op), window, tag)
    return Indecomposable(kind, pres, model, d, e, expected)


# -- composition series -------------------------------------------------------


@dataclass(frozen=True)
class FactorTag:
    family: str          # "0", "inf" or "alpha"
    alpha: Fraction
    twist: int
    verified: bool

    def __str__(self) -> str:
        name = {"0": "M_0", "inf": "M_inf"}.get(self.family, f"M_{label_str(self.alpha)}")
        return name if self.twist == 0 else f"{name}[{self.twist}]"

    def to_json(self) -> dict:
        return {"family": self.family, "alpha": label_str(self.alpha), "twist": self.twist,
                "label": str(self), "verified": self.verified}


@dataclass
class CompositionSeries:
    factors: list[FactorTag]
    generators: list[tuple[int, list]]   # lifted socle vectors, bottom first
    complete: bool

    @property
    def length(self) -> int:
        return len(self.factors)


def _eigenvectors(mat) -> list[list[Fraction]]:
    n = len(mat)
    if n == 1:
        return [[Fraction(1)]]
    out = []
    for val, _, vecs in sympy.Matrix(mat).eigenvects():
        if not val.is_rational:
            continue
        lam = Fraction(int(val.p), int(val.q))
        shifted = [[mat[i][j] - (lam if i == j else 0) for j in range(n)] for i in range(n)]
        out.extend(nullspace(shifted, n))
    return out


def _euler_offset(m: GradedModuleModel) -> Fraction | None:
    """The constant c = E - deg on a module with one-dimensional pieces."""
    lo, hi = inner_window(m.window)
    cs = {m.euler_matrix(d)[0][0] - d for d in range(lo, hi + 1) if m.dim(d) == 1}
    return cs.pop() if len(cs) == 1 else None


def identify_factor(f: GradedModuleModel) -> FactorTag:
    """Match a simple factor with M_0[n], M_inf[n] or M_alpha[n].

    On M_alpha[n] the Euler operator acts on degree i by alpha + n + i, on
    M_0[n] by n + i and on M_inf[n] by n + i - 1; the Hom probe then decides.
    """
    c = _euler_offset(f)
    if c is None:
        raise PreconditionError("factor is not identified by its Euler spectrum")
    gamma, win = f.gamma, f.window
    if c.denominator != 1:
        n = c.numerator // c.denominator
        a = c - n
        ok = graded_isomorphism(f, twist(build_malpha(gamma, a, win), n)) is not None
        return FactorTag("alpha", a, n, ok)
    n = int(c)
    if graded_isomorphism(f, twist(build_a(gamma, win), n)) is not None:
        return FactorTag("0", Fraction(0), n, True)
    ok = graded_isomorphism(f, twist(build_minfty(gamma, win), n + 1)) is not None
    return FactorTag("inf", Fraction(0), n + 1, ok)


def composition_series(m: GradedModuleModel, order: str = "ascending", max_length: int = 32) -> CompositionSeries:
    """Iterated socle search: find a homogeneous E-eigenvector whose submodule
    in the current quotient is simple, add it, repeat."""
    lo, hi = inner_window(m.window)
    degrees = list(range(lo, hi + 1))
    if order == "descending":
        degrees.reverse()
    gens: list[tuple[int, list]] = []
    factors: list[FactorTag] = []
    while True:
        below = generated_submodule(m, gens)
        q = SubquotientModel(m, None, below, "quotient")
        if all(q.dim(d) == 0 for d in degrees):
            return CompositionSeries(factors, gens, all(f.verified for f in factors))
        if len(factors) >= max_length:
            raise PreconditionError("composition series longer than the length bound")
        found = None
        for d in degrees:
            if not q.dim(d):
                continue
            for v in _eigenvectors(q.euler_matrix(d)):
                s = SubquotientModel(q, generated_submodule(q, [(d, v)]), None, "factor")
                if is_simple_certified(s)[0]:
                    found = (d, q.lift(d, v), s)
                    break
            if found:
                break
        if found is None:
            raise PreconditionError("no simple submodule found on the inner window")
        d, lifted, s = found
        gens.append((d, lifted))
        factors.append(identify_factor(s))


# -- indecomposability --------------------------------------------------------


def _blocks(phi, degrees):
    return {d: phi[d] for d in degrees if phi[d]}


def _flat(b, degrees):
    return [a for d in degrees if d in b for row in b[d] for a in row]


def _mul(x, y):
    return {d: matmul(x[d], y[d], len(y[d])) for d in x}


def _sub_scalar(x, lam):
    return {d: [[a - (lam if i == j else 0) for j, a in enumerate(row)] for i, row in enumerate(m)] for d, m in x.items()}


def _trace(x):
    return sum((m[i][i] for m in x.values() for i in range(len(m))), Fraction(0))


def _is_nilpotent(x):
    for m in x.values():
        p = m
        for _ in range(len(m)):
            p = matmul(p, m, len(m))
        if any(a for row in p for a in row):
            return False
    return True


def _poly_at(f, x):
    """f(x) blockwise, f a sympy Poly with rational coefficients."""
    out = {}
    for d, m in x.items():
        n = len(m)
        acc = [[Fraction(0)] * n for _ in range(n)]
        for c in f.all_coeffs():
            acc = matmul(acc, m, n)
            c = Fraction(int(sympy.Rational(c).p), int(sympy.Rational(c).q))
            for i in range(n):
                acc[i][i] += c
        out[d] = acc
    return out


def _idempotent_from(x):
    """A nontrivial idempotent polynomial in x, via CRT on its minimal polynomial."""
    s = sympy.Symbol("s")
    minpoly = sympy.Poly(1, s, domain="QQ")
    for m in x.values():
        mp = sympy.Matrix(m).charpoly(s).as_expr()
        minpoly = sympy.Poly(sympy.lcm(minpoly.as_expr(), mp), s, domain="QQ")
    facs = [sympy.Poly(f, s, domain="QQ") ** k for f, k in sympy.factor_list(minpoly.as_expr(), s)[1]]
    if len(facs) < 2:
        return None
    f1 = facs[0]
    rest = sympy.Poly(1, s, domain="QQ")
    for f in facs[1:]:
        rest = rest * f
    # a f1 + b rest = 1; e = b rest is 1 mod f1 and 0 mod rest
    a, b, g = sympy.gcdex(f1, rest)
    e = sympy.Poly(b * rest, s, domain="QQ").rem(minpoly)
    return _poly_at(e, x)


@dataclass
class IndecomposabilityCertificate:
    verdict: bool | None
    end_dim: int
    reason: str
    idempotent: dict | None = field(default=None, repr=False)

    def to_json(self) -> dict:
        return {
            "verdict": {True: "indecomposable", False: "decomposable", None: "inconclusive"}[self.verdict],
            "end_dim": self.end_dim,
            "reason": self.reason,
            "idempotent_rank": None if self.idempotent is None else sum(
                int(sum(m[i][i] for i in range(len(m)))) for m in self.idempotent.values()),
        }


def _end_basis(m: GradedModuleModel, window):
    lo, hi = inner_window(window)
    degrees = [d for d in range(lo, hi + 1) if m.dim(d)]
    hom = graded_hom_degree_zero(m, m, window)
    ech = Echelon(sum(m.dim(d) ** 2 for d in degrees))
    basis = []
    for phi in hom.maps:
        b = _blocks(phi, degrees)
        if ech.add(_flat(b, degrees)) is not None:
            basis.append(b)
    return basis, degrees


def is_indecomposable_certified(m: GradedModuleModel, window=None):
    """Decide whether the degree-0 endomorphism algebra is local.

    End is local iff it is k plus a nil ideal: each basis element minus its
    mean eigenvalue must be nilpotent and those nilpotent parts must span a
    subspace closed under products.  Failing that, an idempotent is built from
    the minimal polynomial of an offending element.
    """
    window = window or m.window
    basis, degrees = _end_basis(m, window)
    big, _ = _end_basis(m, (window[0] - 4, window[1] + 4))
    if len(big) != len(basis):
        cert = IndecomposabilityCertificate(None, len(basis), "endomorphism space is not window-stable")
        return None, cert
    if not degrees:
        return None, IndecomposabilityCertificate(None, 0, "zero on the inner window")
    size = sum(m.dim(d) for d in degrees)
    nil = []
    offenders = []
    for phi in basis:
        lam = _trace(phi) / size
        psi = _sub_scalar(phi, lam)
        if _is_nilpotent(psi):
            if any(a for mat in psi.values() for row in mat for a in row):
                nil.append(psi)
        else:
            offenders.append(phi)
    if not offenders:
        ech = Echelon(len(_flat(basis[0], degrees)), [_flat(x, degrees) for x in nil])
        for x in nil:
            for y in nil:
                xy = _mul(x, y)
                if not ech.contains(_flat(xy, degrees)):
                    offenders.append(xy)
                    break
            if offenders:
                break
    if not offenders:
        return True, IndecomposabilityCertificate(True, len(basis), "End_0 is local: scalars plus a nil ideal")
    # a generic combination of the basis separates the blocks of End/rad
    combos = [{d: [[sum((Fraction((i + 1) ** k) * b[d][r][c] for i, b in enumerate(basis)), Fraction(0))
                    for c in range(len(basis[0][d][0]))] for r in range(len(basis[0][d]))] for d in basis[0]}
              for k in (1, 2, 3)]
    for x in offenders + combos:
        e = _idempotent_from(x)
        if e is not None:
            return False, IndecomposabilityCertificate(False, len(basis), "nontrivial idempotent in End_0", e)
    return False, IndecomposabilityCertificate(False, len(basis), "End_0 is not local over the algebraic closure")


def direct_sum(*parts: GradedModuleModel) -> DirectSumModel:
    return DirectSumModel(*parts)
