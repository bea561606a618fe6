"""Arithmetic in Diff(T) = Q[t, 1/t]<d> with [d, t] = 1.

Operators are kept in normal form sum c_ij t^i d^j (all d to the right).
Homogeneous pieces are also available in Euler form t^w f(E), E = t d,
which is what the graded constructions use.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping

from . import polys
from .semigroup import NumericalSemigroup, PreconditionError


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class LaurentWeylOperator:
    """An element of Diff(T) in normal form."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            if j < 0:
                raise ValueError("negative power of d")
            c = Fraction(c)
            if c:
                clean[(int(i), int(j))] = c
        self._terms = clean
        self._hash = None

    # constructors
    @classmethod
    def scalar(cls, c) -> "LaurentWeylOperator":
        return cls({(0, 0): c})

    @classmethod
    def t(cls, n: int = 1) -> "LaurentWeylOperator":
        return cls({(n, 0): 1})

    @classmethod
    def d(cls, n: int = 1) -> "LaurentWeylOperator":
        return cls({(0, n): 1})

    @classmethod
    def euler(cls) -> "LaurentWeylOperator":
        return cls({(1, 1): 1})

    @classmethod
    def from_component(cls, w: int, f) -> "LaurentWeylOperator":
        # t^w f(E) with f = sum c_j E(E-1)...(E-j+1) and t^j d^j = E(E-1)...(E-j+1)
        return cls({(w + j, j): c for j, c in enumerate(polys.to_falling(tuple(f))) if c})

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentWeylOperator.scalar(other)
        if not isinstance(other, LaurentWeylOperator):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentWeylOperator(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentWeylOperator({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentWeylOperator({k: c * other for k, c in self._terms.items()})
        return multiply(self, _coerce(other))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return multiply(_coerce(other), self)

    def __pow__(self, n: int):
        out = LaurentWeylOperator.scalar(1)
        for _ in range(n):
            out = out * self
        return out

    # invariants read off the normal form
    def order(self) -> int:
        return max((j for _, j in self._terms), default=-1)

    def degrees(self) -> list[int]:
        return sorted({i - j for i, j in self._terms})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError("operator is not homogeneous")
        return ds[0]

    def bernstein_degree(self) -> int:
        """Largest i + j over the terms t^i d^j; -1 for the zero operator.

        This is also max over homogeneous parts t^w f(E) of w + 2 deg f, so
        it is the Bernstein filtration degree of members of D.
        """
        return max((i + j for i, j in self._terms), default=-1)

    def components(self) -> list["HomogeneousComponent"]:
        return decompose(self)

    def __repr__(self) -> str:
        return f"LaurentWeylOperator({render(self)!r})"

    def __str__(self) -> str:
        return render(self)

    def to_json(self) -> list:
        return [[i, j, _frac_str(c)] for (i, j), c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data: Iterable) -> "LaurentWeylOperator":
        return cls({(int(i), int(j)): Fraction(c) for i, j, c in data})


def _coerce(x) -> LaurentWeylOperator:
    if isinstance(x, LaurentWeylOperator):
        return x
    if isinstance(x, HomogeneousComponent):
        return x.to_operator()
    if isinstance(x, (int, Fraction)):
        return LaurentWeylOperator.scalar(x)
    raise TypeError(f"cannot use {type(x).__name__} as an operator")


def multiply(p: LaurentWeylOperator, q: LaurentWeylOperator) -> LaurentWeylOperator:
    """Normal-form product via d^b t^c = sum_k C(b,k) c(c-1)..(c-k+1) t^(c-k) d^(b-k)."""
    out: dict[tuple[int, int], Fraction] = {}
    for (a, b), c1 in p._terms.items():
        for (c, d), c2 in q._terms.items():
            base = c1 * c2
            for k in range(b + 1):
                ff = polys.falling_value(c, k)
                if ff == 0:
                    break
                key = (a + c - k, b - k + d)
                out[key] = out.get(key, 0) + base * comb(b, k) * ff
    return LaurentWeylOperator(out)


def render(p: LaurentWeylOperator) -> str:
    if not p._terms:
        return "0"
    parts = []
    for (i, j), c in sorted(p._terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][1], kv[0][0])):
        mono = []
        if i:
            mono.append("t" if i == 1 else f"t^{i}")
        if j:
            mono.append("d" if j == 1 else f"d^{j}")
        mag = abs(c)
        if mono:
            body = "*".join(mono) if mag == 1 else _frac_str(mag) + "*" + "*".join(mono)
        else:
            body = _frac_str(mag)
        parts.append(("-" if c < 0 else "+", body))
    s, b = parts[0]
    out = ("-" if s == "-" else "") + b
    for s, b in parts[1:]:
        out += f" {s} {b}"
    return out


# ---------------------------------------------------------------- action on T

LaurentPoly = Mapping[int, object]


def apply(p: LaurentWeylOperator, g: LaurentPoly) -> dict[int, Fraction]:
    """Apply p to a Laurent polynomial {exponent: coefficient}."""
    out: dict[int, Fraction] = {}
    for n, a in g.items():
        a = Fraction(a)
        if not a:
            continue
        for (i, j), c in p._terms.items():
            ff = polys.falling_value(n, j)
            if ff:
                e = n - j + i
                out[e] = out.get(e, 0) + c * a * ff
    return {e: c for e, c in out.items() if c}


# ------------------------------------------------------- homogeneous (Euler) form


@dataclass(frozen=True)
class HomogeneousComponent:
    """t^degree * poly(E), poly stored low degree first."""

    degree: int
    poly: tuple

    def __post_init__(self):
        object.__setattr__(self, "poly", polys.make(self.poly))

    @classmethod
    def of(cls, degree: int, poly) -> "HomogeneousComponent":
        return cls(degree, tuple(poly))

    def order(self) -> int:
        return polys.degree(self.poly)

    def is_zero(self) -> bool:
        return not self.poly

    def __mul__(self, other: "HomogeneousComponent") -> "HomogeneousComponent":
        # t^v f(E) t^w g(E) = t^(v+w) f(E + w) g(E)
        return HomogeneousComponent(self.degree + other.degree, polys.mul(polys.shift(self.poly, other.degree), other.poly))

    def to_operator(self) -> LaurentWeylOperator:
        return LaurentWeylOperator.from_component(self.degree, self.poly)

    def bernstein_degree(self) -> int:
        return self.degree + 2 * self.order() if self.poly else -1

    def __str__(self) -> str:
        f = polys.fmt(self.poly)
        if self.degree == 0:
            return f
        t = "t" if self.degree == 1 else f"t^{self.degree}"
        return f"{t}*({f})"


def euler_component(f=polys.X, degree: int = 0) -> HomogeneousComponent:
    return HomogeneousComponent(degree, tuple(f))


def decompose(p: LaurentWeylOperator) -> list[HomogeneousComponent]:
    groups: dict[int, dict[int, Fraction]] = {}
    for (i, j), c in p._terms.items():
        groups.setdefault(i - j, {})[j] = c
    out = []
    for w in sorted(groups):
        fal = groups[w]
        coeffs = [fal.get(j, Fraction(0)) for j in range(max(fal) + 1)]
        out.append(HomogeneousComponent(w, polys.from_falling(coeffs)))
    return out


def recompose(components: Iterable[HomogeneousComponent]) -> LaurentWeylOperator:
    out = LaurentWeylOperator()
    for c in components:
        out = out + c.to_operator()
    return out


def as_component(p) -> HomogeneousComponent:
    if isinstance(p, HomogeneousComponent):
        return p
    comps = decompose(p)
    if len(comps) > 1:
        raise PreconditionError("operator is not homogeneous")
    if not comps:
        return HomogeneousComponent(0, ())
    return comps[0]


# ------------------------------------------------------------------ membership


def membership(p, source: NumericalSemigroup, target: NumericalSemigroup | None = None) -> bool:
    """Does p map k[source] into k[target]?

    A component t^w f(E) sends t^g to f(g) t^(g+w), so it is enough that f
    vanishes on {g in source : g + w not in target}.
    """
    from .semigroup import vanishing_set

    if target is None:
        target = source
    comps = [p] if isinstance(p, HomogeneousComponent) else decompose(p)
    for comp in comps:
        for g in vanishing_set(source, target, comp.degree):
            if polys.evaluate(comp.poly, g):
                return False
    return True


# --------------------------------------------------------- graded division


def graded_divide(p: HomogeneousComponent, q: HomogeneousComponent) -> tuple[HomogeneousComponent, HomogeneousComponent]:
    """P = L*Q + R with order(R) < order(Q).

    With P = t^w f(E), Q = t^v g(E) and f = q g + r, take
    L = t^(w-v) q(E - v) and R = t^w r(E); then L Q = t^w q(E) g(E).
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero operator")
    quo, r = polys.divmod_(p.poly, q.poly)
    lpart = HomogeneousComponent(p.degree - q.degree, polys.shift(quo, -q.degree))
    return lpart, HomogeneousComponent(p.degree, r)


def principal_generator(gens: Iterable) -> LaurentWeylOperator:
    """Monic generator of the homogeneous left ideal Diff(T)*gens.

    Left multiplication by the unit t^(-w) moves each generator to degree 0,
    after which the Euclidean algorithm runs on graded_divide.
    """
    comps = []
    for g in gens:
        c = as_component(g)
        if not c.is_zero():
            comps.append(HomogeneousComponent(0, c.poly))
    if not comps:
        raise PreconditionError("all generators are zero")
    acc = comps[0]
    for nxt in comps[1:]:
        a, b = acc, nxt
        while not b.is_zero():
            _, r = graded_divide(a, b)
            a, b = b, r
        acc = a
    return HomogeneousComponent(0, polys.monic(acc.poly)).to_operator()


# -------------------------------------------------------------------- parsing


def parse_operator(text: str) -> LaurentWeylOperator:
    """Parse expressions such as ``"E - 1/2"``, ``"d*t"`` or ``"t^-1*(E-2)^2"``.

    ``d`` (or ``D``) is the derivation, ``E`` the Euler operator.
    """
    import sympy

    t, d, e = sympy.symbols("t d E", commutative=False)
    src = text.replace("^", "**").replace("∂", "d")
    try:
        expr = sympy.parse_expr(src, local_dict={"t": t, "d": d, "D": d, "E": e})
    except Exception as exc:  # sympy raises a zoo of types here
        raise ValueError(f"cannot parse operator {text!r}: {exc}") from None
    atoms = {t: LaurentWeylOperator.t(), d: LaurentWeylOperator.d(), e: LaurentWeylOperator.euler()}

    def conv(x):
        if x in atoms:
            return atoms[x]
        if x.is_Rational:
            return LaurentWeylOperator.scalar(Fraction(int(x.p), int(x.q)))
        if x.is_Add:
            out = LaurentWeylOperator()
            for a in x.args:
                out = out + conv(a)
            return out
        if x.is_Mul:
            out = LaurentWeylOperator.scalar(1)
            for a in x.args:
                out = out * conv(a)
            return out
        if x.is_Pow:
            base, ex = x.args
            if not ex.is_Integer:
                raise ValueError(f"non-integer exponent in {text!r}")
            n = int(ex)
            if n < 0:
                if base != t:
                    raise ValueError(f"only t may carry a negative exponent in {text!r}")
                return LaurentWeylOperator.t(n)
            return conv(base) ** n
        raise ValueError(f"unsupported term {x} in {text!r}")

    return conv(expr)
