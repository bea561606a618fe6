"""Bernstein filtration, Hilbert functions of cyclic D-modules and their
quasi-polynomial fits (dimension and multiplicity)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, gcd
from typing import Sequence

from . import polys
from .diffring import pw_poly
from .linalg import Echelon
from .opalgebra import HomogeneousComponent, LaurentWeylOperator, decompose, membership
from .semigroup import NumericalSemigroup, PreconditionError, gamma_prime, sigma


# ------------------------------------------------------------------ B^n


@dataclass(frozen=True)
class BernsteinLayer:
    n: int
    basis: tuple[tuple[int, int], ...]  # (w, s) for P_w E^s
    dim: int


def _orders_below(gamma: NumericalSemigroup, w: int, n: int) -> int:
    """#{s >= 0 : 2 sigma(w) + 2 s + w <= n}."""
    top = n - w - 2 * sigma(gamma, w)
    return top // 2 + 1 if top >= 0 else 0


def bernstein_dim(gamma: NumericalSemigroup, n: int) -> int:
    if n < 0:
        return 0
    # 2 sigma(w) + w = sigma(w) + sigma(-w) >= |w|, so |w| <= n
    return sum(_orders_below(gamma, w, n) for w in range(-n, n + 1))


def bernstein_layer(gamma: NumericalSemigroup, n: int) -> BernsteinLayer:
    basis = []
    for w in range(-max(n, 0), max(n, 0) + 1):
        for s in range(_orders_below(gamma, w, n)):
            basis.append((w, s))
    return BernsteinLayer(n, tuple(basis), len(basis))


def bernstein_onset(gamma: NumericalSemigroup) -> int:
    """Smallest n0 with dim B^n = (n+1)(n+2)/2 - s for every n >= n0.

    Symbols of the basis P_w E^s run through Gamma' with weight a + b, so the
    closed form holds exactly once every gap point (a, b) has a + b <= n.
    """
    gp = gamma_prime(gamma)
    return max((a + b for a, b in gp.gap_points), default=0)


def bernstein_closed_form(gamma: NumericalSemigroup, n: int) -> int:
    return (n + 1) * (n + 2) // 2 - gamma_prime(gamma).s


# ---------------------------------------------------------- ideals, profiles


@dataclass
class LeftIdealPresentation:
    """Left ideal of D generated by finitely many operators.

    An empty generator list (or only zero generators) is the zero ideal.
    """

    gamma: NumericalSemigroup
    generators: list[LaurentWeylOperator]
    bernstein_degrees: list[int] = field(init=False)

    def __post_init__(self):
        self.generators = [g for g in self.generators if not g.is_zero()]
        for g in self.generators:
            if not membership(g, self.gamma):
                raise PreconditionError(f"generator {g} is not in D")
        self.bernstein_degrees = [g.bernstein_degree() for g in self.generators]

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_principal(self) -> bool:
        return len(self.generators) == 1

    @property
    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)


@dataclass(frozen=True)
class HilbertProfile:
    dims: tuple[int, ...]
    exact: bool
    method: str
    window: int = 0

    def to_json(self) -> dict:
        return {"dims": list(self.dims), "exact": self.exact, "method": self.method}


def _homogeneous_ideal_poly(gamma: NumericalSemigroup, gens: Sequence[HomogeneousComponent], w: int) -> tuple:
    """I_w = t^w h(E) Q[E] with h = gcd_i pi_{w-p_i}(x + p_i) g_i(x)."""
    h = polys.ZERO
    for g in gens:
        f = polys.mul(polys.shift(pw_poly(gamma, w - g.degree), g.degree), g.poly)
        h = polys.gcd(h, f) if h else polys.monic(f)
    return h


def module_hilbert(
    gamma: NumericalSemigroup,
    ideal: LeftIdealPresentation,
    n_max: int,
    saturation_window: int = 6,
) -> HilbertProfile:
    """dim_k M_n for the filtration M_n = image of B^n in D/I.

    * zero ideal: dims of B^n;
    * one generator P: dim B^n - dim B^(n - b(P)), exact since the Bernstein
      degree is additive (the associated graded ring is a domain);
    * homogeneous generators: exact per degree, since each I_w is t^w times
      a principal ideal of Q[E];
    * otherwise: saturation of B^N * generators, N = n .. n + window.
    """
    if n_max < 0:
        raise PreconditionError("n_max must be nonnegative")
    full = [bernstein_dim(gamma, n) for n in range(n_max + 1)]
    if ideal.is_zero:
        return HilbertProfile(tuple(full), True, "full")
    if ideal.is_principal:
        b = ideal.bernstein_degrees[0]
        dims = [full[n] - (full[n - b] if n - b >= 0 else 0) for n in range(n_max + 1)]
        return HilbertProfile(tuple(dims), True, "principal")
    if ideal.is_homogeneous:
        gens = [decompose(g)[0] for g in ideal.generators]
        dims = [0] * (n_max + 1)
        for w in range(-n_max, n_max + 1):
            h = _homogeneous_ideal_poly(gamma, gens, w)
            sig = sigma(gamma, w)
            gap = polys.degree(h) - sig  # dim of the degree-w piece of D/I
            for n in range(n_max + 1):
                top = n - w - 2 * sig
                if top >= 0:
                    dims[n] += min(top // 2 + 1, gap)
        return HilbertProfile(tuple(dims), True, "homogeneous")
    return _saturated_profile(gamma, ideal, n_max, saturation_window, full)


class _WeightEchelon:
    """Sparse echelon form over coordinates t^w E^k, pivots at the highest
    Bernstein weight w + 2k.  Then dim(V cap B^n) is the number of pivots of
    weight <= n, since a row's other entries all have smaller weight."""

    def __init__(self):
        self.rows: dict[tuple, dict[tuple, int]] = {}

    @staticmethod
    def key(w: int, k: int) -> tuple:
        return (-(w + 2 * k), w, k)

    def add(self, v: dict[tuple, Fraction]) -> None:
        # integer rows with content removed keep the arithmetic in Python ints
        den = 1
        for a in v.values():
            den = den * a.denominator // gcd(den, a.denominator)
        v = {c: int(a * den) for c, a in v.items()}
        while v:
            top = min(v)
            row = self.rows.get(top)
            if row is None:
                g = 0
                for a in v.values():
                    g = gcd(g, a)
                self.rows[top] = {c: a // g for c, a in v.items()}
                return
            p, q = row[top], v[top]
            g = gcd(p, q)
            p, q = p // g, q // g
            out = {c: p * a for c, a in v.items()}
            for col, a in row.items():
                nv = out.get(col, 0) - q * a
                if nv:
                    out[col] = nv
                else:
                    out.pop(col, None)
            g = 0
            for a in out.values():
                g = gcd(g, a)
            v = {c: a // g for c, a in out.items()} if g > 1 else out

    def count_upto(self, n: int) -> int:
        return sum(1 for key in self.rows if -key[0] <= n)


def _vector(comps: list[HomogeneousComponent]) -> dict[tuple, Fraction]:
    out: dict[tuple, Fraction] = {}
    for c in comps:
        for k, a in enumerate(c.poly):
            if a:
                key = _WeightEchelon.key(c.degree, k)
                out[key] = out.get(key, 0) + a
    return {k: a for k, a in out.items() if a}


def _saturated_profile(gamma, ideal, n_max, window, full) -> HilbertProfile:
    """B^n cap I approximated by B^n cap sum_i B^(N - b_i) g_i for N = n .. n + window.

    The spaces grow with N, so one echelon form is extended level by level.
    """
    gen_comps = [decompose(g) for g in ideal.generators]
    ech = _WeightEchelon()
    top = n_max + window
    counts = []  # counts[N][n] = dim(B^n cap I_N)
    seen_basis: list[set] = [set() for _ in gen_comps]
    for big in range(top + 1):
        for i, (comps, b) in enumerate(zip(gen_comps, ideal.bernstein_degrees)):
            for w, s in bernstein_layer(gamma, big - b).basis:
                if (w, s) in seen_basis[i]:
                    continue
                seen_basis[i].add((w, s))
                left = HomogeneousComponent(w, polys.mul(pw_poly(gamma, w), polys.power(polys.X, s)))
                ech.add(_vector([left * c for c in comps]))
        counts.append([ech.count_upto(n) for n in range(min(big, n_max) + 1)])

    dims = []
    exact = True
    for n in range(n_max + 1):
        seen = [counts[n + k][n] if n < len(counts[n + k]) else counts[n + k][-1] for k in range(window + 1)]
        # stabilized when the last two saturation levels agree
        if len(seen) > 1 and seen[-1] != seen[-2]:
            exact = False
        dims.append(full[n] - seen[-1])
    return HilbertProfile(tuple(dims), exact, "saturation", window)


# ------------------------------------------------------------ quasi-polynomials


class InsufficientData(PreconditionError):
    def __init__(self, message: str, required_n_max: int | None = None):
        super().__init__(message)
        self.required_n_max = required_n_max


@dataclass(frozen=True)
class QuasiPolynomial:
    """dim M_(km + r) = polys[r](k) for all km + r >= onset."""

    period: int
    polys: tuple[tuple, ...]
    dimension: int
    multiplicity: int
    onset: int

    def __call__(self, n: int) -> Fraction:
        k, r = divmod(n, self.period)
        return polys.evaluate(self.polys[r], k)

    def numerator(self, dims: Sequence[int]) -> tuple:
        """a(t) = (sum_n hb(n) t^n) (1 - t^m)^d, truncated to the data window."""
        hb = [dims[0]] + [dims[n] - dims[n - 1] for n in range(1, len(dims))]
        fac = polys.power(polys.make([1] + [0] * (self.period - 1) + [-1]), max(self.dimension, 0))
        return polys.make(polys.mul(polys.make(hb), fac)[: len(hb)])

    def to_json(self) -> dict:
        return {
            "period": self.period,
            "dimension": self.dimension,
            "multiplicity": self.multiplicity,
            "onset": self.onset,
            "polys": [[_fs(c) for c in p] for p in self.polys],
        }


def _fs(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _interpolate(points: Sequence[tuple[int, int]]) -> tuple:
    """Lagrange interpolation through (k, value) pairs."""
    out = polys.ZERO
    for i, (xi, yi) in enumerate(points):
        if not yi:
            continue
        basis = polys.ONE
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j != i:
                basis = polys.mul(basis, polys.make([-xj, 1]))
                denom *= xi - xj
        out = polys.add(out, polys.scale(basis, Fraction(yi) / denom))
    return out


def _try_fit(h: Sequence[int], q: int, m: int):
    """Fit a period-m quasi-polynomial of degree <= q; None if the data refute it.

    The coefficients of (sum h_n t^n)(1 - t^m)^(q+1) must vanish on a tail;
    from that tail on, each residue class is polynomial in k.
    """
    L = len(h)
    order = q + 1
    lag = order * m
    diffs = []
    for n in range(lag, L):
        diffs.append(sum((-1) ** k * comb(order, k) * h[n - k * m] for k in range(order + 1)))
    last = max((lag + i for i, c in enumerate(diffs) if c), default=lag - 1)
    vanishing = L - 1 - last
    # enough vanishing coefficients to see q + 2 points in every residue class
    if vanishing < (q + 2) * m:
        return None
    onset = max(0, last + 1 - lag)
    fitted = []
    for r in range(m):
        start = onset + ((r - onset) % m)
        pts = [((n - r) // m, h[n]) for n in range(start, L, m)][: q + 1]
        fitted.append(_interpolate(pts))
    return fitted, onset


def fit_quasi_polynomial(profile, max_degree: int = 4, max_period: int = 8) -> QuasiPolynomial:
    """Smallest degree, then smallest period, that explains the data.

    The last 2m values are held out and must be predicted exactly.
    """
    h = list(profile.dims if isinstance(profile, HilbertProfile) else profile)
    if not any(h):
        return QuasiPolynomial(1, (polys.ZERO,), -1, 0, 0)
    for q in range(max_degree + 1):
        for m in range(1, max_period + 1):
            hold = 2 * m
            if len(h) - hold < (q + 1) * m + (q + 2) * m:
                continue
            res = _try_fit(h[: len(h) - hold], q, m)
            if res is None:
                continue
            fitted, onset = res
            qp = _build(fitted, m, onset)
            if all(qp(n) == h[n] for n in range(onset, len(h))):
                return qp
    need = (max_degree + 2) * max_period * 2 + 2 * max_period
    raise InsufficientData(
        f"no quasi-polynomial of degree <= {max_degree} and period <= {max_period} fits {len(h)} values",
        required_n_max=need,
    )


def _build(fitted, m, onset) -> QuasiPolynomial:
    d = max(polys.degree(p) for p in fitted)
    lcs = {p[d] if polys.degree(p) == d else Fraction(0) for p in fitted}
    if len(lcs) != 1:
        raise PreconditionError("residue polynomials disagree in leading term; not a Hilbert function")
    e = lcs.pop() * factorial(d)
    if e.denominator != 1 or e <= 0:
        raise PreconditionError(f"multiplicity {e} is not a positive integer")
    return QuasiPolynomial(m, tuple(fitted), d, int(e), onset)


def dimension_multiplicity(gamma: NumericalSemigroup, ideal: LeftIdealPresentation, n_max: int = 60) -> tuple[int, int]:
    """(d(M), e(M)) of M = D/I; the zero module gives (-1, 0)."""
    qp = fit_quasi_polynomial(module_hilbert(gamma, ideal, n_max))
    if qp.dimension >= 0 and not 1 <= qp.dimension <= 2:
        raise PreconditionError(f"dimension {qp.dimension} violates 1 <= d <= 2")
    return qp.dimension, qp.multiplicity


def is_holonomic(gamma: NumericalSemigroup, ideal: LeftIdealPresentation, n_max: int = 60) -> bool:
    d, _ = dimension_multiplicity(gamma, ideal, n_max)
    holo = d <= 1
    if not ideal.is_zero and not holo:
        raise AssertionError("a cyclic module D/I with I != 0 must be holonomic")
    return holo
