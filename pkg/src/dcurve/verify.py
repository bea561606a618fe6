"""The acceptance suite: nine exact checks, each with a wall-time budget."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import polys
from .diffring import pw_component, symbol, verify_gr_generators
from .ext import INF, ext_table, ext_table_general
from .hilbert import (
    LeftIdealPresentation,
    bernstein_closed_form,
    bernstein_dim,
    bernstein_onset,
    fit_quasi_polynomial,
    module_hilbert,
)
from .indecomp import build_indecomposable, composition_series, is_indecomposable_certified
from .modules import (
    build_a,
    build_malpha,
    build_minfty,
    is_simple_certified,
    localization_check,
    torsion_submodule,
)
from .opalgebra import HomogeneousComponent, LaurentWeylOperator, graded_divide
from .semigroup import NATURALS, NumericalSemigroup, make_semigroup, sigma

STANDARD_GAMMAS = ((2, 3), (2, 5), (3, 4, 5))
ALPHAS = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3))


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    seconds: float
    limit: float
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed and self.seconds < self.limit

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"[{status}] criterion {self.number}: {self.name} ({self.seconds:.2f}s, limit {self.limit:.0f}s)"

    def to_json(self) -> dict:
        return {"criterion": self.number, "name": self.name, "passed": self.ok,
                "limit_seconds": self.limit, "failures": self.failures}


def _gammas(gens) -> list[NumericalSemigroup]:
    seen = []
    for g in list(STANDARD_GAMMAS) + ([tuple(gens)] if gens else []):
        s = make_semigroup(g)
        if not s.is_full and s not in seen:
            seen.append(s)
    return seen


# -- 1 --------------------------------------------------------------------------


def check_bernstein(gammas) -> list[str]:
    bad = []
    for g in gammas:
        for n in range(bernstein_onset(g), 81):
            if bernstein_dim(g, n) != bernstein_closed_form(g, n):
                bad.append(f"{g.label()} n={n}: {bernstein_dim(g, n)} != {bernstein_closed_form(g, n)}")
    return bad


# -- 2 --------------------------------------------------------------------------


def check_sigma_symbols(gammas) -> list[str]:
    bad = []
    for g in [NATURALS] + list(gammas):
        for w in range(-50, 51):
            if sigma(g, -w) != sigma(g, w) + w:
                bad.append(f"{g.label()} sigma identity fails at w={w}")
        for w in range(-20, 21):
            sym = symbol(pw_component(g, w))
            want = (sigma(g, -w), sigma(g, w))
            if len(sym) != 1 or sym[0].exponents != want or sym[0].coeff != 1:
                bad.append(f"{g.label()} symbol of P_{w} is {[str(s) for s in sym]}")
    return bad


# -- 3 --------------------------------------------------------------------------


def check_gr_generators(gammas) -> list[str]:
    return [f"{g.label()}: generator set of gr D mismatch" for g in gammas if not verify_gr_generators(g)]


# -- 4 and 5 --------------------------------------------------------------------


def random_principal(gamma: NumericalSemigroup, rng: random.Random) -> LaurentWeylOperator:
    """A random nonzero element of D with positive Bernstein degree."""
    while True:
        op = LaurentWeylOperator()
        for _ in range(rng.randint(1, 3)):
            w = rng.randint(-4, 4)
            s = rng.randint(0, 2)
            c = rng.choice([-3, -2, -1, 1, 2, 3])
            f = polys.scale(polys.mul(pw_component(gamma, w).poly, polys.power(polys.X, s)), c)
            op = op + HomogeneousComponent(w, f).to_operator()
        if not op.is_zero() and op.bernstein_degree() >= 1:
            return op


def named_profiles(gamma: NumericalSemigroup):
    """(label, gamma, generators, expected (d, e)) for the named modules."""
    E = LaurentWeylOperator.euler()
    return [
        ("D (Weyl)", NATURALS, (), (2, 1)),
        (f"D ({gamma.label()})", gamma, (), (2, 1)),
        ("D/Dt", NATURALS, (LaurentWeylOperator.t(),), (1, 1)),
        ("D/Dd", NATURALS, (LaurentWeylOperator.d(),), (1, 1)),
        ("D/D(E-1/2)", NATURALS, (E - Fraction(1, 2),), (1, 2)),
    ]


def check_dimensions(gamma, seed: int, n_max: int, sink: list | None = None) -> list[str]:
    bad = []
    for label, g, gens, want in named_profiles(gamma):
        prof = module_hilbert(g, LeftIdealPresentation(g, gens), n_max)
        qp = fit_quasi_polynomial(prof)
        if (qp.dimension, qp.multiplicity) != want:
            bad.append(f"{label}: (d, e) = ({qp.dimension}, {qp.multiplicity}), expected {want}")
        if sink is not None:
            sink.append((label, prof.dims))
    rng = random.Random(seed)
    for i in range(25):
        op = random_principal(gamma, rng)
        prof = module_hilbert(gamma, LeftIdealPresentation(gamma, (op,)), n_max)
        qp = fit_quasi_polynomial(prof)
        if qp.dimension < 1:
            bad.append(f"random ideal {i} ({op}): d = {qp.dimension}")
        if sink is not None:
            sink.append((f"random {i}", prof.dims))
    return bad


def synthetic_period_two(n_max: int) -> tuple[int, ...]:
    """1, 1, 2, 2, 3, 3, ... the Hilbert function of a polynomial ring in one variable of degree 2."""
    return tuple(n // 2 + 1 for n in range(n_max + 1))


def check_held_out(profiles) -> list[str]:
    """Fit with the tail hidden, then predict the hidden tail exactly."""
    bad = []
    for label, dims in profiles:
        full = fit_quasi_polynomial(dims)
        hold = 2 * full.period
        part = fit_quasi_polynomial(dims[: len(dims) - hold])
        if (part.period, part.dimension, part.multiplicity) != (full.period, full.dimension, full.multiplicity):
            bad.append(f"{label}: fit changes when the tail is hidden")
        for n in range(len(dims) - hold, len(dims)):
            if part(n) != dims[n]:
                bad.append(f"{label}: predicted {part(n)} at n={n}, actual {dims[n]}")
                break
        if any(full(n) != dims[n] for n in range(full.onset, len(dims))):
            bad.append(f"{label}: fit does not reproduce the profile")
    return bad


# -- 6 --------------------------------------------------------------------------


def check_ext(gamma) -> list[str]:
    bad = []
    for e in ext_table(ALPHAS):
        if not e.matches:
            bad.append(f"Ext1(M_{e.source}, M_{e.target})_0 = {e.ext1_dim}, expected {e.expected}")
    for e in ext_table_general(gamma, ALPHAS):
        if not e.matches:
            bad.append(f"{gamma.label()}: Ext1(M_{e.source}, M_{e.target})_0 = {e.ext1_dim}, expected {e.expected}")
    return bad


# -- 7 --------------------------------------------------------------------------


def check_simples(gamma, window=(-12, 12)) -> list[str]:
    bad = []
    for g in (NATURALS, gamma):
        models = [build_malpha(g, a, window) for a in (0, Fraction(1, 2), Fraction(1, 3))]
        models.append(build_minfty(g, window))
        for m in models:
            verdict, cert = is_simple_certified(m)
            if verdict is not True:
                bad.append(f"{g.label()} {m.tag}: {cert.reason}")
        for a in (0, Fraction(1, 2), Fraction(1, 3)):
            if not localization_check(g, a, window):
                bad.append(f"{g.label()}: localization of M_{a} is not N_{a}")
        minf = build_minfty(g, window)
        tors = torsion_submodule(minf)
        if any(tors.dim(d) != minf.dim(d) for d in minf.degrees()):
            bad.append(f"{g.label()}: M_inf is not S-torsion")
        a = build_a(g, window)
        if any(torsion_submodule(a).dim(d) for d in a.degrees()):
            bad.append(f"{g.label()}: A has torsion")
    return bad


# -- 8 --------------------------------------------------------------------------


def check_indecomposables(max_n: int = 4, window=(-12, 12)) -> list[str]:
    bad = []
    for beta in (0, INF):
        for n in range(1, max_n + 1):
            ind = build_indecomposable("word", n, beta=beta, window=window)
            label = f"w({beta},{n})"
            if ind.e != n:
                bad.append(f"{label}: e = {ind.e}")
            cs = composition_series(ind.model)
            if cs.length != n or not cs.complete:
                bad.append(f"{label}: composition length {cs.length}")
            fams = [f.family for f in cs.factors]
            if any(a == b for a, b in zip(fams, fams[1:])) or not set(fams) <= {"0", "inf"}:
                bad.append(f"{label}: factors {fams} do not alternate")
            verdict, cert = is_indecomposable_certified(ind.model)
            if verdict is not True:
                bad.append(f"{label}: {cert.reason}")
            if (beta, n) == (INF, 2):
                names = sorted(str(f) for f in cs.factors)
                if names != ["M_0[-1]", "M_inf"]:
                    bad.append(f"D/Ddt factors {names}")
    return bad


# -- 9 --------------------------------------------------------------------------


def random_component(rng: random.Random, max_order: int = 4) -> HomogeneousComponent:
    w = rng.randint(-5, 5)
    coeffs = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(rng.randint(1, max_order + 1))]
    return HomogeneousComponent(w, polys.make(coeffs))


def check_division(seed: int, count: int = 200) -> list[str]:
    rng = random.Random(seed)
    bad = []
    done = 0
    while done < count:
        p, q = random_component(rng, 5), random_component(rng, 3)
        if q.is_zero():
            continue
        done += 1
        lpart, r = graded_divide(p, q)
        rebuilt = lpart.to_operator() * q.to_operator() + r.to_operator()
        if rebuilt != p.to_operator():
            bad.append(f"reconstruction fails for P={p}, Q={q}")
        if not r.is_zero() and r.order() >= q.order():
            bad.append(f"order(R) >= order(Q) for P={p}, Q={q}")
    return bad


# -- driver -----------------------------------------------------------------------


def run_all(gens=(2, 3), seed: int = 20240601, n_max: int = 60,
            only: set[int] | None = None, report: Callable[[CriterionResult], None] | None = None) -> list[CriterionResult]:
    gamma = make_semigroup(gens)
    gammas = _gammas(gens)
    profiles: list = []

    def crit5():
        if not profiles:
            check_dimensions(gamma, seed, n_max, profiles)
        return check_held_out(profiles + [("synthetic period 2", synthetic_period_two(n_max))])

    plan = [
        (1, "Bernstein dimension closed form", 5, lambda: check_bernstein(gammas)),
        (2, "sigma identity and symbols of P_w", 5, lambda: check_sigma_symbols(gammas)),
        (3, "minimal generators of gr D", 5, lambda: check_gr_generators(gammas)),
        (4, "dimension and multiplicity", 60, lambda: check_dimensions(gamma, seed, n_max, profiles)),
        (5, "held-out quasi-polynomial fits", 30, crit5),
        (6, "Ext table", 60, lambda: check_ext(gamma)),
        (7, "simple modules and localization", 120, lambda: check_simples(gamma)),
        (8, "alternating-word indecomposables", 120, check_indecomposables),
        (9, "graded division algorithm", 10, lambda: check_division(seed)),
    ]
    results = []
    for num, name, limit, fn in plan:
        if only and num not in only:
            continue
        t0 = time.perf_counter()
        try:
            failures = fn()
        except Exception as exc:  # a crash is a failure of the criterion
            failures = [f"{type(exc).__name__}: {exc}"]
        res = CriterionResult(num, name, not failures, time.perf_counter() - t0, limit, failures)
        results.append(res)
        if report:
            report(res)
    return results
