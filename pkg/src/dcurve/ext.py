"""Ext^1 between graded simple D-modules through cyclic presentations.

For M = D/DP with P homogeneous of degree p, the free resolution
0 -> D --(.P)--> D -> M -> 0 gives

    Hom(M, N) = ker(P : N -> N),    Ext^1(M, N) = coker(P : N -> N).

Grading convention: the kernel is keyed by the source degree d of
P : N_d -> N_{d+p}, the cokernel by the target degree e of P : N_{e-p} -> N_e.
With this bookkeeping Ext^1(M_inf, M_0) = A/tA sits in degree zero, and the
degree-zero parts are the Hom_0 and Ext^1_0 of the graded category.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import polys
from .linalg import rank
from .modules import (
    DEFAULT_WINDOW,
    GradedModuleModel,
    build_a,
    build_malpha,
    build_minfty,
    cyclic_quotient,
    generated_submodule,
    graded_hom_degree_zero,
    graded_isomorphism,
    inner_window,
    quotient,
    submodule_model,
    twist,
)
from .opalgebra import HomogeneousComponent, as_component, membership
from .semigroup import NATURALS, NumericalSemigroup, PreconditionError

INF = "inf"


@dataclass(frozen=True)
class Ext1Pieces:
    hom: dict[int, int]
    ext1: dict[int, int]
    window: tuple[int, int]
    stable: bool


def _map_rank(n: GradedModuleModel, p: HomogeneousComponent, d: int) -> int:
    if not n.dim(d) or not n.dim(d + p.degree):
        return 0
    return rank(n.act(p, d))


def _pieces(p, n, window):
    lo, hi = window
    hom = {d: n.dim(d) - _map_rank(n, p, d) for d in range(lo, hi + 1)}
    ext = {e: n.dim(e) - _map_rank(n, p, e - p.degree) for e in range(lo, hi + 1)}
    return hom, ext


def ext1_cyclic(p, n: GradedModuleModel, window=None) -> Ext1Pieces:
    """Kernel and cokernel dimensions of P acting on N, per degree.

    Stability: the dims on the inner window are recomputed with the window
    enlarged by 4 on each side and must agree.
    """
    p = as_component(p)
    if p.is_zero():
        raise PreconditionError("P must be nonzero")
    if not membership(p.to_operator(), n.gamma):
        raise PreconditionError(f"{p} is not in D")
    window = window or n.window
    inner = inner_window(window)
    hom, ext = _pieces(p, n, inner)
    hom2, ext2 = _pieces(p, n, (window[0] - 4, window[1] + 4))
    stable = all(hom[d] == hom2[d] and ext[d] == ext2[d] for d in hom)
    if not stable:
        raise PreconditionError(f"kernel/cokernel dims not stable on window {window}")
    return Ext1Pieces(hom, ext, inner, stable)


def presentation(label, gamma: NumericalSemigroup = NATURALS) -> HomogeneousComponent:
    """P with M_label = D/DP: d for M_0 and t for M_inf (Weyl only), E - alpha."""
    if label == INF or label == 0:
        if not gamma.is_full:
            raise PreconditionError("M_0 and M_inf are cyclic by a single homogeneous operator only over the Weyl algebra")
        return HomogeneousComponent(1, polys.ONE) if label == INF else HomogeneousComponent(-1, polys.X)
    a = Fraction(label)
    return HomogeneousComponent(0, polys.make([-a, 1]))


def simple_model(label, gamma: NumericalSemigroup = NATURALS, window=DEFAULT_WINDOW) -> GradedModuleModel:
    if label == INF:
        return build_minfty(gamma, window)
    return build_malpha(gamma, Fraction(label), window)


@dataclass(frozen=True)
class ExtTableEntry:
    source: object
    target: object
    hom_dim: int
    ext1_dim: int
    graded_degree: int | None
    expected: int
    gamma: str = "N0"

    @property
    def matches(self) -> bool:
        return self.ext1_dim == self.expected

    @property
    def case(self) -> str:
        if self.source != self.target and {self.source, self.target} == {0, INF}:
            return "(0,inf)/(inf,0)"
        if self.source == self.target and self.source not in (0, INF):
            return "alpha=beta in J*"
        return "otherwise"

    def to_json(self) -> dict:
        return {
            "source": label_str(self.source),
            "target": label_str(self.target),
            "name": f"Ext1(M_{label_str(self.source)}, M_{label_str(self.target)})_0",
            "hom_dim": self.hom_dim,
            "ext1_dim": self.ext1_dim,
            "graded_degree": self.graded_degree,
            "case": self.case,
            "expected": self.expected,
            "gamma": self.gamma,
        }


def label_str(x) -> str:
    if x == INF:
        return "inf"
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def expected_ext1(a, b) -> int:
    """The three-case classification: nonzero only at (0,inf), (inf,0) and alpha = beta != 0."""
    if {a, b} == {0, INF} and a != b:
        return 1
    if a == b and a not in (0, INF):
        return 1
    return 0


def _entry(a, b, gamma, window) -> ExtTableEntry:
    res = ext1_cyclic(presentation(a, gamma), simple_model(b, gamma, window), window)
    nz = [d for d, v in res.ext1.items() if v]
    return ExtTableEntry(a, b, res.hom[0], res.ext1[0], nz[0] if len(nz) == 1 else None,
                         expected_ext1(a, b), gamma.label())


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("DMOD_CURVE_THREADS", "1")))
    except ValueError:
        return 1


def _normalize(alphas) -> list:
    out = []
    for a in alphas:
        a = Fraction(a)
        if not 0 < a < 1:
            raise PreconditionError(f"alpha samples must lie in (0, 1); got {label_str(a)}")
        out.append(a)
    return out


def ext_table(alphas=(Fraction(1, 2), Fraction(1, 3), Fraction(2, 3)), window=DEFAULT_WINDOW) -> list[ExtTableEntry]:
    """Full table over {0, inf} + alphas, over the Weyl algebra."""
    labels = [0, INF] + _normalize(alphas)
    pairs = [(a, b) for a in labels for b in labels]
    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        return list(pool.map(lambda ab: _entry(ab[0], ab[1], NATURALS, window), pairs))


def ext_table_general(gamma: NumericalSemigroup, alphas=(Fraction(1, 2), Fraction(1, 3), Fraction(2, 3)),
                      window=DEFAULT_WINDOW) -> list[ExtTableEntry]:
    """Rows with source M_alpha computed directly over D(Gamma).

    Over a general Gamma the sources M_0 and M_inf have no single homogeneous
    presentation, so only the M_alpha rows are computed this way.
    """
    alphas = _normalize(alphas)
    labels = [0, INF] + alphas
    pairs = [(a, b) for a in alphas for b in labels]
    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        return list(pool.map(lambda ab: _entry(ab[0], ab[1], gamma, window), pairs))


@dataclass
class NonSplitWitness:
    middle: GradedModuleModel
    sub: GradedModuleModel
    top: GradedModuleModel
    sub_is_a_shift: bool
    top_is_minfty: bool
    hom_minfty_middle: int

    @property
    def ok(self) -> bool:
        return self.sub_is_a_shift and self.top_is_minfty and self.hom_minfty_middle == 0


def non_split_witness(window=DEFAULT_WINDOW) -> NonSplitWitness:
    """0 -> Dt/Ddt -> D/Ddt -> D/Dt -> 0 does not split."""
    w = HomogeneousComponent(0, polys.make([1, 1]))  # d t = E + 1
    middle = cyclic_quotient(NATURALS, w, window, "D/Ddt")
    sub = generated_submodule(middle, [(1, [Fraction(1)])], "Dt/Ddt")
    sub_m = submodule_model(middle, sub, "Dt/Ddt")
    top = quotient(middle, sub, "D/Dt")
    a_shift = twist(build_a(NATURALS, window), -1)
    minf = build_minfty(NATURALS, window)
    return NonSplitWitness(
        middle,
        sub_m,
        top,
        graded_isomorphism(sub_m, a_shift) is not None,
        graded_isomorphism(top, minf) is not None,
        graded_hom_degree_zero(minf, middle).dim,
    )
