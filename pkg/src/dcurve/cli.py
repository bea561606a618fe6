"""Command-line front end: ``dcurve <command> [options]``.

Exit codes: 0 success, 1 failed verification, 2 usage error, 3 violated
mathematical precondition.  JSON reports carry ``schema`` and serialize
rationals as "p/q" strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import polys
from .diffring import (
    generator_components,
    gr_generator_exponents,
    prune_to_minimal,
    symbol,
)
from .ext import ext_table, ext_table_general, label_str
from .hilbert import (
    InsufficientData,
    LeftIdealPresentation,
    bernstein_closed_form,
    bernstein_dim,
    bernstein_onset,
    fit_quasi_polynomial,
    module_hilbert,
)
from .indecomp import build_indecomposable, composition_series, is_indecomposable_certified, word
from .modules import (
    build_a,
    build_malpha,
    build_minfty,
    build_t_mod_a,
    graded_isomorphism,
    is_simple_certified,
    localization_check,
    torsion_submodule,
    twist,
)
from .opalgebra import as_component, graded_divide, membership, parse_operator
from .semigroup import PreconditionError, gamma_prime, make_semigroup, sigma
from .verify import run_all

SCHEMA = "dcurve-report/1"


@dataclass
class ReportConfig:
    generators: list[int] = field(default_factory=lambda: [2, 3])
    window: tuple[int, int] = (-12, 12)
    n_max: int = 60
    alphas: list[Fraction] = field(default_factory=lambda: [Fraction(1, 2), Fraction(1, 3), Fraction(2, 3)])
    format: str = "text"
    seed: int = 20240601


def fs(c) -> str:
    return label_str(Fraction(c))


# -- argument types -------------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        out = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not out:
        raise argparse.ArgumentTypeError("empty generator list")
    return out


def _rational_list(text: str) -> list[Fraction]:
    try:
        return [Fraction(x.strip()) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}")


def _window(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo..hi, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError("window must have lo <= hi")
    return lo, hi


def _beta(text: str):
    if text in ("0",):
        return 0
    if text in ("inf", "infty", "oo"):
        return "inf"
    raise argparse.ArgumentTypeError("beta must be 0 or inf")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--gens", type=_int_list, default=[2, 3], help="semigroup generators, e.g. 2,3 (default 2,3)")
    common.add_argument("--window", type=_window, default=(-12, 12), help="degree window lo..hi (default -12..12)")
    common.add_argument("--nmax", type=int, default=60, help="filtration length for Hilbert data (default 60)")
    common.add_argument("--alphas", type=_rational_list, default=[Fraction(1, 2), Fraction(1, 3), Fraction(2, 3)],
                        help="alpha samples in (0,1) (default 1/2,1/3,2/3)")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--seed", type=int, default=20240601)

    p = argparse.ArgumentParser(prog="dcurve", description="Differential operators on monomial curves.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("semigroup", parents=[common], help="gaps, Frobenius number, sigma, Gamma'")
    op = sub.add_parser("operators", parents=[common], help="generators of D; parse, test and divide operators")
    op.add_argument("--op", help="operator to analyse, e.g. 't^-2*(E-2)*(E-3)'")
    op.add_argument("--divisor", help="divide --op by this homogeneous operator")
    sub.add_parser("grd", parents=[common], help="generators of gr D = k[Gamma']")
    h = sub.add_parser("hilbert", parents=[common], help="Hilbert function, (d, e), quasi-polynomial")
    h.add_argument("--ideal", action="append", default=[], help="ideal generator (repeatable); none means D itself")
    h.add_argument("--weyl", action="store_true", help="work over the Weyl algebra (Gamma = N0)")
    h.add_argument("--saturation-nmax", type=int, default=24,
                   help="filtration length used when the ideal needs saturation (default 24)")
    sub.add_parser("simples", parents=[common], help="simple graded modules and certificates")
    sub.add_parser("ext-table", parents=[common], help="Ext^1 table of the simple modules")
    ind = sub.add_parser("indecomp", parents=[common], help="indecomposables over the Weyl algebra")
    ind.add_argument("--kind", choices=["word", "power"], default="word")
    ind.add_argument("--beta", type=_beta, default="inf")
    ind.add_argument("--alpha", type=Fraction, default=Fraction(1, 2))
    ind.add_argument("--n", type=int, default=2)
    v = sub.add_parser("verify", parents=[common], help="run the acceptance suite")
    v.add_argument("--only", type=_int_list, help="restrict to these criterion numbers")
    return p


def _fix_negative_window(argv: list[str]) -> list[str]:
    # "--window -12..12" would otherwise be read as an option
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--window" and i + 1 < len(argv):
            out.append(f"--window={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


# -- commands -------------------------------------------------------------------


def cmd_semigroup(cfg, args):
    g = make_semigroup(cfg.generators)
    lo, hi = cfg.window
    data = g.to_json(cfg.window)
    gp = gamma_prime(g)
    data.update({
        "label": g.label(),
        "omega": {str(w): sorted(g.omega(w)) for w in range(lo, hi + 1)},
        "gamma_prime": {"s": gp.s, "gap_points": sorted(map(list, gp.gap_points)),
                        "minimal_generators": None if g.is_full else sorted(map(list, gp.minimal_generators))},
    })
    lines = [f"semigroup {g.label()}", f"  gaps: {sorted(g.gaps)}", f"  frobenius: {g.frobenius}",
             f"  s = #(N0^2 minus Gamma') = {gp.s}", "  w: sigma(w)  Omega(w)"]
    for w in range(lo, hi + 1):
        lines.append(f"  {w:>4}: {sigma(g, w):>3}  {sorted(g.omega(w))}")
    return data, lines


def _op_json(p):
    return {"render": str(p), "terms": p.to_json()}


def cmd_operators(cfg, args):
    g = make_semigroup(cfg.generators)
    gens = []
    lines = [f"generators of D for {g.label()}:"]
    for c in generator_components(g):
        sym = symbol(c)
        gens.append({"degree": c.degree, "euler_form": str(c), "operator": _op_json(c.to_operator()),
                     "symbol": [list(s.exponents) for s in sym], "bernstein_degree": c.bernstein_degree()})
        lines.append(f"  deg {c.degree:>3}: {c}  =  {c.to_operator()}   symbol {sym[0]}")
    data = {"gamma": g.label(), "generators": gens}
    if args.op:
        p = parse_operator(args.op)
        info = {"operator": _op_json(p), "in_D": membership(p, g), "order": p.order(),
                "degrees": p.degrees(), "bernstein_degree": p.bernstein_degree()}
        lines += [f"operator {p}", f"  in D: {info['in_D']}  order {p.order()}  Bernstein degree {p.bernstein_degree()}"]
        if args.divisor:
            q = parse_operator(args.divisor)
            lq, r = graded_divide(as_component(p), as_component(q))
            info["division"] = {"L": _op_json(lq.to_operator()), "R": _op_json(r.to_operator())}
            lines.append(f"  P = L*Q + R with L = {lq.to_operator()}, R = {r.to_operator()}")
        data["analysis"] = info
    return data, lines


def cmd_grd(cfg, args):
    g = make_semigroup(cfg.generators)
    if g.is_full:
        raise PreconditionError("gr D generators are described for Gamma != N0")
    raw = gr_generator_exponents(g)
    formula = prune_to_minimal(raw)
    brute = set(gamma_prime(g).minimal_generators)
    data = {"gamma": g.label(), "symbol_exponents": sorted(map(list, raw)),
            "minimal_from_symbols": sorted(map(list, formula)), "minimal_brute_force": sorted(map(list, brute)),
            "match": formula == brute, "s": gamma_prime(g).s, "onset": bernstein_onset(g)}
    lines = [f"gr D for {g.label()}", f"  symbol exponents of generators: {sorted(raw)}",
             f"  minimal (from symbols): {sorted(formula)}", f"  minimal (brute force): {sorted(brute)}",
             f"  match: {formula == brute}", f"  s = {data['s']}, closed form from n = {data['onset']}"]
    return data, lines


def cmd_hilbert(cfg, args):
    g = make_semigroup([1] if args.weyl else cfg.generators)
    ops = [parse_operator(x) for x in args.ideal]
    ideal = LeftIdealPresentation(g, tuple(ops))
    n_max = cfg.n_max
    if not (ideal.is_zero or ideal.is_principal or ideal.is_homogeneous):
        n_max = min(n_max, args.saturation_nmax)
    prof = module_hilbert(g, ideal, n_max)
    qp = fit_quasi_polynomial(prof)
    data = {"gamma": g.label(), "ideal": [str(o) for o in ideal.generators], "n_max": n_max, "profile": prof.to_json(),
            "fit": qp.to_json(), "d": qp.dimension, "e": qp.multiplicity,
            "holonomic": qp.dimension == 1,
            "bernstein": {"onset": bernstein_onset(g), "s": gamma_prime(g).s,
                          "closed_form_holds": all(bernstein_dim(g, n) == bernstein_closed_form(g, n)
                                                   for n in range(bernstein_onset(g), n_max + 1))}}
    lines = [f"M = D/I over {g.label()}, I generated by {data['ideal'] or '(nothing)'}",
             f"  method {prof.method}, exact {prof.exact}, n_max {n_max}",
             f"  dims: {list(prof.dims[:16])}{' ...' if len(prof.dims) > 16 else ''}",
             f"  period m = {qp.period}, d = {qp.dimension}, e = {qp.multiplicity}, onset {qp.onset}"]
    for r, pr in enumerate(qp.polys):
        lines.append(f"  P_{r}(k) = {polys.fmt(pr, 'k')}")
    return data, lines


def _dims_row(m, window):
    return [m.dim(d) for d in range(window[0], window[1] + 1)]


def cmd_simples(cfg, args):
    lines = []
    out = []
    # M_0 is always listed, so a sampled 0 is accepted and skipped
    alphas = _alphas(cfg, allow_zero=True)
    alphas = [a for a in alphas if a]
    for gens in ([1], cfg.generators):
        g = make_semigroup(gens)
        models = [("M_0", build_malpha(g, 0, cfg.window))]
        models += [(f"M_{fs(a)}", build_malpha(g, a, cfg.window)) for a in alphas]
        models.append(("M_inf", build_minfty(g, cfg.window)))
        block = {"gamma": g.label(), "window": list(cfg.window), "modules": []}
        lines.append(f"{g.label()}  window {cfg.window[0]}..{cfg.window[1]}")
        for name, m in models:
            verdict, cert = is_simple_certified(m)
            row = _dims_row(m, cfg.window)
            block["modules"].append({"name": name, "piece_dims": row, "simple": cert.to_json()})
            lines.append(f"  {name:<7} dims {''.join(map(str, row))}  {cert.to_json()['verdict']} on {cert.window}")
        loc = {}
        for a in [Fraction(0)] + alphas:
            loc[fs(a)] = localization_check(g, a, cfg.window)
            lines.append(f"  S^-1 M_{fs(a)} ~ N_{fs(a)}: {loc[fs(a)]}")
        block["localization"] = loc
        minf = build_minfty(g, cfg.window)
        tors = torsion_submodule(minf)
        block["minfty_torsion"] = all(tors.dim(d) == minf.dim(d) for d in minf.degrees())
        tma = build_t_mod_a(g, cfg.window)
        ta_simple, ta_cert = is_simple_certified(tma)
        ta_iso = graded_isomorphism(tma, twist(minf, 1)) is not None
        block["t_mod_a"] = {"piece_dims": _dims_row(tma, cfg.window), "simple": ta_cert.to_json(),
                            "isomorphic_to_minfty_shift_1": ta_iso}
        lines.append(f"  M_inf is S-torsion: {block['minfty_torsion']}")
        lines.append(f"  T/A: {ta_cert.to_json()['verdict']}, isomorphic to M_inf[1]: {ta_iso} (reported, not asserted)")
        out.append(block)
    return {"results": out}, lines


def _alphas(cfg, allow_zero=False):
    out = []
    for a in cfg.alphas:
        if not (0 <= a if allow_zero else 0 < a) or not a < 1:
            interval = "[0, 1)" if allow_zero else "(0, 1)"
            raise PreconditionError(f"alpha samples must lie in {interval}; got {fs(a)}")
        out.append(a)
    return out


def cmd_ext_table(cfg, args):
    alphas = _alphas(cfg)
    table = ext_table(alphas, cfg.window)
    g = make_semigroup(cfg.generators)
    data = {"entries": [e.to_json() for e in table], "all_match": all(e.matches for e in table)}
    labels = ["0", "inf"] + [fs(a) for a in alphas]
    lines = ["dim Ext^1(M_a, M_b)_0 over the Weyl algebra (rows a, columns b); * marks a nonzero case",
             "       " + "".join(f"{b:>7}" for b in labels)]
    for i, a in enumerate(labels):
        cells = table[i * len(labels):(i + 1) * len(labels)]
        lines.append(f"{a:>7}" + "".join(f"{str(e.ext1_dim) + ('*' if e.ext1_dim else ''):>7}" for e in cells))
    lines.append("cases: (0,inf) and (inf,0); alpha = beta in J*; 0 otherwise")
    if not g.is_full:
        rows = ext_table_general(g, alphas, cfg.window)
        data["general_gamma"] = {"gamma": g.label(), "entries": [e.to_json() for e in rows],
                                 "all_match": all(e.matches for e in rows)}
        lines.append(f"rows M_alpha recomputed over {g.label()}: match = {data['general_gamma']['all_match']}")
    return data, lines


def cmd_indecomp(cfg, args):
    if args.kind == "word":
        ind = build_indecomposable("word", args.n, beta=args.beta, window=cfg.window, n_max=cfg.n_max)
        name = f"w({args.beta},{args.n}) = {word(args.beta, args.n)}"
    else:
        ind = build_indecomposable("power", args.n, alpha=args.alpha, window=cfg.window, n_max=cfg.n_max)
        name = f"(E-{fs(args.alpha)})^{args.n}"
    cs = composition_series(ind.model)
    verdict, cert = is_indecomposable_certified(ind.model)
    data = {"kind": args.kind, "name": name, "presentation": [str(x) for x in ind.presentation.generators],
            "d": ind.d, "e": ind.e, "piece_dims": _dims_row(ind.model, cfg.window),
            "composition_series": [f.to_json() for f in cs.factors], "length": cs.length,
            "indecomposable": cert.to_json()}
    lines = [f"{name}: M = D/D({ind.presentation.generators[0]})", f"  d = {ind.d}, e = {ind.e}",
             f"  piece dims on {cfg.window}: {data['piece_dims']}",
             "  composition factors (bottom first): " + ", ".join(str(f) for f in cs.factors),
             f"  indecomposable: {cert.to_json()['verdict']} (End_0 dimension {cert.end_dim}; {cert.reason})"]
    return data, lines


def cmd_verify(cfg, args):
    only = set(args.only) if args.only else None

    def progress(r):
        print(f"criterion {r.number}: {r.seconds:.2f}s", file=sys.stderr)

    results = run_all(cfg.generators, cfg.seed, cfg.n_max, only, progress)
    failures = [{"criterion": r.number, "failures": r.failures or ["time limit exceeded"]}
                for r in results if not r.ok]
    data = {"results": [r.to_json() for r in results], "failures": failures, "all_passed": not failures}
    lines = [("[PASS] " if r.ok else "[FAIL] ") + f"criterion {r.number}: {r.name}" for r in results]
    for f in failures:
        for msg in f["failures"]:
            lines.append(f"  criterion {f['criterion']}: {msg}")
    lines.append("all criteria passed" if not failures else f"{len(failures)} criteria failed")
    return data, lines


COMMANDS = {
    "semigroup": cmd_semigroup,
    "operators": cmd_operators,
    "grd": cmd_grd,
    "hilbert": cmd_hilbert,
    "simples": cmd_simples,
    "ext-table": cmd_ext_table,
    "indecomp": cmd_indecomp,
    "verify": cmd_verify,
}


def run(command: str, cfg: ReportConfig, args) -> tuple[int, str]:
    data, lines = COMMANDS[command](cfg, args)
    code = 0
    if command == "verify" and not data["all_passed"]:
        code = 1
    if cfg.format == "json":
        text = json.dumps({"schema": SCHEMA, "command": command, **data}, indent=2, sort_keys=False)
    else:
        text = "\n".join(lines)
    return code, text


def main(argv=None) -> int:
    argv = _fix_negative_window(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = ReportConfig(args.gens, args.window, args.nmax, args.alphas, args.format, args.seed)
    try:
        code, text = run(args.command, cfg, args)
    except InsufficientData as exc:
        print(f"error: {exc} (try --nmax {exc.required_n_max})", file=sys.stderr)
        return 3
    except (PreconditionError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:  # malformed operator text
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
