"""Command line front end.

Each subcommand prints a deterministic key-value document and exits with
0 (computed, including negative answers), 2 (input or parse problem),
3 (a resource cap fired), or 4 (the answer needs a field extension).
"""

from __future__ import annotations

import argparse
import sys

from . import bounds, conjugacy, decompose, dml, msclass, semiconj, symmetry
from .errors import (BadReductionError, CollapsedImageError,
                     FieldExtensionRequiredError, HypothesisViolationError,
                     ParseError, ResourceCapError, RittKitError)
from .field import scalar_str
from .parser import parse_curve, parse_field, parse_poly
from .poly import LinearPoly, Poly

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_EXTENSION = 4


class Doc:
    """Ordered key-value document with two-space nesting."""

    def __init__(self):
        self.lines = []

    def add(self, key, value, indent=0):
        self.lines.append(f"{'  ' * indent}{key}: {value}")

    def item(self, value, indent=1):
        self.lines.append(f"{'  ' * indent}- {value}")

    def render(self) -> str:
        return "\n".join(self.lines) + "\n"


def _fmt_linear(ell: LinearPoly | None) -> str:
    return "absent" if ell is None else str(ell.to_poly())


def _scalar(text: str, field) -> object:
    p = parse_poly(text, field)
    if p.degree > 0:
        raise ParseError("expected a constant scalar")
    return p.constant_term()


def _alpha(text: str, field) -> tuple:
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError("alpha must be two comma-separated scalars")
    return (_scalar(parts[0], field), _scalar(parts[1], field))


def _indices(text: str) -> list:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError as exc:
        raise ParseError(f"bad index list {text!r}") from exc


# -- subcommand handlers ----------------------------------------------------

def _cmd_classify(args, field, doc):
    f = parse_poly(args.f, field)
    rep = conjugacy.classify(f)
    doc.add("is_cyclic", str(rep.is_cyclic).lower())
    doc.add("is_dihedral", str(rep.is_dihedral).lower())
    doc.add("conj_to_power", _fmt_linear(rep.conj_to_power))
    if rep.conj_to_pm_chebyshev is None:
        doc.add("conj_to_pm_chebyshev", "absent")
    else:
        sign, ell = rep.conj_to_pm_chebyshev
        doc.add("conj_to_pm_chebyshev",
                f"sign {scalar_str(sign)}, witness {ell.to_poly()}")
    doc.add("disintegrated", str(rep.disintegrated).lower())
    for h in rep.hints:
        doc.item(h)


def _cmd_decompose(args, field, doc):
    f = parse_poly(args.f, field)
    chains = decompose.complete_decompositions(f, args.degree_cap)
    doc.add("chains", len(chains))
    for ch in chains:
        doc.item(" o ".join(f"({p})" for p in ch.factors))


def _cmd_engstrom(args, field, doc):
    a = parse_poly(args.a, field)
    b = parse_poly(args.b, field)
    c = parse_poly(args.c, field)
    d = parse_poly(args.d, field)
    cert = decompose.engstrom_refine(a, b, c, d)
    doc.add("g", cert.g)
    doc.add("h", cert.h)
    doc.add("a_hat", cert.a_hat)
    doc.add("b_hat", cert.b_hat)
    doc.add("c_hat", cert.c_hat)
    doc.add("d_hat", cert.d_hat)
    doc.add("ell", "absent" if cert.ell is None else cert.ell.to_poly())
    doc.add("verified", str(cert.verify(a, b, c, d)).lower())


def _cmd_gamma(args, field, doc):
    A = parse_poly(args.f, field)
    grp = symmetry.gamma_group(A)
    doc.add("kind", grp.kind)
    if grp.kind == "Finite":
        doc.add("order", grp.order())
        doc.add("elements", "")
        for ell, L in zip(grp.elements, grp.companions):
            doc.item(f"{ell.to_poly()} (companion {L.to_poly()})")
        doc.add("generator", _fmt_linear(grp.generator))
        doc.add("extension_hint",
                "none" if grp.extension_hint is None else grp.extension_hint)


def _cmd_m_infinity(args, field, doc):
    f = parse_poly(args.f, field)
    grp = symmetry.m_infinity(f, args.iter_bound)
    doc.add("order", grp.order())
    doc.add("elements", "")
    for ell in grp.elements:
        doc.item(ell.to_poly())
    doc.add("generator", _fmt_linear(grp.generator))
    doc.add("stable_at", "none" if grp.stable_at is None else grp.stable_at)


def _cmd_semiconj_check(args, field, doc):
    w = semiconj.SemiconjWitness(parse_poly(args.f, field),
                                 parse_poly(args.p, field),
                                 parse_poly(args.eta, field))
    doc.add("holds", str(semiconj.semiconj_check(w)).lower())


def _cmd_solve_eta(args, field, doc):
    f = parse_poly(args.f, field)
    p = parse_poly(args.p, field)
    eta = semiconj.solve_eta(f, p)
    doc.add("eta", "absent" if eta is None else eta)


def _cmd_solve_p(args, field, doc):
    f = parse_poly(args.f, field)
    eta = parse_poly(args.eta, field)
    sols = semiconj.solve_p(f, eta, args.deg_bound)
    doc.add("solutions", len(sols))
    for p in sols:
        doc.item(p)


def _cmd_inou(args, field, doc):
    w = semiconj.SemiconjWitness(parse_poly(args.f, field),
                                 parse_poly(args.p, field),
                                 parse_poly(args.eta, field))
    nf = semiconj.inou_normal_form(w)
    doc.add("ell1", nf.ell1.to_poly())
    doc.add("ell2", nf.ell2.to_poly())
    doc.add("b", nf.b)
    doc.add("c", nf.c)
    doc.add("P", nf.P)
    doc.add("congruence_flag", str(nf.congruence_flag).lower())
    for k in sorted(nf.detail):
        doc.add(k, nf.detail[k], indent=1)
    doc.add("verified", str(nf.verify(w)).lower())


def _cmd_common_semiconj(args, field, doc):
    f = parse_poly(args.f, field)
    g = parse_poly(args.g, field)
    w = semiconj.common_semiconjugate(f, g, args.nmax, args.deg_cap)
    if w is None:
        doc.add("witness", "absent at caps")
        return
    doc.add("N", w.N)
    doc.add("eta", w.eta)
    doc.add("p", w.p)
    doc.add("q", w.q)
    doc.add("verified", str(w.verify(f, g)).lower())


def _cmd_approx_classes(args, field, doc):
    fs = [parse_poly(t, field) for t in args.f]
    res = semiconj.approx_classes(fs, args.nmax, args.deg_cap)
    doc.add("classes", len(res.classes))
    for cls in res.classes:
        doc.item(",".join(str(i) for i in cls))
    for root in sorted(res.representatives):
        theta, N, ps = res.representatives[root]
        doc.add(f"class_{root}_theta", theta)
        doc.add(f"class_{root}_N", N)
        for i in sorted(ps):
            doc.add(f"class_{root}_p_{i}", ps[i], indent=1)


def _cmd_curve_image(args, field, doc):
    C = parse_curve(args.curve, field)
    f = parse_poly(args.f, field)
    g = parse_poly(args.g, field)
    doc.add("image", msclass.curve_image(C, f, g))


def _cmd_curve_period(args, field, doc):
    C = parse_curve(args.curve, field)
    f = parse_poly(args.f, field)
    g = parse_poly(args.g, field)
    cert = msclass.curve_period(C, f, g, args.nmax, args.degree_cap)
    if cert is None:
        doc.add("period", f"not periodic within {args.nmax}")
        return
    doc.add("period", cert.period)
    doc.add("image_chain", "")
    for cur in cert.image_chain:
        doc.item(cur)
    doc.add("verified", str(cert.verify(f, g)).lower())


def _cmd_ms_diagonal(args, field, doc):
    f = parse_poly(args.f, field)
    out = msclass.ms_diagonal_curves(f, args.deg_cap, args.iter_bound)
    doc.add("curves", len(out))
    for dc in out:
        doc.item(f"{dc.curve} (g = {dc.g}, period {dc.certificate.period})")


def _add_trace(doc, trace):
    doc.add("trace", "")
    for label, value in trace:
        doc.item(f"{label} = {value}")


def _cmd_bound_c1(args, field, doc):
    trace = []
    val = bounds.bound_c1(args.d, args.n, trace)
    doc.add("value", val)
    doc.add("exact", str(val.is_exact()).lower())
    _add_trace(doc, trace)


def _cmd_bound_c(args, field, doc):
    trace = []
    val = bounds.bound_c(args.d, args.n, trace)
    doc.add("value", val)
    doc.add("exact", str(val.is_exact()).lower())
    _add_trace(doc, trace)


def _fmt_point(pt) -> str:
    return f"({scalar_str(pt[0])}, {scalar_str(pt[1])})"


def _cmd_orbit(args, field, doc):
    F1 = parse_poly(args.f1, field)
    F2 = parse_poly(args.f2, field)
    orb = dml.orbit(F1, F2, _alpha(args.alpha, field), args.n,
                    args.height_cap)
    doc.add("points", len(orb.points))
    for p in orb.points:
        doc.item(f"{p.index}: {_fmt_point(p.point)}")
    doc.add("truncated_at",
            "none" if orb.truncated_at is None else orb.truncated_at)


def _cmd_return_set(args, field, doc):
    F1 = parse_poly(args.f1, field)
    F2 = parse_poly(args.f2, field)
    C = parse_curve(args.curve, field)
    rs = dml.return_set_exact(F1, F2, _alpha(args.alpha, field), C,
                              args.n, args.height_cap)
    doc.add("indices", ",".join(str(i) for i in rs.indices) or "empty")
    doc.add("truncated_at",
            "none" if rs.truncated_at is None else rs.truncated_at)


def _cmd_return_set_modp(args, field, doc):
    F1 = parse_poly(args.f1, field)
    F2 = parse_poly(args.f2, field)
    C = parse_curve(args.curve, field)
    alpha = _alpha(args.alpha, field)
    primes = _indices(args.primes)
    if not primes:
        raise ParseError("need at least one prime")
    inter = None
    for p in sorted(primes):
        hits = dml.return_set_modp(F1, F2, alpha, C, p, args.n)
        doc.add(f"mod_{p}", ",".join(str(i) for i in hits) or "empty")
        inter = set(hits) if inter is None else inter & set(hits)
    doc.add("intersection",
            ",".join(str(i) for i in sorted(inter)) or "empty")


def _cmd_progressions(args, field, doc):
    S = set(_indices(args.set))
    progs = dml.progression_decompose(S, args.horizon)
    if progs is None:
        doc.add("progressions", "absent (no eventually periodic fit)")
        return
    doc.add("progressions", len(progs))
    for q in progs:
        doc.item(f"{{{q.a} + {q.b}k}}")


def _cmd_preperiodic(args, field, doc):
    f = parse_poly(args.f, field)
    res = dml.preperiodic_check(f, _scalar(args.a, field), args.n,
                                args.height_cap)
    doc.add("kind", res.kind)
    if res.kind == "Preperiodic":
        doc.add("tail", res.tail)
        doc.add("period", res.period)
    elif res.kind == "Escape":
        cert = res.certificate
        doc.add("index", cert.index)
        doc.add("radius", cert.radius)
        doc.add("value", scalar_str(cert.value))
        doc.add("verified", str(cert.verify(f)).lower())


# -- argument plumbing ------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ritt-kit",
        description="Exact polynomial decomposition, symmetry, "
                    "semiconjugacy, and invariant-curve toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    def cmd(name, handler, **flags):
        p = sub.add_parser(name)
        p.set_defaults(handler=handler)
        p.add_argument("--field", default="Q",
                       help="coefficient field: Q or Q(zeta N)")
        for flag, spec in flags.items():
            p.add_argument(f"--{flag.replace('_', '-')}", **spec)
        return p

    poly_arg = {"required": True}
    cmd("classify", _cmd_classify, f=poly_arg)
    cmd("decompose", _cmd_decompose, f=poly_arg,
        degree_cap={"type": int, "default": decompose.DECOMP_DEGREE_CAP})
    cmd("engstrom", _cmd_engstrom, a=poly_arg, b=poly_arg, c=poly_arg,
        d=poly_arg)
    cmd("gamma", _cmd_gamma, f=poly_arg)
    cmd("m-infinity", _cmd_m_infinity, f=poly_arg,
        iter_bound={"type": int, "default": None})
    cmd("semiconj-check", _cmd_semiconj_check, f=poly_arg, p=poly_arg,
        eta=poly_arg)
    cmd("solve-eta", _cmd_solve_eta, f=poly_arg, p=poly_arg)
    cmd("solve-p", _cmd_solve_p, f=poly_arg, eta=poly_arg,
        deg_bound={"type": int, "default": 8})
    cmd("inou", _cmd_inou, f=poly_arg, p=poly_arg, eta=poly_arg)
    cmd("common-semiconj", _cmd_common_semiconj, f=poly_arg, g=poly_arg,
        nmax={"type": int, "default": semiconj.DEFAULT_N_MAX},
        deg_cap={"type": int, "default": semiconj.DEFAULT_DEG_CAP})
    cmd("approx-classes", _cmd_approx_classes,
        f={"action": "append", "required": True},
        nmax={"type": int, "default": semiconj.DEFAULT_N_MAX},
        deg_cap={"type": int, "default": semiconj.DEFAULT_DEG_CAP})
    cmd("curve-image", _cmd_curve_image, curve=poly_arg, f=poly_arg,
        g=poly_arg)
    cmd("curve-period", _cmd_curve_period, curve=poly_arg, f=poly_arg,
        g=poly_arg, nmax={"type": int, "default": 4},
        degree_cap={"type": int, "default": msclass.IMAGE_DEGREE_CAP})
    cmd("ms-diagonal", _cmd_ms_diagonal, f=poly_arg,
        deg_cap={"type": int, "default": 3},
        iter_bound={"type": int, "default": None})
    for name, handler in (("bound-c1", _cmd_bound_c1),
                          ("bound-c", _cmd_bound_c)):
        p = sub.add_parser(name)
        p.set_defaults(handler=handler)
        p.add_argument("--field", default="Q")
        p.add_argument("d", type=int)
        p.add_argument("n", type=int)
    orbit_flags = dict(f1=poly_arg, f2=poly_arg, alpha=poly_arg,
                       n={"type": int, "default": 10},
                       height_cap={"type": int,
                                   "default": dml.DEFAULT_HEIGHT_CAP})
    cmd("orbit", _cmd_orbit, **orbit_flags)
    cmd("return-set", _cmd_return_set, curve=poly_arg, **orbit_flags)
    cmd("return-set-modp", _cmd_return_set_modp, curve=poly_arg,
        f1=poly_arg, f2=poly_arg, alpha=poly_arg, primes=poly_arg,
        n={"type": int, "default": 10})
    cmd("progressions", _cmd_progressions, set={"required": True},
        horizon={"type": int, "required": True})
    cmd("preperiodic", _cmd_preperiodic, f=poly_arg, a=poly_arg,
        n={"type": int, "default": 64},
        height_cap={"type": int, "default": dml.DEFAULT_HEIGHT_CAP})
    return ap


def run_command(argv) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    doc = Doc()
    doc.add("command", args.command)
    try:
        field = parse_field(args.field)
        args.handler(args, field, doc)
    except ParseError as exc:
        doc.add("error", "parse")
        doc.add("message", exc)
        if exc.position is not None:
            doc.add("position", exc.position)
        sys.stdout.write(doc.render())
        return EXIT_INPUT
    except ResourceCapError as exc:
        doc.add("error", "resource-cap")
        doc.add("message", exc)
        sys.stdout.write(doc.render())
        return EXIT_RESOURCE
    except FieldExtensionRequiredError as exc:
        doc.add("error", "field-extension-required")
        doc.add("message", exc)
        if exc.equation is not None:
            doc.add("equation", exc.equation)
        sys.stdout.write(doc.render())
        return EXIT_EXTENSION
    except CollapsedImageError as exc:
        doc.add("result", "collapsed")
        doc.add("message", exc)
        sys.stdout.write(doc.render())
        return EXIT_OK
    except (BadReductionError, HypothesisViolationError, RittKitError,
            ValueError) as exc:
        doc.add("error", "input")
        doc.add("message", exc)
        sys.stdout.write(doc.render())
        return EXIT_INPUT
    sys.stdout.write(doc.render())
    return EXIT_OK


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
