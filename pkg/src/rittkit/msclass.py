"""Periodic plane curves for split polynomial maps (x, y) -> (f(x), g(y)).

curve_image pushes a curve forward by resultant elimination, curve_period
certifies minimal periods with the full image chain, and
ms_diagonal_curves enumerates the diagonal-form invariant curves coming
from linear symmetries composed with iterates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bivar import (BivarCurve, BivarPoly, bivar_squarefree,
                    lagrange_interpolate, resultant_x, resultant_y)
from .errors import (CollapsedImageError, HypothesisViolationError,
                     FieldExtensionRequiredError, ResourceCapError,
                     RittKitError)
from .field import scalar_sort_key
from .poly import Poly, compose, exact_div, iterate, squarefree_part

IMAGE_DEGREE_CAP = 512


def _univar_image(h: Poly, f: Poly) -> Poly:
    """R(u) = Res_t(h(t), u - f(t)): the values f takes on the roots of h."""
    field = h.field
    A = BivarPoly.from_univar(h, "y")
    rows = [Poly.make(field, [-f.coeff(0), 1])]
    rows += [Poly.constant(field, -f.coeff(j)) for j in range(1, f.degree + 1)]
    return resultant_y(A, BivarPoly.make(field, rows))


def _strip_x_content(G: BivarPoly) -> tuple:
    """(content in x, primitive part): splits off vertical-line factors."""
    c = G.content_y()
    if c.degree < 1:
        return Poly.constant(G.field, 1), G
    prim = BivarPoly.make(G.field, [exact_div(r, c) if not r.is_zero() else r
                                    for r in G.rows])
    return c, prim


def _generic_image(G: BivarPoly, f: Poly, g: Poly) -> BivarPoly:
    """Pushforward of a curve with no line components, both degrees >= 1.

    Eliminates x from {G = 0, u = f(x)} per sample value of u, then
    eliminates y against v = g(y), and interpolates the result in u.
    Extraneous single-variable factors (leading-coefficient powers picked
    up by the resultants) are stripped afterwards; a genuine image here
    has no such factors because both projections are nonconstant.
    """
    field = G.field
    bound_u = G.deg_x * g.degree
    samples = []
    dmax = 0
    t = 0
    while True:
        kept = [s for s in samples if s[1].degree == dmax]
        if dmax >= 1 and len(kept) >= bound_u + 1:
            break
        if t > 20 * (bound_u + 1) + 50:
            raise RittKitError("could not collect enough image samples")
        u0 = field.coerce(t)
        t += 1
        B = BivarPoly.from_univar(Poly.constant(field, u0) - f, "x")
        R1 = resultant_x(G, B)
        if R1.is_zero():
            continue
        samples.append((u0, R1))
        dmax = max(dmax, R1.degree)
    kept = kept[:bound_u + 1]
    slices = [(u0, _univar_image(R1, g)) for u0, R1 in kept]
    rows = []
    for k in range(dmax + 1):
        pts = [(u0, S.coeff(k)) for u0, S in slices]
        rows.append(lagrange_interpolate(field, pts))
    H = BivarPoly.make(field, rows)
    _, H = _strip_x_content(H)
    _, Ht = _strip_x_content(H.transpose())
    return Ht.transpose()


def curve_image(C: BivarCurve, f: Poly, g: Poly) -> BivarCurve:
    """Zariski closure of the image of C under (x, y) -> (f(x), g(y)).

    Vertical and horizontal line components are imaged directly; the rest
    goes through resultant elimination.  The result is squarefree.
    """
    if f.degree < 1 or g.degree < 1:
        raise RittKitError("both coordinate maps must be nonconstant")
    field = C.field
    G = C.poly
    parts = []
    cx, G = _strip_x_content(G)
    if cx.degree >= 1:
        lines = squarefree_part(_univar_image(cx, f))
        parts.append(BivarPoly.from_univar(lines, "x"))
    cy, Gt = _strip_x_content(G.transpose())
    G = Gt.transpose()
    if cy.degree >= 1:
        lines = squarefree_part(_univar_image(cy, g))
        parts.append(BivarPoly.from_univar(lines, "y"))
    if G.deg_x >= 1 and G.deg_y >= 1:
        parts.append(_generic_image(G, f, g))
    if not parts:
        raise CollapsedImageError("image is not a curve")
    total = parts[0]
    for p in parts[1:]:
        total = total * p
    total = bivar_squarefree(total)
    if total.deg_x < 1 and total.deg_y < 1:
        raise CollapsedImageError("image is not a curve")
    return BivarCurve.make(total)


@dataclass(frozen=True)
class PeriodCertificate:
    curve: BivarCurve
    period: int
    image_chain: tuple  # image_chain[0] = curve, image_chain[period] = curve

    def verify(self, f: Poly, g: Poly) -> bool:
        if self.period < 1 or len(self.image_chain) != self.period + 1:
            return False
        if self.image_chain[0] != self.curve:
            return False
        for k in range(1, self.period + 1):
            if curve_image(self.image_chain[k - 1], f, g) != self.image_chain[k]:
                return False
        if self.image_chain[self.period] != self.curve:
            return False
        return all(self.image_chain[k] != self.curve
                   for k in range(1, self.period))


def curve_period(C: BivarCurve, f: Poly, g: Poly, N_max: int,
                 degree_cap: int = IMAGE_DEGREE_CAP):
    """Minimal period of C under (f, g) with its image chain, or None.

    A sound early exit: the defining polynomial of any curve divides the
    pullback of its image, so deg_x can shrink by at most a factor of
    deg f per step (and deg_y by deg g).  Once the chain's degrees exceed
    what could map back onto C in the remaining steps, it never returns.
    """
    if N_max < 1:
        raise RittKitError("N_max must be >= 1")
    chain = [C]
    for n in range(1, N_max + 1):
        nxt = curve_image(chain[-1], f, g)
        if nxt.deg_x > degree_cap or nxt.deg_y > degree_cap:
            raise ResourceCapError(
                f"intermediate curve degree exceeds cap {degree_cap}")
        chain.append(nxt)
        if nxt == C:
            return PeriodCertificate(C, n, tuple(chain))
        remaining = N_max - n
        if (nxt.deg_x > C.deg_x * f.degree ** remaining
                or nxt.deg_y > C.deg_y * g.degree ** remaining):
            return None
    return None


def projection_profile(C: BivarCurve) -> dict:
    """Whether each coordinate projection of the curve is constant."""
    return {"x_constant": C.x_constant(), "y_constant": C.y_constant()}


def graph_curve(h: Poly, orientation: str = "y") -> BivarCurve:
    """The curve y - h(x) = 0, or x - h(y) = 0 when orientation is "x"."""
    field = h.field
    if orientation == "y":
        rows = [-h, Poly.constant(field, 1)]
    else:
        rows = [Poly.make(field, [-h.coeff(0), 1])]
        rows += [Poly.constant(field, -h.coeff(j))
                 for j in range(1, h.degree + 1)]
    return BivarCurve.make(BivarPoly.make(field, rows))


def f_tilde_candidate(f: Poly, iter_bound: int) -> Poly:
    """Lowest-degree nonlinear polynomial commuting with an iterate of f.

    Defaults to f itself when nothing of smaller degree commutes with any
    f^(o k), k <= iter_bound.
    """
    from .semiconj import solve_intertwiner
    if f.degree <= 2:
        return f
    best = f
    F = Poly.x(f.field)
    for _ in range(iter_bound):
        F = compose(f, F)
        try:
            cands = solve_intertwiner(F, F, f.degree - 1)
        except FieldExtensionRequiredError:
            continue
        for p in cands:
            if 2 <= p.degree < best.degree:
                best = p
    return best


@dataclass(frozen=True)
class DiagonalCurve:
    g: Poly
    curve: BivarCurve
    certificate: PeriodCertificate


def _poly_sort_key(p: Poly):
    return (p.degree, tuple(scalar_sort_key(c) for c in p.coeffs))


def ms_diagonal_curves(f: Poly, deg_cap: int,
                       iter_bound: int | None = None) -> list:
    """Invariant diagonal-form curves y = g(x) and x = g(y) for (f, f).

    Candidates g run over the linear maps commuting with some iterate of
    f, composed on either side with iterates of the lowest-degree
    nonlinear commuter; each emitted curve carries a period certificate.
    """
    from .conjugacy import classify
    from .symmetry import commutes_with_iterate, m_infinity
    if f.degree < 2:
        raise RittKitError("ms_diagonal_curves needs degree >= 2")
    if not classify(f).disintegrated:
        raise HypothesisViolationError(
            "diagonal enumeration expects a disintegrated polynomial")
    if deg_cap < 1:
        raise RittKitError("deg_cap must be >= 1")
    if iter_bound is None:
        iter_bound = f.degree
    ft = f_tilde_candidate(f, iter_bound)
    group = m_infinity(f, iter_bound)
    cands = []
    for L in group.elements:
        Lp = L.to_poly()
        base = Poly.x(f.field)
        while base.degree <= deg_cap:
            for gg in (compose(base, Lp), compose(Lp, base)):
                if 1 <= gg.degree <= deg_cap and gg not in cands:
                    cands.append(gg)
            base = compose(ft, base)
    out = []
    seen = set()
    for gg in sorted(cands, key=_poly_sort_key):
        n = commutes_with_iterate(f, gg, iter_bound)
        if n is None:
            continue
        for orientation in ("y", "x"):
            curve = graph_curve(gg, orientation)
            if curve in seen:
                continue
            cert = curve_period(curve, f, f, n)
            if cert is None:
                continue
            seen.add(curve)
            out.append(DiagonalCurve(g=gg, curve=curve, certificate=cert))
    return out


def periodic_graph_search(f: Poly, g: Poly, deg_cap: int,
                          N_max: int) -> list:
    """Periodic graph-shaped curves for the split map (f, g).

    Searches curves y = h(x) and x = h(y) with deg h <= deg_cap fixed by
    the N-th power of the map for some N <= N_max; each hit is returned
    as a DiagonalCurve with a period certificate.  Graphs invariant under
    any iterate force equal degrees, so unequal inputs yield nothing.
    """
    from .semiconj import solve_intertwiner
    if f.degree < 2 or g.degree < 2:
        raise RittKitError("periodic_graph_search needs degrees >= 2")
    if N_max < 1 or deg_cap < 1:
        raise RittKitError("N_max and deg_cap must be >= 1")
    if f.degree != g.degree:
        return []
    out = []
    seen = set()
    for N in range(1, N_max + 1):
        FN = iterate(f, N)
        GN = iterate(g, N)
        for left, right, orientation in ((GN, FN, "y"), (FN, GN, "x")):
            try:
                hs = solve_intertwiner(left, right, deg_cap)
            except FieldExtensionRequiredError:
                hs = []
            for h in hs:
                curve = graph_curve(h, orientation)
                if curve in seen:
                    continue
                cert = curve_period(curve, f, g, N)
                if cert is None:
                    continue
                seen.add(curve)
                out.append(DiagonalCurve(g=h, curve=curve, certificate=cert))
    return out
