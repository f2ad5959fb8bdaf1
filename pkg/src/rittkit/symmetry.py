"""Linear symmetry groups of polynomials and iterate alignment.

Gamma(A) collects the linear ell with A o ell = L o A for some linear L;
M(f^inf) collects the linear maps commuting with some iterate of f.
Both are computed by exact coefficient elimination: the translation part
of ell is a forced linear function of its scale, leaving univariate
root-finding in the scale.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bivar import BivarPoly
from .errors import HypothesisViolationError, RittKitError
from .field import roots_of_unity, scalar_sort_key
from .poly import (DEGREE_CAP, LinearPoly, Poly, compose, iterate, poly_gcd,
                   poly_divmod)
from .roots import in_field_roots

INFINITE = "Infinite"
FINITE = "Finite"


@dataclass(frozen=True)
class LinearGroup:
    kind: str
    elements: tuple = ()          # LinearPoly, identity first
    companions: tuple = ()        # matching L with A o ell = L o A
    generator: LinearPoly | None = None
    extension_hint: int | None = None  # cyclotomic order that may add elements
    stable_at: int | None = None       # m_infinity bound stability marker

    def order(self) -> int | None:
        return len(self.elements) if self.kind == FINITE else None


def _find_generator(elements) -> LinearPoly | None:
    """A single element whose composition powers enumerate the group."""
    n = len(elements)
    pool = set((e.a, e.b) for e in elements)
    for cand in elements:
        seen = set()
        cur = cand
        for _ in range(n):
            seen.add((cur.a, cur.b))
            cur = cand.after(cur)
        if seen == pool:
            return cand
    return None


def _scale_equations(A: Poly):
    """Coefficient equations in the scale a of ell = a x + b(a).

    b(a) = A_{d-1} (a - 1) / (d A_d) is forced by the x^(d-1) coefficient.
    Returns (equations, b_of) where each equation is a Poly in a.
    """
    fieldK = A.field
    d = A.degree
    c = A.coeff(d - 1) / (d * A.leading())

    def b_of(a):
        return c * (a - fieldK.one())

    # inner substitution a*x + c*(a - 1), with a as the second variable
    inner = BivarPoly.make(fieldK, [[-c, 0], [c, 1]])
    acc = BivarPoly(fieldK, ())
    for coef in reversed(A.coeffs):
        acc = acc * inner + BivarPoly.make(fieldK, [[coef]])
    udeg = acc.deg_y
    eqs = []
    for i in range(1, d - 1):
        lhs = Poly.make(fieldK, [acc.coeff(i, j) for j in range(udeg + 1)])
        rhs = Poly.monomial(fieldK, d).scale(A.coeff(i))
        eqs.append(lhs - rhs)
    return eqs, b_of


def _companion(A: Poly, ell: LinearPoly) -> LinearPoly | None:
    """The L with A o ell = L o A, verified exactly."""
    lhs = compose(A, ell.to_poly())
    a_top = lhs.leading() / A.leading()
    tau = lhs.constant_term() - a_top * A.constant_term()
    L = LinearPoly.make(A.field, a_top, tau)
    if compose(L.to_poly(), A) == lhs:
        return L
    return None


def _extension_hint_order(residual: Poly, cap: int) -> int | None:
    """Smallest m with residual dividing a^m - 1, if any up to cap."""
    if residual.degree < 1:
        return None
    fieldK = residual.field
    for m in range(1, cap + 1):
        probe = Poly.monomial(fieldK, m) - Poly.constant(fieldK, 1)
        if poly_divmod(probe, residual)[1].is_zero():
            return m
    return None


def gamma_group(A: Poly) -> LinearGroup:
    """Gamma(A): linear ell with A o ell = L o A, over the ambient field.

    Infinite exactly when A is cyclic.  Elements found only in an
    extension are reported through extension_hint, not raised.
    """
    if A.degree < 2:
        raise RittKitError("symmetry group needs degree >= 2")
    from .conjugacy import classify
    fieldK = A.field
    d = A.degree
    eqs, b_of = _scale_equations(A)
    G = Poly(fieldK, ())
    for e in eqs:
        G = poly_gcd(G, e)
    cyclic = classify(A).is_cyclic
    if not eqs or G.is_zero():
        if not cyclic:
            raise RittKitError("infinite symmetry group for a non-cyclic input")
        return LinearGroup(kind=INFINITE)
    if cyclic:
        raise RittKitError("finite symmetry group for a cyclic input")
    elements, companions = [], []
    residual = G
    for a in in_field_roots(G):
        if not a:
            continue
        ell = LinearPoly.make(fieldK, a, b_of(a))
        L = _companion(A, ell)
        if L is None:
            continue
        elements.append(ell)
        companions.append(L)
        lin = Poly.make(fieldK, [-a, 1])
        while residual.degree >= 1:
            q, r = poly_divmod(residual, lin)
            if not r.is_zero():
                break
            residual = q
    order = sorted(range(len(elements)),
                   key=lambda i: scalar_sort_key(elements[i].a))
    # identity first
    order.sort(key=lambda i: not elements[i].is_identity())
    elements = [elements[i] for i in order]
    companions = [companions[i] for i in order]
    gen = _find_generator(elements)
    if gen is None:
        raise RittKitError("symmetry group is not cyclic (unexpected)")
    return LinearGroup(kind=FINITE, elements=tuple(elements),
                       companions=tuple(companions), generator=gen,
                       extension_hint=_extension_hint_order(residual, 2 * d))


def _commuting_linears(F: Poly) -> list:
    """All in-field linear ell with F o ell = ell o F."""
    fieldK = F.field
    d = F.degree
    c = F.coeff(d - 1) / (d * F.leading())
    out = []
    for a in roots_of_unity(fieldK):
        if a ** (d - 1) != fieldK.one():
            continue
        ell = LinearPoly.make(fieldK, a, c * (a - fieldK.one()))
        if compose(F, ell.to_poly()) == compose(ell.to_poly(), F):
            out.append(ell)
    return out


def m_infinity(f: Poly, iter_bound: int | None = None) -> LinearGroup:
    """Linear maps commuting with f^(o k) for some k <= iter_bound.

    The result is marked stable_at = ceil(bound/2) when the second half of
    the bound range contributed nothing new.
    """
    if f.degree < 2:
        raise RittKitError("m_infinity needs degree >= 2")
    if iter_bound is None:
        iter_bound = f.degree
    if iter_bound < 1:
        raise RittKitError("iter_bound must be >= 1")
    fieldK = f.field
    seen = {}
    first_k = {}
    F = Poly.x(fieldK)
    for k in range(1, iter_bound + 1):
        try:
            F = compose(f, F)
        except Exception:
            break
        for ell in _commuting_linears(F):
            key = (ell.a, ell.b)
            if key not in seen:
                seen[key] = ell
                first_k[key] = k
    elements = sorted(seen.values(), key=lambda e: scalar_sort_key(e.a))
    elements.sort(key=lambda e: not e.is_identity())
    half = (iter_bound + 1) // 2
    stable = half if all(first_k[k] <= half for k in first_k) else None
    gen = _find_generator(elements)
    return LinearGroup(kind=FINITE, elements=tuple(elements),
                       companions=tuple(elements), generator=gen,
                       stable_at=stable)


def commutes_with_iterate(f: Poly, g: Poly, bound: int) -> int | None:
    """Smallest n <= bound with g o f^(o n) = f^(o n) o g."""
    if f.degree < 2 or g.degree < 1:
        raise RittKitError("need deg f >= 2 and deg g >= 1")
    F = Poly.x(f.field)
    for n in range(1, bound + 1):
        F = compose(f, F)
        if compose(g, F) == compose(F, g):
            return n
    return None


def common_commuting_iterate(f: Poly, bound: int | None = None) -> int | None:
    """Smallest n <= bound such that f^(o n) commutes with all of M(f^inf)."""
    if bound is None:
        bound = f.degree
    group = m_infinity(f, bound)
    F = Poly.x(f.field)
    for n in range(1, bound + 1):
        F = compose(f, F)
        if all(compose(F, ell.to_poly()) == compose(ell.to_poly(), F)
               for ell in group.elements):
            return n
    return None


def _equal_degree_linear(a: Poly, c: Poly, b: Poly, d: Poly) -> LinearPoly:
    """The linear ell with a = c o ell and b = ell^{-1} o d."""
    from .decompose import right_factor_solve
    for cand in right_factor_solve(a, c):
        if cand.degree == 1:
            lp = LinearPoly.from_poly(cand)
            if compose(lp.inverse().to_poly(), d) == b:
                return lp
    raise RittKitError("no in-field linear relating the equal-degree factors")


def align_iterates(f: Poly, g: Poly, L: LinearPoly, n: int):
    """(ell, N) with f^(o N) = (ell o g o ell^{-1})^(o N), N <= n.

    Peels f^(o n) = L o g^(o n) one factor at a time, producing linear maps
    L_0 ... L_n with f = L_{i+1} o g o L_i^{-1}; a collision L_i = L_j
    yields the conjugating ell = L_i with N = j - i.
    """
    if f.degree != g.degree or f.degree < 2:
        raise HypothesisViolationError("f and g need equal degree >= 2")
    if n < 1:
        raise HypothesisViolationError("n must be >= 1")
    from .conjugacy import classify
    if classify(f).is_cyclic or classify(g).is_cyclic:
        raise HypothesisViolationError("alignment needs non-cyclic inputs")
    fieldK = f.field
    if iterate(f, n) != compose(L.to_poly(), iterate(g, n)):
        raise HypothesisViolationError("f^(o n) != L o g^(o n)")
    Ms = [L]
    for k in range(n, 0, -1):
        a = f
        b = iterate(f, k - 1)
        c = compose(Ms[-1].to_poly(), g)
        d = iterate(g, k - 1)
        ell = _equal_degree_linear(a, c, b, d)
        Ms.append(ell.inverse())
    if not Ms[-1].is_identity():
        raise RittKitError("peeling did not terminate at the identity")
    Ls = [Ms[n - i] for i in range(n + 1)]
    best = None
    for j in range(1, n + 1):
        for i in range(j):
            if Ls[i].a == Ls[j].a and Ls[i].b == Ls[j].b:
                if best is None or (j - i, i) < best[:2]:
                    best = (j - i, i, Ls[i])
    if best is None:
        raise RittKitError("no collision among the peeled linear maps")
    N, _, ell = best
    conj = compose(ell.to_poly(),
                   compose(g, ell.inverse().to_poly()))
    if iterate(f, N) != iterate(conj, N):
        raise RittKitError("alignment certificate failed verification")
    return ell, N
