"""Functional decomposition of polynomials.

Right/left factor solvers, complete decomposition chains, the
gcd-degree common-factor refinement for a o b = c o d, and the
splitting of x^s P(x)^n compositions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (FieldExtensionRequiredError, HypothesisViolationError,
                     ResourceCapError, RittKitError)
from .field import nth_roots
from .poly import LinearPoly, Poly, compose, poly_nth_root

DECOMP_DEGREE_CAP = 64


def right_factor_solve(F: Poly, g: Poly) -> list:
    """All h in the current field with F = g o h."""
    if g.degree < 1:
        raise RittKitError("left factor must be nonconstant")
    if F.degree < 1 or F.degree % g.degree:
        raise RittKitError("degree of g does not divide degree of F")
    field = F.field
    e = F.degree // g.degree
    m = g.degree
    lead_eq = F.leading() / g.leading()
    leads = nth_roots(lead_eq, m, field)
    if not leads:
        raise FieldExtensionRequiredError(
            "leading coefficient equation has no in-field root",
            equation=f"t^{m} = {lead_eq}")
    out = []
    for a in leads:
        pivot = m * g.leading() * a ** (m - 1)
        h = [field.zero()] * e + [a]
        for j in range(1, e + 1):
            cur = compose(g, Poly.make(field, h))
            delta = F.coeff(F.degree - j) - cur.coeff(F.degree - j)
            h[e - j] = h[e - j] + delta / pivot
        cand = Poly.make(field, h)
        if compose(g, cand) == F and cand not in out:
            out.append(cand)
    return out


def left_factor_solve(F: Poly, h: Poly) -> Poly | None:
    """The unique g with F = g o h, or None."""
    if h.degree < 1:
        raise RittKitError("right factor must be nonconstant")
    if F.degree < 1 or F.degree % h.degree:
        return None
    field = F.field
    m = F.degree // h.degree
    dh = h.degree
    R = F
    gs = [field.zero()] * (m + 1)
    for i in range(m, -1, -1):
        c = R.coeff(i * dh) / h.leading() ** i
        gs[i] = c
        if c:
            R = R - (h ** i).scale(c)
    if not R.is_zero():
        return None
    g = Poly.make(field, gs)
    return g if compose(g, h) == F else None


def normalized_right_factor(F: Poly, e: int) -> tuple | None:
    """(g, h) with F = g o h, h monic of degree e with h(0) = 0, if any.

    Such an h is unique, pinned down by the top e-1 coefficients of F.
    """
    if F.degree < 2 or e < 1 or F.degree % e:
        return None
    field = F.field
    m = F.degree // e
    h = [field.zero()] * e + [field.one()]
    for j in range(1, e):
        cur = Poly.make(field, h) ** m
        delta = F.coeff(F.degree - j) / F.leading() - cur.coeff(F.degree - j)
        h[e - j] = delta / m
    hp = Poly.make(field, h)
    g = left_factor_solve(F, hp)
    if g is None:
        return None
    return g, hp


@dataclass(frozen=True)
class DecompositionChain:
    factors: tuple  # left-to-right composition equals the target

    def recompose(self) -> Poly:
        out = self.factors[0]
        for f in self.factors[1:]:
            out = compose(out, f)
        return out

    def degree_sequence(self) -> tuple:
        return tuple(f.degree for f in self.factors)


def _is_indecomposable(f: Poly) -> bool:
    for e in range(2, f.degree):
        if f.degree % e == 0 and normalized_right_factor(f, e) is not None:
            return False
    return True


def _chain_sort_key(chain: DecompositionChain):
    from .field import scalar_sort_key
    coeff_key = tuple(tuple(scalar_sort_key(c) for c in f.coeffs)
                      for f in chain.factors)
    return (chain.degree_sequence(), coeff_key)


def complete_decompositions(f: Poly,
                            degree_cap: int = DECOMP_DEGREE_CAP) -> list:
    """All maximal chains of indecomposable factors, canonically normalized.

    Inner (non-leftmost) factors are the monic, zero-constant-term
    representatives of their linear-equivalence classes; the leftmost
    factor absorbs the linear slack, so each shuffle family appears once.
    """
    if f.degree < 2:
        raise RittKitError("decomposition needs degree >= 2")
    if f.degree > degree_cap:
        raise ResourceCapError(
            f"degree {f.degree} exceeds decomposition cap {degree_cap}")
    chains = []
    if _is_indecomposable(f):
        return [DecompositionChain((f,))]
    for e in range(2, f.degree):
        if f.degree % e:
            continue
        split = normalized_right_factor(f, e)
        if split is None:
            continue
        g, h = split
        if not _is_indecomposable(h):
            continue
        for sub in complete_decompositions(g, degree_cap):
            chains.append(DecompositionChain(sub.factors + (h,)))
    chains.sort(key=_chain_sort_key)
    return chains


@dataclass(frozen=True)
class EngstromCertificate:
    g: Poly
    h: Poly
    a_hat: Poly
    b_hat: Poly
    c_hat: Poly
    d_hat: Poly
    ell: LinearPoly | None  # only when deg a = deg c

    def verify(self, a: Poly, b: Poly, c: Poly, d: Poly) -> bool:
        checks = [
            compose(self.g, self.a_hat) == a,
            compose(self.g, self.c_hat) == c,
            compose(self.b_hat, self.h) == b,
            compose(self.d_hat, self.h) == d,
            compose(self.a_hat, self.b_hat) == compose(self.c_hat, self.d_hat),
        ]
        return all(checks)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def engstrom_refine(a: Poly, b: Poly, c: Poly, d: Poly) -> EngstromCertificate:
    """Common inner structure of a o b = c o d.

    Produces g, h with deg g = gcd(deg a, deg c), deg h = gcd(deg b, deg d),
    a = g o a_hat, c = g o c_hat, b = b_hat o h, d = d_hat o h, and
    a_hat o b_hat = c_hat o d_hat.
    """
    if any(p.degree < 1 for p in (a, b, c, d)):
        raise HypothesisViolationError("all four inputs must be nonconstant")
    if compose(a, b) != compose(c, d):
        raise HypothesisViolationError("a o b differs from c o d")
    field = a.field
    D = _gcd(a.degree, c.degree)
    E = _gcd(b.degree, d.degree)

    # Left side: a common left factor g of degree D.
    if D == a.degree:
        g0, a_hat = a, Poly.x(field)
    else:
        split = normalized_right_factor(a, a.degree // D)
        if split is None:
            raise FieldExtensionRequiredError(
                "no in-field left factor of the predicted gcd degree for a")
        g0, a_hat = split
    if D == c.degree:
        g1, c_hat0 = c, Poly.x(field)
    else:
        split = normalized_right_factor(c, c.degree // D)
        if split is None:
            raise FieldExtensionRequiredError(
                "no in-field left factor of the predicted gcd degree for c")
        g1, c_hat0 = split
    # g0 and g1 agree up to a linear change; fold it into c_hat.
    mus = [cand for cand in right_factor_solve(g1, g0)
           if cand.degree == 1 and compose(g0, cand) == g1]
    if not mus:
        raise FieldExtensionRequiredError(
            "left factors of a and c are not linearly related in-field")
    g = g0

    # Right side: a common right factor h of degree E.
    if E == b.degree:
        h, b_hat = b, Poly.x(field)
    else:
        split = normalized_right_factor(b, E)
        if split is None:
            raise FieldExtensionRequiredError(
                "no in-field right factor of the predicted gcd degree for b")
        b_hat, h = split
    d_hat = left_factor_solve(d, h)
    if d_hat is None:
        raise FieldExtensionRequiredError(
            "h is not an in-field right factor of d")
    # pick the mu that makes the middle identity hold; with several valid
    # linear relations between the left factors only one is compatible
    c_hat = None
    for mu in mus:
        cand = compose(mu, c_hat0)
        if compose(a_hat, b_hat) == compose(cand, d_hat):
            c_hat = cand
            break
    if c_hat is None:
        c_hat = compose(mus[0], c_hat0)

    ell = None
    if a.degree == c.degree:
        for cand in right_factor_solve(a, c):
            if cand.degree == 1:
                lp = LinearPoly.from_poly(cand)
                if compose(lp.inverse().to_poly(), d) == b:
                    ell = lp
                    break
    cert = EngstromCertificate(g, h, a_hat, b_hat, c_hat, d_hat, ell)
    if not cert.verify(a, b, c, d):
        raise RittKitError("certificate verification failed")
    return cert


@dataclass(frozen=True)
class PowerFormSplit:
    j: int
    k: int
    P1: Poly
    P2: Poly
    ell: LinearPoly
    gcd_j_ok: bool
    gcd_k_ok: bool


def verify_power_form(F: Poly, s: int, n: int) -> Poly:
    """The P with F = x^s P(x)^n, P(0) != 0; raises if there is none."""
    if F.is_zero() or F.multiplicity_at_zero() != s:
        raise HypothesisViolationError(
            "composition does not vanish to order s at 0")
    Q = Poly(F.field, F.coeffs[s:])
    if Q.degree % n:
        raise HypothesisViolationError("degree of F/x^s not divisible by n")
    for lead in nth_roots(Q.leading(), n, F.field):
        P = poly_nth_root(Q, n, lead)
        if P is not None:
            if not P.constant_term():
                raise HypothesisViolationError("P(0) = 0")
            return P
    raise FieldExtensionRequiredError(
        "F/x^s is an n-th power only after a field extension",
        equation=f"t^{n} = {Q.leading()}")


def decompose_power_form(A: Poly, B: Poly, s: int, n: int) -> PowerFormSplit:
    """Split A o B = x^s P(x)^n into A = x^j P1^n o ell, B = ell^{-1} o x^k P2^n.

    The coprimality of j and k with n is reported via flags rather than
    enforced, since it can fail when gcd(s, n) > 1.
    """
    if s < 1 or n < 1:
        raise HypothesisViolationError("s and n must be positive")
    field = A.field
    F = compose(A, B)
    verify_power_form(F, s, n)

    C = B - B.constant_term()
    k = C.multiplicity_at_zero()
    Q = Poly(field, C.coeffs[k:])
    if Q.degree % n:
        raise HypothesisViolationError(
            "inner factor does not fit the x^k P2(x)^n shape")
    if Q.degree == 0:
        alpha = Q.coeffs[0] ** (n - 1)
        P2 = Poly.constant(field, Q.coeffs[0])
    else:
        R = poly_nth_root(Q.monic(), n, 1)
        if R is None:
            raise HypothesisViolationError(
                "inner factor does not fit the x^k P2(x)^n shape")
        alpha = Q.leading() ** (n - 1)
        P2 = R.scale(Q.leading())
    ell = LinearPoly.make(field, alpha, -alpha * B.constant_term())
    W = compose(ell.to_poly(), B)
    if W != Poly.monomial(field, k) * P2 ** n:
        raise RittKitError("inner normal form verification failed")

    D = left_factor_solve(F, W)
    if D is None or D.constant_term():
        raise HypothesisViolationError(
            "outer factor does not fit the x^j P1(x)^n shape")
    j = D.multiplicity_at_zero()
    Q1 = Poly(field, D.coeffs[j:])
    P1 = None
    if Q1.degree == 0 or Q1.degree % n == 0:
        for lead in nth_roots(Q1.leading(), n, field):
            P1 = poly_nth_root(Q1, n, lead) if Q1.degree else \
                (Poly.constant(field, lead) if lead ** n == Q1.coeffs[0] else None)
            if P1 is not None:
                break
    if P1 is None:
        raise FieldExtensionRequiredError(
            "outer P1 requires an n-th root outside the field",
            equation=f"t^{n} = {Q1.leading()}")
    outer = Poly.monomial(field, j) * P1 ** n
    if compose(outer, ell.to_poly()) != A:
        raise RittKitError("outer normal form verification failed")
    return PowerFormSplit(j=j, k=k, P1=P1, P2=P2, ell=ell,
                          gcd_j_ok=_gcd(j, n) == 1,
                          gcd_k_ok=_gcd(k, n) == 1)
