"""Shape classification of polynomials.

Cyclic/dihedral status is decided in the sense of the algebraic closure
(the coefficient conditions below are closure-complete), while conjugacy
witnesses are only reported when they exist in the ambient field; a missing
in-field witness is surfaced as a hint instead of an error so that
classification always completes.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import RittKitError
from .field import QQ, as_rational, nth_roots
from .poly import LinearPoly, Poly, chebyshev, compose, conjugate
from .roots import in_field_roots, is_square_rational


@dataclass(frozen=True)
class ShapeReport:
    is_cyclic: bool
    is_dihedral: bool
    conj_to_power: LinearPoly | None
    conj_to_pm_chebyshev: tuple | None  # (sign, LinearPoly)
    disintegrated: bool
    hints: tuple = ()


@dataclass(frozen=True)
class PowerNormalForm:
    ell1: LinearPoly
    ell2: LinearPoly
    s: int
    n: int
    P: Poly

    def verify(self, A: Poly) -> bool:
        lhs = compose(self.ell1.to_poly(), compose(A, self.ell2.to_poly()))
        rhs = Poly.monomial(A.field, self.s) * compose(
            self.P, Poly.monomial(A.field, self.n))
        return lhs == rhs


def _is_cyclic_shape(f: Poly) -> tuple:
    """(cyclic?, shift t): f equivalent to x^delta iff f = lc*(x+t)^delta + e."""
    delta = f.degree
    t = f.coeff(delta - 1) / (delta * f.leading())
    model = (Poly.make(f.field, [t, 1]) ** delta).scale(f.leading())
    diff = f - model
    return diff.is_constant(), t


def _in_field_sqrt(w, field):
    roots = nth_roots(w, 2, field)
    return roots[0] if roots else None


def _dihedral_data(f: Poly):
    """Closure-level test for f = L2 o T_delta o L1.

    Returns (holds, t, w, ratio) with w = u^2 for the inner scale u,
    or (False, None, None, None).
    """
    delta = f.degree
    fieldK = f.field
    t = f.coeff(delta - 1) / (delta * f.leading())
    g = compose(f, Poly.make(fieldK, [-t, 1]))
    T = chebyshev(delta, fieldK)
    if not g.coeff(delta - 2):
        return False, None, None, None
    w = fieldK.coerce(-delta) * g.leading() / g.coeff(delta - 2)
    for i in range(1, delta):
        ci = T.coeff(i)
        gi = g.coeff(i)
        if not ci:
            if gi:
                return False, None, None, None
            continue
        # need g_i / g_delta = c_i * u^(i - delta); exponent is even
        expo = (i - delta) // 2
        target = ci * _power(w, expo, fieldK)
        if gi / g.leading() != target:
            return False, None, None, None
    return True, t, w, g


def _power(w, e: int, fieldK):
    if e >= 0:
        out = fieldK.one()
        for _ in range(e):
            out = out * w
        return out
    return fieldK.one() / _power(w, -e, fieldK)


def _conj_power_witness(f: Poly):
    """(closure_conjugate, in-field ell with ell o f o ell^{-1} = x^delta)."""
    delta = f.degree
    beta = f.coeff(delta - 1) / (delta * f.leading())
    model = (Poly.make(f.field, [beta, 1]) ** delta).scale(f.leading()) - beta
    if f != model:
        return False, None
    for a in nth_roots(f.leading(), delta - 1, f.field):
        ell = LinearPoly.make(f.field, a, a * beta)
        if conjugate(ell, f) == Poly.monomial(f.field, delta):
            return True, ell
    return True, None


def _conj_cheb_witness(f: Poly):
    """(closure_conjugate, sign, in-field ell with ell o f o ell^{-1} = sign*T)."""
    delta = f.degree
    fieldK = f.field
    T = chebyshev(delta, fieldK)
    t = f.coeff(delta - 1) / (delta * f.leading())
    g = compose(f, Poly.make(fieldK, [-t, 1]))
    if delta == 2:
        # f = eps*a*(x+t)^2 - (2*eps + a*t)/a; solve a for each sign
        B = g.coeff(0)
        for eps in (fieldK.one(), -fieldK.one()):
            denom = B + t
            if not denom:
                continue
            a = -2 * eps / denom
            ell = LinearPoly.make(fieldK, a, a * t)
            if conjugate(ell, f) == T.scale(eps):
                return True, eps, ell
        return False, None, None
    if not g.coeff(delta - 2):
        return False, None, None
    w = fieldK.coerce(-delta) * g.leading() / g.coeff(delta - 2)
    for i in range(1, delta):
        ci, gi = T.coeff(i), g.coeff(i)
        if not ci:
            if gi:
                return False, None, None
        elif gi / g.leading() != ci * _power(w, (i - delta) // 2, fieldK):
            return False, None, None
    if delta % 2:
        # sign forced by the leading equation g_delta = eps * a^(delta-1)
        eps = g.leading() / _power(w, (delta - 1) // 2, fieldK)
        if eps != fieldK.one() and eps != -fieldK.one():
            return False, None, None
        if g.coeff(0) != -t:
            return False, None, None
        r = _in_field_sqrt(w, fieldK)
        if r is not None:
            for a in (r, -r):
                ell = LinearPoly.make(fieldK, a, a * t)
                if conjugate(ell, f) == T.scale(eps):
                    return True, eps, ell
        return True, eps, None
    # delta even: a is forced in-field for each sign, so closure = in-field
    for eps in (fieldK.one(), -fieldK.one()):
        a = eps * g.leading() / _power(w, (delta - 2) // 2, fieldK)
        if a * a != w:
            continue
        ell = LinearPoly.make(fieldK, a, a * t)
        if conjugate(ell, f) == T.scale(eps):
            return True, eps, ell
    return False, None, None


def classify(f: Poly) -> ShapeReport:
    if f.degree < 2:
        raise RittKitError("classification needs degree >= 2")
    delta = f.degree
    cyclic, _ = _is_cyclic_shape(f)
    dihedral = False
    if delta >= 3:
        holds, _, _, _ = _dihedral_data(f)
        dihedral = holds
    pw_closure, pw_ell = _conj_power_witness(f)
    ch_closure, ch_sign, ch_ell = _conj_cheb_witness(f)
    hints = []
    if pw_closure and pw_ell is None:
        hints.append("conjugacy to the power map needs a field extension")
    if ch_closure and ch_ell is None:
        hints.append("conjugacy to a Chebyshev form needs a field extension")
    return ShapeReport(
        is_cyclic=cyclic,
        is_dihedral=dihedral,
        conj_to_power=pw_ell,
        conj_to_pm_chebyshev=(ch_sign, ch_ell) if ch_ell is not None else None,
        disintegrated=not (pw_closure or ch_closure),
        hints=tuple(hints))


def equivalence_witness(f: Poly, g: Poly):
    """(L1, L2) with L2 o f o L1 = g, or None."""
    if f.degree != g.degree or f.degree < 1:
        raise RittKitError("equivalence needs equal degrees >= 1")
    fieldK = f.field
    delta = f.degree
    if delta == 1:
        L1 = LinearPoly.identity(fieldK)
        a = g.coeff(1) / f.coeff(1)
        L2 = LinearPoly.make(fieldK, a, g.coeff(0) - a * f.coeff(0))
        return L1, L2
    # v is linear in u, forced by the x^(delta-1) coefficient
    alpha = g.coeff(delta - 1) / (delta * g.leading())
    beta = -f.coeff(delta - 1) / (delta * f.leading())

    def try_u(u):
        if not u:
            return None
        v = alpha * u + beta
        L1 = LinearPoly.make(fieldK, u, v)
        inner = compose(f, L1.to_poly())
        p = g.leading() / inner.leading()
        q = g.coeff(0) - p * inner.coeff(0)
        L2 = LinearPoly.make(fieldK, p, q)
        if compose(L2.to_poly(), inner) == g:
            return L1, L2
        return None

    # coefficient equations E_i(u) = 0 for i = 1..delta-2, assembled with
    # u as a second variable
    from .bivar import BivarPoly
    x_plus = BivarPoly.make(fieldK, [[beta, 0], [alpha, 1]])  # u*x + v(u)
    acc = BivarPoly(fieldK, ())
    for c in reversed(f.coeffs):
        acc = acc * x_plus + BivarPoly.make(fieldK, [[c]])
    udeg = acc.deg_y
    eqs = []
    for i in range(1, delta - 1):
        coeff_poly = Poly.make(fieldK,
                               [acc.coeff(i, j) for j in range(udeg + 1)])
        # g_delta * coeff_i(f(ux+v)) = g_i * f_delta * u^delta
        rhs = Poly.monomial(fieldK, delta).scale(g.coeff(i) * f.leading())
        eqs.append(coeff_poly.scale(g.leading()) - rhs)
    from .poly import poly_gcd
    G = Poly(fieldK, ())
    for e in eqs:
        G = poly_gcd(G, e)
    if not eqs or G.is_zero():
        for cand in (fieldK.one(), -fieldK.one()):
            res = try_u(cand)
            if res:
                return res
        return None
    if G.degree == 0:
        return None
    for u in in_field_roots(G):
        res = try_u(u)
        if res:
            return res
    return None


def power_normal_form(A: Poly) -> PowerNormalForm | None:
    """ell1 o A o ell2 = x^s P(x^n) with n the order of the symmetry group."""
    if A.degree < 2:
        raise RittKitError("normal form needs degree >= 2")
    from .symmetry import gamma_group
    grp = gamma_group(A)
    if grp.kind == "Infinite":
        return None
    fieldK = A.field
    n = len(grp.elements)
    if n == 1:
        ell2 = LinearPoly.identity(fieldK)
        tilde = A
    else:
        gen = grp.generator
        c = gen.b / (fieldK.one() - gen.a)
        ell2 = LinearPoly.make(fieldK, 1, c)
        tilde = compose(A, ell2.to_poly())
    a0 = tilde.constant_term()
    C = tilde - a0
    ell1 = LinearPoly.make(fieldK, 1, -a0)
    s = C.multiplicity_at_zero()
    support = [i for i, c in enumerate(C.coeffs) if c]
    if any((i - s) % n for i in support):
        raise RittKitError("support pattern disagrees with the symmetry order")
    P = Poly.make(fieldK, [C.coeff(s + n * k)
                           for k in range((C.degree - s) // n + 1)])
    nf = PowerNormalForm(ell1, ell2, s, n, P)
    if not nf.verify(A):
        raise RittKitError("normal form verification failed")
    return nf
