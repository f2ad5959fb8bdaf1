"""In-field root finding for univariate polynomials.

Over Q the search is complete (rational root theorem).  Over Q(zeta_m)
degrees 1 and 2 are decided exactly; in higher degree, roots of the form
(rational)*(root of unity) are found and the polynomial is deflated, which
covers every construction in this library.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .field import (CYCLOTOMIC, QQ, as_rational, nth_roots, roots_of_unity,
                    scalar_sort_key)
from .poly import Poly, poly_divmod, poly_gcd


def _divisors(n: int) -> list:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(coeffs) -> list:
    """All rational roots of a polynomial given by ascending Fraction coeffs."""
    cs = [Fraction(c) for c in coeffs]
    while cs and not cs[-1]:
        cs.pop()
    if len(cs) <= 1:
        return []
    roots = []
    while not cs[0]:
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
        cs = cs[1:]
        if len(cs) <= 1:
            return sorted(roots)
    den_lcm = 1
    for c in cs:
        den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
    ints = [int(c * den_lcm) for c in cs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            if gcd(p, q) != 1:
                continue
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in roots:
                    continue
                acc = Fraction(0)
                for c in reversed(ints):
                    acc = acc * cand + c
                if acc == 0:
                    roots.append(cand)
    return sorted(roots)


def _quadratic_roots(F: Poly) -> list:
    c, b, a = F.coeff(0), F.coeff(1), F.coeff(2)
    disc = b * b - 4 * a * c
    out = []
    for r in nth_roots(disc, 2, F.field):
        for sign in (1, -1):
            root = (-b + sign * r) / (2 * a)
            if root not in out:
                out.append(root)
    return [r for r in out if not F.evaluate(r)]


def _unity_scaled_roots(F: Poly) -> list:
    """Roots q*w with q rational, w a root of unity of the ambient field."""
    field = F.field
    d = field.degree
    found = []
    for w in roots_of_unity(field):
        # Coordinates of F(w*t) are rational polynomials sharing any
        # rational root t0; their gcd pins the candidates down.
        coords = [[Fraction(0)] * len(F.coeffs) for _ in range(d)]
        wp = field.one()
        for i, c in enumerate(F.coeffs):
            cw = field.coerce(c) * wp
            for j in range(d):
                coords[j][i] = cw.coeffs[j]
            wp = wp * w
        g = Poly(QQ, ())
        for vec in coords:
            g = poly_gcd(g, Poly.make(QQ, vec))
            if g.degree == 0:
                break
        if g.degree < 1:
            continue
        for q in rational_roots(g.coeffs):
            if q == 0:
                continue
            root = w * q
            if root not in found and not F.evaluate(root):
                found.append(root)
    return found


def in_field_roots(F: Poly) -> list:
    """All roots of F found in F's own field (complete over Q)."""
    field = F.field
    if F.is_zero():
        raise ValueError("zero polynomial has every root")
    if F.degree < 1:
        return []
    orig = F
    roots = []
    m = F.multiplicity_at_zero()
    if m:
        roots.append(field.zero())
        F = Poly(field, F.coeffs[m:])
    if field.kind != CYCLOTOMIC:
        roots.extend(field.coerce(r) for r in rational_roots(F.coeffs))
    else:
        work = F
        while work.degree > 2:
            layer = _unity_scaled_roots(work)
            if not layer:
                break
            for r in layer:
                if r not in roots:
                    roots.append(r)
            for r in layer:
                lin = Poly.make(field, [-r, 1])
                while work.degree >= 1:
                    q, rem = poly_divmod(work, lin)
                    if not rem.is_zero():
                        break
                    work = q
                if work.degree <= 2:
                    break
        if work.degree == 1:
            roots.append(-work.coeff(0) / work.coeff(1))
        elif work.degree == 2:
            roots.extend(_quadratic_roots(work))
    out = []
    for r in roots:
        if r not in out and not orig.evaluate(r):
            out.append(r)
    out.sort(key=scalar_sort_key)
    return out


def is_square_rational(c: Fraction) -> bool:
    c = Fraction(c)
    if c < 0:
        return False
    return (isqrt(c.numerator) ** 2 == c.numerator
            and isqrt(c.denominator) ** 2 == c.denominator)
