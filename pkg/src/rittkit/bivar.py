"""Bivariate polynomials, resultant elimination, and plane-curve values.

A BivarPoly stores rows indexed by the power of y, each row a Poly in x.
Resultants are computed by evaluation and Lagrange interpolation, skipping
sample points where a leading coefficient vanishes, so every answer is the
exact symbolic resultant.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CollapsedImageError, FieldMismatchError, RittKitError
from .field import FieldDescriptor
from .poly import Poly, exact_div, poly_divmod, poly_gcd, squarefree_part


def lagrange_interpolate(field: FieldDescriptor, points) -> Poly:
    """Unique polynomial through (t, value) pairs with distinct t.

    Newton's divided-difference form, built coefficient by coefficient.
    """
    pts = list(points)
    if not pts:
        return Poly(field, ())
    diffs = [field.coerce(v) for _, v in pts]
    ts = [field.coerce(t) for t, _ in pts]
    total = Poly(field, ())
    basis = Poly.constant(field, 1)
    for k in range(len(pts)):
        if diffs[0]:
            total = total + basis.scale(diffs[0])
        if k == len(pts) - 1:
            break
        basis = basis * Poly.make(field, [-ts[k], 1])
        diffs = [(diffs[i + 1] - diffs[i]) / (ts[i + k + 1] - ts[i])
                 for i in range(len(diffs) - 1)]
    return total


def resultant_univar(A: Poly, B: Poly):
    """Resultant of two univariate polynomials over their field."""
    field = A.field
    if A.is_zero() or B.is_zero():
        return field.zero()
    sign = 1
    acc = field.one()
    while B.degree > 0:
        _, R = poly_divmod(A, B)
        if R.is_zero():
            return field.zero()
        if (A.degree * B.degree) % 2:
            sign = -sign
        acc = acc * B.leading() ** (A.degree - R.degree)
        A, B = B, R
    acc = acc * B.coeffs[0] ** A.degree
    return acc if sign == 1 else -acc


@dataclass(frozen=True)
class BivarPoly:
    field: FieldDescriptor
    rows: tuple  # rows[j] is the Poly-in-x coefficient of y^j

    @staticmethod
    def make(field: FieldDescriptor, rows) -> "BivarPoly":
        rs = []
        for r in rows:
            if isinstance(r, Poly):
                if r.field != field:
                    raise FieldMismatchError("row field mismatch")
                rs.append(r)
            else:
                rs.append(Poly.make(field, r))
        while rs and rs[-1].is_zero():
            rs.pop()
        return BivarPoly(field, tuple(rs))

    @staticmethod
    def from_univar(p: Poly, var: str) -> "BivarPoly":
        if var == "x":
            return BivarPoly.make(p.field, [p])
        return BivarPoly.make(p.field, [Poly.constant(p.field, c)
                                        for c in p.coeffs])

    def is_zero(self) -> bool:
        return not self.rows

    @property
    def deg_y(self) -> int:
        return len(self.rows) - 1

    @property
    def deg_x(self) -> int:
        return max((r.degree for r in self.rows), default=-1)

    def coeff(self, i: int, j: int):
        """Coefficient of x^i y^j."""
        if 0 <= j < len(self.rows):
            return self.rows[j].coeff(i)
        return self.field.zero()

    def row(self, j: int) -> Poly:
        if 0 <= j < len(self.rows):
            return self.rows[j]
        return Poly(self.field, ())

    def __add__(self, other: "BivarPoly") -> "BivarPoly":
        n = max(len(self.rows), len(other.rows))
        return BivarPoly.make(self.field,
                              [self.row(j) + other.row(j) for j in range(n)])

    def __neg__(self) -> "BivarPoly":
        return BivarPoly(self.field, tuple(-r for r in self.rows))

    def __sub__(self, other: "BivarPoly") -> "BivarPoly":
        return self + (-other)

    def __mul__(self, other: "BivarPoly") -> "BivarPoly":
        if self.is_zero() or other.is_zero():
            return BivarPoly(self.field, ())
        out = [Poly(self.field, ())] * (len(self.rows) + len(other.rows) - 1)
        for j, r in enumerate(self.rows):
            if not r.is_zero():
                for k, s in enumerate(other.rows):
                    out[j + k] = out[j + k] + r * s
        return BivarPoly.make(self.field, out)

    def scale(self, c) -> "BivarPoly":
        return BivarPoly.make(self.field, [r.scale(c) for r in self.rows])

    def eval_y(self, y0) -> Poly:
        """Specialize y, leaving a Poly in x."""
        y0 = self.field.coerce(y0)
        acc = Poly(self.field, ())
        for r in reversed(self.rows):
            acc = acc.scale(y0) + r
        return acc

    def eval_x(self, x0) -> Poly:
        """Specialize x, leaving a Poly in y."""
        return Poly.make(self.field, [r.evaluate(x0) for r in self.rows])

    def eval_xy(self, x0, y0):
        return self.eval_x(x0).evaluate(y0)

    def transpose(self) -> "BivarPoly":
        dx = self.deg_x
        grid = [[self.coeff(i, j) for j in range(len(self.rows))]
                for i in range(dx + 1)]
        return BivarPoly.make(self.field, grid)

    def derivative_y(self) -> "BivarPoly":
        return BivarPoly.make(self.field,
                              [r.scale(j) for j, r in enumerate(self.rows)][1:]
                              or [Poly(self.field, ())])

    def content_y(self) -> Poly:
        """gcd over K[x] of the y-coefficient rows (monic)."""
        g = Poly(self.field, ())
        for r in self.rows:
            g = poly_gcd(g, r)
        return g

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for j in range(len(self.rows) - 1, -1, -1):
            r = self.rows[j]
            if r.is_zero():
                continue
            rs = str(r)
            wrap = (" " in rs) or rs.startswith("-")
            if j == 0:
                parts.append(f"({rs})" if " " in rs else rs)
            else:
                yp = "y" if j == 1 else f"y^{j}"
                if rs == "1":
                    parts.append(yp)
                elif rs == "-1":
                    parts.append(f"-{yp}")
                else:
                    parts.append(f"({rs})*{yp}" if wrap else f"{rs}*{yp}")
        out = parts[0]
        for t in parts[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


def _sample_points(field, needed, bad_test):
    """First `needed` integer sample values passing bad_test."""
    pts = []
    t = 0
    while len(pts) < needed:
        v = field.coerce(t)
        if not bad_test(v):
            pts.append(v)
        t += 1
        if t > 20 * needed + 50:
            raise RittKitError("could not find enough good sample points")
    return pts


def resultant_y(G: BivarPoly, H: BivarPoly) -> Poly:
    """Resultant eliminating y, as a Poly in x."""
    if G.is_zero() or H.is_zero():
        return Poly(G.field, ())
    dg, dh = G.deg_y, H.deg_y
    if dg == 0 and dh == 0:
        raise RittKitError("both inputs constant in the eliminated variable")
    if dg == 0:
        return G.rows[0] ** dh
    if dh == 0:
        return H.rows[0] ** dg
    field = G.field
    bound = G.deg_x * dh + H.deg_x * dg
    lc_g, lc_h = G.rows[dg], H.rows[dh]

    def bad(v):
        return (not lc_g.evaluate(v)) or (not lc_h.evaluate(v))

    pts = _sample_points(field, bound + 1, bad)
    vals = [(t, resultant_univar(G.eval_x(t), H.eval_x(t))) for t in pts]
    return lagrange_interpolate(field, vals)


def resultant_x(G: BivarPoly, H: BivarPoly) -> Poly:
    """Resultant eliminating x, as a Poly in y."""
    return resultant_y(G.transpose(), H.transpose())


# -- gcd and squarefree structure in the y direction ------------------------

def _primitive_y(G: BivarPoly) -> tuple:
    c = G.content_y()
    if c.is_zero():
        return Poly(G.field, ()), G
    prim = BivarPoly.make(G.field, [exact_div(r, c) if not r.is_zero()
                                    else r for r in G.rows])
    return c, prim


def _pseudo_rem_y(A: BivarPoly, B: BivarPoly) -> BivarPoly:
    """Pseudo-remainder of A by B as polynomials in y over K[x]."""
    lb = B.rows[B.deg_y]
    while not A.is_zero() and A.deg_y >= B.deg_y:
        la = A.rows[A.deg_y]
        shift = A.deg_y - B.deg_y
        scaled_b = BivarPoly.make(
            A.field, [Poly(A.field, ())] * shift + [r * la for r in B.rows])
        A = BivarPoly.make(A.field, [r * lb for r in A.rows]) - scaled_b
    return A

def bivar_gcd(G: BivarPoly, H: BivarPoly) -> BivarPoly:
    """gcd in K[x][y], primitive-PRS, normalized to monic content."""
    if G.is_zero():
        return H
    if H.is_zero():
        return G
    cg, pg = _primitive_y(G)
    ch, ph = _primitive_y(H)
    cont = poly_gcd(cg, ch)
    A, B = (pg, ph) if pg.deg_y >= ph.deg_y else (ph, pg)
    while not B.is_zero() and B.deg_y > 0:
        R = _pseudo_rem_y(A, B)
        if not R.is_zero():
            _, R = _primitive_y(R)
        A, B = B, R
    if B.is_zero():
        prim = A
    else:
        prim = BivarPoly.make(G.field, [Poly.constant(G.field, 1)])
    out = BivarPoly.make(G.field, [r * cont for r in prim.rows])
    # scale so the canonical leading data is monic-ish
    lead = out.rows[out.deg_y].leading()
    return out.scale(G.field.one() / lead)


def bivar_exact_div_y(A: BivarPoly, B: BivarPoly) -> BivarPoly:
    """Exact division in K(x)[y]; raises if not exact."""
    field = A.field
    rem = list(A.rows)
    db = B.deg_y
    if db < 0:
        raise ZeroDivisionError
    out = [None] * (len(rem) - db)
    lb = B.rows[db]
    for k in range(len(out) - 1, -1, -1):
        q = exact_div(rem[k + db], lb)
        out[k] = q
        for j in range(db + 1):
            rem[k + j] = rem[k + j] - q * B.rows[j]
    if any(not r.is_zero() for r in rem[:db]):
        raise RittKitError("inexact bivariate division")
    return BivarPoly.make(field, out)


def _squarefree_by_specialization(prim: BivarPoly) -> bool:
    """True when some good specialization of x certifies squarefreeness.

    A repeated y-factor survives into gcd(prim(x0, y), d/dy prim(x0, y))
    at all but finitely many x0, so a trivial specialized gcd at a sample
    where the leading row keeps its degree proves the bivariate gcd is
    constant.  False means undecided, not non-squarefree.
    """
    lc = prim.rows[prim.deg_y]
    tried = 0
    t = 0
    while tried < 4 and t < 100:
        x0 = prim.field.coerce(t)
        t += 1
        if not lc.evaluate(x0):
            continue
        tried += 1
        a = prim.eval_x(x0)
        if poly_gcd(a, a.derivative()).degree == 0:
            return True
    return False


def bivar_squarefree(G: BivarPoly) -> BivarPoly:
    """Squarefree part, handling x-only content separately."""
    if G.is_zero():
        return G
    if G.deg_y == 0:
        return BivarPoly.make(G.field, [squarefree_part(G.rows[0])])
    c, prim = _primitive_y(G)
    c_sf = squarefree_part(c) if c.degree >= 1 else Poly.constant(G.field, 1)
    if not _squarefree_by_specialization(prim):
        g = bivar_gcd(prim, prim.derivative_y())
        if g.deg_y >= 1:
            prim = bivar_exact_div_y(prim, g)
    return BivarPoly.make(G.field, [r * c_sf for r in prim.rows])


@dataclass(frozen=True)
class BivarCurve:
    """Plane curve G(x,y) = 0, with G scaled to a canonical representative."""
    field: FieldDescriptor
    poly: BivarPoly

    @staticmethod
    def make(poly: BivarPoly) -> "BivarCurve":
        if poly.is_zero():
            raise ValueError("curve needs a nonzero defining polynomial")
        lead = None
        for j in range(len(poly.rows)):
            for i in range(poly.rows[j].degree + 1):
                c = poly.coeff(i, j)
                if c:
                    lead = c
                    break
            if lead is not None:
                break
        return BivarCurve(poly.field, poly.scale(poly.field.one() / lead))

    @staticmethod
    def from_poly_in_x(p: Poly) -> "BivarCurve":
        return BivarCurve.make(BivarPoly.from_univar(p, "x"))

    @property
    def deg_x(self) -> int:
        return self.poly.deg_x

    @property
    def deg_y(self) -> int:
        return self.poly.deg_y

    def contains(self, x0, y0) -> bool:
        return not self.poly.eval_xy(x0, y0)

    def x_constant(self) -> bool:
        """True when the curve is a union of vertical lines."""
        return self.poly.deg_y == 0

    def y_constant(self) -> bool:
        return self.poly.deg_x == 0

    def __str__(self):
        return str(self.poly)
