"""Dense univariate polynomials over an exact field, plus linear maps.

Coefficients ascend by degree and the leading coefficient is nonzero;
the zero polynomial has an empty coefficient tuple.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FieldMismatchError, ResourceCapError, RittKitError
from .field import QQ, FieldDescriptor, scalar_str

DEGREE_CAP = 10_000


@dataclass(frozen=True)
class Poly:
    field: FieldDescriptor
    coeffs: tuple

    @staticmethod
    def make(field: FieldDescriptor, coeffs) -> "Poly":
        cs = [field.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        return Poly(field, tuple(cs))

    @staticmethod
    def constant(field: FieldDescriptor, c) -> "Poly":
        return Poly.make(field, [c])

    @staticmethod
    def x(field: FieldDescriptor = QQ) -> "Poly":
        return Poly.make(field, [0, 1])

    @staticmethod
    def monomial(field: FieldDescriptor, degree: int, c=1) -> "Poly":
        return Poly.make(field, [0] * degree + [c])

    # -- basic structure -------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading(self):
        if not self.coeffs:
            raise RittKitError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero()

    def constant_term(self):
        return self.coeff(0)

    def _check(self, other: "Poly"):
        if self.field != other.field:
            raise FieldMismatchError("polynomials over different fields")

    # -- ring operations -------------------------------------------------
    def __add__(self, other):
        if isinstance(other, Poly):
            self._check(other)
            n = max(len(self.coeffs), len(other.coeffs))
            return Poly.make(self.field,
                             [self.coeff(i) + other.coeff(i) for i in range(n)])
        return self + Poly.constant(self.field, other)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.field, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly(self.field, ())
        out = [self.field.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return Poly.make(self.field, out)

    __rmul__ = __mul__

    def scale(self, c):
        c = self.field.coerce(c)
        if not c:
            return Poly(self.field, ())
        return Poly(self.field, tuple(a * c for a in self.coeffs))

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Poly.constant(self.field, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def evaluate(self, v):
        """Horner evaluation at a scalar."""
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def derivative(self) -> "Poly":
        return Poly.make(self.field,
                         [i * c for i, c in enumerate(self.coeffs)][1:] or [0])

    def shift_degree(self, k: int) -> "Poly":
        """Multiply by x^k (k >= 0)."""
        if self.is_zero():
            return self
        return Poly(self.field, (self.field.zero(),) * k + self.coeffs)

    def multiplicity_at_zero(self) -> int:
        if self.is_zero():
            raise RittKitError("zero polynomial")
        m = 0
        while not self.coeffs[m]:
            m += 1
        return m

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.leading()
        return Poly(self.field, tuple(c / lead for c in self.coeffs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = scalar_str(c)
            wrap = ("+" in cs[1:]) or ("-" in cs[1:]) or (" " in cs)
            if i == 0:
                term = f"({cs})" if wrap else cs
            else:
                xp = "x" if i == 1 else f"x^{i}"
                if cs == "1":
                    term = xp
                elif cs == "-1":
                    term = f"-{xp}"
                elif wrap:
                    term = f"({cs})*{xp}"
                else:
                    term = f"{cs}*{xp}"
            parts.append(term)
        out = parts[0]
        for t in parts[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self):
        return f"Poly({self})"


def compose(f: Poly, g: Poly, degree_cap: int = DEGREE_CAP) -> Poly:
    """f(g(x)) by Horner in g."""
    if f.field != g.field:
        raise FieldMismatchError("compose over different fields")
    if f.degree >= 1 and g.degree >= 1 and f.degree * g.degree > degree_cap:
        raise ResourceCapError(
            f"compose degree {f.degree * g.degree} exceeds cap {degree_cap}")
    acc = Poly(f.field, ())
    for c in reversed(f.coeffs):
        acc = acc * g + Poly.constant(f.field, c)
    if f.is_zero():
        acc = Poly(f.field, ())
    return acc


def iterate(f: Poly, m: int, degree_cap: int = DEGREE_CAP) -> Poly:
    if m < 0:
        raise ValueError("iterate count must be nonnegative")
    if f.degree < 1:
        raise RittKitError("iterate needs a nonconstant polynomial")
    if m >= 1 and f.degree >= 2 and f.degree ** m > degree_cap:
        raise ResourceCapError(
            f"iterate degree {f.degree}^{m} exceeds cap {degree_cap}")
    out = Poly.x(f.field)
    for _ in range(m):
        out = compose(f, out, degree_cap)
    return out


def chebyshev(delta: int, field: FieldDescriptor = QQ) -> Poly:
    """T_delta with T_delta(x + 1/x) = x^delta + x^(-delta)."""
    if delta < 1:
        raise ValueError("delta must be >= 1")
    t0 = Poly.constant(field, 2)
    t1 = Poly.x(field)
    if delta == 1:
        return t1
    x = Poly.x(field)
    for _ in range(delta - 1):
        t0, t1 = t1, x * t1 - t0
    return t1


@dataclass(frozen=True)
class LinearPoly:
    """Invertible ax + b."""
    field: FieldDescriptor
    a: object
    b: object

    @staticmethod
    def make(field: FieldDescriptor, a, b) -> "LinearPoly":
        a = field.coerce(a)
        b = field.coerce(b)
        if not a:
            raise ValueError("linear map needs a != 0")
        return LinearPoly(field, a, b)

    @staticmethod
    def identity(field: FieldDescriptor = QQ) -> "LinearPoly":
        return LinearPoly.make(field, 1, 0)

    @staticmethod
    def from_poly(p: Poly) -> "LinearPoly":
        if p.degree != 1:
            raise ValueError("not a linear polynomial")
        return LinearPoly.make(p.field, p.coeff(1), p.coeff(0))

    def to_poly(self) -> Poly:
        return Poly.make(self.field, [self.b, self.a])

    def inverse(self) -> "LinearPoly":
        inv_a = self.field.one() / self.a
        return LinearPoly.make(self.field, inv_a, -self.b * inv_a)

    def apply(self, v):
        return self.a * v + self.b

    def after(self, other: "LinearPoly") -> "LinearPoly":
        """self(other(x))."""
        return LinearPoly.make(self.field, self.a * other.a,
                               self.a * other.b + self.b)

    def is_identity(self) -> bool:
        return self.a == self.field.one() and not self.b

    def __str__(self):
        return str(self.to_poly())


def conjugate(ell: LinearPoly, f: Poly) -> Poly:
    """ell o f o ell^{-1}."""
    if ell.field != f.field:
        raise FieldMismatchError("conjugate over different fields")
    inner = compose(f, ell.inverse().to_poly())
    return compose(ell.to_poly(), inner)


def poly_divmod(a: Poly, b: Poly) -> tuple:
    a._check(b)
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    rem = list(a.coeffs)
    db = b.degree
    q = [a.field.zero()] * max(0, len(rem) - db)
    for k in range(len(q) - 1, -1, -1):
        c = rem[k + db] / b.leading()
        q[k] = c
        if c:
            for j in range(db + 1):
                rem[k + j] = rem[k + j] - c * b.coeffs[j]
    return Poly.make(a.field, q), Poly.make(a.field, rem[:db])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return a.monic() if not a.is_zero() else a


def exact_div(a: Poly, b: Poly) -> Poly:
    q, r = poly_divmod(a, b)
    if not r.is_zero():
        raise RittKitError("inexact polynomial division")
    return q


def poly_nth_root(F: Poly, n: int, lead_root) -> Poly | None:
    """The h with h^n = F and leading coefficient lead_root, if it exists."""
    if F.is_zero() or F.degree % n:
        return None
    e = F.degree // n
    field = F.field
    a = field.coerce(lead_root)
    h = [field.zero()] * e + [a]
    pivot = n * a ** (n - 1)
    for j in range(1, e + 1):
        cur = Poly.make(field, h) ** n
        delta = F.coeff(F.degree - j) - cur.coeff(F.degree - j)
        h[e - j] = delta / pivot
    cand = Poly.make(field, h)
    return cand if cand ** n == F else None


def squarefree_part(F: Poly) -> Poly:
    if F.degree <= 0:
        return F
    g = poly_gcd(F, F.derivative())
    return exact_div(F, g) if g.degree >= 1 else F
