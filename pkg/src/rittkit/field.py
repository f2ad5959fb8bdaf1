"""Exact coefficient fields: Q and the cyclotomic fields Q(zeta_m).

Rational scalars are plain `fractions.Fraction`; cyclotomic scalars are
`CycElem` vectors reduced modulo the m-th cyclotomic polynomial.  Every
operation is exact; nothing here ever rounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import FieldMismatchError, RittKitError

RATIONALS = "Rationals"
CYCLOTOMIC = "Cyclotomic"


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple:
    """Integer coefficients (ascending) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("m must be positive")
    # x^m - 1 divided by the product of Phi_d over proper divisors d of m.
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            phi_d = cyclotomic_polynomial(d)
            poly = _zpoly_exact_div(poly, list(phi_d))
    return tuple(poly)


def _zpoly_exact_div(num, den):
    """Exact division of integer-coefficient polynomial lists (ascending)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        out[i] = c
        for j, dj in enumerate(den):
            num[i + j] -= c * dj
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact division")
    return out


@dataclass(frozen=True)
class FieldDescriptor:
    kind: str
    order: int | None = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.order is not None:
                raise ValueError("Rationals carries no order")
        elif self.kind == CYCLOTOMIC:
            if self.order is None or self.order < 1:
                raise ValueError("cyclotomic order must be a positive integer")
            if self.order in (1, 2):
                raise ValueError("Q(zeta_1) and Q(zeta_2) are Q; use Rationals")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def degree(self) -> int:
        if self.kind == RATIONALS:
            return 1
        return len(cyclotomic_polynomial(self.order)) - 1

    def zero(self):
        return self.coerce(0)

    def one(self):
        return self.coerce(1)

    def zeta(self):
        if self.kind == RATIONALS:
            raise RittKitError("Q has no cyclotomic generator")
        vec = [Fraction(0)] * self.degree
        vec[1] = Fraction(1)
        return CycElem(self, tuple(vec))

    def coerce(self, v):
        if self.kind == RATIONALS:
            if isinstance(v, CycElem):
                r = v.as_rational()
                if r is None:
                    raise FieldMismatchError("cyclotomic value is not rational")
                return r
            return Fraction(v)
        if isinstance(v, CycElem):
            if v.field != self:
                raise FieldMismatchError("cyclotomic orders differ")
            return v
        vec = [Fraction(0)] * self.degree
        vec[0] = Fraction(v)
        return CycElem(self, tuple(vec))

    def __str__(self):
        if self.kind == RATIONALS:
            return "Q"
        return f"Q(zeta {self.order})"


QQ = FieldDescriptor(RATIONALS)


def cyclotomic_field(m: int) -> FieldDescriptor:
    if m in (1, 2):
        return QQ
    return FieldDescriptor(CYCLOTOMIC, m)


class CycElem:
    """Element of Q(zeta_m), a vector modulo the m-th cyclotomic polynomial."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldDescriptor, coeffs):
        d = field.degree
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != d:
            raise ValueError("coefficient vector has wrong length")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)

    # -- construction helpers ------------------------------------------
    @classmethod
    def from_vector(cls, field, vec):
        """Reduce an arbitrary-length ascending vector modulo Phi_m."""
        phi = cyclotomic_polynomial(field.order)
        d = len(phi) - 1
        vec = [Fraction(c) for c in vec]
        for i in range(len(vec) - 1, d - 1, -1):
            c = vec[i]
            if c:
                for j in range(d + 1):
                    vec[i - d + j] -= c * phi[j]
        vec = vec[:d] + [Fraction(0)] * (d - len(vec))
        return cls(field, vec[:d])

    def as_rational(self):
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    # -- arithmetic -----------------------------------------------------
    def _coerced(self, other):
        if isinstance(other, CycElem):
            if other.field != self.field:
                raise FieldMismatchError("cyclotomic orders differ")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.coerce(other)
        return None

    def __add__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return CycElem(self.field, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycElem(self.field, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return CycElem(self.field, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        n = len(self.coeffs)
        prod = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CycElem.from_vector(self.field, prod)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return (self ** (-e)).inverse()
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.field.order)]
        # Extended Euclid over Q[t]: find u with u*self = 1 mod Phi_m.
        r0, r1 = phi, _trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _qpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
        if not r1:
            raise ZeroDivisionError("not invertible (unexpected for a field)")
        inv_lead = 1 / r1[0]
        return CycElem.from_vector(self.field, [c * inv_lead for c in s1])

    def __truediv__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.coerce(other)
        if not isinstance(other, CycElem) or other.field != self.field:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"CycElem({self.field}, {scalar_str(self)})"


def _trim(v):
    while v and not v[-1]:
        v.pop()
    return v


def _qpoly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        if len(a) >= i + len(b):
            c = a[i + len(b) - 1] / b[-1]
            q[i] = c
            if c:
                for j, bj in enumerate(b):
                    a[i + j] -= c * bj
            del a[i + len(b) - 1:]
    return _trim(q), _trim(a)


def _qpoly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def _qpoly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] -= bi
    return _trim(out)


# ---------------------------------------------------------------------------
# Scalar utilities shared across modules.
# ---------------------------------------------------------------------------

def scalar_is_zero(v) -> bool:
    return not v


def as_rational(v):
    """Return the Fraction a scalar embeds from Q, or None."""
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, CycElem):
        return v.as_rational()
    return None


def scalar_sort_key(v):
    r = as_rational(v)
    if r is not None:
        return (0, r, ())
    return (1, Fraction(0), v.coeffs)


def scalar_str(v) -> str:
    r = as_rational(v)
    if r is not None:
        return str(r)
    parts = []
    for i, c in enumerate(v.coeffs):
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            zp = "z" if i == 1 else f"z^{i}"
            if c == 1:
                parts.append(zp)
            elif c == -1:
                parts.append(f"-{zp}")
            else:
                parts.append(f"{c}*{zp}")
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


@lru_cache(maxsize=None)
def roots_of_unity(field: FieldDescriptor) -> tuple:
    """All roots of unity contained in the field, as scalars."""
    if field.kind == RATIONALS:
        return (Fraction(1), Fraction(-1))
    z = field.zeta()
    m = field.order
    powers = []
    cur = field.one()
    for _ in range(m):
        powers.append(cur)
        cur = cur * z
    if m % 2 == 1:
        powers = powers + [-p for p in powers]
    return tuple(powers)


def nth_roots_of_unity(field: FieldDescriptor, n: int) -> list:
    return [w for w in roots_of_unity(field) if w ** n == field.one()]


def _int_nth_root(x: int, n: int):
    """Exact integer n-th root of x >= 0, or None."""
    if x < 0:
        raise ValueError
    if x in (0, 1):
        return x
    r = round(x ** (1.0 / n))
    for cand in (r - 1, r, r + 1, r + 2):
        if cand >= 0 and cand ** n == x:
            return cand
    # float guess can be off for big x; fall back to bisection
    lo, hi = 0, 1 << (x.bit_length() // n + 2)
    while lo <= hi:
        mid = (lo + hi) // 2
        p = mid ** n
        if p == x:
            return mid
        if p < x:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def rational_nth_roots(c: Fraction, n: int) -> list:
    """All rational x with x^n = c."""
    c = Fraction(c)
    if n <= 0:
        raise ValueError("n must be positive")
    if c == 0:
        return [Fraction(0)]
    neg = c < 0
    if neg and n % 2 == 0:
        return []
    num = _int_nth_root(abs(c.numerator), n)
    den = _int_nth_root(abs(c.denominator), n)
    if num is None or den is None:
        return []
    r = Fraction(num, den)
    if n % 2 == 1:
        return [-r] if neg else [r]
    return [r, -r]


def nth_roots(c, n: int, field: FieldDescriptor) -> list:
    """All in-field x with x^n = c that have the form (rational)*(root of unity).

    Over Q this is complete.  Over Q(zeta_m) roots outside that shape (none
    arise in this artifact's constructions) are not found.
    """
    if field.kind == RATIONALS:
        return rational_nth_roots(Fraction(c), n)
    c = field.coerce(c)
    if not c:
        return [field.zero()]
    found = []
    for w in roots_of_unity(field):
        u = c / (w ** n)
        ur = u.as_rational()
        if ur is None:
            continue
        for q in rational_nth_roots(ur, n):
            r = w * q
            if r ** n == c and r not in found:
                found.append(r)
    found.sort(key=scalar_sort_key, reverse=True)
    return found


def scalar_abs(v) -> Fraction:
    r = as_rational(v)
    if r is None:
        raise RittKitError("absolute value needs a rational scalar")
    return abs(r)


def gcd_int(a: int, b: int) -> int:
    return math.gcd(a, b)
