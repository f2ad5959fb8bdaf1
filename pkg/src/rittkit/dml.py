"""Desk-scale orbit experiments for split maps (x, y) -> (F1(x), F2(y)).

Exact orbits with a bit-size height cap, return sets against a plane
curve, mod-p return filters (a sound superset of the exact set for every
good prime), decomposition of index sets into arithmetic progressions,
and preperiodicity checks with escape certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bivar import BivarCurve
from .errors import BadReductionError, RittKitError
from .field import scalar_abs
from .poly import Poly

DEFAULT_HEIGHT_CAP = 4096


def _height_bits(v) -> int:
    fr = getattr(v, "coeffs", None)
    if fr is not None:
        return max((_height_bits(c) for c in fr), default=0)
    f = Fraction(v)
    return max(f.numerator.bit_length(), f.denominator.bit_length())


@dataclass(frozen=True)
class OrbitPoint:
    index: int
    point: tuple


@dataclass(frozen=True)
class Orbit:
    points: tuple  # OrbitPoint
    truncated_at: int | None  # first index not computed, if capped


def orbit(F1: Poly, F2: Poly, alpha: tuple, N: int,
          height_cap: int = DEFAULT_HEIGHT_CAP) -> Orbit:
    """Exact orbit points up to index N, truncating at the height cap."""
    if N < 0:
        raise RittKitError("N must be >= 0")
    field = F1.field
    x0 = field.coerce(alpha[0])
    y0 = field.coerce(alpha[1])
    pts = []
    for n in range(N + 1):
        if max(_height_bits(x0), _height_bits(y0)) > height_cap:
            return Orbit(tuple(pts), truncated_at=n)
        pts.append(OrbitPoint(n, (x0, y0)))
        if n < N:
            x0 = F1.evaluate(x0)
            y0 = F2.evaluate(y0)
    return Orbit(tuple(pts), truncated_at=None)


@dataclass(frozen=True)
class ReturnSet:
    indices: tuple  # sorted return indices
    truncated_at: int | None


def return_set_exact(F1: Poly, F2: Poly, alpha: tuple, C: BivarCurve,
                     N: int, height_cap: int = DEFAULT_HEIGHT_CAP) -> ReturnSet:
    """{n <= N : the orbit point lands on C exactly}."""
    orb = orbit(F1, F2, alpha, N, height_cap)
    hits = tuple(p.index for p in orb.points
                 if C.contains(p.point[0], p.point[1]))
    return ReturnSet(hits, orb.truncated_at)


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _reduce_scalar(v, p: int, what: str) -> int:
    f = Fraction(v)
    if f.denominator % p == 0:
        raise BadReductionError(
            f"denominator of {what} is divisible by {p}")
    return f.numerator * pow(f.denominator, -1, p) % p


def _reduce_poly(f: Poly, p: int, what: str) -> list:
    if f.field.kind != "Rationals":
        raise BadReductionError(
            "mod-p reduction is only available over the rationals")
    coeffs = [_reduce_scalar(c, p, f"a coefficient of {what}") for c in f.coeffs]
    if coeffs and coeffs[-1] == 0:
        raise BadReductionError(
            f"leading coefficient of {what} vanishes mod {p} "
            "(degree not preserved)")
    return coeffs


def return_set_modp(F1: Poly, F2: Poly, alpha: tuple, C: BivarCurve,
                    p: int, N: int) -> tuple:
    """{n <= N : the orbit lands on C mod p}; a superset of the exact set."""
    if not _is_odd_prime(p):
        raise BadReductionError(f"{p} is not an odd prime")
    f1 = _reduce_poly(F1, p, "F1")
    f2 = _reduce_poly(F2, p, "F2")
    if C.field.kind != "Rationals":
        raise BadReductionError(
            "mod-p reduction is only available over the rationals")
    grid = [[_reduce_scalar(C.poly.coeff(i, j), p, "a coefficient of C")
             for i in range(C.deg_x + 1)] for j in range(C.deg_y + 1)]
    if all(c == 0 for row in grid for c in row):
        raise BadReductionError(f"curve polynomial vanishes mod {p}")
    x0 = _reduce_scalar(alpha[0], p, "alpha")
    y0 = _reduce_scalar(alpha[1], p, "alpha")

    def ev(coeffs, t):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * t + c) % p
        return acc

    hits = []
    for n in range(N + 1):
        val = 0
        ypow = 1
        for row in grid:
            val = (val + ypow * ev(row, x0)) % p
            ypow = ypow * y0 % p
        if val == 0:
            hits.append(n)
        if n < N:
            x0, y0 = ev(f1, x0), ev(f2, y0)
    return tuple(hits)


@dataclass(frozen=True)
class Progression:
    a: int
    b: int  # b = 0 is a singleton {a}

    def members(self, horizon: int) -> set:
        if self.b == 0:
            return {self.a} if self.a <= horizon else set()
        return set(range(self.a, horizon + 1, self.b))


def progression_decompose(S, horizon: int):
    """Minimal progressions whose union on [0, horizon] equals S, or None.

    Searches eventual periodicity of the characteristic sequence with
    period <= horizon // 3; among the fits, the fewest progressions win,
    then the lexicographically smallest list.
    """
    S = set(S)
    if any(n < 0 or n > horizon for n in S):
        raise RittKitError("S must lie in [0, horizon]")
    bits = [1 if n in S else 0 for n in range(horizon + 1)]
    best = None
    for per in range(1, horizon // 3 + 1):
        tail = 0
        for i in range(horizon - per, -1, -1):
            if bits[i] != bits[i + per]:
                tail = i + 1
                break
        # both the preperiod and the period must fit well inside the
        # horizon, otherwise any set decomposes into stray singletons
        if tail > horizon // 3 or tail + per > horizon:
            continue
        progs = [Progression(n, 0) for n in sorted(S) if n < tail]
        for r in range(tail, tail + per):
            if bits[r]:
                progs.append(Progression(r, per))
        progs.sort(key=lambda q: (q.a, q.b))
        key = (len(progs), tuple((q.a, q.b) for q in progs))
        if best is None or key < best[0]:
            best = (key, progs)
    if best is None:
        return None
    progs = best[1]
    union = set()
    for q in progs:
        union |= q.members(horizon)
    if union != S:
        raise RittKitError("progression regeneration mismatch")
    return progs


@dataclass(frozen=True)
class EscapeCertificate:
    index: int
    radius: Fraction
    value: object  # orbit value at index, with |value| >= radius

    def verify(self, f: Poly, steps: int = 5) -> bool:
        """Exactly re-check strict growth for a few further iterations."""
        cur = self.value
        if scalar_abs(cur) < self.radius:
            return False
        for _ in range(steps):
            nxt = f.evaluate(cur)
            if not scalar_abs(nxt) > scalar_abs(cur):
                return False
            cur = nxt
        return True


@dataclass(frozen=True)
class PreperiodicResult:
    kind: str  # "Preperiodic" | "Escape" | "Unknown"
    tail: int | None = None
    period: int | None = None
    certificate: EscapeCertificate | None = None


def _escape_radius(f: Poly) -> Fraction:
    """|x| >= radius implies |f(x)| >= 2|x|, from coefficient dominance."""
    total = sum((abs(Fraction(f.coeff(i))) for i in range(f.degree)),
                Fraction(0))
    return max(Fraction(1), (total + 2) / abs(Fraction(f.leading())))


def preperiodic_check(f: Poly, a, N: int,
                      height_cap: int = DEFAULT_HEIGHT_CAP) -> PreperiodicResult:
    """Detect a repeat (preperiodic), certified escape, or give up."""
    if N < 1:
        raise RittKitError("N must be >= 1")
    if f.degree < 2:
        raise RittKitError("preperiodic_check needs degree >= 2")
    field = f.field
    cur = field.coerce(a)
    rational = field.kind == "Rationals"
    radius = _escape_radius(f) if rational else None
    seen = {}
    for n in range(N + 1):
        if cur in seen:
            i = seen[cur]
            return PreperiodicResult("Preperiodic", tail=i, period=n - i)
        if rational and scalar_abs(cur) >= radius:
            cert = EscapeCertificate(index=n, radius=radius, value=cur)
            if not cert.verify(f):
                raise RittKitError("escape certificate failed verification")
            return PreperiodicResult("Escape", certificate=cert)
        if _height_bits(cur) > height_cap:
            return PreperiodicResult("Unknown")
        seen[cur] = n
        cur = f.evaluate(cur)
    return PreperiodicResult("Unknown")
