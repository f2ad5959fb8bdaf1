from fractions import Fraction

import sympy
from conftest import rng_for

from rittkit import QQ, Poly, cyclotomic_field, in_field_roots
from rittkit.roots import is_square_rational, rational_roots


def test_rational_roots_examples():
    # 2x^2 - x - 1 = (2x + 1)(x - 1)
    assert sorted(rational_roots([-1, -1, 2])) == [Fraction(-1, 2), 1]
    assert rational_roots([1, 0, 1]) == []
    assert sorted(rational_roots([0, 0, 1])) == [0]


def test_rational_roots_vs_sympy():
    rng = rng_for("roots-oracle")
    x = sympy.Symbol("x")
    for _ in range(60):
        deg = rng.randint(1, 6)
        coeffs = [Fraction(rng.randint(-6, 6), rng.randint(1, 3))
                  for _ in range(deg + 1)]
        if not coeffs[-1]:
            coeffs[-1] = Fraction(1)
        expr = sum(sympy.Rational(c.numerator, c.denominator) * x ** i
                   for i, c in enumerate(coeffs))
        expected = sorted(Fraction(int(sympy.numer(r)), int(sympy.denom(r)))
                          for r in sympy.roots(sympy.Poly(expr, x), x)
                          if r.is_rational)
        assert sorted(set(rational_roots(coeffs))) == sorted(set(expected))


def test_in_field_roots_rational():
    f = Poly.make(QQ, [Fraction(-9, 4), 0, 1])
    assert sorted(in_field_roots(f)) == [Fraction(-3, 2), Fraction(3, 2)]
    assert in_field_roots(Poly.make(QQ, [2, 0, 1])) == []


def test_in_field_roots_cyclotomic():
    K = cyclotomic_field(5)
    z = K.zeta()
    # x^5 - 1 splits completely over Q(zeta_5)
    f = Poly.make(K, [-1, 0, 0, 0, 0, 1])
    roots = in_field_roots(f)
    assert len(roots) == 5
    for r in roots:
        assert f.evaluate(r) == K.zero()
    # x^2 - z has no (rational) * (root of unity) solution here
    g = Poly.make(K, [-z, 0, 1])
    for r in in_field_roots(g):
        assert g.evaluate(r) == K.zero()


def test_in_field_roots_scaled_unity():
    K = cyclotomic_field(4)
    # x^4 - 16: roots 2, -2, 2i, -2i all live in Q(zeta_4)
    f = Poly.make(K, [-16, 0, 0, 0, 1])
    roots = in_field_roots(f)
    assert len(roots) == 4
    for r in roots:
        assert r ** 4 == K.coerce(16)


def test_is_square_rational():
    assert is_square_rational(Fraction(9, 4))
    assert not is_square_rational(Fraction(2))
    assert not is_square_rational(Fraction(-1))
    assert is_square_rational(Fraction(0))
