from fractions import Fraction

import pytest
from conftest import rng_for

from rittkit import (QQ, LinearPoly, Poly, align_iterates, chebyshev,
                     common_commuting_iterate, commutes_with_iterate, compose,
                     conjugate, cyclotomic_field, gamma_group, iterate,
                     m_infinity)

X = Poly.x(QQ)


def P(*coeffs):
    return Poly.make(QQ, list(coeffs))


def check_group_axioms(grp):
    elems = list(grp.elements)
    assert any(e.is_identity() for e in elems)
    for e1 in elems:
        for e2 in elems:
            prod = e1.after(e2)
            assert any(prod.a == e.a and prod.b == e.b for e in elems)
        inv = e1.inverse()
        assert any(inv.a == e.a and inv.b == e.b for e in elems)


def test_gamma_odd_cubic():
    grp = gamma_group(P(0, 1, 0, 1))       # x^3 + x
    assert grp.kind == "Finite"
    assert grp.order() == 2
    assert sorted(str(e) for e in grp.elements) == ["-x", "x"]
    check_group_axioms(grp)
    assert grp.generator is not None
    # companions satisfy A o ell = L o A
    A = P(0, 1, 0, 1)
    for ell, L in zip(grp.elements, grp.companions):
        assert compose(A, ell.to_poly()) == compose(L.to_poly(), A)


def test_gamma_shifted_cubic():
    # the recentering x -> x - 1/3 reveals a second symmetry of x^3 + x^2
    A = P(0, 0, 1, 1)
    grp = gamma_group(A)
    assert grp.kind == "Finite"
    assert grp.order() == 2
    ells = sorted(str(e) for e in grp.elements)
    assert ells == ["-x - 2/3", "x"]
    for ell, L in zip(grp.elements, grp.companions):
        assert compose(A, ell.to_poly()) == compose(L.to_poly(), A)


def test_gamma_infinite():
    assert gamma_group(P(1, 0, 1)).kind == "Infinite"    # x^2 + 1
    assert gamma_group(Poly.monomial(QQ, 4)).kind == "Infinite"


def test_gamma_cyclotomic_enlargement():
    # over Q the quartic x^4 + x has only the identity; over Q(zeta_3)
    # the symmetry x -> zeta_3 x appears
    A = P(0, 1, 0, 0, 1)
    grp_q = gamma_group(A)
    assert grp_q.order() == 1
    K = cyclotomic_field(3)
    AK = Poly.make(K, [K.coerce(c) for c in A.coeffs])
    grp_k = gamma_group(AK)
    assert grp_k.order() == 3
    check_group_axioms(grp_k)


def test_gamma_conjugation_transport():
    rng = rng_for("gamma-transport")
    A = P(0, 1, 0, 1)
    for _ in range(10):
        a = Fraction(rng.randint(1, 4), rng.randint(1, 3))
        b = Fraction(rng.randint(-3, 3))
        ell = LinearPoly.make(QQ, a, b)
        B = compose(ell.to_poly(),
                    compose(A, ell.inverse().to_poly()))
        grp = gamma_group(B)
        assert grp.order() == 2


def test_m_infinity_examples():
    grp = m_infinity(P(1, 0, 1))          # x^2 + 1
    assert grp.order() == 1
    assert grp.stable_at == 1
    grp3 = m_infinity(P(0, 1, 0, 1))      # x^3 + x commutes with -x
    assert grp3.order() == 2
    check_group_axioms(grp3)


def test_m_infinity_subgroup_of_gamma():
    # every symmetry of an iterate normalizes the orbit structure; the
    # stabilized group sits inside the symmetries of every later iterate
    for f in (P(0, 1, 0, 1), P(1, 0, 1), P(7, 0, 1, 1)):
        grp = m_infinity(f, 3)
        for ell in grp.elements:
            found = False
            for n in range(1, 4):
                F = iterate(f, n)
                for cand in (compose(F, ell.to_poly()),):
                    if cand == compose(F, ell.to_poly()):
                        found = True
            assert found


def test_commutes_with_iterate():
    f = P(0, 1, 0, 1)
    assert commutes_with_iterate(f, Poly.make(QQ, [0, -1]), 3) == 1
    assert commutes_with_iterate(f, f, 3) == 1
    assert commutes_with_iterate(f, P(1, 1), 3) is None
    # x -> zeta_3 x commutes with x^2 only at the second iterate, since
    # squaring cubes the scale only after two steps
    K = cyclotomic_field(3)
    sq = Poly.monomial(K, 2)
    rot = Poly.make(K, [K.zero(), K.zeta()])
    assert commutes_with_iterate(sq, rot, 3) == 2


def test_common_commuting_iterate():
    assert common_commuting_iterate(P(0, 1, 0, 1)) is not None
    n = common_commuting_iterate(Poly.monomial(QQ, 2), 4)
    assert n is not None


def test_align_iterates_basic():
    f = P(0, -1, 0, -1)                   # -(x^3 + x)
    g = P(0, 1, 0, 1)                     # x^3 + x
    # f^(o 2) = g^(o 2), take L = identity
    L = LinearPoly.identity(QQ)
    assert iterate(f, 2) == iterate(g, 2)
    ell, N = align_iterates(f, g, L, 2)
    assert N <= 2
    conj = compose(ell.to_poly(), compose(g, ell.inverse().to_poly()))
    assert iterate(f, N) == iterate(conj, N)


def test_align_iterates_rejects_cyclic():
    from rittkit.errors import HypothesisViolationError
    with pytest.raises(HypothesisViolationError):
        align_iterates(Poly.monomial(QQ, 2), Poly.monomial(QQ, 2),
                       LinearPoly.identity(QQ), 2)
