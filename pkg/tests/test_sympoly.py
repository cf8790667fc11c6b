"""Symmetric polynomials in the monomial basis."""

import random
from fractions import Fraction

import pytest

from newtonsym import (
    QQ,
    RationalFunctionField,
    SymPoly,
    ZeroPolynomial,
    enumerate_partitions,
)
from oracles import random_fraction, raw_mul_collect

m = SymPoly.monomial_sym


def random_sympoly(rng, nvars, deg=3):
    coeffs = {}
    for lam in enumerate_partitions(deg, nvars):
        if rng.random() < 0.6:
            coeffs[lam] = random_fraction(rng)
    return SymPoly(QQ, nvars, coeffs)


def test_mul_basic():
    p = m(QQ, 2, (1,)) * m(QQ, 2, (1,))
    assert p == m(QQ, 2, (2,)) + m(QQ, 2, (1, 1)).scale(2)


def test_mul_identity():
    rng = random.Random(1)
    one = SymPoly.constant(QQ, 3, 1)
    for _ in range(10):
        f = random_sympoly(rng, 3)
        assert f * one == f


def test_mul_matches_raw_monomial_oracle():
    rng = random.Random(2)
    for _ in range(25):
        nvars = rng.choice([1, 2, 3])
        f = random_sympoly(rng, nvars, deg=4)
        g = random_sympoly(rng, nvars, deg=4)
        assert f * g == raw_mul_collect(f, g)


def test_eval_examples():
    assert m(QQ, 2, (1,)).eval([2, 3]) == 5
    assert m(QQ, 2, (1, 1)).eval([2, 3]) == 6


def test_eval_symmetry():
    rng = random.Random(3)
    for _ in range(20):
        f = random_sympoly(rng, 3)
        pt = [random_fraction(rng) for _ in range(3)]
        assert f.eval(pt) == f.eval([pt[1], pt[2], pt[0]])
        assert f.eval(pt) == f.eval(list(reversed(pt)))


def test_eval_is_ring_homomorphism():
    rng = random.Random(4)
    for _ in range(15):
        f = random_sympoly(rng, 2)
        g = random_sympoly(rng, 2)
        pt = [random_fraction(rng) for _ in range(2)]
        assert (f * g + f).eval(pt) == f.eval(pt) * g.eval(pt) + f.eval(pt)


def test_ext_constant():
    c = SymPoly.constant(QQ, 1, Fraction(7))
    assert c.ext(Fraction(5)) == SymPoly.constant(QQ, 2, Fraction(7))


def test_ext_of_linear():
    # x0 = (x0 - p) + p maps to (x0 - p) + (x1 - p) + p = m1 - p
    e = m(QQ, 1, (1,)).ext(Fraction(3))
    assert e == m(QQ, 2, (1,)) - Fraction(3)


def test_ext_evaluation_identity_random():
    rng = random.Random(5)
    for _ in range(30):
        nvars = rng.choice([1, 2])
        f = random_sympoly(rng, nvars, deg=3)
        pivot = random_fraction(rng)
        g = f.ext(pivot)
        assert g.degree() == f.degree()
        pt = [random_fraction(rng) for _ in range(nvars)]
        assert g.eval(pt + [pivot]) == f.eval(pt)


def test_restrict_linear():
    assert m(QQ, 2, (1,)).restrict(Fraction(5)) == m(QQ, 1, (1,)) + Fraction(5)


def test_restrict_after_ext_is_identity():
    rng = random.Random(6)
    for _ in range(20):
        f = random_sympoly(rng, 2, deg=3)
        pivot = random_fraction(rng)
        assert f.ext(pivot).restrict(pivot) == f


def test_restrict_degree_drop():
    # (x0 - p)(x1 - p) restricted at x1 = p is the zero polynomial
    p = Fraction(2)
    poly = m(QQ, 2, (1, 1)) - m(QQ, 2, (1,)).scale(p) + SymPoly.constant(QQ, 2, p * p)
    restricted = poly.restrict(p)
    assert restricted.is_zero()


def test_restrict_never_raises_degree():
    rng = random.Random(7)
    for _ in range(20):
        f = random_sympoly(rng, 3, deg=4)
        r = f.restrict(random_fraction(rng))
        assert r.degree() <= f.degree()


def test_top_component():
    f = m(QQ, 2, (2,)) + m(QQ, 2, (1,)) + SymPoly.constant(QQ, 2, 3)
    assert f.top_component() == m(QQ, 2, (2,))
    assert m(QQ, 2, (2, 1)).top_component() == m(QQ, 2, (2, 1))
    with pytest.raises(ZeroPolynomial):
        SymPoly.zero(QQ, 2).top_component()


def test_x0_coefficient():
    f = m(QQ, 2, (2, 1))  # x0^2 x1 + x0 x1^2
    assert f.x0_coefficient(2) == m(QQ, 1, (1,))
    assert f.x0_coefficient(1) == m(QQ, 1, (2,))
    assert f.x0_coefficient(0).is_zero()


def test_ratfunc_coefficients():
    F = RationalFunctionField(["q"])
    q = F.gen("q")
    f = SymPoly(F, 2, {(1,): q, (): F.one})
    g = f * f
    assert g.coefficient((2,)) == q * q
    assert g.coefficient((1, 1)) == 2 * q * q
    assert g.eval([q, 1 / q]) == (q * q + 2) ** 2  # f(q, 1/q) = q^2 + 2
