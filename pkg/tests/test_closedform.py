"""Closed forms versus the solver: the three exactly solvable families."""

import random
from fractions import Fraction

import pytest

from newtonsym import (
    E1Family,
    E2Family,
    Grid,
    MacdonaldFamily,
    QQ,
    SymPoly,
    WrongFamily,
    enumerate_partitions,
    enumerate_reverse_tableaux,
    factorial_monomial,
    factorial_schur_det,
    factorial_schur_tableaux,
    interpolation_polynomial,
    macdonald_tableaux,
    psi_weight,
)

SAMPLE = dict(a=1, b=2, c=3, q=Fraction(2, 3), t=Fraction(5, 7))

m = SymPoly.monomial_sym


def test_factorial_monomial_single_box():
    g = Grid(E1Family(QQ, lambda j: Fraction(j + 5)), 1)
    # (x0 - c0) + (x1 - c0) with c0 = 5
    assert factorial_monomial(g, (1,)) == m(QQ, 2, (1,)) - 10


def test_factorial_monomial_column():
    g = Grid(E1Family(QQ, lambda j: Fraction(j + 5)), 1)
    # the two identical summands collapse against the stabilizer
    expected = m(QQ, 2, (1, 1)) - m(QQ, 2, (1,)).scale(5) + SymPoly.constant(QQ, 2, 25)
    assert factorial_monomial(g, (1, 1)) == expected


def test_factorial_monomial_equals_solver():
    for n in (1, 2):
        g = Grid(E1Family(QQ, lambda j: Fraction(j)), n)
        for mu in enumerate_partitions(4, n + 1):
            assert factorial_monomial(g, mu) == interpolation_polynomial(g, mu), mu


def test_factorial_schur_empty_partition():
    g = Grid(E2Family(QQ, lambda k: Fraction(k)), 1)
    assert factorial_schur_det(g, ()) == SymPoly.constant(QQ, 2, 1)


def test_factorial_schur_normalization_value():
    g = Grid(E2Family(QQ, lambda k: Fraction(k)), 1)
    s = factorial_schur_det(g, (1, 1))
    # value at its own knot: (c1 - c_{-1}) (c0 - c_{-1}) = 2 * 1
    assert s.eval(g.knot((1, 1))) == 2


def test_factorial_schur_tableaux_single_box():
    g = Grid(E2Family(QQ, lambda k: Fraction(3 * k + 1)), 1)
    gam = lambda k: Fraction(3 * k + 1)
    # (x0 - c_0) + (x1 - c_{-1})
    expected = m(QQ, 2, (1,)) - gam(0) - gam(-1)
    assert factorial_schur_tableaux(g, (1,)) == expected


def test_factorial_schur_tableaux_column():
    g = Grid(E2Family(QQ, lambda k: Fraction(3 * k + 1)), 1)
    gam = lambda k: Fraction(3 * k + 1)
    # unique tableau: (x1 - c_{-1})(x0 - c_{-1})
    c = gam(-1)
    expected = m(QQ, 2, (1, 1)) - m(QQ, 2, (1,)).scale(c) + SymPoly.constant(QQ, 2, c * c)
    assert factorial_schur_tableaux(g, (1, 1)) == expected


def test_factorial_schur_triple_equality():
    rng = random.Random(77)
    for n in (1, 2):
        values = {}
        used = set()
        for k in range(-n, 6):
            while True:
                v = Fraction(rng.randint(-30, 30), rng.randint(1, 4))
                if v not in used:
                    used.add(v)
                    values[k] = v
                    break
        g = Grid(E2Family(QQ, values), n)
        for mu in enumerate_partitions(4, n + 1):
            det = factorial_schur_det(g, mu)
            assert det == factorial_schur_tableaux(g, mu), mu
            assert det == interpolation_polynomial(g, mu), mu


def test_factorial_schur_top_is_classical_schur():
    g = Grid(E2Family(QQ, lambda k: Fraction(5 * k + 2)), 2)
    for mu in ((2, 1), (2, 2), (3, 1)):
        top = factorial_schur_det(g, mu).top_component()
        # the classical Schur function is the tableau sum with every shift
        # value set to zero, which leaves x^T alone
        total = {}
        for tab in enumerate_reverse_tableaux(mu, 2):
            exps = [0, 0, 0]
            for _, _, entry in tab.entries():
                exps[entry] += 1
            key = tuple(exps)
            total[key] = total.get(key, QQ.zero) + QQ.one
        classical = SymPoly.from_monomials(QQ, 3, total)
        assert top == classical, mu


def test_psi_weight_single_cells():
    for tab in enumerate_reverse_tableaux((1,), 1):
        assert psi_weight(tab, Fraction(2, 3), Fraction(5, 7)) == 1


def test_psi_weight_row_of_equal_entries():
    tab = [t for t in enumerate_reverse_tableaux((3,), 1) if t.rows == ((1, 1, 1),)][0]
    assert psi_weight(tab, Fraction(2, 3), Fraction(5, 7)) == 1


def test_macdonald_tableaux_single_box_matches_solver():
    g = Grid(MacdonaldFamily(QQ, **SAMPLE), 1)
    got = macdonald_tableaux(g, (1,))
    expected = m(QQ, 2, (1,)) - g.value(0, 0) - g.value(1, 0)
    assert got == expected
    assert got == interpolation_polynomial(g, (1,))


def test_macdonald_tableaux_equals_solver():
    for n in (1, 2):
        g = Grid(MacdonaldFamily(QQ, **SAMPLE), n)
        for mu in enumerate_partitions(4, n + 1):
            assert macdonald_tableaux(g, mu) == interpolation_polynomial(g, mu), (n, mu)


def test_macdonald_tableaux_monic():
    g = Grid(MacdonaldFamily(QQ, **SAMPLE), 2)
    for mu in enumerate_partitions(4, 3):
        if mu:
            assert macdonald_tableaux(g, mu).coefficient(mu) == 1, mu


def test_degeneration_to_factorial_monomial():
    g = Grid(MacdonaldFamily(QQ, 1, 2, 3, Fraction(5, 2), 1), 2)
    induced = Grid(E1Family(QQ, lambda j: g.value(0, j)), 2)
    for mu in enumerate_partitions(4, 3):
        assert macdonald_tableaux(g, mu) == factorial_monomial(induced, mu), mu


def test_degeneration_to_factorial_schur():
    q = Fraction(5, 2)
    g = Grid(MacdonaldFamily(QQ, 1, 2, 3, q, 1 / q), 2)
    induced = Grid(E2Family(QQ, lambda k: 1 + 2 * q ** k + 3 * q ** -k), 2)
    for mu in enumerate_partitions(4, 3):
        assert macdonald_tableaux(g, mu) == factorial_schur_det(induced, mu), mu


def test_wrong_family_rejected():
    g = Grid(MacdonaldFamily(QQ, **SAMPLE), 1)
    e1 = Grid(E1Family(QQ, lambda j: Fraction(j)), 1)
    with pytest.raises(WrongFamily):
        factorial_monomial(g, (1,))
    with pytest.raises(WrongFamily):
        factorial_schur_det(g, (1,))
    with pytest.raises(WrongFamily):
        macdonald_tableaux(e1, (1,))
