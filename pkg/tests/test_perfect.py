"""Extra vanishing: the closed families pass, generic grids fail."""

import random
from fractions import Fraction

from newtonsym import (
    AlternatingFamily,
    E1Family,
    E2Family,
    Grid,
    MacdonaldFamily,
    QQ,
    QuadraticFamily,
    ReverseTableau,
    SplitGeometricFamily,
    UniversalFamily,
    conjugate,
    contains,
    enumerate_partitions,
    enumerate_reverse_tableaux,
    extra_vanishing_check,
    is_perfect_up_to,
    is_zero,
    term_vanishes,
)

SAMPLE_I = dict(a=1, b=2, c=3, q=Fraction(2, 3), t=Fraction(5, 7))


def test_e1_passes():
    g = Grid(E1Family(QQ, lambda j: Fraction(j)), 1)
    report = extra_vanishing_check(g, 4)
    assert report.passed
    assert report.checked


def test_family_I_passes():
    g = Grid(MacdonaldFamily(QQ, **SAMPLE_I), 2)
    assert is_perfect_up_to(g, 4)


def test_universal_violation():
    g = Grid(UniversalFamily(1, 4), 1)
    report = extra_vanishing_check(g, 4)
    assert not report.passed
    witnesses = {(mu, lam) for mu, lam, _ in report.violations}
    # pairs with |lam| <= |mu| vanish by the defining conditions, so the
    # smallest genuine two-row witness is P[3] at the knot of [2,2]
    assert witnesses == {((3,), (2, 2))}
    value = report.violations[0][2]
    assert not is_zero(value)
    s = g.value
    bracket = (s(0, 0) * s(0, 2) - s(0, 0) * s(1, 1) - s(0, 1) ** 2
               + s(0, 1) * s(1, 0) + s(0, 1) * s(1, 2) - s(0, 2) * s(1, 1)
               - s(1, 0) * s(1, 2) + s(1, 1) ** 2)
    eps = (s(1, 2) - s(1, 1)) * (s(1, 2) - s(1, 0)) / (s(0, 1) - s(1, 0))
    assert value == eps * bracket


def test_monotone_consistency():
    g = Grid(UniversalFamily(1, 4), 1)
    small = extra_vanishing_check(g, 3)
    assert small.passed  # no violating pair exists below degree 4
    big = extra_vanishing_check(g, 4)
    assert set(small.checked) <= set(big.checked)


def test_random_rational_grid_is_not_perfect():
    from oracles import random_rational_grid

    g = random_rational_grid(random.Random(42), 1, 4)
    assert not is_perfect_up_to(g, 4)


def test_term_vanishes_trivial():
    g = Grid(E1Family(QQ, lambda j: Fraction(j)), 1)
    tab = [t for t in enumerate_reverse_tableaux((1,), 1) if t.rows == ((0,),)][0]
    assert term_vanishes(tab, (), g)


def test_term_vanishing_sweep_family_I():
    g = Grid(MacdonaldFamily(QQ, **SAMPLE_I), 2)
    for mu in enumerate_partitions(3, 3):
        for lam in enumerate_partitions(5, 3):
            if not contains(mu, lam):
                for tab in enumerate_reverse_tableaux(mu, 2):
                    assert term_vanishes(tab, lam, g), (mu, lam, tab.rows)


def test_contained_pair_has_nonvanishing_term():
    # the filling T(i, j) = mu'_j - 1 - i only produces differences that
    # non-degeneracy forbids from vanishing
    g = Grid(MacdonaldFamily(QQ, **SAMPLE_I), 2)
    for mu, lam in (((2, 1), (3, 2, 1)), ((2, 2), (2, 2)), ((3,), (3, 1))):
        conj = conjugate(mu)
        rows = tuple(tuple(conj[j] - 1 - i for j in range(mu[i]))
                     for i in range(len(mu)))
        tab = ReverseTableau(mu, rows)
        assert not term_vanishes(tab, lam, g)


def test_all_closed_families_pass():
    rng = random.Random(404)
    grids = [
        Grid(E1Family(QQ, lambda j: Fraction(2 * j * j + j)), 2),
        Grid(E2Family(QQ, lambda k: Fraction(k * (3 * k + 7), 2)), 2),
        Grid(MacdonaldFamily(QQ, **SAMPLE_I), 2),
        Grid(QuadraticFamily(QQ, 1, 1, Fraction(5, 3), Fraction(1, 7)), 2),
        Grid(AlternatingFamily(QQ, "a", 1, 2, Fraction(1, 3), Fraction(5, 7)), 2),
        Grid(AlternatingFamily(QQ, "b", 1, 2, Fraction(1, 3), Fraction(5, 7)), 2),
        Grid(AlternatingFamily(QQ, "c", 1, 2, Fraction(1, 3), Fraction(5, 7)), 2),
        Grid(SplitGeometricFamily(QQ, 0, 1, 1, 3), 1),
    ]
    for g in grids:
        assert g.check_nondegenerate(2 * 3 + 2).passed, g
        assert is_perfect_up_to(g, 3), g
    del rng


def test_parallel_sweep_matches_serial():
    g = Grid(MacdonaldFamily(QQ, **SAMPLE_I), 1)
    serial = extra_vanishing_check(g, 3, jobs=1)
    threaded = extra_vanishing_check(g, 3, jobs=4)
    assert serial.passed == threaded.passed
    assert sorted(serial.checked) == sorted(threaded.checked)
