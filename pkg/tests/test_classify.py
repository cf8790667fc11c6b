"""The window recurrences, four-value trichotomy, and family fitting."""

import random
from fractions import Fraction

import pytest

from newtonsym import (
    AlternatingFamily,
    AlternatingTuple,
    E1Family,
    E2Family,
    F,
    GeometricTuple,
    Grid,
    IndeterminateTuple,
    InconsistentWindow,
    MacdonaldFamily,
    NotPerfectWindow,
    QQ,
    QuadExtElem,
    QuadraticFamily,
    QuadraticTuple,
    RationalFunctionField,
    SplitGeometricFamily,
    UniversalFamily,
    Window,
    classify_tuple,
    classify_window,
    extend_window,
    g0,
    g1,
    g2,
    g3,
    interpolation_polynomial,
    invert,
    verify_recurrences,
)
from newtonsym.classify import SEED_CELLS
from oracles import random_fraction

SAMPLE_I = dict(a=1, b=2, c=3, q=Fraction(2, 3), t=Fraction(5, 7))


# -- the five-point function -------------------------------------------------


def test_f_collapse_identities_symbolic():
    S = RationalFunctionField(["z", "u", "v", "w"])
    z, u, v, w = S.gens()
    assert F(z, u, v, z, w) == v
    assert F(u, u, v, v, w) == w
    assert F(u, u + z, v, v - z, w) == w + z


def test_g1_root():
    assert g1(Fraction(1), Fraction(1), Fraction(5)) == 0


def test_recurrences_on_symbolic_families():
    P = RationalFunctionField(["a", "b", "c", "q", "t"])
    fam = MacdonaldFamily(P, *P.gens())
    grid = Grid(fam, 2)
    v = grid.value
    for i in range(2):
        for j in range(2):
            assert v(i + 1, j + 2) == F(v(i, j), v(i + 1, j), v(i, j + 1),
                                        v(i + 1, j + 1), v(i, j + 2))
    for j in range(2):
        assert v(2, j + 1) == F(v(0, j), v(0, j + 1), v(1, j), v(1, j + 1), v(2, j))
    Q2 = RationalFunctionField(["al", "be", "bp", "ga"])
    grid = Grid(QuadraticFamily(Q2, *Q2.gens()), 2)
    v = grid.value
    for j in range(2):
        assert v(1, j + 2) == F(v(0, j), v(1, j), v(0, j + 1), v(1, j + 1), v(0, j + 2))
        assert v(2, j + 1) == F(v(0, j), v(0, j + 1), v(1, j), v(1, j + 1), v(2, j))


def test_reversed_recurrences_on_samples():
    g = Grid(MacdonaldFamily(QQ, **SAMPLE_I), 2)
    v = g.value
    for i in range(2):
        for j in range(2):
            assert v(i, j) == F(v(i + 1, j + 2), v(i, j + 2), v(i + 1, j + 1),
                                v(i, j + 1), v(i + 1, j))
    for j in range(2):
        assert v(0, j) == F(v(2, j + 1), v(2, j), v(1, j + 1), v(1, j), v(0, j + 1))


def test_column3_relation_on_family_I():
    for params in (SAMPLE_I,
                   dict(a=Fraction(-1, 2), b=Fraction(3, 4), c=Fraction(7, 5),
                        q=Fraction(5, 2), t=Fraction(3, 8))):
        v = Grid(MacdonaldFamily(QQ, **params), 1).value
        lhs = v(0, 3) * g1(v(1, 0), v(0, 1), v(1, 1))
        assert lhs == g0(v(0, 0), v(1, 0), v(0, 1), v(1, 1), v(0, 2))


def test_third_row_relation_on_family_I():
    for params in (SAMPLE_I,
                   dict(a=Fraction(-1, 2), b=Fraction(3, 4), c=Fraction(7, 5),
                        q=Fraction(5, 2), t=Fraction(3, 8))):
        v = Grid(MacdonaldFamily(QQ, **params), 2).value
        args = (v(0, 0), v(1, 0), v(0, 1), v(1, 1), v(0, 2))
        assert v(2, 0) * g2(*args) == g3(*args)


def test_quartic_determination_universal():
    grid = Grid(UniversalFamily(1, 4), 1)
    s = grid.value
    val = interpolation_polynomial(grid, (4,)).eval(grid.knot((3, 2)))
    forced = F(s(0, 0), s(1, 0), s(0, 1), s(1, 1), s(0, 2))
    val = val.substitute({"u12": forced})
    linear = (s(0, 3) * g1(s(1, 0), s(0, 1), s(1, 1))
              - g0(s(0, 0), s(1, 0), s(0, 1), s(1, 1), s(0, 2)))
    eps = ((s(0, 3) - s(0, 2)) * (forced - s(1, 1)) * (forced - s(1, 0))
           / ((s(0, 2) - s(1, 0)) * (s(1, 0) - s(0, 1)) ** 2))
    assert val == eps * (s(0, 0) - s(1, 1)) * linear


def test_three_row_determination_universal():
    grid = Grid(UniversalFamily(2, 3), 2)
    r = grid.value
    val = interpolation_polynomial(grid, (3,)).eval(grid.knot((2, 1, 1)))
    forced = F(r(0, 0), r(0, 1), r(1, 0), r(1, 1), r(2, 0))
    val = val.substitute({"u21": forced})
    core = (r(2, 0) * g2(r(0, 0), r(1, 0), r(0, 1), r(1, 1), r(0, 2))
            - g3(r(0, 0), r(1, 0), r(0, 1), r(1, 1), r(0, 2)))
    eps = ((r(0, 2) - r(0, 1)) * (forced - r(2, 0)) * (r(1, 1) - r(2, 0))
           / ((r(2, 0) - r(0, 1)) * (r(1, 0) - r(0, 2)) * (r(1, 0) - r(0, 1)) ** 2))
    assert val == eps * (r(1, 1) - r(0, 0)) * core


# -- window extension ---------------------------------------------------------


def test_extend_round_trip():
    g = Grid(MacdonaldFamily(QQ, 1, 2, 3, 2, 5), 1)
    seed = {cell: g.value(*cell) for cell in SEED_CELLS}
    w = extend_window(seed, 1, 3)
    assert w.values == Window.from_grid(g, 3).values


def test_extend_three_rows():
    # the recurrences cannot start a new row, so a three-row seed carries
    # the first value of row 2 as well
    g = Grid(MacdonaldFamily(QQ, **SAMPLE_I), 2)
    seed = {cell: g.value(*cell) for cell in SEED_CELLS}
    seed[(2, 0)] = g.value(2, 0)
    w = extend_window(seed, 2, 3)
    assert w.values == Window.from_grid(g, 3).values


def test_extend_diagonal_coincidence_propagates():
    e2 = Grid(E2Family(QQ, lambda k: Fraction(k * (k + 5))), 1)
    seed = {cell: e2.value(*cell) for cell in SEED_CELLS}
    w = extend_window(seed, 1, 3)
    for j in range(3):
        assert w.value(1, j + 1) == w.value(0, j)


def test_extend_equal_rows_propagate():
    e1 = Grid(E1Family(QQ, lambda j: Fraction(j * j + 1)), 1)
    seed = {cell: e1.value(*cell) for cell in SEED_CELLS}
    w = extend_window(seed, 1, 3)
    for j in range(4):
        assert w.value(0, j) == w.value(1, j)


def test_extend_rejects_inconsistent_seed():
    g = Grid(MacdonaldFamily(QQ, 1, 2, 3, 2, 5), 1)
    seed = {cell: g.value(*cell) for cell in SEED_CELLS}
    seed[(1, 1)] = seed[(1, 1)] + 1
    # full seed for a 2x4 window, one corrupted interior value
    seed[(1, 2)] = g.value(1, 2)
    seed[(1, 3)] = g.value(1, 3)
    with pytest.raises(InconsistentWindow):
        extend_window(seed, 1, 3)


def test_extend_insufficient_seed():
    with pytest.raises(InconsistentWindow):
        extend_window({(0, 0): Fraction(1)}, 1, 3)


def test_verify_recurrences_accepts_family_windows():
    for fam in (MacdonaldFamily(QQ, **SAMPLE_I),
                QuadraticFamily(QQ, 1, 1, Fraction(5, 3), Fraction(1, 7))):
        verify_recurrences(Window.from_grid(Grid(fam, 2), 4))


# -- four-value classification -------------------------------------------------


def test_classify_tuple_arithmetic_progression():
    fit = classify_tuple(0, 1, 2, 3)
    assert isinstance(fit, QuadraticTuple)
    assert (fit.alpha, fit.beta, fit.gamma) == (0, 1, 0)


def test_classify_tuple_geometric():
    w = [Fraction(2) ** j + Fraction(2) ** -j for j in range(4)]
    fit = classify_tuple(*w)
    assert isinstance(fit, GeometricTuple)
    assert (fit.a, fit.b, fit.c, fit.q) == (0, 1, 1, 2)  # canonical |q| > 1


def test_classify_tuple_alternating():
    w = [Fraction(-1) ** j * (1 + j) for j in range(4)]
    fit = classify_tuple(*w)
    assert isinstance(fit, AlternatingTuple)
    assert (fit.alpha, fit.alpha_prime, fit.beta) == (0, 1, 1)


def test_classify_tuple_quadratic_extension():
    # w_j = q^j + q^{-j} with q = 2 + sqrt(3) is the integer sequence
    # 2, 4, 14, 52; s = 4 has no rational square root of s^2 - 4
    fit = classify_tuple(2, 4, 14, 52)
    assert isinstance(fit.q, QuadExtElem)
    assert fit.a == 0
    assert fit.b * fit.q + fit.c * invert(fit.q) == 4


def test_classify_tuple_hypothesis():
    with pytest.raises(IndeterminateTuple):
        classify_tuple(1, 5, 5, 2)


def test_classify_tuple_round_trip_random():
    rng = random.Random(8)
    for _ in range(40):
        a = random_fraction(rng)
        b = random_fraction(rng, nonzero=True)
        c = random_fraction(rng, nonzero=True)
        while True:
            q = random_fraction(rng, nonzero=True)
            if abs(q) != 1:
                break
        w = [a + b * q ** j + c * q ** -j for j in range(4)]
        if w[1] == w[2]:
            continue
        fit = classify_tuple(*w)
        assert isinstance(fit, GeometricTuple)
        assert ((fit.a, fit.b, fit.c, fit.q) == (a, b, c, q)
                or (fit.a, fit.b, fit.c, fit.q) == (a, c, b, 1 / q))


# -- window classification -------------------------------------------------------


def _assert_round_trip(fam, n, jmax=4):
    g = Grid(fam, n)
    w = Window.from_grid(g, jmax)
    assert w.first_degeneracy() is None, "test parameters are degenerate"
    result = classify_window(w)
    regen = Grid(result.family, n)
    for i in range(n + 1):
        for j in range(jmax + 1):
            assert regen.value(i, j) == w.value(i, j), (fam.tag, i, j)
    assert result.residual == "exact match"
    return result


def test_classify_window_families():
    r = _assert_round_trip(MacdonaldFamily(QQ, **SAMPLE_I), 1)
    fam = r.family
    # canonical representative has |q| > 1: (a, c, b, 1/q, 1/t)
    assert (fam.a, fam.b, fam.c, fam.q, fam.t) == (
        1, 3, 2, Fraction(3, 2), Fraction(7, 5))
    r = _assert_round_trip(QuadraticFamily(QQ, 1, 1, Fraction(5, 3), Fraction(1, 7)), 1)
    fam = r.family
    assert (fam.alpha, fam.beta, fam.beta_prime, fam.gamma) == (
        1, 1, Fraction(5, 3), Fraction(1, 7))
    r = _assert_round_trip(QuadraticFamily(QQ, 1, 1, Fraction(5, 3), 0), 2)
    fam = r.family
    assert (fam.alpha, fam.beta, fam.beta_prime, fam.gamma) == (1, 1, Fraction(5, 3), 0)
    for variant in "ac":
        r = _assert_round_trip(
            AlternatingFamily(QQ, variant, 1, 2, Fraction(1, 3), Fraction(5, 7)), 1)
        fam = r.family
        assert fam.variant == variant
        assert (fam.alpha, fam.alpha_prime, fam.beta, fam.beta_prime) == (
            1, 2, Fraction(1, 3), Fraction(5, 7))
    r = _assert_round_trip(SplitGeometricFamily(QQ, 0, 1, 1, 3), 1)
    fam = r.family
    assert (fam.alpha, fam.beta, fam.beta_prime, fam.q) == (0, 1, 1, 3)
    assert _assert_round_trip(E1Family(QQ, [Fraction(v) for v in (0, 1, 5, 7, 11)]),
                              1).family.tag == "E1"
    assert _assert_round_trip(E2Family(QQ, {k: Fraction(k * (k + 7))
                                            for k in range(-2, 6)}), 2).family.tag == "E2"
    assert _assert_round_trip(MacdonaldFamily(QQ, **SAMPLE_I), 2).family.tag == "I"


def test_classify_window_row_alternating_two_rows():
    orig = AlternatingFamily(QQ, "b", 1, 2, Fraction(1, 3), Fraction(5, 7))
    g = Grid(orig, 1)
    result = _assert_round_trip(orig, 1)
    assert result.family.variant == "b"
    combos = result.determined
    assert combos["alpha+alpha'"] == g.value(0, 0)   # alpha + alpha'
    assert combos["alpha-alpha'-beta'"] == g.value(1, 0)
    assert combos["beta"] == Fraction(1, 3)
    # any member of the fitted family realizes the same combinations
    fam = result.family
    assert fam.alpha + fam.alpha_prime == combos["alpha+alpha'"]
    assert fam.alpha - fam.alpha_prime - fam.beta_prime == combos["alpha-alpha'-beta'"]


def test_classify_window_row_alternating_three_rows():
    result = _assert_round_trip(
        AlternatingFamily(QQ, "b", 1, 2, Fraction(1, 3), Fraction(5, 7)), 2)
    fam = result.family
    assert (fam.alpha, fam.alpha_prime, fam.beta, fam.beta_prime) == (
        1, 2, Fraction(1, 3), Fraction(5, 7))


def test_classify_window_quadratic_extension():
    # rows of a + b q^j t^i + c q^{-j} t^{-i} with q = 2 + sqrt(3), t = -q^2:
    # row 0 is the integer sequence s_j, row 1 is -s_{j+2}
    seq = {0: Fraction(2), 1: Fraction(4)}

    def s(k):
        k = abs(k)
        while max(seq) < k:
            m = max(seq)
            seq[m + 1] = 4 * seq[m] - seq[m - 1]
        return seq[k]

    rows = [[s(j) for j in range(4)], [-s(j + 2) for j in range(4)]]
    w = Window.from_values(QQ, rows)
    result = classify_window(w)
    fam = result.family
    assert fam.tag == "I"
    assert isinstance(fam.q, QuadExtElem)
    regen = Grid(fam, 1)
    for i in range(2):
        for j in range(4):
            assert regen.value(i, j) == w.value(i, j)


def test_classify_window_rejections():
    iv = Grid(SplitGeometricFamily(QQ, 0, 1, 1, 3), 1)
    rows = [[iv.value(0, j) for j in range(5)],
            [iv.value(1, j) for j in range(5)],
            [Fraction(1000 + 7 * j) for j in range(5)]]
    with pytest.raises(NotPerfectWindow):
        classify_window(Window.from_values(QQ, rows))
    rows = [[Fraction(v) for v in (0, 1, 3, 9, 11)],
            [Fraction(v) for v in (17, 23, 5, 7, 29)]]
    with pytest.raises(NotPerfectWindow):
        classify_window(Window.from_values(QQ, rows))


def test_classification_serialization():
    g = Grid(MacdonaldFamily(QQ, **SAMPLE_I), 1)
    result = classify_window(Window.from_grid(g, 3))
    doc = result.to_json()
    assert doc["family"] == "I"
    assert doc["residual"] == "exact match"
    assert doc["params"]["q"] == "3/2"
