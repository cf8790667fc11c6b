"""Partitions, conjugation, containment, and reverse tableaux."""

import random

import pytest

from newtonsym import (
    MalformedTableau,
    ReverseTableau,
    cells,
    conjugate,
    contains,
    enumerate_partitions,
    enumerate_reverse_tableaux,
    format_partition,
    is_horizontal_strip,
    length,
    parse_partition,
    size,
    tableau_to_chain,
)
from oracles import brute_reverse_tableaux, naive_partitions


def test_size_and_length():
    assert size((3, 1)) == 4 and length((3, 1)) == 2
    assert size(()) == 0 and length(()) == 0
    assert size((2, 2, 2)) == 6 and length((2, 2, 2)) == 3


def test_conjugate_examples():
    assert conjugate((3,)) == (1, 1, 1)
    assert conjugate((3, 1)) == (2, 1, 1)


def test_conjugate_involution_random():
    rng = random.Random(5)
    for _ in range(50):
        lam = tuple(sorted((rng.randint(0, 6) for _ in range(4)), reverse=True))
        lam = tuple(p for p in lam if p)
        assert conjugate(conjugate(lam)) == lam
        assert size(conjugate(lam)) == size(lam)


def test_contains_examples():
    assert contains((1,), (2, 1))
    assert not contains((2,), (1, 1))


def test_contains_matches_cell_sets():
    rng = random.Random(6)
    for _ in range(60):
        mu = tuple(p for p in sorted((rng.randint(0, 4) for _ in range(3)),
                                     reverse=True) if p)
        lam = tuple(p for p in sorted((rng.randint(0, 4) for _ in range(3)),
                                      reverse=True) if p)
        by_cells = set(cells(mu)) <= set(cells(lam))
        assert contains(mu, lam) == by_cells
        # conjugation preserves containment
        assert contains(mu, lam) == contains(conjugate(mu), conjugate(lam))


def test_enumerate_partitions_examples():
    assert enumerate_partitions(1, 2) == [(), (1,)]
    assert enumerate_partitions(2, 2) == [(), (1,), (2,), (1, 1)]
    got = enumerate_partitions(3, 2)
    assert got == [(), (1,), (2,), (1, 1), (3,), (2, 1)]
    assert len(got) == 6


def test_enumerate_partitions_matches_naive():
    for d in range(9):
        for m in range(6):
            got = enumerate_partitions(d, m)
            assert len(got) == len(set(got))
            assert set(got) == naive_partitions(d, m)
            sizes = [size(p) for p in got]
            assert sizes == sorted(sizes)


def test_reverse_tableaux_examples():
    ts = enumerate_reverse_tableaux((1, 1), 1)
    assert len(ts) == 1
    assert ts[0].rows == ((1,), (0,))
    assert len(enumerate_reverse_tableaux((1,), 1)) == 2
    ts = enumerate_reverse_tableaux((2,), 1)
    assert sorted(t.rows for t in ts) == [((0, 0),), ((1, 0),), ((1, 1),)]


def test_reverse_tableaux_order_is_lexicographic():
    for mu in ((2, 1), (3,), (2, 2)):
        ts = enumerate_reverse_tableaux(mu, 2)
        vecs = [tuple(v for _, _, v in t.entries()) for t in ts]
        assert vecs == sorted(vecs)


def test_reverse_tableaux_match_brute_force():
    for mu in ((1,), (2,), (1, 1), (2, 1), (3, 2), (2, 2, 1), (3, 2, 1)):
        for n in range(4):
            fast = {t.rows for t in enumerate_reverse_tableaux(mu, n)}
            brute = set(brute_reverse_tableaux(mu, n))
            assert fast == brute, (mu, n)


def test_tableau_validation():
    with pytest.raises(MalformedTableau):
        ReverseTableau((2,), [[0, 1]])  # row increases
    with pytest.raises(MalformedTableau):
        ReverseTableau((1, 1), [[0], [0]])  # column not strictly decreasing
    with pytest.raises(MalformedTableau):
        ReverseTableau((2, 1), [[1, 1]])  # wrong shape


def test_tableau_to_chain_examples():
    t = enumerate_reverse_tableaux((1, 1), 1)[0]
    assert tableau_to_chain(t, 1) == [(1, 1), (1,), ()]
    t = ReverseTableau((2,), [[1, 1]])
    assert tableau_to_chain(t, 1) == [(2,), (2,), ()]


def test_tableau_chains_are_horizontal_strips():
    for mu in ((2, 1), (3, 1), (2, 2)):
        for t in enumerate_reverse_tableaux(mu, 2):
            chain = tableau_to_chain(t, 2)
            assert chain[0] == mu and chain[-1] == ()
            for above, below in zip(chain, chain[1:]):
                assert is_horizontal_strip(above, below)


def test_partition_text_round_trip():
    assert parse_partition("[3,1]") == (3, 1)
    assert parse_partition("[]") == ()
    assert format_partition((3, 1)) == "[3,1]"
    assert format_partition(()) == "[]"
    with pytest.raises(Exception):
        parse_partition("[1,2]")  # not weakly decreasing
