"""Permutation arithmetic, cycle notation, and the 1-based JSON boundary."""

import pytest

from permsearch import Perm, format_cycles, parse_cycles, perm_from_images_1based, perm_to_images_1based
from permsearch.perms import perm_from_json
from permsearch.prng import SplitMix64
from permsearch.randgen import random_perm


def test_identity_and_call():
    e = Perm.identity(4)
    assert e.images == (0, 1, 2, 3)
    assert e.is_identity()
    assert [e(i) for i in range(4)] == [0, 1, 2, 3]


def test_rejects_non_permutations():
    for bad in [(0, 0), (1, 2), (0, 1, "2"), (0, -1)]:
        with pytest.raises(ValueError):
            Perm(bad)


def test_composition_applies_left_factor_first():
    # i ** (p * q) == (i ** p) ** q
    p = parse_cycles("(1 2 3)", 4)
    q = parse_cycles("(1 2)", 4)
    pq = p * q
    for i in range(4):
        assert pq(i) == q(p(i))
    assert pq == parse_cycles("(2 3)", 4)


def test_degree_mismatch_raises():
    with pytest.raises(ValueError):
        Perm((1, 0)) * Perm((0, 1, 2))


def test_inverse_and_conjugation():
    rng = SplitMix64(11)
    for _ in range(100):
        p = random_perm(rng, 7)
        q = random_perm(rng, 7)
        assert p * p.inv() == Perm.identity(7)
        assert (p * q).inv() == q.inv() * p.inv()
        # conjugation is a right action: (p^q)^r == p^(qr)
        r = random_perm(rng, 7)
        assert p.conj(q).conj(r) == p.conj(q * r)
        assert p.conj(q) == q.inv() * p * q


def test_on_tuple_and_on_set():
    p = parse_cycles("(1 2 3)", 5)
    assert p.on_tuple((0, 1)) == (1, 2)
    assert p.on_set({0, 4}) == frozenset({1, 4})


def test_moved_points_and_cycles():
    p = parse_cycles("(2 4)(3 5 6)", 6)
    assert p.moved_points() == [1, 2, 3, 4, 5]
    assert p.cycles() == [(1, 3), (2, 4, 5)]
    assert Perm.identity(3).cycles() == []


def test_cycles_normalised_same_for_equal_perms():
    p = parse_cycles("(5 6 3)", 6)
    q = parse_cycles("(3 5 6)", 6)
    assert p == q
    assert p.cycles() == q.cycles()


def test_format_parse_roundtrip():
    rng = SplitMix64(23)
    for _ in range(200):
        p = random_perm(rng, 8)
        assert parse_cycles(format_cycles(p), 8) == p
    assert format_cycles(Perm.identity(5)) == "()"
    assert parse_cycles("()", 5) == Perm.identity(5)


def test_parse_rejects_bad_text():
    with pytest.raises(ValueError):
        parse_cycles("(1 2", 4)
    with pytest.raises(ValueError):
        parse_cycles("(1 2)(2 3)", 4)  # repeated point
    with pytest.raises(ValueError):
        parse_cycles("(1 9)", 4)  # out of range
    with pytest.raises(ValueError):
        parse_cycles("(0 1)", 4)  # points are 1-based


def test_one_based_image_helpers():
    p = parse_cycles("(1 3 2)", 3)
    imgs = perm_to_images_1based(p)
    assert imgs == [3, 1, 2]
    assert perm_from_images_1based(imgs) == p
    assert perm_from_images_1based([2, 1], degree=2) == parse_cycles("(1 2)", 2)
    with pytest.raises(ValueError):
        perm_from_images_1based([1, 2], degree=3)


def test_perm_from_json_accepts_both_shapes():
    assert perm_from_json("(1 2)", 4) == parse_cycles("(1 2)", 4)
    assert perm_from_json([2, 1, 3, 4], 4) == parse_cycles("(1 2)", 4)


def test_ordering_and_hash():
    ps = [Perm((1, 0, 2)), Perm((0, 1, 2)), Perm((2, 1, 0))]
    assert sorted(ps)[0] == Perm((0, 1, 2))
    assert len({Perm((0, 1)), Perm((0, 1)), Perm((1, 0))}) == 2
