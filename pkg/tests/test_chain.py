"""Schreier-Sims chains: orders, membership, transporters, stabilizers."""

import math

import pytest

from permsearch import Perm, StabChain, orbit_of, orbits, parse_cycles, pointwise_stabilizer, tuple_transporter
from permsearch.chain import EnumerationCapExceeded, partition_stabilizer_chain, transport_along
from permsearch.groups import alternating_gens, cyclic_gens, dihedral_gens, grid_gens, symmetric_gens, wreath_gens
from permsearch.prng import SplitMix64
from permsearch.randgen import random_perm


def test_orders_of_standard_groups():
    assert StabChain.build(symmetric_gens(6), 6).order() == 720
    assert StabChain.build(alternating_gens(6), 6).order() == 360
    assert StabChain.build(cyclic_gens(7), 7).order() == 7
    assert StabChain.build(dihedral_gens(5), 5).order() == 10
    assert StabChain.build([], 4).order() == 1


def test_order_of_product_style_groups():
    assert StabChain.build(grid_gens(3), 9).order() == 36  # (3!)^2
    assert StabChain.build(grid_gens(4), 16).order() == 576
    assert StabChain.build(wreath_gens(2, 3), 6).order() == 48  # 2^3 * 3!
    assert StabChain.build(wreath_gens(3, 2), 6).order() == 72  # 6^2 * 2


def test_contains_and_sift():
    chain = StabChain.build(alternating_gens(5), 5)
    assert chain.contains(parse_cycles("(1 2 3)", 5))
    assert not chain.contains(parse_cycles("(1 2)", 5))
    assert chain.sift(parse_cycles("(1 2 3)", 5)).is_identity()
    assert not chain.sift(parse_cycles("(1 2)", 5)).is_identity()


def test_membership_closed_under_products():
    rng = SplitMix64(17)
    chain = StabChain.build(dihedral_gens(6), 6)
    elems = chain.elements()
    assert len(elems) == 12
    for _ in range(50):
        a = rng.choice(elems)
        b = rng.choice(elems)
        assert chain.contains(a * b)
        assert chain.contains(a.inv())


def test_elements_unique_and_complete():
    chain = StabChain.build(symmetric_gens(4), 4)
    elems = chain.elements()
    assert len(elems) == 24
    assert len(set(elems)) == 24
    assert Perm.identity(4) in elems


def test_elements_cap():
    chain = StabChain.build(symmetric_gens(6), 6)
    with pytest.raises(EnumerationCapExceeded):
        chain.elements(cap=100)


def test_base_points_prefix_respected():
    chain = StabChain.build(symmetric_gens(5), 5, base=(2, 4))
    bp = chain.base_points()
    assert bp[0] == 2 and bp[1] == 4
    assert chain.order() == 120


def test_strong_generators_generate():
    chain = StabChain.build(dihedral_gens(7), 7)
    again = StabChain.build(chain.strong_generators(), 7)
    assert again.order() == chain.order()


def test_random_element_is_member_and_deterministic():
    chain = StabChain.build(wreath_gens(2, 3), 6)
    a = SplitMix64(5)
    b = SplitMix64(5)
    for _ in range(40):
        g = chain.random_element(a.randbelow)
        assert chain.contains(g)
        assert g == chain.random_element(b.randbelow)


def test_orbits_and_orbit_of():
    gens = [parse_cycles("(1 2)", 6), parse_cycles("(3 4 5)", 6)]
    assert orbits(gens, 6) == [[0, 1], [2, 3, 4], [5]]
    assert orbit_of(gens, 3) == [2, 3, 4]
    assert orbits([], 3) == [[0], [1], [2]]


def test_pointwise_stabilizer():
    # fixing 1 and 2 leaves exactly the factors acting on {3,..,6}
    gens = [
        parse_cycles("(1 2)", 6),
        parse_cycles("(3 4)", 6),
        parse_cycles("(5 6)", 6),
        parse_cycles("(1 3 5)(2 4 6)", 6),
    ]
    chain = StabChain.build(gens, 6)
    assert chain.order() == 24
    stab = pointwise_stabilizer(chain, [0, 1])
    assert stab.order() == 4
    assert stab.contains(parse_cycles("(3 4)", 6))
    assert stab.contains(parse_cycles("(5 6)", 6))
    for g in stab.elements():
        assert g(0) == 0 and g(1) == 1


def test_pointwise_stabilizer_whole_base():
    chain = StabChain.build(symmetric_gens(4), 4)
    stab = pointwise_stabilizer(chain, [0, 1, 2])
    assert stab.order() == 1


def test_tuple_transporter_finds_and_rejects():
    chain = StabChain.build(alternating_gens(6), 6)
    g = tuple_transporter(chain, (0, 1), (2, 3))
    assert g is not None
    assert g(0) == 2 and g(1) == 3
    assert chain.contains(g)
    # intransitive group: no element moves 0 into the other orbit
    ch2 = StabChain.build([parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)], 4)
    assert tuple_transporter(ch2, (0,), (2,)) is None


def test_tuple_transporter_random_pairs():
    rng = SplitMix64(31)
    chain = StabChain.build(symmetric_gens(7), 7)
    for _ in range(60):
        g = random_perm(rng, 7)
        src = tuple(rng.sample(range(7), 3))
        dst = g.on_tuple(src)
        h = tuple_transporter(chain, src, dst)
        assert h is not None and h.on_tuple(src) == dst


def test_transport_along_agrees_with_tuple_transporter():
    gens = wreath_gens(2, 4)
    chain = StabChain.build(gens, 8)
    rng = SplitMix64(13)
    for _ in range(40):
        g = chain.random_element(rng.randbelow)
        src = tuple(rng.sample(range(8), 3))
        dst = g.on_tuple(src)
        rebuilt = StabChain.build(chain.strong_generators(), 8, base=src)
        h = transport_along(rebuilt, src, dst)
        assert h is not None and h.on_tuple(src) == dst and chain.contains(h)


def test_partition_stabilizer_chain():
    cells = [[0, 1, 2], [3, 4]]
    chain = partition_stabilizer_chain(cells, 5)
    assert chain.order() == math.factorial(3) * math.factorial(2)
    assert chain.contains(parse_cycles("(1 2 3)", 5))
    assert chain.contains(parse_cycles("(4 5)", 5))
    assert not chain.contains(parse_cycles("(3 4)", 5))


def test_partition_stabilizer_chain_singletons():
    chain = partition_stabilizer_chain([[0], [1], [2]], 3)
    assert chain.order() == 1
