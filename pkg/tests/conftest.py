"""Shared fixtures: the two worked examples used across several test modules.

Everything here is written against the 0-based internal API; the comments
give the 1-based points used in docstrings and JSON.
"""

from __future__ import annotations

import pytest

from permsearch import Digraph, Stack, labels as lt, orbital_graph, parse_cycles

WHITE = lt.base(0)
BLACK = lt.base(1)
SOLID = lt.base("solid")
DASHED = lt.base("dashed")


def sym_arcs(pairs, label):
    """Both directions of each 1-based pair, with a shared arc label."""
    out = {}
    for a, b in pairs:
        out[(a - 1, b - 1)] = label
        out[(b - 1, a - 1)] = label
    return out


def running_stack() -> Stack:
    """A three-entry stack on 6 points with automorphism group
    {(), (1 2)(3 4)(5 6)}.

    Entry 1 is the orbital graph of <(1 2)(3 4)(5 6), (2 4 6)> with base
    pair (1, 3); entry 2 marks {1, 2}; entry 3 has black vertices {5, 6},
    dashed arcs from them into {1, 2} and solid arcs inside {3, 4, 5, 6}.
    """
    gens = [parse_cycles("(1 2)(3 4)(5 6)", 6), parse_cycles("(2 4 6)", 6)]
    first = orbital_graph(gens, 6, 0, 2, label=SOLID)

    second = Digraph(6, vlabels=[BLACK, BLACK, WHITE, WHITE, WHITE, WHITE], arcs={})

    third_arcs = {}
    for a, b in [(5, 1), (6, 1), (5, 2), (6, 2)]:
        third_arcs[(a - 1, b - 1)] = DASHED
    for a, b in [(3, 5), (4, 6), (3, 4), (4, 3)]:
        third_arcs[(a - 1, b - 1)] = SOLID
    third = Digraph(6, vlabels=[WHITE, WHITE, WHITE, WHITE, BLACK, BLACK], arcs=third_arcs)

    return Stack(6, [first, second, third])


def comparison_stacks():
    """The stack pair whose isomorphisms the three approximators bracket
    as 720 (weak), 48 (strong) and 4 (exact).

    S = [6-cycle as solid symmetric arcs, perfect matching 1-2/3-6/4-5 dashed];
    T = the same shapes written on a different cycle.
    """
    g1 = Digraph(6, arcs=sym_arcs([(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)], SOLID))
    g2 = Digraph(6, arcs=sym_arcs([(1, 2), (3, 6), (4, 5)], DASHED))
    d1 = Digraph(6, arcs=sym_arcs([(6, 4), (4, 5), (5, 3), (3, 2), (2, 1), (1, 6)], SOLID))
    d2 = Digraph(6, arcs=sym_arcs([(6, 4), (5, 1), (3, 2)], DASHED))
    return Stack(6, [g1, g2]), Stack(6, [d1, d2])


@pytest.fixture
def stack_s() -> Stack:
    return running_stack()


@pytest.fixture
def approx_pair():
    return comparison_stacks()
