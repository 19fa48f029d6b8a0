"""Seeded random generators for digraphs, stacks, and constraints.

Used by the property tests and by ``verify_refiner_law``.  Everything
draws from a SplitMix64 stream so failures replay exactly.
"""

from __future__ import annotations

from . import labels as lt
from .digraphs import Digraph, Stack
from .perms import Perm
from .prng import SplitMix64

_VLABELS = [lt.base(0), lt.base(1), lt.base("a")]
_ALABELS = [lt.base(0), lt.base(1)]


def random_perm(rng: SplitMix64, degree: int) -> Perm:
    return Perm(rng.perm_images(degree))


def random_digraph(rng: SplitMix64, degree: int, arc_prob_pct: int = 30) -> Digraph:
    vlabels = [_VLABELS[rng.randbelow(len(_VLABELS))] for _ in range(degree)]
    arcs = {}
    for a in range(degree):
        for b in range(degree):
            if rng.randbelow(100) < arc_prob_pct:
                arcs[(a, b)] = _ALABELS[rng.randbelow(len(_ALABELS))]
    return Digraph(degree, vlabels, arcs)


def random_stack(rng: SplitMix64, degree: int, max_entries: int = 3) -> Stack:
    k = 1 + rng.randbelow(max_entries)
    return Stack(degree, [random_digraph(rng, degree) for _ in range(k)])


def random_subset(rng: SplitMix64, degree: int, allow_empty: bool = False) -> frozenset:
    lo = 0 if allow_empty else 1
    k = lo + rng.randbelow(degree - lo + 1)
    return frozenset(rng.sample(range(degree), k))


def random_set_partition(rng: SplitMix64, degree: int) -> list:
    """Partition of {0..degree-1} into 1..degree nonempty blocks."""
    nblocks = 1 + rng.randbelow(degree)
    blocks = [[] for _ in range(nblocks)]
    pts = list(range(degree))
    rng.shuffle(pts)
    for i in range(nblocks):
        blocks[i].append(pts[i])
    for p in pts[nblocks:]:
        blocks[rng.randbelow(nblocks)].append(p)
    return [frozenset(b) for b in blocks]
