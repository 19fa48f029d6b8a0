"""Canonical forms and automorphism groups of labelled digraphs.

Individualisation-refinement: refine the vertex labelling to equitable;
if it is not discrete, pick the first smallest non-singleton cell and
branch on each of its vertices, giving the chosen vertex a reserved marker
label.  Every discrete leaf yields a relabelling permutation; the leaf
certificate is the fully relabelled digraph, the canonical form is the
minimum certificate, and two leaves with equal certificates differ by an
automorphism, which is harvested and used to prune sibling branches.

Sibling pruning uses orbits under the harvested automorphisms that fix the
individualised prefix pointwise (a sound under-approximation of the true
prefix stabiliser; automorphisms found from leaves below the current node
do fix its prefix, so the pruning bites exactly where the tree is bushy).

Arcless digraphs bypass the search: they are exactly their vertex-label
partitions, so the canonical form sorts the cells and the automorphism
group is the direct product of symmetric groups on them.

This is a desk-scale tool: the degree cap (default 64) is a guard, not a
promise of speed near the cap.
"""

from __future__ import annotations

from collections import deque

from . import labels as lt
from .chain import StabChain, partition_stabilizer_chain
from .digraphs import Digraph
from .equitable import equitable_partition
from .perms import Perm


class DegreeCapExceeded(Exception):
    pass


class CanonResult:
    __slots__ = ("perm", "form", "aut")

    def __init__(self, perm: Perm, form: Digraph, aut: StabChain):
        self.perm = perm
        self.form = form
        self.aut = aut


_memo: dict = {}
_MEMO_CAP = 4096


def canonical_form(dg: Digraph, cap: int = 64) -> CanonResult:
    """Canonical relabelling, canonical form, and automorphism group.

    ``dg.apply(result.perm) == result.form``, and two digraphs have equal
    forms exactly when some permutation maps one to the other.
    """
    if dg._canon is not None:
        return dg._canon
    if dg.n > cap:
        raise DegreeCapExceeded(
            "degree %d exceeds the canonical-form cap %d; "
            "the strong approximator avoids canonical forms" % (dg.n, cap)
        )
    key = dg.key()
    cached = _memo.get(key)
    if cached is not None:
        dg._canon = cached
        return cached
    result = _arcless(dg) if not dg.arcs else _search(dg)
    if len(_memo) >= _MEMO_CAP:
        _memo.clear()
    _memo[key] = result
    dg._canon = result
    return result


def automorphism_group(dg: Digraph, cap: int = 64) -> StabChain:
    return canonical_form(dg, cap).aut


def _arcless(dg: Digraph) -> CanonResult:
    # an arcless digraph is just its vertex-label partition: sort the cells
    order = sorted(range(dg.n), key=lambda v: (dg.vlabels[v], v))
    images = [0] * dg.n
    for pos, v in enumerate(order):
        images[v] = pos
    g = Perm(images)
    cells: dict = {}
    for v in range(dg.n):
        cells.setdefault(dg.vlabels[v], []).append(v)
    chain = partition_stabilizer_chain([cells[l] for l in sorted(cells)], dg.n)
    return CanonResult(g, dg.apply(g), chain)


def _orbit_union(gens, seeds, n) -> set:
    reach = set(seeds)
    queue = deque(reach)
    while queue:
        p = queue.popleft()
        for g in gens:
            q = g(p)
            if q not in reach:
                reach.add(q)
                queue.append(q)
    return reach


def _search(dg: Digraph) -> CanonResult:
    n = dg.n
    aut_gens: list = []
    aut_chain = StabChain.build([], n)
    best: list = [None, None]  # cert key, perm
    first_of_cert: dict = {}

    def note_aut(a: Perm):
        if not a.is_identity() and not aut_chain.contains(a):
            aut_gens.append(a)
            aut_chain.add_generator(a)

    def rec(vlabels, iseq, depth):
        part = equitable_partition(dg.relabelled(vlabels))
        if part.is_discrete():
            images = [0] * n
            for pos, (_, cell) in enumerate(part.pairs):
                images[cell[0]] = pos
            g = Perm(images)
            ck = dg.apply(g).key()
            prev = first_of_cert.get(ck)
            if prev is None:
                first_of_cert[ck] = g
                if best[0] is None or ck < best[0]:
                    best[0], best[1] = ck, g
            else:
                note_aut(g * prev.inv())
            return
        sizes = [len(cell) for _, cell in part.pairs if len(cell) > 1]
        target_size = min(sizes)
        cell = next(c for _, c in part.pairs if len(c) == target_size)
        new_labels = [part.pairs[part.cell_index[v]][0] for v in range(n)]
        explored: list = []
        for v in cell:
            if explored:
                fixing = [a for a in aut_gens if all(a(p) == p for p in iseq)]
                if v in _orbit_union(fixing, explored, n):
                    continue
            child = list(new_labels)
            child[v] = lt.tup((lt.reserved("ind", depth), new_labels[v]))
            rec(tuple(child), iseq + (v,), depth + 1)
            explored.append(v)

    rec(dg.vlabels, (), 0)
    g0 = best[1]
    return CanonResult(g0, dg.apply(g0), aut_chain)
