"""Equitable refinement of vertex labels.

A labelled digraph is equitable when any two same-labelled vertices have,
for every (neighbour-label, arc-label) pair, the same number of
out-neighbours and the same number of in-neighbours realising that pair.

Refinement runs in synchronous rounds.  Each round gives every vertex the
invented label

    Tuple(old label,
          Multiset of Tuple(out-neighbour label, arc label),
          Multiset of Tuple(in-neighbour label, arc label))

compressed through ``labels.fingerprint``.  Because the invented label is
a pure function of structure (never a sequential id), two digraphs refined
independently end up with comparable labels: equal histories give equal
labels, and the total order on terms is the same everywhere.  Rounds can
only split cells (the old label is part of the new one), so at most n
rounds run; the returned labelling is the one from the first round that
produced no new split, which also encodes how equitability is satisfied.
"""

from __future__ import annotations

from collections import Counter

from . import labels as lt
from .digraphs import Digraph


class Equitable:
    """Result of refinement: cells sorted by label, labels strictly increasing."""

    __slots__ = ("pairs", "cell_index")

    def __init__(self, pairs):
        self.pairs = tuple(pairs)
        index = {}
        for i, (_, cell) in enumerate(self.pairs):
            for v in cell:
                index[v] = i
        self.cell_index = tuple(index[v] for v in range(len(index)))

    @property
    def labels(self):
        return tuple(l for l, _ in self.pairs)

    @property
    def cells(self):
        return tuple(cell for _, cell in self.pairs)

    def singletons(self):
        """Points in singleton cells, in cell (label) order."""
        return tuple(cell[0] for _, cell in self.pairs if len(cell) == 1)

    def is_discrete(self):
        return all(len(cell) == 1 for _, cell in self.pairs)


def equitable_partition(dg: Digraph) -> Equitable:
    if dg._equitable is not None:
        return dg._equitable
    n = dg.n
    labels = [lt.fingerprint(l) for l in dg.vlabels]
    out_adj = [[] for _ in range(n)]
    in_adj = [[] for _ in range(n)]
    for (a, b), l in dg.arcs.items():
        fl = lt.fingerprint(l)
        out_adj[a].append((b, fl))
        in_adj[b].append((a, fl))
    ncells = len(set(labels))
    for _ in range(n + 1):
        new = []
        for v in range(n):
            sig = lt.tup(
                (
                    labels[v],
                    lt.mset(lt.tup((labels[w], al)) for w, al in out_adj[v]),
                    lt.mset(lt.tup((labels[w], al)) for w, al in in_adj[v]),
                )
            )
            new.append(lt.fingerprint(sig))
        k = len(set(new))
        labels = new
        if k == ncells:
            break
        ncells = k
    groups: dict = {}
    for v, l in enumerate(labels):
        groups.setdefault(l, []).append(v)
    result = Equitable(sorted((l, tuple(cell)) for l, cell in groups.items()))
    dg._equitable = result
    return result


def is_equitable(dg: Digraph) -> bool:
    """Direct check against the definition (used as an independent test)."""
    n = dg.n
    out_stats = [Counter() for _ in range(n)]
    in_stats = [Counter() for _ in range(n)]
    for (a, b), l in dg.arcs.items():
        out_stats[a][(dg.vlabels[b], l)] += 1
        in_stats[b][(dg.vlabels[a], l)] += 1
    by_label: dict = {}
    for v in range(n):
        by_label.setdefault(dg.vlabels[v], []).append(v)
    for cell in by_label.values():
        first = cell[0]
        for v in cell[1:]:
            if out_stats[v] != out_stats[first] or in_stats[v] != in_stats[first]:
                return False
    return True
