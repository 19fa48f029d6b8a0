"""Isomorphism approximators for digraph stacks.

An approximator over-estimates the set of permutations mapping stack S to
stack T: it returns either the empty set or a right coset (group)·rep with
the guarantees that every actual isomorphism is included, stacks of
different lengths give the empty set, and the group part equals the
approximation of (S, S).

Three precisions are provided:

* weak: per-entry equitable refinement; a vertex is described by its
  vector of per-entry cell indices, and the group part is the stabiliser
  of the ordered partition of vertices by that vector.
* strong: equitable refinement of the flattened stack; sees correlations
  between entries that the weak form misses.
* full: exact, via canonical forms of the flattened stacks (degree-capped).

``fixed_points`` lists, in a stable order, points every permutation in the
approximation (for T = S) must fix; refiners key their state off it.
"""

from __future__ import annotations

from math import factorial

from .canon import canonical_form
from .chain import StabChain, orbit_of, orbits, partition_stabilizer_chain
from .digraphs import Stack
from .equitable import equitable_partition
from .perms import Perm

WEAK = "weak"
STRONG = "strong"
FULL = "full"
KINDS = (WEAK, STRONG, FULL)


class PartitionGroup:
    """Stabiliser of an ordered partition, kept in direct form.

    Orbits are the cells, the order is a product of factorials, and
    membership is an O(n) cell-preservation check; the actual stabiliser
    chain is written down directly (no Schreier-Sims) only on demand.
    """

    __slots__ = ("degree", "cells", "_index", "_chain")

    def __init__(self, degree: int, cells):
        self.degree = degree
        self.cells = tuple(tuple(c) for c in cells)
        self._index = None
        self._chain = None

    def _cell_index(self):
        if self._index is None:
            index = [0] * self.degree
            for i, cell in enumerate(self.cells):
                for v in cell:
                    index[v] = i
            self._index = index
        return self._index

    def order(self) -> int:
        n = 1
        for cell in self.cells:
            n *= factorial(len(cell))
        return n

    def orbits(self):
        return [list(cell) for cell in self.cells]

    def orbit_of(self, point: int):
        return list(self.cells[self._cell_index()[point]])

    def contains(self, g: Perm) -> bool:
        if g.degree != self.degree:
            return False
        index = self._cell_index()
        return all(index[g(v)] == index[v] for v in range(self.degree))

    def chain(self) -> StabChain:
        if self._chain is None:
            self._chain = partition_stabilizer_chain(self.cells, self.degree)
        return self._chain


class ChainGroup:
    __slots__ = ("stab",)

    def __init__(self, stab: StabChain):
        self.stab = stab

    @property
    def degree(self):
        return self.stab.degree

    def order(self) -> int:
        return self.stab.order()

    def orbits(self):
        return orbits(self.stab.generators, self.stab.degree)

    def orbit_of(self, point: int):
        return orbit_of(self.stab.generators, point)

    def contains(self, g: Perm) -> bool:
        return self.stab.contains(g)

    def chain(self) -> StabChain:
        return self.stab


class CosetApprox:
    """Either empty, or the right coset (group part)·rep."""

    __slots__ = ("group", "rep")

    def __init__(self, group, rep):
        self.group = group
        self.rep = rep

    @classmethod
    def empty(cls):
        return _EMPTY

    @property
    def is_empty(self) -> bool:
        return self.group is None

    @property
    def cardinality(self) -> int:
        return 0 if self.group is None else self.group.order()

    def contains(self, g: Perm) -> bool:
        if self.group is None:
            return False
        return self.group.contains(g * self.rep.inv())

    def elements(self, cap: int = 10**6):
        if self.group is None:
            return []
        return [h * self.rep for h in self.group.chain().elements(cap)]


_EMPTY = CosetApprox(None, None)


def _weak_cells(S: Stack):
    """Ordered partition of the points by per-entry cell-index vector."""
    parts = [equitable_partition(dg) for dg in S.entries]
    vectors = [
        tuple(p.cell_index[v] for p in parts) for v in range(S.degree)
    ]
    groups: dict = {}
    for v, vec in enumerate(vectors):
        groups.setdefault(vec, []).append(v)
    ordered = sorted(groups.items())
    return parts, [(vec, tuple(cell)) for vec, cell in ordered]


def _weak(S: Stack, T: Stack) -> CosetApprox:
    if len(S) != len(T):
        return _EMPTY
    partsS, cellsS = _weak_cells(S)
    partsT, cellsT = _weak_cells(T)
    for pS, pT in zip(partsS, partsT):
        if pS.labels != pT.labels:
            return _EMPTY
    if len(cellsS) != len(cellsT):
        return _EMPTY
    images = [0] * S.degree
    for (vecS, cS), (vecT, cT) in zip(cellsS, cellsT):
        if vecS != vecT or len(cS) != len(cT):
            return _EMPTY
        for a, b in zip(cS, cT):
            images[a] = b
    group = PartitionGroup(S.degree, [cell for _, cell in cellsS])
    return CosetApprox(group, Perm(images))


def _strong(S: Stack, T: Stack) -> CosetApprox:
    if len(S) != len(T):
        return _EMPTY
    pS = equitable_partition(S.flatten())
    pT = equitable_partition(T.flatten())
    if pS.labels != pT.labels:
        return _EMPTY
    images = [0] * S.degree
    for (_, cS), (_, cT) in zip(pS.pairs, pT.pairs):
        if len(cS) != len(cT):
            return _EMPTY
        for a, b in zip(cS, cT):
            images[a] = b
    group = PartitionGroup(S.degree, pS.cells)
    return CosetApprox(group, Perm(images))


def _full(S: Stack, T: Stack, cap: int) -> CosetApprox:
    if len(S) != len(T):
        return _EMPTY
    cS = canonical_form(S.flatten(), cap)
    cT = canonical_form(T.flatten(), cap)
    if cS.form != cT.form:
        return _EMPTY
    return CosetApprox(ChainGroup(cS.aut), cS.perm * cT.perm.inv())


def approximate_iso(kind: str, S: Stack, T: Stack, cap: int = 64) -> CosetApprox:
    if kind == WEAK:
        return _weak(S, T)
    if kind == STRONG:
        return _strong(S, T)
    if kind == FULL:
        return _full(S, T, cap)
    raise ValueError("unknown approximator kind %r" % (kind,))


def fixed_points(kind: str, S: Stack, cap: int = 64) -> tuple:
    """Points fixed by the whole (S, S) approximation, in a stable order.

    The order is part of the contract: it is equivariant, i.e. relabelling
    the stack by g permutes the returned list entrywise by g.
    """
    if kind == WEAK:
        _, cells = _weak_cells(S)
        return tuple(cell[0] for _, cell in cells if len(cell) == 1)
    if kind == STRONG:
        return equitable_partition(S.flatten()).singletons()
    if kind == FULL:
        c = canonical_form(S.flatten(), cap)
        fixed = [orb[0] for orb in orbits(c.aut.generators, S.degree) if len(orb) == 1]
        return tuple(sorted(fixed, key=c.perm))
    raise ValueError("unknown approximator kind %r" % (kind,))


class Approximator:
    """A kind plus its cap, as one object the search engine can pass around."""

    def __init__(self, kind: str, cap: int = 64):
        if kind not in KINDS:
            raise ValueError("unknown approximator kind %r" % (kind,))
        self.kind = kind
        self.cap = cap

    def iso(self, S: Stack, T: Stack) -> CosetApprox:
        return approximate_iso(self.kind, S, T, self.cap)

    def fixed(self, S: Stack) -> tuple:
        return fixed_points(self.kind, S, self.cap)
