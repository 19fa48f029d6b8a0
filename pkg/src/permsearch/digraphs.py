"""Labelled digraphs and stacks of them.

A digraph here has at most one arc per ordered vertex pair (loops allowed),
a label term on every vertex and every arc.  A permutation g acts by
moving vertices and arcs and carrying labels along:
``label_new(v^g) = label_old(v)``.

A stack is a finite sequence of digraphs on the same vertex set; it acts
entrywise.  ``flatten`` merges a stack into a single digraph that carries
the same isomorphism information: vertex labels become tuples of the
entry labels, arc labels become tuples with a Gap in position i when entry
i has no such arc.
"""

from __future__ import annotations

from collections import deque

from . import labels as lt
from .perms import Perm


class Digraph:
    __slots__ = ("n", "vlabels", "arcs", "_key", "_equitable", "_canon")

    def __init__(self, n: int, vlabels=None, arcs=None, validate: bool = True):
        self.n = n
        if vlabels is None:
            white = lt.base(0)
            vlabels = (white,) * n
        else:
            vlabels = tuple(vlabels)
        self.vlabels = vlabels
        self.arcs = dict(arcs) if arcs else {}
        if validate:
            if len(vlabels) != n:
                raise ValueError("expected %d vertex labels" % n)
            for l in vlabels:
                if not lt.is_term(l):
                    raise ValueError("bad vertex label %r" % (l,))
            for (a, b), l in self.arcs.items():
                if not (0 <= a < n and 0 <= b < n):
                    raise ValueError("arc (%d,%d) out of range" % (a, b))
                if not lt.is_term(l):
                    raise ValueError("bad arc label %r" % (l,))
        self._key = None
        self._equitable = None
        self._canon = None

    @classmethod
    def _raw(cls, n, vlabels, arcs) -> "Digraph":
        dg = cls.__new__(cls)
        dg.n = n
        dg.vlabels = vlabels
        dg.arcs = arcs
        dg._key = None
        dg._equitable = None
        dg._canon = None
        return dg

    def key(self):
        if self._key is None:
            self._key = (self.n, self.vlabels, tuple(sorted(self.arcs.items())))
        return self._key

    def __eq__(self, other):
        return isinstance(other, Digraph) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def apply(self, g: Perm) -> "Digraph":
        if g.degree != self.n:
            raise ValueError("degree mismatch")
        img = g.images
        vl = [None] * self.n
        for v, l in enumerate(self.vlabels):
            vl[img[v]] = l
        arcs = {(img[a], img[b]): l for (a, b), l in self.arcs.items()}
        return Digraph._raw(self.n, tuple(vl), arcs)

    def relabelled(self, vlabels) -> "Digraph":
        """Same arcs (shared, never mutated), new vertex labels."""
        return Digraph._raw(self.n, tuple(vlabels), self.arcs)

    def without_arcs(self) -> "Digraph":
        return Digraph._raw(self.n, self.vlabels, {})

    def to_json(self):
        return {
            "n": self.n,
            "vlabels": [lt.term_to_json(l) for l in self.vlabels],
            "arcs": [
                [a + 1, b + 1, lt.term_to_json(l)]
                for (a, b), l in sorted(self.arcs.items())
            ],
        }

    @classmethod
    def from_json(cls, obj) -> "Digraph":
        n = obj["n"]
        vlabels = [lt.term_from_json(t) for t in obj.get("vlabels", [0] * n)]
        arcs = {}
        for a, b, l in obj.get("arcs", []):
            arcs[(a - 1, b - 1)] = lt.term_from_json(l)
        return cls(n, vlabels, arcs)

    def __repr__(self):
        return "Digraph(n=%d, arcs=%d)" % (self.n, len(self.arcs))


class Stack:
    """An immutable sequence of digraphs on a common vertex set."""

    __slots__ = ("degree", "entries", "_flat", "_key")

    def __init__(self, degree: int, entries=()):
        self.degree = degree
        self.entries = tuple(entries)
        for dg in self.entries:
            if dg.n != degree:
                raise ValueError("stack entries must share the vertex set")
        self._flat = None
        self._key = None

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def append(self, other: "Stack") -> "Stack":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Stack(self.degree, self.entries + other.entries)

    def apply(self, g: Perm) -> "Stack":
        return Stack(self.degree, tuple(dg.apply(g) for dg in self.entries))

    def without_arcs(self) -> "Stack":
        return Stack(self.degree, tuple(dg.without_arcs() for dg in self.entries))

    def key(self):
        if self._key is None:
            self._key = tuple(dg.key() for dg in self.entries)
        return self._key

    def __eq__(self, other):
        return isinstance(other, Stack) and self.degree == other.degree and self.key() == other.key()

    def __hash__(self):
        return hash((self.degree, self.key()))

    def flatten(self) -> Digraph:
        """Merge into one digraph carrying the same isomorphism data."""
        if self._flat is not None:
            return self._flat
        n = self.degree
        k = len(self.entries)
        vl = [lt.tup(dg.vlabels[v] for dg in self.entries) for v in range(n)]
        pairs = set()
        for dg in self.entries:
            pairs.update(dg.arcs)
        arcs = {}
        for pair in pairs:
            arcs[pair] = lt.tup(
                self.entries[i].arcs.get(pair, lt.GAP) for i in range(k)
            )
        self._flat = Digraph._raw(n, tuple(vl), arcs)
        return self._flat

    def to_json(self):
        return {"degree": self.degree, "entries": [dg.to_json() for dg in self.entries]}

    @classmethod
    def from_json(cls, obj) -> "Stack":
        return cls(obj["degree"], [Digraph.from_json(d) for d in obj["entries"]])

    def __repr__(self):
        return "Stack(degree=%d, len=%d)" % (self.degree, len(self.entries))


def single(dg: Digraph) -> Stack:
    return Stack(dg.n, (dg,))


def orbital_graph(
    gens, degree: int, alpha: int, beta: int, label=None, vlabels=None
) -> Digraph:
    """The digraph whose arcs are the orbit of (alpha, beta) under the group."""
    if alpha == beta:
        raise ValueError("base pair must be two distinct points")
    mark = lt.base(0) if label is None else label
    seen = {(alpha, beta)}
    queue = deque([(alpha, beta)])
    while queue:
        a, b = queue.popleft()
        for g in gens:
            pair = (g(a), g(b))
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return Digraph(degree, vlabels, {pair: mark for pair in sorted(seen)}, validate=False)


def point_marker(degree: int, alpha: int) -> Digraph:
    """Arcless digraph whose only distinguished vertex is ``alpha``."""
    zero, one = lt.base(0), lt.base(1)
    vl = [zero] * degree
    vl[alpha] = one
    return Digraph(degree, vl, {}, validate=False)
