"""Constraints and their refiners.

A constraint describes a set U of permutations (a group or one of its
cosets in the ambient symmetric group).  Each constraint bundles

* a semantic membership test,
* a refiner pair (left, right): given the current left/right stacks, each
  side returns an extension stack the search engine appends.  The law tying
  them to the search is: if S^g = T for some g in U, then
  (left(S))^g = right(T).  When U contains the identity the two sides
  coincide.

Left extensions are cached by stack content: every node of a search level
revisits the same left stack, so a refiner computes its left answer once
per distinct stack and then reuses it bit-for-bit.  The engine publishes
the key of the left stack it is currently extending so the right side of
a stateful refiner can pair up with its left twin.

Group-by-generators refiners follow the fixed-left-stack recipe: at left
length L they record F = fixed(S) and emit digraphs of the pointwise
stabiliser G_F (its orbit partition, plus orbital graphs for up to
``orbital_cap`` smallest non-singleton orbits); at right length L they
transport F onto fixed(T) inside G and map the recorded digraphs across,
or emit a dead-end (empty extension of mismatched length) when no
transporting element exists.
"""

from __future__ import annotations

from . import labels as lt
from .chain import StabChain, orbits, transport_along
from .digraphs import Digraph, Stack, orbital_graph
from .perms import Perm, format_cycles, perm_from_json, perm_to_images_1based


class RefinerState:
    """Per-constraint, per-search mutable store."""

    __slots__ = ("left_cache", "group_data")

    def __init__(self):
        self.left_cache: dict = {}
        self.group_data: dict = {}


class Constraint:
    def __init__(self, degree: int):
        self.degree = degree

    # -- semantic side -------------------------------------------------

    def membership(self, g: Perm) -> bool:
        raise NotImplementedError

    @property
    def contains_identity(self) -> bool:
        return self.membership(Perm.identity(self.degree))

    # -- refiner side ----------------------------------------------------

    def make_state(self) -> RefinerState:
        return RefinerState()

    def left_extension(self, env, state: RefinerState, S: Stack) -> Stack:
        # keyed by content: a search revisits the same left stack at every
        # node of a level, and may also probe extensions it then discards
        key = S.key()
        ext = state.left_cache.get(key)
        if ext is None:
            ext = self._left(env, state, S)
            state.left_cache[key] = ext
        return ext

    def right_extension(self, env, state: RefinerState, T: Stack) -> Stack:
        return self._right(env, state, T)

    def _left(self, env, state, S: Stack) -> Stack:
        raise NotImplementedError

    def _right(self, env, state, T: Stack) -> Stack:
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError


def _empty_extension(degree: int) -> Stack:
    return Stack(degree, ())


# -- list-of-sets family -------------------------------------------------


def _indexed_sets_digraph(degree: int, sets) -> Digraph:
    """Arcless digraph labelling each vertex with the set of indices owning it."""
    memberships = [[] for _ in range(degree)]
    for i, s in enumerate(sets):
        for v in s:
            memberships[v].append(i)
    vl = [lt.mset(lt.base(i) for i in idx) for idx in memberships]
    return Digraph(degree, vl, {}, validate=False)


class ListOfSetsTransport(Constraint):
    """Permutations mapping each source set onto the same-index target set."""

    kind = "list_of_sets_transport"

    def __init__(self, degree: int, src_sets, dst_sets):
        super().__init__(degree)
        self.src_sets = [frozenset(s) for s in src_sets]
        self.dst_sets = [frozenset(s) for s in dst_sets]
        for s in self.src_sets + self.dst_sets:
            if any(not 0 <= v < degree for v in s):
                raise ValueError("set entry out of range")

    def membership(self, g: Perm) -> bool:
        if len(self.src_sets) != len(self.dst_sets):
            return False
        return all(
            g.on_set(s) == d for s, d in zip(self.src_sets, self.dst_sets)
        )

    def _left(self, env, state, S):
        return Stack(self.degree, (_indexed_sets_digraph(self.degree, self.src_sets),))

    def _right(self, env, state, T):
        return Stack(self.degree, (_indexed_sets_digraph(self.degree, self.dst_sets),))

    def to_json(self):
        return {
            "type": self.kind,
            "from": [sorted(v + 1 for v in s) for s in self.src_sets],
            "to": [sorted(v + 1 for v in s) for s in self.dst_sets],
        }


class ListOfSetsStab(ListOfSetsTransport):
    kind = "list_of_sets_stab"

    def __init__(self, degree: int, sets):
        super().__init__(degree, sets, sets)

    def to_json(self):
        return {
            "type": self.kind,
            "sets": [sorted(v + 1 for v in s) for s in self.src_sets],
        }


class SetTransport(ListOfSetsTransport):
    kind = "set_transport"

    def __init__(self, degree: int, src, dst):
        super().__init__(degree, [src], [dst])

    def to_json(self):
        return {
            "type": self.kind,
            "from": sorted(v + 1 for v in self.src_sets[0]),
            "to": sorted(v + 1 for v in self.dst_sets[0]),
        }


class SetStab(SetTransport):
    kind = "set_stab"

    def __init__(self, degree: int, points):
        super().__init__(degree, points, points)

    def to_json(self):
        return {"type": self.kind, "set": sorted(v + 1 for v in self.src_sets[0])}


# -- set-of-sets family ----------------------------------------------------


def _set_of_sets_digraph(degree: int, sets) -> Digraph:
    """Counting digraph for an unordered family of sets.

    Vertices and arcs are labelled by, for each set size s, the pair
    (number of size-s sets containing the vertex / both endpoints, number
    of sets overall); arcs join distinct vertices that share a set.
    """
    fsets = [frozenset(s) for s in sets]
    k = len(fsets)
    max_size = max((len(s) for s in fsets), default=0)

    def profile(count_by_size):
        return lt.tup(
            lt.tup((lt.base(count_by_size.get(s, 0)), lt.base(k)))
            for s in range(1, max_size + 1)
        )

    vcounts = [dict() for _ in range(degree)]
    paircounts: dict = {}
    for s in fsets:
        size = len(s)
        members = sorted(s)
        for v in members:
            vcounts[v][size] = vcounts[v].get(size, 0) + 1
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                for pair in ((a, b), (b, a)):
                    d = paircounts.setdefault(pair, {})
                    d[size] = d.get(size, 0) + 1
    vl = [profile(c) for c in vcounts]
    arcs = {pair: profile(c) for pair, c in paircounts.items()}
    return Digraph(degree, vl, arcs, validate=False)


class SetOfSetsTransport(Constraint):
    """Permutations mapping the source family onto the target family."""

    kind = "set_of_sets_transport"

    def __init__(self, degree: int, src_sets, dst_sets):
        super().__init__(degree)
        self.src_sets = frozenset(frozenset(s) for s in src_sets)
        self.dst_sets = frozenset(frozenset(s) for s in dst_sets)
        for s in list(self.src_sets) + list(self.dst_sets):
            if any(not 0 <= v < degree for v in s):
                raise ValueError("set entry out of range")

    def membership(self, g: Perm) -> bool:
        return frozenset(g.on_set(s) for s in self.src_sets) == self.dst_sets

    def _left(self, env, state, S):
        return Stack(self.degree, (_set_of_sets_digraph(self.degree, self.src_sets),))

    def _right(self, env, state, T):
        return Stack(self.degree, (_set_of_sets_digraph(self.degree, self.dst_sets),))

    @staticmethod
    def _sets_json(sets):
        return sorted(sorted(v + 1 for v in s) for s in sets)

    def to_json(self):
        return {
            "type": self.kind,
            "from": self._sets_json(self.src_sets),
            "to": self._sets_json(self.dst_sets),
        }


class SetOfSetsStab(SetOfSetsTransport):
    kind = "set_of_sets_stab"

    def __init__(self, degree: int, sets):
        super().__init__(degree, sets, sets)

    def to_json(self):
        return {"type": self.kind, "sets": self._sets_json(self.src_sets)}


# -- centraliser / conjugacy ---------------------------------------------


def _functional_digraph(p: Perm) -> Digraph:
    zero = lt.base(0)
    arcs = {(v, p(v)): zero for v in range(p.degree)}
    return Digraph(p.degree, None, arcs, validate=False)


class Conjugacy(Constraint):
    """Permutations x with src^x = dst (conjugation transporter)."""

    kind = "conjugacy"

    def __init__(self, src: Perm, dst: Perm):
        super().__init__(src.degree)
        if dst.degree != src.degree:
            raise ValueError("degree mismatch")
        self.src = src
        self.dst = dst

    def membership(self, g: Perm) -> bool:
        return self.src.conj(g) == self.dst

    def _left(self, env, state, S):
        return Stack(self.degree, (_functional_digraph(self.src),))

    def _right(self, env, state, T):
        return Stack(self.degree, (_functional_digraph(self.dst),))

    def to_json(self):
        return {
            "type": self.kind,
            "from": format_cycles(self.src),
            "to": format_cycles(self.dst),
        }


class Centralizer(Conjugacy):
    kind = "centralizer"

    def __init__(self, p: Perm):
        super().__init__(p, p)

    def to_json(self):
        return {"type": self.kind, "perm": format_cycles(self.src)}


# -- digraph automorphism / isomorphism ------------------------------------


class DigraphIso(Constraint):
    kind = "digraph_iso"

    def __init__(self, src: Digraph, dst: Digraph):
        super().__init__(src.n)
        if dst.n != src.n:
            raise ValueError("degree mismatch")
        self.src = src
        self.dst = dst

    def membership(self, g: Perm) -> bool:
        return self.src.apply(g) == self.dst

    def _left(self, env, state, S):
        return Stack(self.degree, (self.src,))

    def _right(self, env, state, T):
        return Stack(self.degree, (self.dst,))

    def to_json(self):
        return {"type": self.kind, "from": self.src.to_json(), "to": self.dst.to_json()}


class DigraphAuto(DigraphIso):
    kind = "digraph_auto"

    def __init__(self, dg: Digraph):
        super().__init__(dg, dg)

    def to_json(self):
        return {"type": self.kind, "digraph": self.src.to_json()}


# -- group by generators / right coset --------------------------------------


class GroupByGens(Constraint):
    """The subgroup generated by explicit generators."""

    kind = "group"

    def __init__(self, degree: int, gens, chain: StabChain = None):
        super().__init__(degree)
        self.gens = [g if isinstance(g, Perm) else Perm(g) for g in gens]
        self.chain = chain if chain is not None else StabChain.build(self.gens, degree)

    def membership(self, g: Perm) -> bool:
        return self.chain.contains(g)

    def _group_left(self, env, state, S):
        fixed = env.approx.fixed(S)
        rebuilt = StabChain.build(self.chain.generators, self.degree, base=fixed)
        stab_gens = [g for lvl in rebuilt.levels[len(fixed):] for g in lvl.gens]
        orbs = orbits(stab_gens, self.degree)
        entries = [_indexed_sets_digraph(self.degree, orbs)]
        # seed each orbital graph with the orbit partition so arc refinement
        # starts from it instead of a uniform colouring
        owner = [0] * self.degree
        for i, orb in enumerate(orbs):
            for v in orb:
                owner[v] = i
        vl = [lt.base(owner[v]) for v in range(self.degree)]
        nontrivial = sorted((o for o in orbs if len(o) > 1), key=lambda o: (len(o), o[0]))
        for orb in nontrivial[: env.orbital_cap]:
            entries.append(
                orbital_graph(stab_gens, self.degree, orb[0], orb[1], vlabels=vl)
            )
        ext = Stack(self.degree, entries)
        state.group_data[S.key()] = (fixed, ext, rebuilt)
        return ext

    def _group_right(self, env, state, T):
        data = state.group_data.get(env.left_key)
        if data is None:
            raise RuntimeError("right refiner extension requested before its left twin")
        fixed, ext, rebuilt = data
        target = env.approx.fixed(T)
        if len(target) != len(fixed):
            return _empty_extension(self.degree)
        mover = transport_along(rebuilt, fixed, target)
        if mover is None:
            return _empty_extension(self.degree)
        return ext.apply(mover)

    def _left(self, env, state, S):
        return self._group_left(env, state, S)

    def _right(self, env, state, T):
        return self._group_right(env, state, T)

    def to_json(self):
        return {
            "type": self.kind,
            "gens": [perm_to_images_1based(g) for g in self.gens],
        }


class RightCoset(GroupByGens):
    """The right coset (group generated by gens) * rep."""

    kind = "coset"

    def __init__(self, degree: int, gens, rep: Perm, chain: StabChain = None):
        super().__init__(degree, gens, chain)
        self.rep = rep

    def membership(self, g: Perm) -> bool:
        return self.chain.contains(g * self.rep.inv())

    def _right(self, env, state, T):
        shifted = self._group_right(env, state, T.apply(self.rep.inv()))
        if len(shifted) == 0:
            return shifted
        return shifted.apply(self.rep)

    def to_json(self):
        return {
            "type": self.kind,
            "gens": [perm_to_images_1based(g) for g in self.gens],
            "rep": perm_to_images_1based(self.rep),
        }


# -- JSON ------------------------------------------------------------------


def _sets_0based(sets):
    return [[v - 1 for v in s] for s in sets]


def constraint_from_json(obj: dict, degree: int) -> Constraint:
    kind = obj["type"]
    if kind == "set_stab":
        return SetStab(degree, [v - 1 for v in obj["set"]])
    if kind == "set_transport":
        return SetTransport(degree, [v - 1 for v in obj["from"]], [v - 1 for v in obj["to"]])
    if kind == "list_of_sets_stab":
        return ListOfSetsStab(degree, _sets_0based(obj["sets"]))
    if kind == "list_of_sets_transport":
        return ListOfSetsTransport(degree, _sets_0based(obj["from"]), _sets_0based(obj["to"]))
    if kind == "set_of_sets_stab":
        return SetOfSetsStab(degree, _sets_0based(obj["sets"]))
    if kind == "set_of_sets_transport":
        return SetOfSetsTransport(degree, _sets_0based(obj["from"]), _sets_0based(obj["to"]))
    if kind == "centralizer":
        return Centralizer(perm_from_json(obj["perm"], degree))
    if kind == "conjugacy":
        return Conjugacy(perm_from_json(obj["from"], degree), perm_from_json(obj["to"], degree))
    if kind == "group":
        return GroupByGens(degree, [perm_from_json(g, degree) for g in obj["gens"]])
    if kind == "coset":
        return RightCoset(
            degree,
            [perm_from_json(g, degree) for g in obj["gens"]],
            perm_from_json(obj["rep"], degree),
        )
    if kind == "digraph_auto":
        return DigraphAuto(Digraph.from_json(obj["digraph"]))
    if kind == "digraph_iso":
        return DigraphIso(Digraph.from_json(obj["from"]), Digraph.from_json(obj["to"]))
    raise ValueError("unknown constraint type %r" % kind)
