"""Backtrack search over digraph stacks.

The solver maintains a pair of stacks (S, T).  ``refine`` grows both sides
with refiner extensions until the isomorphism approximation stops
shrinking (returning the last useful snapshot) or becomes empty.  When the
approximation has more than one candidate left, ``split`` picks a point
alpha from a smallest non-singleton orbit of the group part, distinguishes
it on the left, and branches over the possible images of alpha on the
right; the left branch extension is the same in every branch, which is
what lets refiners reuse one cached left answer per distinct left stack.

Node counts (``SearchStats.nodes``) count recursive invocations of the
search procedures; the top-level call is free, so zero nodes means the
problem was solved by refinement alone.

Modes:

* leon:    arcless refiner output + weak approximator (classic partition
           backtracking),
* orbital: full digraphs + weak approximator,
* strong:  full digraphs + equitable refinement of the flattened stacks,
* full:    full digraphs + exact canonical-form approximator (degree-capped).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import approx as ap
from .chain import StabChain
from .digraphs import Stack, point_marker
from .perms import Perm


@dataclass
class SearchConfig:
    kind: str = ap.STRONG
    strip_arcs: bool = False
    orbital_cap: int = 8
    canon_cap: int = 64
    node_limit: int | None = None

    @classmethod
    def from_mode(cls, mode: str, **kw) -> "SearchConfig":
        try:
            kind, strip = MODES[mode.lower()]
        except KeyError:
            raise ValueError("unknown mode %r (expected one of %s)" % (mode, sorted(MODES)))
        return cls(kind=kind, strip_arcs=strip, **kw)


MODES = {
    "leon": (ap.WEAK, True),
    "orbital": (ap.WEAK, False),
    "strong": (ap.STRONG, False),
    "full": (ap.FULL, False),
}


@dataclass
class SearchStats:
    nodes: int = 0
    refine_rounds: int = 0
    max_depth: int = 0


class SearchLimitExceeded(Exception):
    def __init__(self, stats: SearchStats):
        super().__init__("node limit exceeded after %d nodes" % stats.nodes)
        self.stats = stats


@dataclass
class SearchOutcome:
    elements: list
    stats: SearchStats

    @property
    def first(self):
        return self.elements[0] if self.elements else None


@dataclass
class BsgsOutcome:
    base: list            # stacks distinguishing the base points, outermost first
    base_points: list     # the distinguished points themselves
    strong_gens: list
    order: int
    chain: StabChain
    stats: SearchStats = field(default_factory=SearchStats)


class _Run:
    def __init__(self, constraints, config: SearchConfig):
        if not constraints:
            raise ValueError("need at least one constraint")
        degrees = {c.degree for c in constraints}
        if len(degrees) != 1:
            raise ValueError("constraints disagree on degree: %s" % sorted(degrees))
        self.degree = degrees.pop()
        self.constraints = list(constraints)
        self.config = config
        self.approx = ap.Approximator(config.kind, config.canon_cap)
        self.orbital_cap = config.orbital_cap
        self.strip_arcs = config.strip_arcs
        self.states = [c.make_state() for c in self.constraints]
        # when every constraint contains the identity, f_L == f_R, so the
        # diagonal pair (S, S) may reuse left extensions on the right
        self.identity_ok = all(c.contains_identity for c in self.constraints)
        self.left_key = None  # key of the left stack the current refiner pair sees
        self.stats = SearchStats()

    def _node(self, depth: int):
        self.stats.nodes += 1
        if depth > self.stats.max_depth:
            self.stats.max_depth = depth
        limit = self.config.node_limit
        if limit is not None and self.stats.nodes > limit:
            raise SearchLimitExceeded(self.stats)

    # -- refinement ------------------------------------------------------

    def refine(self, S: Stack, T: Stack):
        """Extend (S, T) while the approximation keeps strictly shrinking."""
        same = T is S and self.identity_ok
        A = self.approx.iso(S, T)
        while not A.is_empty:
            self.stats.refine_rounds += 1
            snapshot = (S, T, A)
            for c, st in zip(self.constraints, self.states):
                if len(S) != len(T):
                    break
                self.left_key = S.key()
                ext_l = c.left_extension(self, st, S)
                if self.strip_arcs:
                    ext_l = self._stripped_left(st, self.left_key, ext_l)
                if same:
                    ext_r = ext_l
                else:
                    ext_r = c.right_extension(self, st, T)
                    if self.strip_arcs:
                        ext_r = ext_r.without_arcs()
                S = S.append(ext_l)
                T = S if same else T.append(ext_r)
            A = self.approx.iso(S, T)
            if not A.cardinality < snapshot[2].cardinality:
                return snapshot
        return S, T, A

    def _stripped_left(self, state, key, ext: Stack) -> Stack:
        # keep one stripped copy per left stack so entry-level caches stay warm
        cached = state.left_cache.get(("stripped", key))
        if cached is None:
            cached = ext.without_arcs()
            state.left_cache[("stripped", key)] = cached
        return cached

    # -- splitting ---------------------------------------------------------

    def split_at(self, A: ap.CosetApprox):
        if A.cardinality < 2:
            raise ValueError("splitting needs at least two candidate isomorphisms")
        orbs = [o for o in A.group.orbits() if len(o) >= 2]
        orb = min(orbs, key=lambda o: (len(o), o[0]))
        alpha = orb[0]
        h = A.rep
        targets = sorted(h(b) for b in orb)
        left = Stack(self.degree, (point_marker(self.degree, alpha),))
        branches = [
            (b, Stack(self.degree, (point_marker(self.degree, b),))) for b in targets
        ]
        return alpha, left, branches

    # -- searches ----------------------------------------------------------

    def search(self, S: Stack, T: Stack, depth: int, first_only: bool):
        if depth > self.stats.max_depth:
            self.stats.max_depth = depth
        S, T, A = self.refine(S, T)
        if A.is_empty:
            return []
        if A.cardinality == 1:
            h = A.rep
            if S.apply(h) == T and all(c.membership(h) for c in self.constraints):
                return [h]
            return []
        _, left, branches = self.split_at(A)
        child = S.append(left)
        out = []
        for _, branch in branches:
            self._node(depth + 1)
            out.extend(self.search(child, T.append(branch), depth + 1, first_only))
            if first_only and out:
                break
        return out

    def bsgs(self, S: Stack, depth: int):
        if depth > self.stats.max_depth:
            self.stats.max_depth = depth
        S, _, A = self.refine(S, S)
        if A.cardinality == 1:
            return [], [], []
        alpha, left, branches = self.split_at(A)
        child = S.append(left)
        self._node(depth + 1)
        rest_stacks, rest_points, gens = self.bsgs(child, depth + 1)
        base_stacks = [left] + rest_stacks
        base_points = [alpha] + rest_points
        gens = list(gens)
        earlier = [alpha]
        for beta, branch in branches[1:]:
            if beta in _orbit_union(gens, earlier):
                earlier.append(beta)
                continue
            self._node(depth + 1)
            found = self.search(child, S.append(branch), depth + 1, True)
            if found:
                gens.append(found[0])
            earlier.append(beta)
        return base_stacks, base_points, gens


def _orbit_union(gens, seeds):
    reach = set(seeds)
    frontier = list(seeds)
    while frontier:
        p = frontier.pop()
        for g in gens:
            q = g(p)
            if q not in reach:
                reach.add(q)
                frontier.append(q)
    return reach


# -- public operations ------------------------------------------------------


def refine_pair(S: Stack, T: Stack, constraints, config: SearchConfig = None):
    run = _Run(constraints, config or SearchConfig())
    S2, T2, _ = run.refine(S, T)
    return S2, T2


def split_stacks(S: Stack, T: Stack, config: SearchConfig = None):
    """[S1, T_1, ..., T_m]: the shared left extension and the branch extensions."""
    config = config or SearchConfig()
    api = ap.Approximator(config.kind, config.canon_cap)
    A = api.iso(S, T)
    if A.cardinality < 2:
        raise ValueError("splitting needs at least two candidate isomorphisms")
    orbs = [o for o in A.group.orbits() if len(o) >= 2]
    orb = min(orbs, key=lambda o: (len(o), o[0]))
    h = A.rep
    left = Stack(S.degree, (point_marker(S.degree, orb[0]),))
    return [left] + [
        Stack(S.degree, (point_marker(S.degree, b),)) for b in sorted(h(b) for b in orb)
    ]


def search_all(constraints, config: SearchConfig = None) -> SearchOutcome:
    run = _Run(constraints, config or SearchConfig())
    empty = Stack(run.degree, ())
    found = run.search(empty, empty, 0, False)
    return SearchOutcome(sorted(found), run.stats)


def search_single(constraints, config: SearchConfig = None) -> SearchOutcome:
    run = _Run(constraints, config or SearchConfig())
    empty = Stack(run.degree, ())
    found = run.search(empty, empty, 0, True)
    return SearchOutcome(found[:1], run.stats)


def search_bsgs(constraints, config: SearchConfig = None) -> BsgsOutcome:
    """Base and strong generating set for an intersection of groups.

    Every constraint must contain the identity (the intersection must be a
    group); that is the caller's responsibility.
    """
    run = _Run(constraints, config or SearchConfig())
    empty = Stack(run.degree, ())
    stacks, points, gens = run.bsgs(empty, 0)
    gens = [g for g in gens if not g.is_identity()]
    chain = StabChain.build(gens, run.degree)
    return BsgsOutcome(stacks, points, gens, chain.order(), chain, run.stats)
