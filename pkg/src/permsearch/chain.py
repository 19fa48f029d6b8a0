"""Stabiliser chains via deterministic Schreier-Sims.

No randomisation anywhere: base points are chosen as the smallest moved
point, orbits are grown breadth-first in sorted order, and Schreier
generators are processed in a fixed order.  Rebuilding a chain from the
same generators therefore always yields the same data, which keeps search
node counts reproducible.

Group orders are exact Python ints (arbitrary precision).
"""

from __future__ import annotations

from collections import deque

from .perms import Perm


class MembershipError(Exception):
    pass


class EnumerationCapExceeded(Exception):
    pass


class _Level:
    __slots__ = ("base", "gens", "transversal")

    def __init__(self, base: int, degree: int):
        self.base = base
        self.gens: list[Perm] = []
        # transversal[pt] maps base -> pt
        self.transversal: dict[int, Perm] = {base: Perm.identity(degree)}


class StabChain:
    """A stabiliser chain for a permutation group on {0..degree-1}."""

    def __init__(self, degree: int):
        self.degree = degree
        self.levels: list[_Level] = []
        self.generators: list[Perm] = []  # the generators the chain was built from

    # -- construction -------------------------------------------------

    @classmethod
    def build(cls, gens, degree: int, base=()) -> "StabChain":
        """Build a chain, optionally forcing the first base points.

        Every point of ``base`` gets a level (possibly with a singleton
        orbit), in order; further base points are chosen automatically.
        """
        chain = cls(degree)
        gens = [g if isinstance(g, Perm) else Perm(g) for g in gens]
        for g in gens:
            if g.degree != degree:
                raise ValueError("generator degree %d != %d" % (g.degree, degree))
        chain.generators = list(gens)
        for b in base:
            if not 0 <= b < degree:
                raise ValueError("base point %d out of range" % b)
            chain.levels.append(_Level(b, degree))
        for g in gens:
            chain._extend(g, 0)
        return chain

    def add_generator(self, g: Perm) -> None:
        """Extend the chain in place with one more generator."""
        if g.degree != self.degree:
            raise ValueError("generator degree %d != %d" % (g.degree, self.degree))
        self.generators.append(g)
        self._extend(g, 0)

    def _extend(self, g: Perm, i: int):
        # Pre: g fixes the base points of levels[:i].
        if g.is_identity():
            return
        if self._sift_from(g, i).is_identity():
            return
        if i == len(self.levels):
            self.levels.append(_Level(min(g.moved_points()), self.degree))
        lvl = self.levels[i]
        old_pts = set(lvl.transversal)
        lvl.gens.append(g)
        self._grow_orbit(i)
        # Schreier generators only for pairs not covered before g arrived:
        # every generator on the new points, just g on the old ones.
        for pt in sorted(lvl.transversal):
            u = lvl.transversal[pt]
            for s in lvl.gens if pt not in old_pts else (g,):
                schreier = u * s * lvl.transversal[s(pt)].inv()
                self._extend(schreier, i + 1)

    def _grow_orbit(self, i: int):
        # keep existing representatives; breadth-first from the whole orbit
        lvl = self.levels[i]
        queue = deque(sorted(lvl.transversal))
        while queue:
            pt = queue.popleft()
            u = lvl.transversal[pt]
            for s in lvl.gens:
                img = s(pt)
                if img not in lvl.transversal:
                    lvl.transversal[img] = u * s
                    queue.append(img)

    # -- queries -------------------------------------------------------

    def sift(self, g: Perm) -> Perm:
        return self._sift_from(g, 0)

    def _sift_from(self, g: Perm, i: int) -> Perm:
        for lvl in self.levels[i:]:
            beta = g(lvl.base)
            u = lvl.transversal.get(beta)
            if u is None:
                return g
            g = g * u.inv()
        return g

    def contains(self, g: Perm) -> bool:
        if g.degree != self.degree:
            return False
        return self.sift(g).is_identity()

    def order(self) -> int:
        n = 1
        for lvl in self.levels:
            n *= len(lvl.transversal)
        return n

    def base_points(self) -> tuple:
        return tuple(lvl.base for lvl in self.levels)

    def strong_generators(self) -> list:
        out = []
        for lvl in self.levels:
            out.extend(lvl.gens)
        return out

    def elements(self, cap: int = 10**6) -> list:
        """All elements, deterministic order.  Raises beyond ``cap``."""
        if self.order() > cap:
            raise EnumerationCapExceeded("group order %d exceeds cap %d" % (self.order(), cap))
        out = [Perm.identity(self.degree)]
        for lvl in reversed(self.levels):
            reps = [lvl.transversal[pt] for pt in sorted(lvl.transversal)]
            out = [h * u for u in reps for h in out]
        return out

    def random_element(self, randbelow) -> Perm:
        """Uniform element; ``randbelow(n)`` supplies the randomness."""
        # mirror the sift decomposition g = h * u, innermost factor first
        g = Perm.identity(self.degree)
        for lvl in reversed(self.levels):
            pts = sorted(lvl.transversal)
            g = g * lvl.transversal[pts[randbelow(len(pts))]]
        return g


def orbits(gens, degree: int) -> list:
    """Orbit partition of {0..degree-1}; each orbit sorted, ordered by min."""
    seen = [False] * degree
    out = []
    for start in range(degree):
        if seen[start]:
            continue
        orb = [start]
        seen[start] = True
        queue = deque([start])
        while queue:
            pt = queue.popleft()
            for g in gens:
                img = g(pt)
                if not seen[img]:
                    seen[img] = True
                    orb.append(img)
                    queue.append(img)
        out.append(sorted(orb))
    return out


def orbit_of(gens, point: int) -> list:
    orb = {point}
    queue = deque([point])
    while queue:
        pt = queue.popleft()
        for g in gens:
            img = g(pt)
            if img not in orb:
                orb.add(img)
                queue.append(img)
    return sorted(orb)


def pointwise_stabilizer(chain: StabChain, points) -> StabChain:
    """Chain for the subgroup fixing every listed point."""
    points = tuple(points)
    rebuilt = StabChain.build(chain.generators, chain.degree, base=points)
    gens = []
    for lvl in rebuilt.levels[len(points):]:
        gens.extend(lvl.gens)
    return StabChain.build(gens, chain.degree)


def transport_along(rebuilt: StabChain, src, dst):
    """Transversal walk on a chain whose base starts with src; None if stuck."""
    g = Perm.identity(rebuilt.degree)
    ginv = g
    for i, lvl in enumerate(rebuilt.levels[: len(src)]):
        # lvl.base == src[i]; want u with src[i]^u == dst[i]^(g^-1)
        target = ginv(dst[i])
        u = lvl.transversal.get(target)
        if u is None:
            return None
        g = u * g
        ginv = g.inv()
    return g


def tuple_transporter(chain: StabChain, src, dst):
    """Some g in the group with src[i]^g == dst[i] for all i, else None.

    Deterministic: the same chain and tuples always give the same witness.
    """
    src = tuple(src)
    dst = tuple(dst)
    if len(src) != len(dst):
        return None
    rebuilt = StabChain.build(chain.generators, chain.degree, base=src)
    return transport_along(rebuilt, src, dst)


def partition_stabilizer_chain(cells, degree: int) -> StabChain:
    """Chain for the stabiliser of an ordered partition, built directly.

    ``cells`` is a list of disjoint point lists.  Points not covered by any
    cell are treated as fixed.  Generators are the adjacent transpositions
    inside each cell; transversals are written down explicitly, so no
    Schreier-Sims run is needed.
    """
    chain = StabChain(degree)
    covered = [False] * degree
    gens = []
    ident = Perm.identity(degree)

    def transposition(a, b):
        images = list(range(degree))
        images[a], images[b] = b, a
        return Perm(images)

    for cell in cells:
        cell = sorted(cell)
        for p in cell:
            if covered[p]:
                raise ValueError("cells overlap at %d" % p)
            covered[p] = True
        for i in range(len(cell) - 1):
            lvl = _Level(cell[i], degree)
            lvl.gens = [transposition(cell[j], cell[j + 1]) for j in range(i, len(cell) - 1)]
            lvl.transversal = {cell[i]: ident}
            for j in range(i + 1, len(cell)):
                lvl.transversal[cell[j]] = transposition(cell[i], cell[j])
            chain.levels.append(lvl)
        gens.extend(transposition(cell[j], cell[j + 1]) for j in range(len(cell) - 1))
    chain.generators = gens
    return chain
