"""Permutations of {0, ..., n-1}.

Composition is left-to-right: ``i ** (p * q) == (i ** p) ** q``, i.e. apply
p first, then q.  All internal indices are 0-based; the text cycle format
and the JSON image-list format are 1-based, matching the usual printed
conventions, and conversion happens only in parse/format helpers.
"""

from __future__ import annotations

import re


class Perm:
    """An immutable permutation, stored as its tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        seen = [False] * n
        for i in images:
            if not isinstance(i, int) or not 0 <= i < n or seen[i]:
                raise ValueError("not a permutation of 0..%d: %r" % (n - 1, images))
            seen[i] = True
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Perm") -> "Perm":
        # apply self first, then other
        if len(self.images) != len(other.images):
            raise ValueError("degree mismatch: %d vs %d" % (self.degree, other.degree))
        oi = other.images
        p = Perm.__new__(Perm)
        p.images = tuple(oi[i] for i in self.images)
        return p

    def inv(self) -> "Perm":
        images = self.images
        inv = [0] * len(images)
        for i, j in enumerate(images):
            inv[j] = i
        p = Perm.__new__(Perm)
        p.images = tuple(inv)
        return p

    def conj(self, x: "Perm") -> "Perm":
        """self conjugated by x: apply x.inv(), then self, then x."""
        return x.inv() * self * x

    def on_tuple(self, points) -> tuple:
        return tuple(self.images[p] for p in points)

    def on_set(self, points) -> frozenset:
        return frozenset(self.images[p] for p in points)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def moved_points(self):
        return [i for i, j in enumerate(self.images) if i != j]

    def cycles(self):
        """Nontrivial cycles, each rotated to start at its minimum, sorted."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start] or self.images[start] == start:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def __repr__(self):
        return "Perm(%s)" % format_cycles(self)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse 1-based cycle text like "(1,2)(3,4)" or "()"."""
    text = text.strip()
    if text in ("()", "", "id"):
        return Perm.identity(degree)
    stripped = _CYCLE_RE.sub("", text)
    if stripped.strip():
        raise ValueError("bad cycle text: %r" % text)
    images = list(range(degree))
    for body in _CYCLE_RE.findall(text):
        body = body.strip()
        if not body:
            continue
        pts = [int(tok) - 1 for tok in re.split(r"[,\s]+", body)]
        if any(not 0 <= p < degree for p in pts):
            raise ValueError("point out of range 1..%d in %r" % (degree, text))
        if len(set(pts)) != len(pts):
            raise ValueError("repeated point in cycle %r" % body)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            if images[a] != a:
                raise ValueError("point %d appears in two cycles" % (a + 1))
            images[a] = b
    return Perm(images)


def format_cycles(p: Perm) -> str:
    cycs = p.cycles()
    if not cycs:
        return "()"
    return "".join("(%s)" % ",".join(str(i + 1) for i in c) for c in cycs)


def perm_from_images_1based(images, degree=None) -> Perm:
    p = Perm(i - 1 for i in images)
    if degree is not None and p.degree != degree:
        raise ValueError("expected degree %d, got %d" % (degree, p.degree))
    return p


def perm_to_images_1based(p: Perm) -> list:
    return [i + 1 for i in p.images]


def perm_from_json(obj, degree: int) -> Perm:
    """Accept either 1-based cycle text or a 1-based image list."""
    if isinstance(obj, str):
        return parse_cycles(obj, degree)
    if isinstance(obj, list):
        return perm_from_images_1based(obj, degree)
    raise ValueError("cannot read a permutation from %r" % (obj,))
