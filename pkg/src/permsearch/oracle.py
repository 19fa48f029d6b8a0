"""Brute-force reference solver.

This module is the measuring stick for the search engine, so it stays
independent: it re-implements every constraint's meaning directly on raw
data (image computations and closure enumeration) and never touches the
stabiliser-chain, refiner, approximator, or search code.  Constraint
objects are only read for their describing fields, dispatched on their
``kind`` string.  Keep it slow and obvious.
"""

from __future__ import annotations

from itertools import permutations

from .perms import Perm

SYM_CAP = 8
GROUP_CAP = 10**6
ISO_CAP = 7


class OracleCapExceeded(Exception):
    pass


def _closure(gen_images, degree: int, cap: int):
    """All image tuples in the generated group, by breadth-first products."""
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for q in gen_images:
                r = tuple(q[i] for i in p)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
                    if len(seen) > cap:
                        raise OracleCapExceeded("closure larger than %d" % cap)
        frontier = nxt
    return seen


def _satisfies(c, images) -> bool:
    kind = c.kind
    if kind in ("set_stab", "set_transport", "list_of_sets_stab", "list_of_sets_transport"):
        if len(c.src_sets) != len(c.dst_sets):
            return False
        return all(
            {images[v] for v in src} == set(dst)
            for src, dst in zip(c.src_sets, c.dst_sets)
        )
    if kind in ("set_of_sets_stab", "set_of_sets_transport"):
        moved = sorted(sorted(images[v] for v in s) for s in c.src_sets)
        return moved == sorted(sorted(s) for s in c.dst_sets)
    if kind in ("centralizer", "conjugacy"):
        src, dst = c.src.images, c.dst.images
        return all(images[src[i]] == dst[images[i]] for i in range(len(images)))
    if kind == "group":
        return images in _group_images(c)
    if kind == "coset":
        rep_inv = c.rep.inv().images
        return tuple(rep_inv[i] for i in images) in _group_images(c)
    if kind in ("digraph_auto", "digraph_iso"):
        src, dst = c.src, c.dst
        for v, l in enumerate(src.vlabels):
            if dst.vlabels[images[v]] != l:
                return False
        if len(src.arcs) != len(dst.arcs):
            return False
        return all(
            dst.arcs.get((images[a], images[b])) == l
            for (a, b), l in src.arcs.items()
        )
    raise OracleCapExceeded("oracle cannot interpret constraint kind %r" % kind)


_group_cache: dict = {}
_GROUP_CACHE_CAP = 64


def _group_images(c):
    # keyed by the generator data itself; object identity is not stable
    key = (c.degree, tuple(g.images for g in c.gens))
    cached = _group_cache.get(key)
    if cached is None:
        cached = _closure([g.images for g in c.gens], c.degree, GROUP_CAP)
        if len(_group_cache) >= _GROUP_CACHE_CAP:
            _group_cache.clear()
        _group_cache[key] = cached
    return cached


def brute_solve(constraints, degree: int) -> list:
    """All permutations satisfying every constraint, sorted.

    Candidate pool: all of Sym(degree) when degree is at most 8, otherwise
    the elements of the first group (or coset) constraint whose closure
    stays below a million elements.
    """
    if degree <= SYM_CAP:
        pool = (tuple(p) for p in permutations(range(degree)))
    else:
        pool = None
        for c in constraints:
            if getattr(c, "kind", None) in ("group", "coset"):
                members = _group_images(c)
                if getattr(c, "kind") == "coset":
                    rep = c.rep.images
                    pool = [tuple(rep[i] for i in m) for m in members]
                else:
                    pool = list(members)
                break
        if pool is None:
            raise OracleCapExceeded(
                "degree %d too large without an enumerable group constraint" % degree
            )
    out = []
    for images in pool:
        if all(_satisfies(c, images) for c in constraints):
            out.append(Perm(images))
    return sorted(out)


def _stack_maps(S, g_images, T) -> bool:
    for dg_s, dg_t in zip(S.entries, T.entries):
        for v, l in enumerate(dg_s.vlabels):
            if dg_t.vlabels[g_images[v]] != l:
                return False
        if len(dg_s.arcs) != len(dg_t.arcs):
            return False
        for (a, b), l in dg_s.arcs.items():
            if dg_t.arcs.get((g_images[a], g_images[b])) != l:
                return False
    return True


def brute_iso_stacks(S, T) -> list:
    """All permutations mapping stack S to stack T, by full enumeration."""
    if S.degree != T.degree:
        raise ValueError("stacks on different vertex sets")
    if S.degree > ISO_CAP:
        raise OracleCapExceeded("degree %d beyond the enumeration cap %d" % (S.degree, ISO_CAP))
    if len(S) != len(T):
        return []
    out = []
    for images in permutations(range(S.degree)):
        if _stack_maps(S, images, T):
            out.append(Perm(images))
    return sorted(out)
