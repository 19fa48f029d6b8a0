"""Structural label terms for digraph vertices and arcs.

A label term is one of:

* ``Base`` atom (an int or a short string),
* ``Gap`` (the placeholder a flattened stack uses where an entry has no arc),
* ``Tuple`` of terms,
* ``Multiset`` of terms (stored as sorted (term, count) pairs, counts > 0).

Terms are encoded as plain nested tuples with a numeric variant tag first,
so Python's tuple comparison realises the intended total order directly:
Base < Gap < Tuple < Multiset, then recursively lexicographic.  Base atoms
carry a rank (int=0, str=1, fingerprint=2, reserved=3) so atoms of
different kinds never get compared to each other.

Refinement invents ever deeper terms; ``fingerprint`` caps that growth by
replacing any term above a small structural size with a Base atom holding
128 bits of SHA-256 of the term's canonical serialisation.  The
replacement is a pure function of the term (never of insertion order), so
independently refined digraphs still receive comparable labels, and a
process-wide table checks injectivity and raises on any hash collision.
"""

from __future__ import annotations

import hashlib
from collections import Counter

BASE, GAP_TAG, TUPLE, MSET = 0, 1, 2, 3

_RANK_INT, _RANK_STR, _RANK_FP, _RANK_RESERVED = 0, 1, 2, 3

GAP = (GAP_TAG,)


class LabelCollisionError(Exception):
    pass


def base(atom):
    if isinstance(atom, bool) or not isinstance(atom, (int, str)):
        raise ValueError("Base atom must be an int or a string: %r" % (atom,))
    return (BASE, _RANK_INT if isinstance(atom, int) else _RANK_STR, atom)


def reserved(*atoms):
    """A Base-like term users cannot construct; for internal markers."""
    return (BASE, _RANK_RESERVED, atoms)


def tup(terms):
    return (TUPLE, tuple(terms))


def mset(terms):
    counts = Counter(terms)
    return (MSET, tuple(sorted(counts.items())))


def mset_from_pairs(pairs):
    counts = Counter()
    for term, cnt in pairs:
        counts[term] += cnt
    for term, cnt in counts.items():
        if cnt <= 0:
            raise ValueError("multiset counts must be positive")
    return (MSET, tuple(sorted(counts.items())))


def is_term(obj) -> bool:
    if not isinstance(obj, tuple) or not obj:
        return False
    tag = obj[0]
    if tag == BASE:
        return len(obj) == 3
    if tag == GAP_TAG:
        return len(obj) == 1
    if tag == TUPLE:
        return (
            len(obj) == 2
            and isinstance(obj[1], tuple)
            and all(is_term(t) for t in obj[1])
        )
    if tag == MSET:
        return (
            len(obj) == 2
            and isinstance(obj[1], tuple)
            and all(
                isinstance(pair, tuple)
                and len(pair) == 2
                and isinstance(pair[1], int)
                and pair[1] > 0
                and is_term(pair[0])
                for pair in obj[1]
            )
        )
    return False


def _weight(term, budget: int) -> int:
    """Atom count, but stops counting once past ``budget``."""
    tag = term[0]
    if tag in (BASE, GAP_TAG):
        return 1
    if tag == TUPLE:
        total = 1
        for t in term[1]:
            total += _weight(t, budget - total)
            if total > budget:
                return total
        return total
    total = 1
    for t, _ in term[1]:
        total += 1 + _weight(t, budget - total)
        if total > budget:
            return total
    return total


def _serialize(term, out: list):
    tag = term[0]
    if tag == BASE:
        out.append(("B%d:%r;" % (term[1], term[2])).encode("utf-8"))
    elif tag == GAP_TAG:
        out.append(b"G;")
    elif tag == TUPLE:
        out.append(b"T(")
        for t in term[1]:
            _serialize(t, out)
        out.append(b")")
    else:
        out.append(b"M(")
        for t, c in term[1]:
            out.append(b"%d*" % c)
            _serialize(t, out)
        out.append(b")")


_FP_THRESHOLD = 24
_fp_table: dict = {}


def fingerprint(term):
    """``term`` itself if small, else a collision-checked 128-bit digest atom."""
    if _weight(term, _FP_THRESHOLD) <= _FP_THRESHOLD:
        return term
    parts: list = []
    _serialize(term, parts)
    digest = hashlib.sha256(b"".join(parts)).digest()[:16]
    value = int.from_bytes(digest, "big")
    known = _fp_table.get(value)
    if known is None:
        _fp_table[value] = term
    elif known != term:
        raise LabelCollisionError("fingerprint collision on %d" % value)
    return (BASE, _RANK_FP, value)


def term_to_json(term):
    tag = term[0]
    if tag == BASE:
        rank = term[1]
        if rank in (_RANK_INT, _RANK_STR):
            return term[2]
        if rank == _RANK_FP:
            return {"fp": "%032x" % term[2]}
        return {"reserved": list(term[2])}
    if tag == GAP_TAG:
        return None
    if tag == TUPLE:
        return {"tuple": [term_to_json(t) for t in term[1]]}
    return {"mset": [[term_to_json(t), c] for t, c in term[1]]}


def term_from_json(obj):
    if obj is None:
        return GAP
    if isinstance(obj, (int, str)):
        return base(obj)
    if isinstance(obj, dict):
        if "tuple" in obj:
            return tup(term_from_json(t) for t in obj["tuple"])
        if "mset" in obj:
            return mset_from_pairs((term_from_json(t), c) for t, c in obj["mset"])
        if "fp" in obj:
            return (BASE, _RANK_FP, int(obj["fp"], 16))
        if "reserved" in obj:
            return reserved(*obj["reserved"])
    raise ValueError("cannot read a label term from %r" % (obj,))
