"""Randomized checker for the refiner compatibility law.

A refiner pair (f_L, f_R) for a solution set U must satisfy

    f_R(S applied g) == (f_L(S)) applied g      for every g in U

and consequently f_L == f_R whenever U contains the identity.  The
checker replays the law on seeded random stacks with members sampled
from U, using a fresh refiner state per trial and publishing the left
stack key the way the engine does, so stateful refiners behave as they
would inside a real search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .approx import STRONG, Approximator
from .perms import Perm
from .prng import SplitMix64
from .randgen import random_stack
from .refiners import RefinerState

_ENUM_CAP = 7


class _Env:
    def __init__(self, kind: str, cap: int, orbital_cap: int):
        self.approx = Approximator(kind, cap)
        self.orbital_cap = orbital_cap
        self.left_key = None


@dataclass
class VerifyReport:
    trials: int = 0
    members_seen: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _member_pool(c, rng: SplitMix64, want: int) -> list:
    kind = getattr(c, "kind", "")
    if kind in ("group", "coset"):
        chain = c.chain
        out = [chain.random_element(rng.randbelow) for _ in range(want)]
        if kind == "coset":
            out = [g * c.rep for g in out]
        if c.contains_identity and Perm.identity(c.degree) not in out:
            out[0] = Perm.identity(c.degree)
        return out
    if c.degree > _ENUM_CAP:
        raise ValueError("cannot enumerate members at degree %d" % c.degree)
    members = [
        Perm(im) for im in permutations(range(c.degree)) if c.membership(Perm(im))
    ]
    if not members:
        return []
    return [members[rng.randbelow(len(members))] for _ in range(want)]


def verify_refiner_law(
    c,
    trials: int = 100,
    seed: int = 0,
    kind: str = STRONG,
    cap: int = 64,
    orbital_cap: int = 8,
) -> VerifyReport:
    rng = SplitMix64(seed)
    env = _Env(kind, cap, orbital_cap)
    report = VerifyReport()
    members = _member_pool(c, rng, trials)
    report.members_seen = len(set(members))
    for t in range(trials):
        if not members:
            break
        g = members[t % len(members)]
        S = random_stack(rng, c.degree)
        state = RefinerState()
        env.left_key = S.key()
        ext_l = c.left_extension(env, state, S)
        ext_r = c.right_extension(env, state, S.apply(g))
        report.trials += 1
        if ext_l.apply(g) != ext_r:
            report.failures.append(
                {"trial": t, "g": g, "stack_len": len(S), "seed": seed}
            )
    return report
