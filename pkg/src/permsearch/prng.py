"""Deterministic 64-bit PRNG for reproducible benchmarks.

The generator is splitmix64.  State update and output, on 64-bit
unsigned integers:

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9   mod 2^64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB   mod 2^64
    output = z ^ (z >> 31)

Bounded draws use the multiply-shift reduction (x * n) >> 64, which maps
the 64-bit output x to [0, n) with negligible bias at benchmark sizes.
Two runs from the same seed produce identical streams on any platform.
"""

from __future__ import annotations

MASK = (1 << 64) - 1


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def randbelow(self, n: int) -> int:
        if n <= 0:
            raise ValueError("randbelow needs a positive bound")
        return (self.next_u64() * n) >> 64

    def shuffle(self, seq: list) -> None:
        # Fisher-Yates, in place.
        for i in range(len(seq) - 1, 0, -1):
            j = self.randbelow(i + 1)
            seq[i], seq[j] = seq[j], seq[i]

    def perm_images(self, degree: int) -> tuple:
        images = list(range(degree))
        self.shuffle(images)
        return tuple(images)

    def sample(self, seq, k: int) -> list:
        pool = list(seq)
        self.shuffle(pool)
        return pool[:k]

    def choice(self, seq):
        return seq[self.randbelow(len(seq))]
