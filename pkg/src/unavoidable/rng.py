"""Deterministic pseudo-random numbers for reproducible instance generation.

The generator is SplitMix64 (Steele, Lea, Vigna): state advances by the
64-bit odd constant 0x9E3779B97F4A7C15 and each output is finalized with
two xor-shift-multiply rounds (0xBF58476D1CE4E5B9, 0x94D049BB133111EB).
All arithmetic is modulo 2**64, so streams are identical on every
platform for a given seed.  The platform `random` module is deliberately
not used anywhere in this package.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


class SplitMix64:
    """64-bit SplitMix generator; the package-wide source of randomness."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection from the top 64-bit range."""
        if n <= 0:
            raise ValueError("randrange needs n >= 1")
        limit = _MASK - (_MASK % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] inclusive."""
        return lo + self.randrange(hi - lo + 1)

    def chance(self, num: int, den: int) -> bool:
        """True with probability num/den (exact rational, no floats)."""
        return self.randrange(den) < num

    def choice(self, seq):
        return seq[self.randrange(len(seq))]

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, seq, k: int) -> list:
        """k distinct elements, order determined by the stream."""
        pool = list(seq)
        if k > len(pool):
            raise ValueError("sample larger than population")
        out = []
        for _ in range(k):
            out.append(pool.pop(self.randrange(len(pool))))
        return out
