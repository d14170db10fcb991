"""Deterministic random numbers for graph generation.

SplitMix64 with the standard constants: a 64-bit counter-based generator
whose stream depends only on the seed, never on the platform or the Python
version.  All generators in this package draw from it so that a (family, n,
m_target, seed) tuple always yields the same graph.
"""

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    """SplitMix64 stream; 64-bit state advanced by the golden-ratio increment."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randrange(self, bound: int) -> int:
        """Uniform integer in [0, bound), rejection sampled to avoid modulo bias."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % bound

    def uniform(self) -> float:
        """Uniform float in [0, 1) built from the top 53 bits of one draw."""
        return (self.next_u64() >> 11) * 2.0**-53


def stream_seed(seed: int, attempt: int) -> int:
    """Seed for retry attempt k: user seed xor k golden-ratio increments."""
    return (seed ^ (attempt * _GOLDEN)) & MASK64
