"""Deterministic 64-bit random number generator (splitmix64).

Training runs, noisy sampling, and evaluations must all be reproducible
from a single integer seed, on any platform and in any reimplementation.
Rather than depending on a host library's generator, the whole toolkit
draws from splitmix64: a tiny full-period generator whose reference
outputs are easy to cross-check (seed 0 yields 0xE220A8397B1DCDAF,
0x6E789E6AA1B965F4, 0x06C45D188009454F, ...).

Draw discipline matters for reproducibility, so callers document their
draw order.  The primitives here are:

* ``next_u64``   - one raw 64-bit output.
* ``next_float`` - uniform in [0, 1) from the top 53 bits.
* ``next_below`` - unbiased integer in [0, n) via rejection sampling.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1

_GAMMA = 0x9E3779B97F4A7C15
_MIX_1 = 0xBF58476D1CE4E5B9
_MIX_2 = 0x94D049BB133111EB


class SplitMix64:
    """splitmix64 stream seeded with an arbitrary integer (reduced mod 2^64)."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX_1) & MASK64
        z = ((z ^ (z >> 27)) * _MIX_2) & MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Uniform float in [0, 1), using the top 53 bits of one output."""
        return (self.next_u64() >> 11) * 2.0**-53

    def next_below(self, n: int) -> int:
        """Unbiased uniform integer in [0, n).

        Rejection sampling: raw 64-bit draws falling in the final partial
        block of size 2^64 mod n are discarded, so every residue is
        exactly equally likely.
        """
        if n <= 0:
            raise ValueError("n must be positive")
        limit = ((MASK64 + 1) // n) * n
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n
