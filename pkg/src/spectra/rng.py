"""Deterministic pseudo-random numbers for reproducible noise synthesis.

The generator is a 64-bit SplitMix-style mixer feeding a Box-Muller
transform.  It is deliberately self-contained (no dependence on numpy's
bit generators) so that a reimplementation in any language with 64-bit
unsigned arithmetic reproduces the exact same noise streams.
"""

import math

import numpy as np

_MASK64 = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MIX_1 = 0xBF58476D1CE4E5B9
_MIX_2 = 0x94D049BB133111EB

# 2**-53; a 53-bit mantissa scaled by this lands in [0, 1)
_U53 = 1.0 / (1 << 53)


class SplitMix64:
    """SplitMix64 stream seeded directly with a 64-bit state.

    Every call to :meth:`next_uint64` advances the state by the golden-ratio
    increment and returns the mixed output.  Identical seeds give identical
    streams on every platform.
    """

    def __init__(self, seed: int):
        self._state = int(seed) & _MASK64

    def next_uint64(self) -> int:
        self._state = (self._state + _GOLDEN_GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX_1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX_2) & _MASK64
        return z ^ (z >> 31)

    def next_unit_open(self) -> float:
        """Uniform draw in (0, 1]: safe as the log() argument in Box-Muller."""
        return ((self.next_uint64() >> 11) + 1) * _U53

    def next_unit(self) -> float:
        """Uniform draw in [0, 1)."""
        return (self.next_uint64() >> 11) * _U53

    def normal_pair(self) -> tuple[float, float]:
        """One Box-Muller step: two independent standard normal variates.

        The radius draw comes from (0, 1] so the logarithm is finite; the
        angle draw comes from [0, 1).
        """
        u1 = self.next_unit_open()
        u2 = self.next_unit()
        radius = math.sqrt(-2.0 * math.log(u1))
        angle = 2.0 * math.pi * u2
        return radius * math.cos(angle), radius * math.sin(angle)

    def normals(self, count: int) -> np.ndarray:
        """Standard normal samples as a float64 array.

        Box-Muller produces variates in pairs; for odd ``count`` the spare
        second variate of the last pair is discarded so that streams depend
        only on (seed, count parity-free prefix).
        """
        if count < 0:
            raise ValueError("count must be non-negative")
        out = np.empty(count, dtype=np.float64)
        i = 0
        while i < count:
            a, b = self.normal_pair()
            out[i] = a
            if i + 1 < count:
                out[i + 1] = b
            i += 2
        return out
