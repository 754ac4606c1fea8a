"""Deterministic pseudorandom sampling for bath couplings.

Randomized environments must be reproducible bit-for-bit from a 64-bit
seed, independent of platform, NumPy version, and evaluation order.  We
therefore use SplitMix64 (Steele, Lea, Flood 2014), a tiny public-domain
generator whose entire state is one 64-bit integer, instead of a library
RNG whose stream is not guaranteed stable across releases.

Stream definition, reproducible from this file alone:

    state    <- (state + 0x9E3779B97F4A7C15) mod 2^64      (per draw)
    z        <- state
    z        <- (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9     mod 2^64
    z        <- (z XOR (z >> 27)) * 0x94D049BB133111EB     mod 2^64
    output   <- z XOR (z >> 31)

Doubles in [0, 1) take the top 53 bits: (output >> 11) * 2^-53.

Row seeds for parameter sweeps are derived as
``mix64(master XOR (row * 0x9E3779B97F4A7C15) XOR (repeat * 0xD1B54A32D192ED03))``
(all mod 2^64), so any row of any repeat can be regenerated in isolation.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_REPEAT_GAMMA = 0xD1B54A32D192ED03


def mix64(z: int) -> int:
    """One SplitMix64 finalization round of a 64-bit integer."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Sequential SplitMix64 stream seeded by a 64-bit integer."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_uint64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        return mix64(self._state)

    def next_double(self) -> float:
        # Top 53 bits give a uniform double in [0, 1).
        return (self.next_uint64() >> 11) * 2.0**-53


def derive_row_seed(master_seed: int, row: int, repeat: int = 0) -> int:
    """Seed for one sweep row (and optional repeat draw), documented above."""
    base = master_seed ^ ((row * _GAMMA) & _MASK64)
    if repeat:
        base ^= (repeat * _REPEAT_GAMMA) & _MASK64
    return mix64(base)


def sample_white_noise(mu: float, f: float, seed: int, count: int) -> list[float]:
    """Draw ``count`` couplings uniformly from [|mu - f|, mu + f].

    The lower edge is |mu - f| rather than mu - f so that strengths can
    never go negative.  f = 0 collapses the interval and returns ``mu``
    exactly for every draw.
    """
    if mu < 0.0 or f < 0.0:
        raise ValueError(f"white-noise parameters must be >= 0, got mu={mu}, f={f}")
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    lo = abs(mu - f)
    width = (mu + f) - lo
    rng = SplitMix64(seed)
    return [lo + width * rng.next_double() for _ in range(count)]
