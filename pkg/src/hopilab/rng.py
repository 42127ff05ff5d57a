"""Pinned deterministic PRNG for instance generation and solvers.

Reproducibility across runs, platforms, and reimplementations is a test
contract here, so the generator is a fixed, documented algorithm rather
than whatever the host language ships:

* Stream generator: xoshiro256** (Blackman & Vigna), 64-bit output,
  shift/rotate update (public domain reference implementation).
* Seeding: the four 64-bit state words are the first four outputs of
  splitmix64 run from the user seed, per the xoshiro authors'
  recommendation.  Seeds are interpreted modulo 2^64.
* Bounded integers: ``randbelow(n)`` draws 64-bit words and rejects
  values >= floor(2^64 / n) * n, then reduces modulo n (unbiased).
* Floats: ``random()`` uses the top 53 bits of one output word.
* Size-r subsets: partial Fisher-Yates over the index pool, result
  returned sorted (see :meth:`Xoshiro256StarStar.sample_sorted`).

Any change to these rules is a format break for instance files and
recorded fixtures.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_SPLITMIX_GAMMA = 0x9E3779B97F4A7C15


def _splitmix_mix(z: int) -> int:
    """Output scramble of splitmix64 (Stafford mix 13)."""
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
    return z ^ (z >> 31)


def splitmix64_stream(seed: int, count: int) -> list[int]:
    """First ``count`` outputs of splitmix64 seeded at ``seed``."""
    state = seed & _MASK64
    out = []
    for _ in range(count):
        state = (state + _SPLITMIX_GAMMA) & _MASK64
        out.append(_splitmix_mix(state))
    return out


def derive_seed(seed: int, index: int) -> int:
    """Seed for the ``index``-th child stream: splitmix64 output number ``index``.

    Used to give every repetition in a batch (best-of runs, Monte Carlo
    trials) its own independent, reproducible stream.
    """
    if index < 0:
        raise ValueError("stream index must be nonnegative")
    state = (seed + (index + 1) * _SPLITMIX_GAMMA) & _MASK64
    return _splitmix_mix(state)


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK64


class Xoshiro256StarStar:
    """xoshiro256** keyed by a 64-bit seed via splitmix64 expansion."""

    __slots__ = ("_s",)

    def __init__(self, seed: int) -> None:
        self._s = splitmix64_stream(seed, 4)

    def next_u64(self) -> int:
        s = self._s
        result = (_rotl((s[1] * 5) & _MASK64, 7) * 9) & _MASK64
        t = (s[1] << 17) & _MASK64
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def randbelow(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection sampling."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        threshold = ((1 << 64) // bound) * bound
        while True:
            u = self.next_u64()
            if u < threshold:
                return u % bound

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) * 2.0**-53

    def sample_sorted(self, pool_size: int, count: int) -> list[int]:
        """Uniform size-``count`` subset of range(pool_size), sorted ascending.

        Partial Fisher-Yates: swap a uniformly chosen later element into
        each of the first ``count`` slots, then sort the prefix.
        """
        if not 0 <= count <= pool_size:
            raise ValueError("subset size out of range")
        pool = list(range(pool_size))
        for i in range(count):
            j = i + self.randbelow(pool_size - i)
            pool[i], pool[j] = pool[j], pool[i]
        return sorted(pool[:count])
