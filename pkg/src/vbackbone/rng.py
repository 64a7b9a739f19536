"""Portable deterministic randomness.

Everything seeded in this package goes through splitmix64 and xoshiro256**
(public-domain generators by Vigna et al. with published reference code),
so instances and experiment sweeps replay bit-for-bit on any platform and
any Python version.  The stdlib Mersenne Twister is avoided on purpose:
its float stream is not specified across implementations.

Seed derivation for experiment cells is splitmix64-style: element ``i`` of
the stream seeded by ``master`` is ``mix64(master + (i + 1) * GOLDEN)``,
which makes per-cell seeds independent of execution order.
"""

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """The splitmix64 output mixing function (finalizer)."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_seed(master: int, *path: int) -> int:
    """Derive a child seed from a master seed and an index path.

    ``derive_seed(s, i)`` equals element ``i`` (0-based) of the splitmix64
    stream seeded with ``s``; longer paths nest the derivation.  Used for
    master-seed -> cell-seed -> repetition-seed fan-out in experiments.
    """
    z = master & _MASK64
    for idx in path:
        z = mix64((z + ((idx + 1) & _MASK64) * _GOLDEN) & _MASK64)
    return z


class SplitMix64:
    """Reference splitmix64 stream; mainly used to seed xoshiro state."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return mix64(self._state)


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK64


class Xoshiro256StarStar:
    """xoshiro256** 1.0, state seeded from splitmix64 as its authors
    recommend.  Good equidistribution, trivial to port, fast enough in
    pure Python for the draw counts this package needs."""

    __slots__ = ("_s0", "_s1", "_s2", "_s3")

    def __init__(self, seed: int):
        sm = SplitMix64(seed)
        self._s0 = sm.next_u64()
        self._s1 = sm.next_u64()
        self._s2 = sm.next_u64()
        self._s3 = sm.next_u64()

    def next_u64(self) -> int:
        s0, s1, s2, s3 = self._s0, self._s1, self._s2, self._s3
        result = (_rotl((s1 * 5) & _MASK64, 7) * 9) & _MASK64
        t = (s1 << 17) & _MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        self._s0, self._s1, self._s2, self._s3 = s0, s1, s2, s3
        return result

    def next_double(self) -> float:
        """Uniform double in [0, 1) with 53 random bits (the standard
        ``(x >> 11) * 2^-53`` conversion)."""
        return (self.next_u64() >> 11) * 1.1102230246251565e-16  # 2**-53

    def state(self) -> tuple:
        return (self._s0, self._s1, self._s2, self._s3)
