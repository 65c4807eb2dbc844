"""SplitMix64 and the seeded Fisher-Yates shuffle built on it.

Pinned behaviour, reproducible in any language with 64-bit unsigned
arithmetic:

* generator ``splitmix64/1``: ``state += 0x9E3779B97F4A7C15`` then the
  output is ``mix64(state)``. The first draw of seed ``s`` is
  ``mix64(s + GAMMA)``.
* bounded draw below ``b``: redraw while ``r >= 2**64 - (2**64 % b)``,
  then ``r % b``.
* shuffle: for ``i`` from ``len - 1`` down to ``1`` swap ``i`` with the
  bounded draw below ``i + 1``.
* seed mix ``splitmix64-finalizer(r<<32|s)/1``: the seed of repeat ``r``
  and segment ``s`` is ``base_seed ^ mix64((r << 32) | s)`` with ``r`` and
  ``s`` truncated to 32 bits.
"""
import numpy as np

GENERATOR = 'splitmix64/1'
SEED_MIX = 'splitmix64-finalizer(r<<32|s)/1'

MASK = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
_MUL1 = 0xBF58476D1CE4E5B9
_MUL2 = 0x94D049BB133111EB
_MASK32 = 0xFFFFFFFF


def mix64(value: int) -> int:
    """SplitMix64 output finalizer."""
    value &= MASK
    value = ((value ^ (value >> 30)) * _MUL1) & MASK
    value = ((value ^ (value >> 27)) * _MUL2) & MASK
    return value ^ (value >> 31)


def derive_seed(base_seed: int, repeat: int, index: int) -> int:
    """Seed of one (repeat, segment) shuffle."""
    return (base_seed ^ mix64(((repeat & _MASK32) << 32) | (index & _MASK32))) & MASK


class SplitMix64:
    """Sequential SplitMix64 stream."""

    __slots__ = ('state',)

    def __init__(self, seed: int):
        self.state = seed & MASK

    def next(self) -> int:
        self.state = (self.state + GAMMA) & MASK
        return mix64(self.state)

    def below(self, bound: int) -> int:
        """Unbiased draw in [0, bound)."""
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            draw = self.next()
            if draw < limit:
                return draw % bound


def _mix64_array(values: np.ndarray) -> np.ndarray:
    values = (values ^ (values >> np.uint64(30))) * np.uint64(_MUL1)
    values = (values ^ (values >> np.uint64(27))) * np.uint64(_MUL2)
    return values ^ (values >> np.uint64(31))


def _swap_targets(seed: int, length: int):
    """Targets of every swap, or None if any draw would be redrawn."""
    steps = np.arange(1, length, dtype=np.uint64)
    with np.errstate(over='ignore'):
        draws = _mix64_array(np.uint64(seed) + steps * np.uint64(GAMMA))
    bounds = np.arange(length, 1, -1, dtype=np.uint64)
    remainders = (np.uint64(MASK) % bounds + np.uint64(1)) % bounds
    redraw = (remainders != 0) & (draws >= np.uint64(MASK) - remainders + np.uint64(1))
    if redraw.any():
        return None
    return (draws % bounds).tolist()


def fisher_yates(values, seed: int) -> np.ndarray:
    """Return a seeded permutation of values; the input is not modified."""
    values = np.asarray(values)
    shuffled = values.tolist()
    length = len(shuffled)
    if length < 2:
        return values.copy()
    targets = _swap_targets(seed & MASK, length)
    if targets is None:
        rng = SplitMix64(seed)
        targets = [rng.below(i + 1) for i in range(length - 1, 0, -1)]
    for i, j in zip(range(length - 1, 0, -1), targets):
        shuffled[i], shuffled[j] = shuffled[j], shuffled[i]
    return np.asarray(shuffled, dtype=values.dtype)
