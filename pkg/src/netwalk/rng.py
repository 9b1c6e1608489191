"""Counter-based random streams.

Every walker owns a 64-bit key derived by hashing its labels; the k-th
draw of that walker is ``splitmix64(key + k * GOLDEN)``. Draws therefore
depend only on (key, k), never on scheduling or thread count.
"""
import numpy as np
from numba import njit

GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
_S30 = np.uint64(30)
_S27 = np.uint64(27)
_S31 = np.uint64(31)
_S11 = np.uint64(11)
_INV53 = 1.0 / 9007199254740992.0

# walk type codes used in stream labels
RW, SAW, LMW = 1, 2, 3


@njit(cache=True, inline="always")
def mix64(z):
    z = (z ^ (z >> _S30)) * _M1
    z = (z ^ (z >> _S27)) * _M2
    return z ^ (z >> _S31)


@njit(cache=True, inline="always")
def combine(key, value):
    return mix64(key + GOLDEN + mix64(np.uint64(value)))


@njit(cache=True, inline="always")
def uniform(key, counter):
    """Double in [0, 1) for draw number ``counter`` of stream ``key``."""
    x = mix64(key + np.uint64(counter + 1) * GOLDEN)
    return float(x >> _S11) * _INV53


@njit(cache=True, inline="always")
def walker_key(base, start, walker):
    return combine(combine(base, start), walker)


def stream_base(master_seed, walk_type, memory=0):
    """Stream prefix for one (master seed, walk type, memory) triple."""
    k = _combine_py(np.uint64(master_seed & 0xFFFFFFFFFFFFFFFF), walk_type)
    return _combine_py(k, memory)


def _combine_py(key, value):
    with np.errstate(over="ignore"):
        return combine(np.uint64(key), np.uint64(value))
