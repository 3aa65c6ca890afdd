"""Saturating lane kernels on 128-bit blocks, with a pure-Python fallback.

A block is 128 bits split into equal unsigned lanes: 16 lanes of 8 bits,
8 of 16, or 4 of 32. The public functions accept flat sequences whose length
is any multiple of the block's lane count (a padded matrix row is just
several blocks) and always return plain lists, so the two execution paths
can be compared verbatim.

Path selection: numpy's vectorised ufunc loops act as the 128-bit engine on
machines whose baseline ISA guarantees integer SIMD. Setting the environment
variable ``SEMIMAT_FORCE_SCALAR`` to anything other than "" or "0" pins the
per-lane Python implementation instead, and :func:`forced_scalar` /
:func:`forced_vector` pin the choice for a code region. The test suite and
the benchmark rely on both paths producing bit-identical results.

numpy has no saturating integer ufuncs, so the vector path uses the
branch-free rewrites ``max(a, b) - b`` for saturating subtraction and
``min(a, S - b) + b`` for saturating addition, at every width. (A wrapping
add followed by flooding the lanes that wrapped would work for the addition
as well.) The scalar path computes the definitions directly, which keeps the
two sides independent of each other.
"""

import os
import platform
from contextlib import contextmanager

import numpy as np

from .scalars import sat_limit

BLOCK_BITS = 128
FORCE_SCALAR_ENV = "SEMIMAT_FORCE_SCALAR"

_DTYPES = {8: np.uint8, 16: np.uint16, 32: np.uint32}
_SIMD_MACHINES = {"x86_64", "amd64", "i386", "i686", "aarch64", "arm64", "ppc64le"}

_forced = None  # None, "scalar" or "vector"


def lane_count(width: int) -> int:
    """Lanes per 128-bit block: 16, 8 or 4."""
    sat_limit(width)  # validates the width
    return BLOCK_BITS // width


def dtype_for(width: int):
    """numpy dtype matching a lane width."""
    sat_limit(width)
    return _DTYPES[width]


def vector_supported() -> bool:
    """True when this machine's baseline ISA includes 128-bit integer SIMD."""
    return platform.machine().lower() in _SIMD_MACHINES


def use_vector() -> bool:
    """Whether the next kernel call takes the vector path."""
    if _forced is not None:
        return _forced == "vector"
    if os.environ.get(FORCE_SCALAR_ENV, "0") not in ("", "0"):
        return False
    return vector_supported()


@contextmanager
def forced_scalar():
    """Pin the pure-Python path within the block, regardless of environment."""
    global _forced
    previous = _forced
    _forced = "scalar"
    try:
        yield
    finally:
        _forced = previous


@contextmanager
def forced_vector():
    """Pin the vector path within the block (benchmark and test helper)."""
    global _forced
    previous = _forced
    _forced = "vector"
    try:
        yield
    finally:
        _forced = previous


def _np_lanes(seq, width):
    """Coerce a flat sequence to the lane dtype, refusing silent wraparound."""
    dtype = _DTYPES[width]
    arr = np.asarray(seq)
    if arr.dtype != dtype:
        if arr.size and (arr.min() < 0 or arr.max() > sat_limit(width)):
            raise ValueError(f"lane value outside [0, {sat_limit(width)}]")
        arr = arr.astype(dtype)
    if arr.ndim != 1 or arr.size % lane_count(width):
        raise ValueError(
            f"expected a flat sequence of a multiple of {lane_count(width)} lanes"
        )
    return arr


def _py_lanes(seq, width):
    vals = seq.tolist() if isinstance(seq, np.ndarray) else list(seq)
    if len(vals) % lane_count(width):
        raise ValueError(
            f"expected a flat sequence of a multiple of {lane_count(width)} lanes"
        )
    limit = sat_limit(width)
    for v in vals:
        if not 0 <= v <= limit:
            raise ValueError(f"lane value {v} outside [0, {limit}]")
    return vals


def _pair(a, b, width):
    if use_vector():
        x, y = _np_lanes(a, width), _np_lanes(b, width)
    else:
        x, y = _py_lanes(a, width), _py_lanes(b, width)
    if len(x) != len(y):
        raise ValueError(f"lane count mismatch: {len(x)} vs {len(y)}")
    return x, y


def clonenot(value: int, width: int = 8, count: int | None = None) -> list[int]:
    """Width-complement of ``value`` copied into every lane.

    Returns one block's worth of lanes unless ``count`` (a multiple of the
    lane count) asks for more.
    """
    limit = sat_limit(width)
    block = lane_count(width)
    n = block if count is None else count
    if n <= 0 or n % block:
        raise ValueError(f"count must be a positive multiple of {block}, got {count}")
    if not 0 <= value <= limit:
        raise ValueError(f"lane value {value} outside [0, {limit}]")
    if use_vector():
        return np.invert(np.full(n, value, dtype=_DTYPES[width])).tolist()
    return [limit - value] * n


def subsat(a, b, width: int = 8) -> list[int]:
    """Lanewise saturating subtraction max(a - b, 0)."""
    x, y = _pair(a, b, width)
    if use_vector():
        return (np.maximum(x, y) - y).tolist()
    return [p - q if p > q else 0 for p, q in zip(x, y)]


def addsat(a, b, width: int = 8) -> list[int]:
    """Lanewise saturating addition min(a + b, S)."""
    x, y = _pair(a, b, width)
    limit = sat_limit(width)
    if use_vector():
        return (np.minimum(x, limit - y) + y).tolist()
    return [s if (s := p + q) < limit else limit for p, q in zip(x, y)]


def maxlanes(a, b, width: int = 8) -> list[int]:
    """Lanewise maximum."""
    x, y = _pair(a, b, width)
    if use_vector():
        return np.maximum(x, y).tolist()
    return [p if p >= q else q for p, q in zip(x, y)]


def minlanes(a, b, width: int = 8) -> list[int]:
    """Lanewise minimum."""
    x, y = _pair(a, b, width)
    if use_vector():
        return np.minimum(x, y).tolist()
    return [p if p <= q else q for p, q in zip(x, y)]


def absdiff(a, b, width: int = 8) -> list[int]:
    """Lanewise absolute difference |a - b|.

    The vector path ORs the two one-sided saturating differences, which is
    exact because at least one of them is zero in every lane.
    """
    x, y = _pair(a, b, width)
    if use_vector():
        return np.bitwise_or(np.maximum(x, y) - y, np.maximum(y, x) - x).tolist()
    return [p - q if p >= q else q - p for p, q in zip(x, y)]


# Array-level forms of the same rewrites, shared with the matrix vector paths
# (operands must already carry an unsigned dtype; broadcasting is allowed).

def np_subsat(a, b):
    return np.maximum(a, b) - b


def np_addsat(a, b, limit):
    return np.minimum(a, limit - b) + b


def np_absdiff(a, b):
    return np.bitwise_or(np_subsat(a, b), np_subsat(b, a))
