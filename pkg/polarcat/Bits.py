"""Bit blocks and ternary channel symbols.

A bit block is a one-dimensional C{numpy.uint8} array holding only 0 and 1.
Batches of blocks are two-dimensional, one block per row.

Erasure channel outputs use the sign of the log-likelihood ratio as their
value, which lets the decoder combine them with plain integer arithmetic:

    >>> TernarySymbol.ZERO, TernarySymbol.ONE, TernarySymbol.ERASED
    (1, -1, 0)
"""

from enum import IntEnum

import numpy as np

from .Errors import FramingError


class TernarySymbol(IntEnum):
    ZERO = 1
    ONE = -1
    ERASED = 0


def asbits(bits, length=None):
    """Validate and convert to a C{uint8} bit array.

    @param bits         : Any sequence (or array) of 0/1 values
    @param length       : If given, the required length of the last axis
    @return             : A C{uint8} array
    @raise FramingError : On non-binary values or a length mismatch
    """
    arr = np.asarray(bits)
    if arr.size and not np.isin(arr, (0, 1)).all():
        raise FramingError("bit block contains values other than 0 and 1")
    arr = arr.astype(np.uint8, copy=False)
    if length is not None and arr.shape[-1:] != (length,):
        raise FramingError("expected %d bits, got %d" % (length, arr.shape[-1] if arr.ndim else 0))
    return arr


def tosymbols(bits):
    """Map bits to error-free ternary symbols (0 -> ZERO, 1 -> ONE)."""
    return (1 - 2 * asbits(bits).astype(np.int8)).astype(np.int8)


def asternary(received, length=None):
    """Validate a sequence of L{TernarySymbol} values into an C{int8} array."""
    arr = np.asarray(received)
    if arr.size and not np.isin(arr, (-1, 0, 1)).all():
        raise FramingError("received word contains values outside {ZERO, ONE, ERASED}")
    arr = arr.astype(np.int8, copy=False)
    if length is not None and arr.shape[-1:] != (length,):
        raise FramingError("expected %d symbols, got %d" % (length, arr.shape[-1] if arr.ndim else 0))
    return arr


def frombytes(data):
    """Bits of a byte string, most significant bit first.

        >>> frombytes(b"1")
        array([0, 0, 1, 1, 0, 0, 0, 1], dtype=uint8)
    """
    return np.unpackbits(np.frombuffer(bytes(data), dtype=np.uint8))


def randombits(rng, shape):
    """Uniform random bits drawn from a C{numpy.random.Generator}."""
    return rng.integers(0, 2, size=shape, dtype=np.uint8)
