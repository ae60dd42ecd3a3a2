"""The memoryless binary erasure channel seen by the polar code."""

import numpy as np

from ..Bits import asbits
from ..polar.construction import checkProbability
from .rng import asGenerator


def erasure_mask(shape, epsilon, rng):
    """Independent erasure indicators, True with probability epsilon."""
    eps = checkProbability(epsilon)
    return asGenerator(rng).random(shape) < eps


def bec_transmit(bits, epsilon, rng):
    """Pass each bit or replace it by an erasure with probability epsilon.

    @param bits     : One block or a C{(B, N)} batch
    @param rng      : L{RngSeed} or C{numpy.random.Generator}
    @return         : C{int8} ternary symbols (+1 zero, -1 one, 0 erased)
    """
    bits = asbits(bits)
    erased = erasure_mask(bits.shape, epsilon, rng)
    return np.where(erased, 0, 1 - 2 * bits.astype(np.int8)).astype(np.int8)
