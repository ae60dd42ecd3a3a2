"""Block error rate oracles for SC decoding over the BEC.

L{union_bound_bler} holds for any N. L{exact_bler_bec} enumerates every
erasure pattern and is limited to N <= 16.

A block fails when some information bit is decided on a likelihood ratio of
exactly 1. That event depends only on which positions were erased, so the
all-zero codeword is enough.
"""

import math

import numpy as np

from ..Errors import CapacityError
from .construction import bec_bhattacharyya_vector, checkProbability, reliabilityOrder
from .sc import sc_decode_batch

# Largest block length accepted by the enumeration oracle.
ENUMERATION_MAX_N = 16


def union_bound_bler(code):
    """C{min(1, sum of z over the information set)}."""
    return min(1.0, math.fsum(code.z[list(code.info_set)]))


def erasurePatterns(N):
    """All 2**N erasure patterns as a boolean C{(2**N, N)} array."""
    if N > ENUMERATION_MAX_N:
        raise CapacityError("exact enumeration supports N <= %d, got N = %d" % (ENUMERATION_MAX_N, N))
    index = np.arange(2 ** N, dtype=np.int64)[:, np.newaxis]
    shifts = np.arange(N - 1, -1, -1, dtype=np.int64)
    return ((index >> shifts) & 1).astype(bool)


def _patternWeights(patterns, epsilon):
    w = patterns.sum(axis=1)
    N = patterns.shape[1]
    return np.power(epsilon, w) * np.power(1.0 - epsilon, N - w)


def _undeterminedPositions(patterns, frozen, frozen_bits):
    received = np.where(patterns, 0, 1).astype(np.int8)
    _, undetermined = sc_decode_batch(received, frozen, frozen_bits)
    return undetermined


def exact_bler_bec(code, epsilon):
    """Exact SC block error rate of C{code} on a BEC(epsilon).

    @raise CapacityError    : For N > 16
    """
    eps = checkProbability(epsilon)
    patterns = erasurePatterns(code.N)
    undetermined = _undeterminedPositions(patterns, code.frozenMask, code.frozenBits)
    failed = undetermined.any(axis=1)
    return math.fsum(_patternWeights(patterns[failed], eps))


def exact_bler_by_k(n, epsilon):
    """Exact block error rates of every dimension of the (2**n, K) family.

    Entry K of the result is the BLER of the code whose information set is
    the K most reliable positions for C{epsilon}; entry 0 is 0.
    """
    eps = checkProbability(epsilon)
    N = 2 ** int(n)
    patterns = erasurePatterns(N)
    nothing_frozen = np.zeros(N, dtype=bool)
    undetermined = _undeterminedPositions(patterns, nothing_frozen, np.zeros(N, dtype=np.uint8))
    order = reliabilityOrder(bec_bhattacharyya_vector(n, eps))
    first = firstFailingRank(undetermined, order)
    weights = _patternWeights(patterns, eps)
    result = np.zeros(N + 1)
    for K in range(1, N + 1):
        result[K] = math.fsum(weights[first < K])
    return result


def firstFailingRank(undetermined, order):
    """Per row, the smallest reliability rank among undetermined positions.

    A row fails for every dimension K greater than this rank; rows with no
    undetermined position get N.
    """
    N = undetermined.shape[1]
    ranked = undetermined[:, order]
    has = ranked.any(axis=1)
    return np.where(has, ranked.argmax(axis=1), N)
