"""Monte-Carlo block error rate of polar codes on the BEC.

Randomness for a polar cell is keyed by (seed, n, chunk): erasure draws and
information bits come from separate sub-streams of the same chunk, so every
K and every epsilon at a given n sees the same uniforms. That common random
number design makes the estimated BLER non-decreasing in K and in epsilon.
"""

import math

import numpy as np
from scipy.stats import norm

from ..Bits import randombits
from ..Errors import ConfigError
from ..channels.bec import bec_transmit, erasure_mask
from ..channels.rng import RngSeed
from ..Logging import getLogger
from ..polar.bounds import firstFailingRank
from ..polar.code import PolarCode, polar_encode
from ..polar.construction import MAX_N, bec_bhattacharyya_vector, checkProbability, reliabilityOrder
from ..polar.sc import sc_decode_batch
from .scheduler import chunkSizes, runChunks

log = getLogger("experiments.bler")

# Stream ids of the two simulation families; the polar family adds n.
POLAR_STREAM = 0x504f4c00
ERASURE_STREAM = 0x45524100


def wilson(failures, trials, confidence=0.95):
    """Wilson score interval C{(lo, hi)} for a binomial proportion."""
    if trials <= 0:
        raise ConfigError("a confidence interval needs at least one trial")
    z = norm.ppf(0.5 + 0.5 * confidence)
    p = failures / float(trials)
    z2 = z * z
    denom = 1.0 + z2 / trials
    centre = (p + z2 / (2.0 * trials)) / denom
    half = z * math.sqrt(p * (1.0 - p) / trials + z2 / (4.0 * trials * trials)) / denom
    return max(0.0, min(p, centre - half)), min(1.0, max(p, centre + half))


class BlerEstimate(object):
    """Failure count over a number of trials, with its Wilson 95% interval."""

    def __init__(self, trials, failures):
        self.trials = int(trials)
        self.failures = int(failures)
        if self.trials < 1 or not 0 <= self.failures <= self.trials:
            raise ConfigError("invalid estimate: %d failures in %d trials" % (failures, trials))
        self.point = self.failures / float(self.trials)
        self.lo, self.hi = wilson(self.failures, self.trials)

    @property
    def ci95(self):
        return (self.lo, self.hi)

    @property
    def stddev(self):
        return math.sqrt(self.point * (1.0 - self.point) / self.trials)

    def __eq__(self, other):
        return (isinstance(other, BlerEstimate) and self.trials == other.trials
                and self.failures == other.failures)

    def __repr__(self):
        return "<BlerEstimate %d/%d = %.6g [%.6g, %.6g]>" % (
            self.failures, self.trials, self.point, self.lo, self.hi)


def polarStream(seed, n):
    return RngSeed(seed, POLAR_STREAM + int(n))


def _blerChunk(task):
    n, K, epsilon, seed, chunk, size, maxn = task
    code = PolarCode(n, epsilon, K=K, maxn=maxn)
    base = polarStream(seed, n).substream(chunk)
    info = randombits(base.substream(1).generator(), (size, code.K))
    received = bec_transmit(polar_encode(code, info), epsilon, base.substream(0).generator())
    u_hat, undetermined = sc_decode_batch(received, code.frozenMask, code.frozenBits)
    failed = undetermined.any(axis=1)
    index = list(code.info_set)
    assert (u_hat[~failed][:, index] == info[~failed]).all(), "SC decoded wrongly without ambiguity"
    return int(np.count_nonzero(failed))


def estimate_bler(n, K, epsilon, trials, seed, workers=1, maxn=MAX_N):
    """Encode random information, erase, SC-decode, and count ambiguous blocks.

    @param n        : Exponent of the block length
    @param K        : Information bits
    @param epsilon  : Erasure probability (also the design epsilon)
    @param trials   : Number of blocks, >= 1
    @param seed     : Master seed
    @param maxn     : Largest accepted exponent
    @return         : A L{BlerEstimate}
    """
    epsilon = checkProbability(epsilon)
    if int(trials) < 1:
        raise ConfigError("trials must be >= 1, got %r" % trials)
    PolarCode(n, epsilon, K=K, maxn=maxn)
    tasks = [(n, K, epsilon, seed, i, size, maxn) for i, size in enumerate(chunkSizes(trials))]
    failures = sum(runChunks(_blerChunk, tasks, workers))
    estimate = BlerEstimate(trials, failures)
    log.info("bler n=%d K=%d epsilon=%g: %s", n, K, epsilon, estimate)
    return estimate


def _histogramChunk(task):
    n, epsilon, seed, chunk, size, maxn = task
    N = 2 ** n
    erased = erasure_mask((size, N), epsilon, polarStream(seed, n).substream(chunk, 0).generator())
    received = np.where(erased, 0, 1).astype(np.int8)
    _, undetermined = sc_decode_batch(received, np.zeros(N, dtype=bool), np.zeros(N, dtype=np.uint8))
    order = reliabilityOrder(bec_bhattacharyya_vector(n, epsilon, maxn))
    return np.bincount(firstFailingRank(undetermined, order), minlength=N + 1)


def failure_counts(n, epsilon, trials, seed, workers=1, maxn=MAX_N):
    """Failures for every dimension K at once, on the estimate_bler streams.

    Entry K equals C{estimate_bler(n, K, epsilon, trials, seed).failures}:
    the erasure uniforms are shared, and a block fails for K exactly when
    one of the K most reliable positions is undetermined.

    @return     : Integer array of length N + 1 (entry 0 is 0)
    """
    epsilon = checkProbability(epsilon)
    PolarCode(n, epsilon, K=1, maxn=maxn)
    tasks = [(int(n), epsilon, seed, i, size, maxn) for i, size in enumerate(chunkSizes(trials))]
    histogram = np.sum(runChunks(_histogramChunk, tasks, workers), axis=0)
    return np.concatenate(([0], np.cumsum(histogram)[:-1]))
