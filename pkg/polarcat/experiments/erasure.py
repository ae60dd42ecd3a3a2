"""Erasure probability of the fading link seen through the inner chain.

Also holds reference operating points:
L{REFERENCE_EPSILONS} (erasure probability per speed and inner rate) and
L{REFERENCE_POLAR_RATES} (polar rate per speed, target BLER and inner rate, N = 16).
"""

from fractions import Fraction

import numpy as np

from ..Bits import randombits
from ..Errors import ConfigError, PolarcatError
from ..channels.rng import RngSeed
from ..inner.pipeline import parseRate, protect_blocks, recover_blocks
from ..channels.fading import MAX_SNR_DB, transmit_bpsk_fading
from ..Logging import getLogger
from .bler import ERASURE_STREAM, BlerEstimate
from .scheduler import chunkSizes, runChunks

log = getLogger("experiments.erasure")

DEFAULT_PAYLOAD_BITS = 220
ERASURE_CHUNK = 256

PEDESTRIAN_KMH = 5.0
VEHICULAR_KMH = 50.0

HALF, TWO_THIRDS, THREE_QUARTERS = Fraction(1, 2), Fraction(2, 3), Fraction(3, 4)
INNER_RATES = (HALF, TWO_THIRDS, THREE_QUARTERS)

REFERENCE_EPSILONS = {
    (PEDESTRIAN_KMH, HALF): 0.054,
    (PEDESTRIAN_KMH, TWO_THIRDS): 0.078,
    (PEDESTRIAN_KMH, THREE_QUARTERS): 0.093,
    (VEHICULAR_KMH, HALF): 0.014,
    (VEHICULAR_KMH, TWO_THIRDS): 0.035,
    (VEHICULAR_KMH, THREE_QUARTERS): 0.063,
}

REFERENCE_POLAR_RATES = {
    (PEDESTRIAN_KMH, 0.1): {HALF: 0.84, TWO_THIRDS: 0.76, THREE_QUARTERS: 0.72},
    (PEDESTRIAN_KMH, 0.3): {HALF: 0.905, TWO_THIRDS: 0.851, THREE_QUARTERS: 0.828},
    (PEDESTRIAN_KMH, 0.5): {HALF: 0.935, TWO_THIRDS: 0.9, THREE_QUARTERS: 0.88},
    (VEHICULAR_KMH, 0.1): {HALF: 0.962, TWO_THIRDS: 0.88, THREE_QUARTERS: 0.804},
    (VEHICULAR_KMH, 0.3): {HALF: 0.975, TWO_THIRDS: 0.93, THREE_QUARTERS: 0.88},
    (VEHICULAR_KMH, 0.5): {HALF: 0.98, TWO_THIRDS: 0.955, THREE_QUARTERS: 0.925},
}


def table_epsilon(speed_kmh, rate):
    """Reference erasure probability for a tabulated speed and inner rate."""
    key = (float(speed_kmh), parseRate(rate))
    if key not in REFERENCE_EPSILONS:
        raise ConfigError("no reference erasure probability for %g km/h at rate %s"
                          % (key[0], key[1]))
    return REFERENCE_EPSILONS[key]


class ErasureEstimate(BlerEstimate):
    """Erased blocks over transmitted blocks, tagged with the link it measured.

    C{undetected} counts blocks that passed the CRC with a wrong payload;
    they are not erasures and are reported separately.
    """

    def __init__(self, blocks, erasures, inner_rate, speed_kmh, snr_db, seed, undetected=0):
        BlerEstimate.__init__(self, blocks, erasures)
        self.inner_rate = inner_rate
        self.speed_kmh = speed_kmh
        self.snr_db = snr_db
        self.seed = seed
        self.undetected = int(undetected)

    @property
    def blocks(self):
        return self.trials

    @property
    def erasures(self):
        return self.failures

    @property
    def epsilon_hat(self):
        return self.point

    def __repr__(self):
        return "<ErasureEstimate rate %s at %g km/h, %g dB: %d/%d = %.6g>" % (
            self.inner_rate, self.speed_kmh, self.snr_db, self.failures, self.trials, self.point)


def _erasureChunk(task):
    inner, channel, payload_bits, seed, chunk, size = task
    base = RngSeed(seed, ERASURE_STREAM).substream(chunk)
    payloads = randombits(base.substream(0).generator(), (size, payload_bits))
    soft = transmit_bpsk_fading(protect_blocks(payloads, inner), channel, base.substream(1).generator())
    decoded, passed = recover_blocks(soft, inner)
    wrong = (decoded != payloads).any(axis=1)
    return int(np.count_nonzero(~passed)), int(np.count_nonzero(passed & wrong))


def estimate_erasure_prob(inner, channel, blocks, seed, payload_bits=DEFAULT_PAYLOAD_BITS, workers=1):
    """Fraction of blocks the inner chain erases on a fading link.

    Each block runs protect -> BPSK over fading -> recover. Chunk streams do
    not depend on the link parameters, so estimates for different rates,
    speeds or SNRs are driven by the same payload and noise draws.

    @param inner        : L{InnerCodeSpec}
    @param channel      : L{FadingChannelSpec}
    @param blocks       : Number of blocks, >= 1
    @return             : An L{ErasureEstimate}
    @raise FramingError : If C{payload_bits} does not fit the interleaver
    """
    if int(blocks) < 1:
        raise ConfigError("blocks must be >= 1, got %r" % blocks)
    inner.interleaverShape(payload_bits)
    sizes = chunkSizes(blocks, ERASURE_CHUNK)
    tasks = [(inner, channel, int(payload_bits), seed, i, size) for i, size in enumerate(sizes)]
    counts = runChunks(_erasureChunk, tasks, workers)
    erasures = sum(c[0] for c in counts)
    undetected = sum(c[1] for c in counts)
    estimate = ErasureEstimate(blocks, erasures, inner.rate, channel.speed_kmh, channel.snr_db,
                               seed, undetected)
    log.info("erasure %s: %s", channel, estimate)
    if undetected:
        log.warning("%d blocks passed the CRC with a wrong payload", undetected)
    return estimate


def calibrate_snr(inner, channel, blocks, seed, bracket=(0.03, 0.08), low=0.0, high=30.0,
                  iterations=16, payload_bits=DEFAULT_PAYLOAD_BITS, workers=1):
    """Bisect C{snr_db} until the rate-1/2 erasure estimate lands in C{bracket}.

    The erasure probability falls with SNR, so the search keeps
    C{eps(low) > bracket} and C{eps(high) < bracket}.

    @return                 : C{(snr_db, ErasureEstimate)}
    @raise PolarcatError    : If no SNR in C{[low, high]} reaches the bracket
    """
    lo_eps, hi_eps = float(bracket[0]), float(bracket[1])
    if not 0.0 <= lo_eps < hi_eps <= 1.0:
        raise ConfigError("calibration bracket must satisfy 0 <= lo < hi <= 1, got %r" % (bracket,))
    if not low < high <= MAX_SNR_DB:
        raise ConfigError("SNR search interval must satisfy low < high <= %g" % MAX_SNR_DB)
    half = inner.withRate(HALF)
    for step in range(int(iterations)):
        mid = 0.5 * (low + high)
        estimate = estimate_erasure_prob(half, channel.withSnr(mid), blocks, seed, payload_bits, workers)
        log.info("calibration step %d: %g dB -> %.6g", step, mid, estimate.point)
        if estimate.point > hi_eps:
            low = mid
        elif estimate.point < lo_eps:
            high = mid
        else:
            return mid, estimate
    raise PolarcatError("no SNR in the search interval puts the erasure probability in [%g, %g]"
                        % (lo_eps, hi_eps))
