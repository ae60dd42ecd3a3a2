"""Flat Rayleigh fading with coherent BPSK detection.

The fading process is a sum of sinusoids in the statistical form of Zheng
and Xiao: each stream draws its own angle offset and oscillator phases, the
real and imaginary parts use independent phases, and the mean power is 1.
The normalized autocorrelation of either part is C{J0(2 pi fd tau)} in
expectation over streams.
"""

import math

import numpy as np
from scipy import constants, special, stats

from ..Bits import asbits
from ..Errors import ConfigError
from .rng import asGenerator

SPEED_OF_LIGHT = constants.c

# SNRs above this are clamped so the noise variance stays positive.
MAX_SNR_DB = 60.0

OSCILLATORS = 16


class FadingChannelSpec(object):
    """Parameters of the degraded link.

    @param speed_kmh            : Mobile speed in km/h (5 pedestrian, 50 vehicular)
    @param carrier_frequency    : Carrier in Hz
    @param symbol_rate          : Channel symbols per second
    @param snr_db               : Average symbol energy to noise ratio Es/N0 in dB
    @param fading               : False gives the AWGN-only link with unit gain
    """

    def __init__(self, speed_kmh=5.0, carrier_frequency=1e9, symbol_rate=10000.0, snr_db=12.0,
                 fading=True):
        self.speed_kmh = float(speed_kmh)
        self.carrier_frequency = float(carrier_frequency)
        self.symbol_rate = float(symbol_rate)
        self.snr_db = float(snr_db)
        self.fading = bool(fading)
        if self.speed_kmh < 0:
            raise ConfigError("speed must be >= 0 km/h, got %g" % self.speed_kmh)
        if self.carrier_frequency <= 0 or self.symbol_rate <= 0:
            raise ConfigError("carrier frequency and symbol rate must be positive")
        if math.isnan(self.snr_db):
            raise ConfigError("snr_db is not a number")
        if self.fading and doppler_frequency(self) > self.symbol_rate / 2:
            raise ConfigError("Doppler %g Hz exceeds half the symbol rate %g" %
                              (doppler_frequency(self), self.symbol_rate))

    @property
    def noise_variance(self):
        """Per-dimension noise variance sigma^2 = 1 / (2 Es/N0)."""
        snr = 10.0 ** (min(self.snr_db, MAX_SNR_DB) / 10.0)
        return 1.0 / (2.0 * snr)

    def withSpeed(self, speed_kmh):
        return FadingChannelSpec(speed_kmh, self.carrier_frequency, self.symbol_rate, self.snr_db,
                                 self.fading)

    def withSnr(self, snr_db):
        return FadingChannelSpec(self.speed_kmh, self.carrier_frequency, self.symbol_rate, snr_db,
                                 self.fading)

    def toDict(self):
        return {"speed_kmh": self.speed_kmh, "carrier_frequency": self.carrier_frequency,
                "symbol_rate": self.symbol_rate, "snr_db": self.snr_db, "fading": self.fading}

    def __repr__(self):
        return "<FadingChannelSpec %g km/h, %g Hz, %g sym/s, %g dB%s>" % (
            self.speed_kmh, self.carrier_frequency, self.symbol_rate, self.snr_db,
            "" if self.fading else ", AWGN only")


def doppler_frequency(spec):
    """Maximum Doppler shift C{v f_c / c} in Hz."""
    return spec.speed_kmh / 3.6 * spec.carrier_frequency / SPEED_OF_LIGHT


def _sumOfSinusoids(fd, fs, count, gen, paths):
    """C{(paths, count)} complex gains, one independent realization per row."""
    M = OSCILLATORS
    theta = gen.uniform(-math.pi, math.pi, size=(paths, 1))
    phi = gen.uniform(-math.pi, math.pi, size=(paths, M))
    psi = gen.uniform(-math.pi, math.pi, size=(paths, M))
    alpha = (2.0 * math.pi * np.arange(1, M + 1) - math.pi + theta) / (4.0 * M)
    wt = 2.0 * math.pi * fd * np.arange(count) / fs
    real = np.zeros((paths, count))
    imag = np.zeros((paths, count))
    for m in range(M):
        real += np.cos(wt[np.newaxis, :] * np.cos(alpha[:, m:m + 1]) + phi[:, m:m + 1])
        imag += np.cos(wt[np.newaxis, :] * np.sin(alpha[:, m:m + 1]) + psi[:, m:m + 1])
    scale = math.sqrt(1.0 / M)
    return scale * (real + 1j * imag)


def _checkRates(fd, fs):
    if fs <= 0:
        raise ConfigError("sampling rate must be positive, got %g" % fs)
    if fd < 0:
        raise ConfigError("Doppler frequency must be >= 0, got %g" % fd)
    if fd > fs / 2.0:
        raise ConfigError("Doppler %g Hz is not resolvable at %g samples/s" % (fd, fs))


def fading_gains(fd, fs, count, rng, paths=None):
    """Rayleigh fading gains sampled at C{fs}.

    @param fd       : Maximum Doppler frequency, Hz
    @param fs       : Sampling (symbol) rate, samples/s
    @param count    : Samples per realization
    @param rng      : L{RngSeed} or C{numpy.random.Generator}
    @param paths    : None for one sequence, else the number of independent rows
    @raise ConfigError : If fd > fs/2
    """
    _checkRates(fd, fs)
    gains = _sumOfSinusoids(fd, fs, int(count), asGenerator(rng), 1 if paths is None else int(paths))
    return gains[0] if paths is None else gains


def transmit_bpsk_fading(bits, spec, rng):
    """BPSK over flat fading and AWGN, returning coherent-detection LLRs.

    Bit b maps to C{s = 1 - 2b}; the receiver sees C{y = a s + n} with
    C{a = |g|} known, and emits C{llr = 2 a y / sigma^2}. A C{(B, L)} batch
    gets an independent fading realization per row.
    """
    bits = asbits(bits)
    gen = asGenerator(rng)
    single = bits.ndim == 1
    block = np.atleast_2d(bits)
    B, L = block.shape
    if spec.fading:
        fd = doppler_frequency(spec)
        _checkRates(fd, spec.symbol_rate)
        a = np.abs(_sumOfSinusoids(fd, spec.symbol_rate, L, gen, B))
    else:
        a = np.ones((B, L))
    sigma2 = spec.noise_variance
    noise = gen.normal(0.0, math.sqrt(sigma2), size=(B, L))
    y = a * (1.0 - 2.0 * block) + noise
    llr = 2.0 * a * y / sigma2
    return llr[0] if single else llr


def level_crossing_rate(gains, level=None):
    """Upward crossings of C{|g|} through C{level} (default: RMS) per sample."""
    r = np.abs(np.asarray(gains))
    if level is None:
        level = math.sqrt(np.mean(r * r))
    crossings = np.count_nonzero((r[:-1] < level) & (r[1:] >= level))
    return crossings / float(len(r))


def expected_level_crossing_rate(fd, fs, level=1.0):
    """Clarke-model upward crossings per sample of C{|g|} through C{level} times its RMS."""
    return math.sqrt(2.0 * math.pi) * fd * level * math.exp(-level * level) / fs


def clarke_autocorrelation(fd, fs, lags):
    """Normalized autocorrelation C{J0(2 pi fd lag / fs)} of the real part."""
    return special.j0(2.0 * math.pi * fd * np.asarray(lags, dtype=np.float64) / fs)


def bpsk_awgn_ber(snr_db):
    """Hard-decision BPSK bit error rate on AWGN, C{Q(sqrt(2 Es/N0))}."""
    snr = 10.0 ** (min(float(snr_db), MAX_SNR_DB) / 10.0)
    return float(stats.norm.sf(math.sqrt(2.0 * snr)))
