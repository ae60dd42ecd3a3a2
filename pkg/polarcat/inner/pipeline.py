"""The inner chain that turns a fading link into an erasure channel.

Transmit: CRC -> convolutional encoding -> puncturing -> interleaving.
Receive: deinterleaving -> depuncturing -> Viterbi -> CRC check; a block whose
check fails is discarded as a whole and reported as an erasure.

Block sizes are never padded. L{InnerCodeSpec.channelLength} gives the exact
number of channel bits a payload produces, and a payload that does not fit
the interleaver raises a L{FramingError} naming the sizes that would.
"""

from fractions import Fraction

import numpy as np

from ..Bits import asbits
from ..Errors import ConfigError, FramingError
from .convolutional import Trellis, conv_encode, depuncture, puncture, viterbi_decode_batch
from .crc import CRC16, WIDTH, crc_append
from .interleaver import deinterleave, interleave

MOTHER_RATE = Fraction(1, 2)

PUNCTURE_PATTERNS = {
    Fraction(1, 2): (1, 1),
    Fraction(2, 3): (1, 1, 1, 0),
    Fraction(3, 4): (1, 1, 1, 0, 0, 1),
}


def parseRate(rate):
    """C{"2/3"}, C{0.667}, C{Fraction(2, 3)} -> C{Fraction(2, 3)}.

    Decimal forms snap to the nearest supported rate within 0.01.
    """
    if isinstance(rate, str) and "/" in rate:
        try:
            return Fraction(rate.strip())
        except (ValueError, ZeroDivisionError):
            raise ConfigError("cannot parse code rate %r" % rate)
    try:
        value = float(rate)
    except (TypeError, ValueError):
        raise ConfigError("cannot parse code rate %r" % (rate,))
    for known in PUNCTURE_PATTERNS:
        if abs(float(known) - value) < 0.01:
            return known
    return Fraction(value).limit_denominator(16)


def octal(polynomial):
    return "%o" % polynomial


class InnerCodeSpec(object):
    """Configuration of the inner code, BCS and interleaver.

    @param rate                 : 1/2, 2/3 or 3/4 (any form L{parseRate} accepts)
    @param constraint_length    : Memory + 1
    @param polynomials          : Two generators, octal-style integers (0o23, 0o33)
    @param crc_polynomial       : 16-bit CRC generator
    @param crc_init             : Initial CRC register
    @param interleaver_rows     : Interleaver depth
    @param interleaver_cols     : Interleaver width; None derives it from the payload size
    @param puncture_pattern     : Overrides the standard mask for C{rate}
    """

    def __init__(self, rate="1/2", constraint_length=5, polynomials=(0o23, 0o33),
                 crc_polynomial=0x1021, crc_init=0xFFFF, interleaver_rows=20,
                 interleaver_cols=None, puncture_pattern=None):
        self.rate = parseRate(rate)
        self.constraint_length = int(constraint_length)
        if self.constraint_length < 2:
            raise ConfigError("constraint length must be at least 2, got %d" % self.constraint_length)
        self.polynomials = tuple(int(p) for p in polynomials)
        self._checkPolynomials()

        if puncture_pattern is None:
            if self.rate not in PUNCTURE_PATTERNS:
                raise ConfigError("no standard puncture pattern for rate %s; supported: %s"
                                  % (self.rate, ", ".join(str(r) for r in sorted(PUNCTURE_PATTERNS))))
            puncture_pattern = PUNCTURE_PATTERNS[self.rate]
        self.puncture_pattern = tuple(int(b) for b in puncture_pattern)
        self._checkPattern()

        self.crc = CRC16(crc_polynomial, crc_init)
        self.crc_polynomial = self.crc.polynomial
        self.crc_init = self.crc.init
        self.interleaver_rows = int(interleaver_rows)
        self.interleaver_cols = None if interleaver_cols is None else int(interleaver_cols)
        if self.interleaver_rows < 1 or (self.interleaver_cols is not None and self.interleaver_cols < 1):
            raise ConfigError("interleaver dimensions must be positive")
        self.trellis = Trellis(self.polynomials, self.constraint_length)

    def _checkPolynomials(self):
        K = self.constraint_length
        if len(self.polynomials) != 2:
            raise ConfigError("the mother code needs exactly two polynomials")
        for p in self.polynomials:
            if not 0 < p < (1 << K) or not p >> (K - 1) or not p & 1:
                raise ConfigError("polynomial %s is not of degree %d with its D^0 tap set"
                                  % (octal(p), K - 1))

    def _checkPattern(self):
        pattern = self.puncture_pattern
        if not pattern or len(pattern) % 2 or set(pattern) - {0, 1}:
            raise ConfigError("puncture pattern must be a 0/1 mask over whole output pairs")
        if Fraction(sum(pattern), len(pattern)) != MOTHER_RATE / self.rate:
            raise ConfigError("pattern %s keeps %d/%d bits; rate %s needs %s"
                              % (self.patternString(), sum(pattern), len(pattern),
                                 self.rate, MOTHER_RATE / self.rate))

    def patternString(self):
        return "".join("%d" % b for b in self.puncture_pattern)

    @property
    def memory(self):
        return self.constraint_length - 1

    def messageLength(self, payload_bits):
        """Payload plus CRC; the Viterbi message length."""
        return int(payload_bits) + WIDTH

    def motherLength(self, payload_bits):
        return 2 * (self.messageLength(payload_bits) + self.memory)

    def _lengthOrNone(self, payload_bits):
        L = self.motherLength(payload_bits)
        P = len(self.puncture_pattern)
        if L % P:
            return None
        return L // P * sum(self.puncture_pattern)

    def _shapeOrNone(self, payload_bits):
        length = self._lengthOrNone(payload_bits)
        if length is None:
            return None
        rows = self.interleaver_rows
        cols = self.interleaver_cols
        if cols is None:
            if length % rows:
                return None
            cols = length // rows
        return (rows, cols) if rows * cols == length else None

    def channelLength(self, payload_bits):
        """Channel bits produced by one payload.

        @raise FramingError : If the mother codeword is not a whole number of puncture periods
        """
        length = self._lengthOrNone(payload_bits)
        if length is None:
            raise FramingError("payload of %d bits gives %d mother-code bits, not a multiple of the "
                               "puncture period %d; compatible payload sizes: %s"
                               % (payload_bits, self.motherLength(payload_bits),
                                  len(self.puncture_pattern), self._near(payload_bits)))
        return length

    def interleaverShape(self, payload_bits):
        """C{(rows, cols)} for a payload size, checked against the framing.

        @raise FramingError : With the nearest payload sizes that would fit
        """
        length = self.channelLength(payload_bits)
        shape = self._shapeOrNone(payload_bits)
        if shape is None:
            raise FramingError("payload of %d bits gives %d channel bits which do not fill a "
                               "%d x %s interleaver; compatible payload sizes: %s"
                               % (payload_bits, length, self.interleaver_rows,
                                  "auto" if self.interleaver_cols is None else self.interleaver_cols,
                                  self._near(payload_bits)))
        return shape

    def payloadFor(self, channel_length):
        """Inverse of L{channelLength}."""
        kept = sum(self.puncture_pattern)
        P = len(self.puncture_pattern)
        if channel_length % kept:
            raise FramingError("%d channel bits is not a whole number of puncture periods"
                               % channel_length)
        mother = channel_length // kept * P
        return mother // 2 - self.memory - WIDTH

    def requiredPayloads(self, low=1, high=4096):
        """Payload sizes in C{[low, high]} that fit this interleaver exactly."""
        return [p for p in range(max(1, low), high + 1) if self._shapeOrNone(p) is not None]

    def _near(self, payload_bits):
        candidates = self.requiredPayloads(max(1, payload_bits - 64), payload_bits + 64)
        candidates.sort(key=lambda p: (abs(p - payload_bits), p))
        return ", ".join("%d" % p for p in sorted(candidates[:4])) or "none nearby"

    def withRate(self, rate):
        return InnerCodeSpec(rate, self.constraint_length, self.polynomials, self.crc_polynomial,
                             self.crc_init, self.interleaver_rows, self.interleaver_cols)

    def describe(self):
        return ("rate %s, K=%d, polynomials (%s) octal, puncture %s, CRC poly 0x%04X init 0x%04X, "
                "interleaver %d rows x %s cols"
                % (self.rate, self.constraint_length, ", ".join(octal(p) for p in self.polynomials),
                   self.patternString(), self.crc_polynomial, self.crc_init, self.interleaver_rows,
                   "auto" if self.interleaver_cols is None else self.interleaver_cols))

    def toDict(self):
        return {"rate": str(self.rate),
                "constraint_length": self.constraint_length,
                "polynomials": [octal(p) for p in self.polynomials],
                "puncture_pattern": list(self.puncture_pattern),
                "crc_polynomial": "0x%04X" % self.crc_polynomial,
                "crc_init": "0x%04X" % self.crc_init,
                "interleaver_rows": self.interleaver_rows,
                "interleaver_cols": self.interleaver_cols}

    def __repr__(self):
        return "<InnerCodeSpec %s>" % self.describe()


class BlockOutcome(object):
    """Either a recovered payload or an erasure marker."""

    def __init__(self, payload=None):
        self.payload = payload

    @property
    def erased(self):
        return self.payload is None

    @staticmethod
    def erasure():
        return BlockOutcome(None)

    def __repr__(self):
        if self.erased:
            return "<BlockOutcome erased>"
        return "<BlockOutcome payload of %d bits>" % len(self.payload)


def protect_blocks(payloads, spec):
    """Transmit chain on a C{(B, P)} batch of payloads; returns C{(B, rows*cols)} bits."""
    payloads = np.atleast_2d(asbits(payloads))
    P = payloads.shape[-1]
    if P == 0:
        raise FramingError("cannot protect an empty payload")
    rows, cols = spec.interleaverShape(P)
    coded = puncture(conv_encode(crc_append(payloads, spec), spec), spec)
    return interleave(coded, rows, cols)


def protect_block(payload, spec):
    """CRC, encode, puncture and interleave one payload.

    @return             : Exactly C{rows * cols} channel bits
    @raise FramingError : If the payload size does not fit the interleaver
    """
    payload = asbits(payload)
    if payload.ndim != 1:
        raise FramingError("protect_block takes one payload; use protect_blocks")
    return protect_blocks(payload[np.newaxis], spec)[0]


def recover_blocks(soft, spec):
    """Receive chain on a C{(B, rows*cols)} batch of LLRs.

    @return     : C{(payloads, passed)}: decoded payloads C{(B, P)} and the
                  boolean CRC verdict per block
    """
    soft = np.atleast_2d(np.asarray(soft, dtype=np.float64))
    length = soft.shape[-1]
    payload_bits = spec.payloadFor(length)
    if payload_bits < 1:
        raise FramingError("%d channel bits are too few for any payload" % length)
    rows, cols = spec.interleaverShape(payload_bits)
    mother = depuncture(deinterleave(soft, rows, cols), spec)
    message, _ = viterbi_decode_batch(mother, spec, spec.messageLength(payload_bits))
    passed = spec.crc.check(message)
    return message[:, :payload_bits], np.atleast_1d(passed)


def recover_block(soft, spec):
    """Deinterleave, depuncture, Viterbi-decode and check one block.

    @return     : A L{BlockOutcome}, erased when the CRC fails
    """
    soft = np.asarray(soft, dtype=np.float64)
    if soft.ndim != 1:
        raise FramingError("recover_block takes one block; use recover_blocks")
    payloads, passed = recover_blocks(soft[np.newaxis], spec)
    if passed[0]:
        return BlockOutcome(payloads[0])
    return BlockOutcome.erasure()


def ideal_llrs(bits, magnitude=10.0):
    """Noise-free LLRs for a block of channel bits."""
    return magnitude * (1.0 - 2.0 * asbits(bits).astype(np.float64))
