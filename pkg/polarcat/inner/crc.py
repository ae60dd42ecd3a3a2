"""Bitwise 16-bit CRC used as the block check sequence.

Most significant bit first, no reflection, no final XOR. With the default
polynomial 0x1021 and initial register 0xFFFF this is CRC-16/CCITT-FALSE,
whose check value over ASCII "123456789" is 0x29B1.
"""

import numpy as np

from ..Bits import asbits
from ..Errors import ConfigError, FramingError

WIDTH = 16


class CRC16(object):
    """A 16-bit CRC over bit arrays.

        >>> crc = CRC16()
        >>> "%04X" % crc.remainder(frombytes(b"123456789"))
        '29B1'

    L{remainder} and L{check} accept a single block or a C{(B, L)} batch.
    """

    def __init__(self, polynomial=0x1021, init=0xFFFF):
        for name, value in (("polynomial", polynomial), ("init", init)):
            if not 0 <= int(value) < (1 << WIDTH):
                raise ConfigError("CRC %s must fit in %d bits, got %r" % (name, WIDTH, value))
        if not int(polynomial) & 1:
            raise ConfigError("CRC polynomial needs its x^0 term, got 0x%04X" % polynomial)
        self.polynomial = int(polynomial)
        self.init = int(init)

    def remainder(self, bits):
        bits = asbits(bits)
        crc = np.full(bits.shape[:-1], self.init, dtype=np.uint32)
        poly = np.uint32(self.polynomial)
        for j in range(bits.shape[-1]):
            feedback = ((crc >> 15) & 1) ^ bits[..., j]
            crc = (crc << 1) & 0xFFFF
            crc ^= feedback.astype(np.uint32) * poly
        return crc if crc.ndim else int(crc)

    def tobits(self, value):
        """C{value} as 16 bits, most significant first; works on arrays of values."""
        value = np.asarray(value, dtype=np.uint32)
        shifts = np.arange(WIDTH - 1, -1, -1, dtype=np.uint32)
        return ((value[..., np.newaxis] >> shifts) & 1).astype(np.uint8)

    def append(self, payload):
        payload = asbits(payload)
        return np.concatenate((payload, self.tobits(self.remainder(payload))), axis=-1)

    def check(self, frame):
        frame = asbits(frame)
        if frame.shape[-1] <= WIDTH:
            raise FramingError("a CRC frame needs more than %d bits, got %d" % (WIDTH, frame.shape[-1]))
        expected = self.remainder(frame[..., :-WIDTH])
        received = np.zeros(frame.shape[:-1], dtype=np.uint32)
        for j in range(WIDTH):
            received = (received << 1) | frame[..., frame.shape[-1] - WIDTH + j]
        return expected == received

    def __repr__(self):
        return "<CRC16 poly=0x%04X init=0x%04X>" % (self.polynomial, self.init)


def crc_append(payload, spec):
    """Payload followed by its 16 CRC bits."""
    if asbits(payload).shape[-1] == 0:
        raise FramingError("cannot protect an empty payload")
    return spec.crc.append(payload)


def crc_check(frame, spec):
    """True when the trailing 16 bits match the CRC of the rest."""
    result = spec.crc.check(frame)
    return bool(result) if np.ndim(result) == 0 else result
