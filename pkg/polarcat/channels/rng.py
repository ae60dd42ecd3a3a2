"""Reproducible random streams.

Every sample comes from a counter-based Philox generator keyed by
(master seed, stream id, sub-stream path). Two work units never share a
generator, so results do not depend on scheduling or worker count.
"""

import secrets

import numpy as np

from ..Errors import ConfigError

_LIMIT = 1 << 64


def _checkWord(value, name):
    if int(value) != value or not 0 <= value < _LIMIT:
        raise ConfigError("%s must be an unsigned 64-bit integer, got %r" % (name, value))
    return int(value)


class RngSeed(object):
    """A (seed, stream) pair and the generator it determines.

        >>> a = RngSeed(7, 1).generator().random()
        >>> b = RngSeed(7, 1).generator().random()
        >>> a == b
        True
    """

    def __init__(self, seed, stream=0, path=()):
        self.seed = _checkWord(seed, "seed")
        self.stream = _checkWord(stream, "stream id")
        self.path = tuple(_checkWord(p, "sub-stream id") for p in path)

    def substream(self, *ids):
        return RngSeed(self.seed, self.stream, self.path + tuple(ids))

    def generator(self):
        sequence = np.random.SeedSequence(self.seed, spawn_key=(self.stream,) + self.path)
        return np.random.Generator(np.random.Philox(sequence))

    def __eq__(self, other):
        return (isinstance(other, RngSeed) and
                (self.seed, self.stream, self.path) == (other.seed, other.stream, other.path))

    def __hash__(self):
        return hash((self.seed, self.stream, self.path))

    def __repr__(self):
        return "<RngSeed %d/%d%s>" % (self.seed, self.stream,
                                      "".join("/%d" % p for p in self.path))


def asGenerator(rng):
    """Accept an L{RngSeed} or an existing C{numpy.random.Generator}."""
    if isinstance(rng, RngSeed):
        return rng.generator()
    if isinstance(rng, np.random.Generator):
        return rng
    raise ConfigError("expected an RngSeed or numpy Generator, got %r" % (rng,))


def newSeed():
    """A fresh 64-bit master seed from system entropy."""
    return secrets.randbits(64)
