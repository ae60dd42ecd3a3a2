"""The L{PolarCode} object and the encode/decode operations on it."""

from enum import Enum
from functools import lru_cache

import numpy as np

from ..Bits import asbits, asternary
from ..Errors import ConfigError, FramingError
from .construction import (MAX_N, MATERIALIZE_MAX_N, bec_bhattacharyya_vector,
                           build_generator, checkProbability, select_information_set)
from .sc import polar_transform, sc_decode_batch


class PolarCode(object):
    """An (N, K) polar code designed for a BEC with erasure probability epsilon.

        >>> code = PolarCode(2, 0.5, K=2)
        >>> code.info_set
        (2, 3)
        >>> code.encode([1, 1])
        array([0, 1, 0, 1], dtype=uint8)

    Indices are 0-based. The object is immutable after construction; its
    arrays are read-only and it may be shared between threads.

    @param n                : Exponent, N = 2**n, n >= 1
    @param epsilon          : Design erasure probability
    @param K                : Number of information bits (ignored if info_set is given)
    @param info_set         : Explicit information set; must satisfy the
                              ordering invariant against the recomputed z
    @param frozen_values    : Either a {index: bit} map over the frozen set or a
                              sequence of N-K bits in ascending frozen-index order;
                              defaults to all zero
    """

    def __init__(self, n, epsilon, K=None, info_set=None, frozen_values=None, maxn=MAX_N):
        z = bec_bhattacharyya_vector(n, epsilon, maxn)
        z.flags.writeable = False
        self.n = int(n)
        self.maxn = int(maxn)
        self.N = len(z)
        self.epsilon = float(epsilon)
        self.z = z

        if info_set is None:
            if K is None:
                raise ConfigError("either K or info_set is required")
            info_set = select_information_set(z, K)
        else:
            info_set = self._checkInfoSet(info_set)
        self.info_set = tuple(info_set)
        self.K = len(self.info_set)

        mask = np.ones(self.N, dtype=bool)
        mask[list(self.info_set)] = False
        mask.flags.writeable = False
        self.frozenMask = mask
        self.frozen_set = tuple(int(i) for i in np.flatnonzero(mask))
        self._info_index = np.array(self.info_set, dtype=np.intp)

        u = np.zeros(self.N, dtype=np.uint8)
        if frozen_values is not None:
            u[list(self.frozen_set)] = self._checkFrozenValues(frozen_values)
        u.flags.writeable = False
        self.frozenBits = u

    def _checkInfoSet(self, info_set):
        idx = sorted(int(i) for i in info_set)
        if len(set(idx)) != len(idx):
            raise ConfigError("information set contains duplicate indices")
        if not idx or idx[0] < 0 or idx[-1] >= self.N:
            raise ConfigError("information set must hold 1..%d indices in 0..%d" % (self.N, self.N - 1))
        frozen = np.setdiff1d(np.arange(self.N), idx)
        if len(frozen) and self.z[idx].max() > self.z[frozen].min():
            raise ConfigError("information set violates the Bhattacharyya ordering for epsilon=%g"
                              % self.epsilon)
        return idx

    def _checkFrozenValues(self, frozen_values):
        if hasattr(frozen_values, "items"):
            values = dict((int(k), v) for k, v in frozen_values.items())
            if set(values) != set(self.frozen_set):
                raise ConfigError("frozen_values must map exactly the frozen indices")
            frozen_values = [values[i] for i in self.frozen_set]
        try:
            return asbits(frozen_values, len(self.frozen_set))
        except FramingError as e:
            raise ConfigError("frozen_values: %s" % e)

    @property
    def frozen_values(self):
        return dict((i, int(self.frozenBits[i])) for i in self.frozen_set)

    @property
    def rate(self):
        return self.K / float(self.N)

    def withK(self, K):
        """Same construction and frozen convention, different dimension."""
        return PolarCode(self.n, self.epsilon, K=K, maxn=self.maxn)

    @staticmethod
    def fromCapacity(n, epsilon, maxn=MAX_N):
        """K = round(N (1 - epsilon)), clamped to 1..N."""
        N = 2 ** int(n)
        K = min(N, max(1, int(np.floor(N * (1.0 - checkProbability(epsilon)) + 0.5))))
        return PolarCode(n, epsilon, K=K, maxn=maxn)

    def encode(self, info):
        return polar_encode(self, info)

    def decode(self, received):
        return sc_decode(self, received)

    def toDict(self):
        return {"n": self.n,
                "epsilon": self.epsilon,
                "info_set": list(self.info_set),
                "frozen_values": dict(("%d" % i, b) for i, b in self.frozen_values.items())}

    @staticmethod
    def fromDict(d, maxn=MAX_N):
        try:
            return PolarCode(d["n"], d["epsilon"], info_set=d["info_set"],
                             frozen_values=d.get("frozen_values"), maxn=maxn)
        except KeyError as e:
            raise ConfigError("polar code document lacks key %s" % e)

    def __eq__(self, other):
        return (isinstance(other, PolarCode) and self.n == other.n
                and self.epsilon == other.epsilon and self.info_set == other.info_set
                and np.array_equal(self.frozenBits, other.frozenBits))

    def __hash__(self):
        return hash((self.n, self.epsilon, self.info_set))

    def __repr__(self):
        return "<PolarCode N=%d K=%d epsilon=%g>" % (self.N, self.K, self.epsilon)


class DecodeStatus(Enum):
    OK = "ok"
    AMBIGUOUS = "ambiguous"


class DecodeResult(object):
    """Information-bit estimate and whether any decision was a tie."""

    def __init__(self, info_estimate, status):
        self.info_estimate = info_estimate
        self.status = status

    @property
    def ok(self):
        return self.status is DecodeStatus.OK

    def __repr__(self):
        return "<DecodeResult %s K=%d>" % (self.status.value, len(self.info_estimate))


@lru_cache(maxsize=None)
def _generator(n):
    g = build_generator(n)
    g.flags.writeable = False
    return g


def assemble(code, info):
    """The input block u: info bits at the information set, frozen bits elsewhere."""
    info = asbits(info, code.K)
    u = np.array(np.broadcast_to(code.frozenBits, info.shape[:-1] + (code.N,)))
    u[..., code._info_index] = info
    return u


def polar_encode(code, info):
    """Codeword C{x = u G_N}.

    Up to N = 2**10 the generator rows are materialized; above that the
    butterfly computes the same product.

    @param info         : K bits, or a C{(B, K)} batch
    @raise FramingError : If the last axis is not K long
    """
    u = assemble(code, info)
    if code.n > MATERIALIZE_MAX_N or u.ndim > 1:
        return polar_transform(u)
    g = _generator(code.n)
    return ((u.astype(np.int32) @ g) & 1).astype(np.uint8)


def sc_decode(code, received):
    """Successive-cancellation decode of one received word.

    @param received     : N ternary symbols (L{Bits.TernarySymbol} values)
    @return             : A L{DecodeResult}; status is AMBIGUOUS when some
                          information bit had likelihood ratio exactly 1
    """
    y = asternary(received, code.N)
    u, undetermined = sc_decode_batch(y[np.newaxis, :], code.frozenMask, code.frozenBits)
    status = DecodeStatus.AMBIGUOUS if undetermined[0].any() else DecodeStatus.OK
    return DecodeResult(u[0, code._info_index], status)
