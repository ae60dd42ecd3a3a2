"""Rate-1/2 feed-forward convolutional code, puncturing and soft Viterbi.

Generator polynomials are given in octal with the most significant bit as
the D^0 tap, so octal 23 = 10011 is C{1 + D^3 + D^4}. The encoder is
zero-terminated and emits the g0 and g1 outputs of each input bit in that
order. LLRs are C{log P(0)/P(1)}; a punctured position carries 0.

The trellis state holds the last K-1 inputs, the most recent one in the
most significant bit.
"""

import numpy as np

from ..Bits import asbits
from ..Errors import FramingError


def tapsOf(polynomial, constraint_length):
    """Tap vector C{[g_0, ..., g_{K-1}]} of an octal-style polynomial."""
    K = constraint_length
    return np.array([(polynomial >> (K - 1 - j)) & 1 for j in range(K)], dtype=np.uint8)


class Trellis(object):
    """Predecessor and branch-output tables of a rate-1/2 code."""

    def __init__(self, polynomials, constraint_length):
        K = constraint_length
        self.K = K
        self.states = 1 << (K - 1)
        self.taps = np.array([tapsOf(p, K) for p in polynomials])
        S = self.states
        half = (1 << (K - 2)) - 1
        # prev[ns, p]: predecessor whose oldest bit is p; the input bit is ns's MSB.
        ns = np.arange(S)
        self.inputs = (ns >> (K - 2)).astype(np.uint8)
        self.prev = np.stack([((ns & half) << 1) | p for p in (0, 1)], axis=1)
        # sign[g, ns, p] = 1 - 2 c_g on the branch prev[ns, p] -> ns
        self.sign = np.zeros((2, S, 2), dtype=np.float64)
        for g in range(2):
            for p in (0, 1):
                s = self.prev[:, p]
                c = self.taps[g, 0] * self.inputs
                for j in range(1, K):
                    c = c ^ (self.taps[g, j] * ((s >> (K - 1 - j)) & 1)).astype(np.uint8)
                self.sign[g, :, p] = 1.0 - 2.0 * c

    def __repr__(self):
        return "<Trellis K=%d states=%d>" % (self.K, self.states)


def conv_encode(bits, spec):
    """Zero-terminated rate-1/2 encoding.

        >>> conv_encode([1], InnerCodeSpec())
        array([1, 1, 0, 1, 0, 0, 1, 1, 1, 1], dtype=uint8)

    @param bits     : Message bits, one block or a C{(B, L)} batch
    @return         : C{2 (L + K - 1)} coded bits per block
    """
    bits = asbits(bits)
    if bits.shape[-1] == 0:
        raise FramingError("cannot encode an empty message")
    K = spec.constraint_length
    lead = bits.shape[:-1]
    u = np.concatenate((bits, np.zeros(lead + (K - 1,), dtype=np.uint8)), axis=-1)
    T = u.shape[-1]
    out = np.zeros(lead + (T, 2), dtype=np.uint8)
    taps = spec.trellis.taps
    for g in range(2):
        for j in np.flatnonzero(taps[g]):
            out[..., j:, g] ^= u[..., :T - j]
    return out.reshape(lead + (2 * T,))


def _pattern(spec):
    return np.asarray(spec.puncture_pattern, dtype=bool)


def puncture(coded, spec):
    """Keep the positions marked 1 in the periodic puncture pattern."""
    coded = np.asarray(coded)
    mask = _pattern(spec)
    P = len(mask)
    L = coded.shape[-1]
    if L % P:
        raise FramingError("coded length %d is not a multiple of the puncture period %d" % (L, P))
    lead = coded.shape[:-1]
    return coded.reshape(lead + (L // P, P))[..., mask].reshape(lead + (-1,))


def depuncture(soft, spec):
    """Reinsert LLR 0 at the punctured positions."""
    soft = np.asarray(soft, dtype=np.float64)
    mask = _pattern(spec)
    P = len(mask)
    kept = int(mask.sum())
    L = soft.shape[-1]
    if L % kept:
        raise FramingError("%d soft values do not fill whole puncture periods of %d kept bits"
                           % (L, kept))
    lead = soft.shape[:-1]
    out = np.zeros(lead + (L // kept, P), dtype=np.float64)
    out[..., mask] = soft.reshape(lead + (L // kept, kept))
    return out.reshape(lead + (-1,))


def viterbi_decode_batch(soft, spec, message_length):
    """Soft-decision Viterbi decoding of a batch of terminated blocks.

    Maximizes the correlation metric C{sum llr * (1 - 2c)} over paths that
    start and end in state 0. On equal metrics the survivor whose discarded
    bit is 0 wins, so an all-zero LLR input decodes to the all-zero message.

    @param soft             : C{(B, 2 (message_length + K - 1))} LLRs
    @return                 : C{(bits, metric)}: C{(B, message_length)} uint8 and C{(B,)} float
    @raise FramingError     : On a length mismatch
    """
    soft = np.atleast_2d(np.asarray(soft, dtype=np.float64))
    trellis = spec.trellis
    K = trellis.K
    T = message_length + K - 1
    if soft.shape[-1] != 2 * T:
        raise FramingError("Viterbi input needs %d LLRs for a %d-bit message, got %d"
                           % (2 * T, message_length, soft.shape[-1]))
    B = soft.shape[0]
    S = trellis.states
    prev = trellis.prev
    s0 = trellis.sign[0][np.newaxis]
    s1 = trellis.sign[1][np.newaxis]

    metric = np.full((B, S), -np.inf)
    metric[:, 0] = 0.0
    decisions = np.zeros((T, B, S), dtype=bool)
    for t in range(T):
        branch = (soft[:, 2 * t, np.newaxis, np.newaxis] * s0
                  + soft[:, 2 * t + 1, np.newaxis, np.newaxis] * s1)
        candidate = metric[:, prev] + branch
        choice = candidate[:, :, 1] > candidate[:, :, 0]
        decisions[t] = choice
        metric = np.where(choice, candidate[:, :, 1], candidate[:, :, 0])

    rows = np.arange(B)
    half = (1 << (K - 2)) - 1
    state = np.zeros(B, dtype=np.intp)
    bits = np.zeros((B, T), dtype=np.uint8)
    for t in range(T - 1, -1, -1):
        bits[:, t] = trellis.inputs[state]
        state = ((state & half) << 1) | decisions[t, rows, state]
    return bits[:, :message_length], metric[:, 0]


def viterbi_decode(soft, spec, message_length):
    """Single-block form of L{viterbi_decode_batch}; returns the message bits."""
    soft = np.asarray(soft, dtype=np.float64)
    if soft.ndim != 1:
        raise FramingError("viterbi_decode takes one block; use viterbi_decode_batch")
    bits, _ = viterbi_decode_batch(soft[np.newaxis], spec, message_length)
    return bits[0]
