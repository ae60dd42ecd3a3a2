"""Batch polar transform and successive-cancellation decoding over the BEC.

Both kernels work on the last axis of two-dimensional arrays, one word per
row, so a Monte-Carlo chunk of trials is processed with a handful of numpy
operations per tree node instead of a Python loop per trial.

Received symbols are ternary log-likelihood signs (see L{Bits.TernarySymbol}):
the check-node update is a product and the bit-node update keeps whichever
input is known. An erasure therefore propagates exactly, and whether a
position is undetermined depends only on the erasure pattern, never on the
values decided before it.
"""

import numpy as np


def polar_transform(u):
    """Multiply by C{G_2^{(x)n}} over GF(2) with the O(N log N) butterfly.

    @param u        : Bits, shape C{(..., N)}
    @return         : A new C{uint8} array of the same shape
    """
    x = np.array(u, dtype=np.uint8, copy=True, order="C")
    N = x.shape[-1]
    lead = x.shape[:-1]
    h = 1
    while h < N:
        view = x.reshape(lead + (N // (2 * h), 2, h))
        view[..., 0, :] ^= view[..., 1, :]
        h *= 2
    return x


def sc_decode_batch(received, frozen, frozen_bits):
    """Successive cancellation on a batch of received words.

    @param received     : C{int8} ternary symbols, shape C{(B, N)}
    @param frozen       : Boolean mask of frozen positions, shape C{(N,)}
    @param frozen_bits  : Known values at frozen positions, shape C{(N,)}
    @return             : C{(u_hat, undetermined)}; C{u_hat} is C{(B, N)} uint8,
                          C{undetermined[b, i]} is True when the likelihood ratio of
                          information position i was exactly 1 (frozen positions
                          are always False)
    """
    y = np.asarray(received, dtype=np.int8)
    u, _, undetermined = _decode(y, np.asarray(frozen, dtype=bool),
                                 np.asarray(frozen_bits, dtype=np.uint8))
    return u, undetermined


def _decode(y, frozen, fbits):
    B, M = y.shape
    if frozen.all():
        u = np.broadcast_to(fbits, (B, M)).copy()
        return u, polar_transform(u), np.zeros((B, M), dtype=bool)
    if M == 1:
        # a likelihood ratio >= 1 decides 0, so an erasure yields 0
        u = (y < 0).astype(np.uint8)
        return u, u, y == 0
    h = M // 2
    y1 = y[:, :h]
    y2 = y[:, h:]
    ua, va, unda = _decode(y1 * y2, frozen[:h], fbits[:h])
    flipped = y1 * (1 - 2 * va.astype(np.int8))
    ub, vb, undb = _decode(np.where(flipped != 0, flipped, y2), frozen[h:], fbits[h:])
    u = np.concatenate((ua, ub), axis=1)
    x = np.concatenate((va ^ vb, vb), axis=1)
    return u, x, np.concatenate((unda, undb), axis=1)
