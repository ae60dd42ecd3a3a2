"""Channel polarization over the binary erasure channel.

Bit channels are numbered in the natural order of C{G_2^{(x)n}}: index
C{i} is row C{i} of L{build_generator}, and the Bhattacharyya recursion
lists the "minus" (degraded) child before the "plus" (upgraded) child at
every level. No bit-reversal permutation is applied anywhere, so the
construction, the encoder and the SC decoder agree on one ordering.
"""

import numpy as np

from ..Errors import ConfigError

# Largest exponent accepted by the constructions; N = 4096.
MAX_N = 12

# Above this size the generator is never materialized.
MATERIALIZE_MAX_N = 10

G2 = np.array([[1, 0], [1, 1]], dtype=np.uint8)


def checkExponent(n, low=0, maxn=MAX_N):
    if int(n) != n or n < low:
        raise ConfigError("exponent n must be an integer >= %d, got %r" % (low, n))
    if n > maxn:
        raise ConfigError("exponent n=%d exceeds the configured maximum %d" % (n, maxn))
    return int(n)


def checkProbability(epsilon, name="epsilon"):
    try:
        eps = float(epsilon)
    except (TypeError, ValueError):
        raise ConfigError("%s must be a real number, got %r" % (name, epsilon))
    if not 0.0 <= eps <= 1.0:
        raise ConfigError("%s must lie in [0, 1], got %r" % (name, epsilon))
    return eps


def build_generator(n, maxn=MAX_N):
    """The polar transform C{G_2^{(x)n}} over GF(2).

        >>> build_generator(1)
        array([[1, 0],
               [1, 1]], dtype=uint8)

    @param n        : Exponent, C{N = 2**n}; C{n = 0} gives C{[[1]]}
    @param maxn     : Configuration maximum for n
    @return         : C{N x N} C{uint8} matrix; row i encodes the unit vector at i
    """
    n = checkExponent(n, 0, maxn)
    g = np.ones((1, 1), dtype=np.uint8)
    for _ in range(n):
        g = np.kron(G2, g)
    return g


def bec_bhattacharyya_vector(n, epsilon, maxn=MAX_N):
    """Bhattacharyya parameters of the C{2**n} synthetic erasure channels.

    Applies C{z- = 2z - z**2} and C{z+ = z**2} n times starting at
    C{z = epsilon}. Interleaving the children at each step puts the first
    split in the most significant index bit, which is the row order of
    L{build_generator}.

        >>> bec_bhattacharyya_vector(2, 0.5)
        array([0.9375, 0.5625, 0.4375, 0.0625])
    """
    n = checkExponent(n, 1, maxn)
    z = np.array([checkProbability(epsilon)], dtype=np.float64)
    for _ in range(n):
        z = np.stack((2.0 * z - z * z, z * z), axis=1).reshape(-1)
    return z


def bec_capacity(epsilon):
    """Symmetric capacity of the BEC, C{1 - epsilon}."""
    return 1.0 - checkProbability(epsilon)


def select_information_set(z, K):
    """Indices of the K smallest Bhattacharyya parameters.

    Ties go to the smaller index (stable sort), so the result does not
    depend on the platform.

    @return         : Sorted tuple of K 0-based indices
    @raise ConfigError : If K is not in 1..N
    """
    z = np.asarray(z, dtype=np.float64)
    N = len(z)
    if int(K) != K or not 1 <= K <= N:
        raise ConfigError("K must be an integer in 1..%d, got %r" % (N, K))
    order = reliabilityOrder(z)
    return tuple(sorted(int(i) for i in order[:int(K)]))


def reliabilityOrder(z):
    """All indices, most reliable first (ascending z, ties by index)."""
    return np.argsort(np.asarray(z, dtype=np.float64), kind="stable")


def bec_transition_matrix(epsilon):
    """Transition matrix of the BEC; outputs are (0, erased, 1)."""
    eps = checkProbability(epsilon)
    return np.array([[1.0 - eps, eps, 0.0],
                     [0.0, eps, 1.0 - eps]])


def _checkTransition(transition):
    w = np.asarray(transition, dtype=np.float64)
    if w.ndim != 2 or w.shape[0] != 2:
        raise ConfigError("a B-DMC transition matrix has shape (2, |Y|), got %s" % (w.shape,))
    if (w < 0).any() or not np.allclose(w.sum(axis=1), 1.0):
        raise ConfigError("transition matrix rows must be probability vectors")
    return w


def bdmc_mutual_information(transition):
    """Symmetric capacity in bits of a binary-input DMC.

    C{I(W) = 1/2 sum_y sum_x W(y|x) log2(W(y|x) / (W(y|0)/2 + W(y|1)/2))},
    terms with C{W(y|x) = 0} contribute nothing.
    """
    w = _checkTransition(transition)
    mix = 0.5 * w[0] + 0.5 * w[1]
    total = 0.0
    for x in (0, 1):
        nz = w[x] > 0
        total += 0.5 * np.sum(w[x][nz] * np.log2(w[x][nz] / mix[nz]))
    return float(total)


def bdmc_bhattacharyya(transition):
    """Bhattacharyya parameter C{sum_y sqrt(W(y|0) W(y|1))} of a B-DMC."""
    w = _checkTransition(transition)
    return float(np.sum(np.sqrt(w[0] * w[1])))
