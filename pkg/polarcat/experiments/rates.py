"""Largest polar code rate meeting a target block error rate.

All dimensions of an (n, epsilon) cell are scored from one batch of decodes
(L{failure_counts}), so the failure count is non-decreasing in K by
construction and the scan below never has to revisit a dimension.
"""

import numpy as np

from ..Errors import ConfigError
from ..Logging import getLogger, progress
from ..polar.bounds import exact_bler_by_k
from ..polar.construction import MAX_N, checkExponent, checkProbability
from .bler import BlerEstimate, failure_counts

log = getLogger("experiments.rates")


def checkTarget(target_bler):
    target = checkProbability(target_bler, "target_bler")
    if not 0.0 < target < 1.0:
        raise ConfigError("target_bler must lie in (0, 1), got %r" % target_bler)
    return target


class RatePoint(object):
    """Result of one L{max_rate} cell.

    C{K == 0} is the sentinel for "even K = 1 misses the target"; then
    C{estimate} is None. C{beyond} is the estimate at K + 1, the witness
    that K is maximal (None when K = N).
    """

    def __init__(self, n, epsilon, target_bler, K, estimate, beyond, seed):
        self.n = n
        self.N = 2 ** n
        self.epsilon = epsilon
        self.target_bler = target_bler
        self.K = K
        self.rate = K / float(self.N)
        self.estimate = estimate
        self.beyond = beyond
        self.seed = seed

    @property
    def trials(self):
        return (self.estimate or self.beyond).trials

    def __repr__(self):
        return "<RatePoint n=%d epsilon=%g target=%g K=%d rate=%.6g>" % (
            self.n, self.epsilon, self.target_bler, self.K, self.rate)


def _largestPassing(failures, trials, target):
    """Ascending scan over K; stops once two consecutive K exceed the target."""
    best, misses = 0, 0
    for K in range(1, len(failures)):
        if failures[K] <= target * trials:
            best, misses = K, 0
        else:
            misses += 1
            if misses == 2:
                break
    return best


def _ratePoint(n, epsilon, target, failures, trials, seed):
    N = 2 ** n
    K = _largestPassing(failures, trials, target)
    estimate = BlerEstimate(trials, failures[K]) if K else None
    beyond = BlerEstimate(trials, failures[K + 1]) if K < N else None
    point = RatePoint(n, epsilon, target, K, estimate, beyond, seed)
    log.info("max_rate n=%d epsilon=%g target=%g: K=%d rate=%.6g", n, epsilon, target, K, point.rate)
    return point


def max_rate(n, epsilon, target_bler, trials, seed, workers=1, maxn=MAX_N):
    """Largest K whose estimated BLER on a BEC(epsilon) is at most the target.

    @param trials   : Blocks per dimension; every K sees the same erasures
    @return         : A L{RatePoint}
    """
    n = checkExponent(n, 1, maxn)
    epsilon = checkProbability(epsilon)
    target = checkTarget(target_bler)
    if int(trials) < 1:
        raise ConfigError("trials must be >= 1, got %r" % trials)
    failures = failure_counts(n, epsilon, trials, seed, workers, maxn)
    return _ratePoint(n, epsilon, target, failures, int(trials), seed)


def rate_sweep(n_list, epsilon_grid, target_list, trials, seed, workers=1, verbose=False, maxn=MAX_N):
    """Cartesian sweep of L{max_rate}, rows in (n, target, epsilon) order.

    Each (n, epsilon) histogram is computed once and reused for every target.
    """
    if not n_list or not epsilon_grid or not target_list:
        raise ConfigError("rate_sweep needs nonempty n, epsilon and target lists")
    n_list = [checkExponent(n, 1, maxn) for n in n_list]
    epsilon_grid = [checkProbability(e) for e in epsilon_grid]
    target_list = [checkTarget(t) for t in target_list]
    if int(trials) < 1:
        raise ConfigError("trials must be >= 1, got %r" % trials)

    rows = []
    for n in n_list:
        histograms = {}
        for epsilon in epsilon_grid:
            if epsilon not in histograms:
                histograms[epsilon] = failure_counts(n, epsilon, trials, seed, workers, maxn)
        for target in target_list:
            for epsilon in epsilon_grid:
                rows.append(_ratePoint(n, epsilon, target, histograms[epsilon], int(trials), seed))
        if verbose:
            progress(n, "N=%d done" % 2 ** n)
    return rows


def figure_family(n_list, epsilon_grid, target, trials, seed, workers=1, maxn=MAX_N):
    """Rate against epsilon at one target, one curve per block length.

    @return     : C{{n: [RatePoint, ...]}} with points in epsilon-grid order
    """
    family = dict((n, []) for n in n_list)
    for point in rate_sweep(n_list, epsilon_grid, [target], trials, seed, workers, maxn=maxn):
        family[point.n].append(point)
    return family


def exact_max_rate(n, epsilon, target_bler):
    """Largest K whose exact SC BLER is at most the target (0 if none).

    @raise CapacityError    : For N > 16
    """
    target = checkTarget(target_bler)
    bler = exact_bler_by_k(n, epsilon)
    passing = np.flatnonzero(bler[1:] <= target)
    return int(passing[-1]) + 1 if len(passing) else 0
