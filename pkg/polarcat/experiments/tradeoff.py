"""Trade-off ratio between inner code rate and polar code rate."""

import math

from ..Errors import ConfigError


class TradeoffRow(object):
    """Inner rate gain over polar rate loss for one consecutive pair.

    C{tau} is None when the polar rate did not drop; the row is kept and
    reported as undefined.
    """

    def __init__(self, inner_rate_from, inner_rate_to, polar_rate_from, polar_rate_to):
        self.inner_rate_from = float(inner_rate_from)
        self.inner_rate_to = float(inner_rate_to)
        self.polar_rate_from = float(polar_rate_from)
        self.polar_rate_to = float(polar_rate_to)
        drop = self.polar_rate_from - self.polar_rate_to
        if drop > 0:
            self.tau = (self.inner_rate_to - self.inner_rate_from) / drop
        else:
            self.tau = None

    @property
    def defined(self):
        return self.tau is not None

    @property
    def rounded(self):
        """Nearest integer, halves rounded up."""
        if self.tau is None:
            return None
        return int(math.floor(self.tau + 0.5))

    def ratio(self):
        return "undefined" if self.tau is None else "%d:1" % self.rounded

    @property
    def inner_change_pct(self):
        """Inner rate increase in percentage points."""
        return 100.0 * (self.inner_rate_to - self.inner_rate_from)

    @property
    def polar_change_pct(self):
        """Polar rate decrease in percentage points."""
        return 100.0 * (self.polar_rate_from - self.polar_rate_to)

    def toDict(self):
        return {"inner_from": self.inner_rate_from, "inner_to": self.inner_rate_to,
                "polar_from": self.polar_rate_from, "polar_to": self.polar_rate_to,
                "tau": self.tau, "tau_rounded": self.ratio(),
                "inner_change_pct": self.inner_change_pct,
                "polar_change_pct": self.polar_change_pct}

    def __repr__(self):
        return "<TradeoffRow %.6g->%.6g / %.6g->%.6g: %s>" % (
            self.inner_rate_from, self.inner_rate_to, self.polar_rate_from, self.polar_rate_to,
            self.ratio())


def tradeoff_ratio(points):
    """Consecutive-pair trade-off rows.

    @param points   : C{[(inner_rate, polar_rate), ...]}, inner rates strictly increasing
    @return         : One L{TradeoffRow} per consecutive pair
    """
    points = [(float(a), float(b)) for a, b in points]
    if len(points) < 2:
        raise ConfigError("a trade-off needs at least two (inner, polar) rate points")
    for (a, _), (b, _) in zip(points, points[1:]):
        if not b > a:
            raise ConfigError("inner rates must be strictly increasing, got %g then %g" % (a, b))
    return [TradeoffRow(a[0], b[0], a[1], b[1]) for a, b in zip(points, points[1:])]
