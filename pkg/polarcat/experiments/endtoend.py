"""The concatenated system: inner rate -> erasure probability -> polar rate."""

from ..Errors import ConfigError, PolarcatError, attachStage
from ..inner.pipeline import parseRate
from ..Logging import getLogger, progress
from ..polar.construction import MAX_N
from .erasure import DEFAULT_PAYLOAD_BITS, INNER_RATES, estimate_erasure_prob, table_epsilon
from .rates import max_rate
from .tradeoff import tradeoff_ratio

log = getLogger("experiments.endtoend")

EPSILON_SOURCES = ("live", "table")


class Budget(object):
    """Trials per polar cell and blocks per erasure estimate."""

    def __init__(self, trials=10000, blocks=20000):
        if int(trials) < 1 or int(blocks) < 1:
            raise ConfigError("budget needs trials >= 1 and blocks >= 1")
        self.trials = int(trials)
        self.blocks = int(blocks)

    def __repr__(self):
        return "<Budget trials=%d blocks=%d>" % (self.trials, self.blocks)


class EndToEndRow(object):

    def __init__(self, inner_rate, epsilon, source, erasure, point):
        self.inner_rate = inner_rate
        self.epsilon = epsilon
        self.source = source
        self.erasure = erasure
        self.point = point

    @property
    def polar_rate(self):
        return self.point.rate

    @property
    def overall_rate(self):
        return float(self.inner_rate) * self.point.rate


class EndToEndReport(object):
    """Per-inner-rate rows plus the trade-off rows derived from them."""

    def __init__(self, inner, channel, n, target_bler, seed, rows, tradeoff):
        self.inner = inner
        self.channel = channel
        self.n = n
        self.target_bler = target_bler
        self.seed = seed
        self.rows = rows
        self.tradeoff = tradeoff

    def ratePoints(self):
        return [(float(r.inner_rate), r.polar_rate) for r in self.rows]

    def toDict(self):
        rows = []
        for r in self.rows:
            row = {"inner_rate": str(r.inner_rate), "epsilon": r.epsilon, "epsilon_source": r.source,
                   "K": r.point.K, "polar_rate": r.polar_rate, "overall_rate": r.overall_rate}
            if r.erasure is not None:
                row["erasures"] = r.erasure.erasures
                row["blocks"] = r.erasure.blocks
                row["epsilon_ci95"] = list(r.erasure.ci95)
            if r.point.estimate is not None:
                row["bler_point"] = r.point.estimate.point
                row["bler_ci95"] = list(r.point.estimate.ci95)
            rows.append(row)
        return {"inner": self.inner.toDict(), "channel": self.channel.toDict(),
                "n": self.n, "N": 2 ** self.n, "target_bler": self.target_bler, "seed": self.seed,
                "rows": rows, "tradeoff": [t.toDict() for t in self.tradeoff]}


def _staged(stage, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except PolarcatError as e:
        raise attachStage(e, stage)


def end_to_end_run(inner, channel, n, target_bler, budget=None, seed=0, epsilon_source="live",
                   epsilons=None, payload_bits=DEFAULT_PAYLOAD_BITS, workers=1, verbose=False,
                   maxn=MAX_N):
    """Estimate epsilon and the polar rate for each inner rate, then the trade-off.

    @param inner            : L{InnerCodeSpec}; its rate is replaced by 1/2, 2/3 and 3/4 in turn
    @param channel          : L{FadingChannelSpec}
    @param budget           : L{Budget}
    @param epsilon_source   : C{"live"} simulates the link, C{"table"} uses L{REFERENCE_EPSILONS}
    @param epsilons         : Optional C{{rate: epsilon}} overriding either source
    @return                 : An L{EndToEndReport}
    """
    if epsilon_source not in EPSILON_SOURCES:
        raise ConfigError("epsilon_source must be one of %s, got %r"
                          % (", ".join(EPSILON_SOURCES), epsilon_source))
    budget = budget or Budget()
    forced = dict((parseRate(k), float(v)) for k, v in (epsilons or {}).items())

    rows = []
    for i, rate in enumerate(INNER_RATES):
        stage = "rate %s" % rate
        erasure = None
        if rate in forced:
            epsilon, source = forced[rate], "given"
        elif epsilon_source == "table":
            epsilon, source = _staged("epsilon[%s]" % stage, table_epsilon, channel.speed_kmh, rate), "table"
        else:
            erasure = _staged("erasure[%s]" % stage, estimate_erasure_prob, inner.withRate(rate),
                              channel, budget.blocks, seed, payload_bits, workers)
            epsilon, source = erasure.point, "live"
        point = _staged("max_rate[%s]" % stage, max_rate, n, epsilon, target_bler,
                        budget.trials, seed, workers, maxn)
        rows.append(EndToEndRow(rate, epsilon, source, erasure, point))
        log.info("%s: epsilon=%.6g (%s) polar rate=%.6g", stage, epsilon, source, point.rate)
        if verbose:
            progress(i + 1, stage)

    report_points = [(float(r.inner_rate), r.polar_rate) for r in rows]
    tradeoff = _staged("tradeoff", tradeoff_ratio, report_points)
    return EndToEndReport(inner, channel, n, target_bler, seed, rows, tradeoff)
