"""Reading and writing codes, tables and reports.

CSV output has a fixed column order, a mandatory header, floats with six
significant digits and C{\\n} line endings, so two runs with the same seed
produce byte-identical files.
"""

import csv
import json
from fractions import Fraction
from numbers import Integral, Real

from .Errors import ConfigError
from .polar.code import PolarCode
from .polar.construction import MAX_N

RATE_COLUMNS = ("n", "N", "target_bler", "epsilon", "K", "rate", "bler_point", "bler_lo", "bler_hi",
                "trials", "seed")
BLER_COLUMNS = ("n", "N", "K", "epsilon", "trials", "failures", "bler_point", "bler_lo", "bler_hi",
                "seed")
ERASURE_COLUMNS = ("inner_rate", "speed_kmh", "snr_db", "blocks", "erasures", "epsilon_hat", "lo", "hi",
                   "seed")
TRADEOFF_COLUMNS = ("inner_from", "inner_to", "polar_from", "polar_to", "tau", "tau_rounded")
ENDTOEND_COLUMNS = ("inner_rate", "speed_kmh", "epsilon", "epsilon_source", "n", "N", "target_bler", "K",
                    "polar_rate", "overall_rate", "bler_point", "bler_lo", "bler_hi", "seed")


def savecode(code, filename):
    """Write a L{PolarCode} as JSON (n, epsilon, info_set, frozen_values)."""
    with open(filename, "w") as fout:
        writeJSON(fout, code.toDict())


def loadcode(filename, maxn=MAX_N):
    """Read a code written by L{savecode}.

    z is recomputed from n and epsilon and the stored information set must
    satisfy the reliability ordering against it.

    @raise ConfigError  : Unreadable document or inconsistent information set
    """
    try:
        with open(filename) as fin:
            d = json.load(fin)
    except ValueError as e:
        raise ConfigError("%s is not a JSON polar code document: %s" % (filename, e))
    if not isinstance(d, dict):
        raise ConfigError("%s does not hold a JSON object" % filename)
    return PolarCode.fromDict(d, maxn)


def formatValue(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Integral):
        return "%d" % value
    if isinstance(value, (Real, Fraction)):
        return "%.6g" % float(value)
    return str(value)


def writeCSV(fout, header, rows):
    """Write dict rows under C{header}; missing cells are left empty."""
    writer = csv.writer(fout, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([formatValue(row.get(column)) for column in header])


def jsonable(obj):
    if isinstance(obj, dict):
        return dict((str(k), jsonable(v)) for k, v in obj.items())
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj)
    if hasattr(obj, "item") and not isinstance(obj, (str, bytes)):
        return obj.item()
    return obj


def writeJSON(fout, obj):
    json.dump(jsonable(obj), fout, sort_keys=True, indent=2)
    fout.write("\n")


def _estimateCells(estimate, prefix="bler_"):
    if estimate is None:
        return {}
    return {prefix + "point": estimate.point, prefix + "lo": estimate.lo, prefix + "hi": estimate.hi}


def rateRows(points):
    for p in points:
        row = {"n": p.n, "N": p.N, "target_bler": p.target_bler, "epsilon": p.epsilon, "K": p.K,
               "rate": p.rate, "trials": p.trials, "seed": p.seed}
        row.update(_estimateCells(p.estimate))
        yield row


def blerRow(n, K, epsilon, estimate, seed):
    row = {"n": n, "N": 2 ** n, "K": K, "epsilon": epsilon, "trials": estimate.trials,
           "failures": estimate.failures, "seed": seed}
    row.update(_estimateCells(estimate))
    return row


def erasureRows(estimates):
    for e in estimates:
        yield {"inner_rate": e.inner_rate, "speed_kmh": e.speed_kmh, "snr_db": e.snr_db,
               "blocks": e.blocks, "erasures": e.erasures, "epsilon_hat": e.point,
               "lo": e.lo, "hi": e.hi, "seed": e.seed}


def tradeoffRows(rows):
    for t in rows:
        yield {"inner_from": t.inner_rate_from, "inner_to": t.inner_rate_to,
               "polar_from": t.polar_rate_from, "polar_to": t.polar_rate_to,
               "tau": "undefined" if t.tau is None else t.tau, "tau_rounded": t.ratio()}


def endToEndRows(report):
    for r in report.rows:
        row = {"inner_rate": r.inner_rate, "speed_kmh": report.channel.speed_kmh, "epsilon": r.epsilon,
               "epsilon_source": r.source, "n": report.n, "N": 2 ** report.n,
               "target_bler": report.target_bler, "K": r.point.K, "polar_rate": r.polar_rate,
               "overall_rate": r.overall_rate, "seed": report.seed}
        row.update(_estimateCells(r.point.estimate))
        yield row
