"""Command-line front end.

    polarcat construct --n 4 --epsilon 0.054
    polarcat bler --n 1 --k 1 --epsilon 0.5 --trials 1000000 --seed 7
    polarcat rate-sweep --config docs/configs/rate-sweep.json --workers 4 --output sweep.csv
    polarcat end-to-end --speed 50 --target 0.3 --epsilon-source table --format json

Values come from the built-in defaults, then the C{--config} file, then the
flags. Exit status: 0 ok, 2 configuration or framing error, 3 capacity error, 1 anything else.
"""

import argparse
import json
import sys
import time

from .Config import DEFAULTS, RunConfig
from .Errors import CapacityError, ConfigError, FramingError
from .IO import (BLER_COLUMNS, ENDTOEND_COLUMNS, ERASURE_COLUMNS, RATE_COLUMNS, TRADEOFF_COLUMNS,
                 blerRow, endToEndRows, erasureRows, rateRows, savecode, tradeoffRows, writeCSV,
                 writeJSON)
from .Logging import configure, getLogger
from .channels.rng import newSeed
from .experiments.bler import estimate_bler
from .experiments.endtoend import Budget, end_to_end_run
from .experiments.erasure import calibrate_snr, estimate_erasure_prob
from .experiments.rates import rate_sweep
from .experiments.tradeoff import tradeoff_ratio
from .polar.bounds import exact_bler_bec, union_bound_bler
from .polar.code import PolarCode
from .polar.construction import checkExponent

log = getLogger("cli")


def _option(parser, flag, key, **kwargs):
    default, text = DEFAULTS[key]
    kwargs.setdefault("metavar", flag.lstrip("-").replace("-", "_").upper())
    parser.add_argument(flag, dest=key, default=None,
                        help="%s (default: %s)" % (text, json.dumps(default)), **kwargs)


def _ratePair(text):
    try:
        inner, polar = text.split(":")
        return [float(inner), float(polar)]
    except ValueError:
        raise argparse.ArgumentTypeError("expected INNER:POLAR, got %r" % text)


def buildParser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="FILE", help="JSON configuration document")
    _option(common, "--seed", "experiment.seed", type=int)
    _option(common, "--workers", "experiment.workers", type=int)
    _option(common, "--output", "output.path")
    _option(common, "--format", "output.format", choices=("csv", "json"), metavar=None)
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for progress, -vv for debug output")

    parser = argparse.ArgumentParser(prog="polarcat",
                                     description="Polar codes over a fading channel degraded to an erasure channel.")
    subs = parser.add_subparsers(dest="command", metavar="COMMAND")
    subs.required = True

    p = subs.add_parser("construct", parents=[common], help="build a code and print its summary")
    _option(p, "--n", "polar.n", type=int)
    _option(p, "--epsilon", "polar.epsilon", type=float)
    _option(p, "--k", "polar.K", type=int)

    p = subs.add_parser("bler", parents=[common], help="block error rate of one code on the BEC")
    _option(p, "--n", "polar.n", type=int)
    _option(p, "--k", "polar.K", type=int)
    _option(p, "--epsilon", "polar.epsilon", type=float)
    _option(p, "--trials", "experiment.trials", type=int)
    p.add_argument("--exact", action="store_true", help="enumerate every erasure pattern (N <= 16)")

    p = subs.add_parser("rate-sweep", parents=[common], help="largest rate per (n, target, epsilon)")
    _option(p, "--n-list", "polar.n_list", type=int, nargs="+")
    _option(p, "--epsilon-grid", "polar.epsilon_grid", type=float, nargs="+")
    _option(p, "--targets", "experiment.targets", type=float, nargs="+")
    _option(p, "--trials", "experiment.trials", type=int)

    p = subs.add_parser("erasure", parents=[common], help="erasure probability of the degraded link")
    p.add_argument("--rates", nargs="+", metavar="RATE",
                   help="inner rates to measure (default: the configured inner.rate)")
    _channelOptions(p)
    _option(p, "--blocks", "experiment.blocks", type=int)
    _option(p, "--payload-bits", "inner.payload_bits", type=int)

    p = subs.add_parser("tradeoff", parents=[common], help="trade-off ratio of (inner, polar) rate pairs")
    _option(p, "--points", "experiment.points", type=_ratePair, nargs="+")

    p = subs.add_parser("end-to-end", parents=[common], help="epsilon, polar rate and trade-off per inner rate")
    _option(p, "--n", "polar.n", type=int)
    _option(p, "--target", "experiment.target_bler", type=float)
    _channelOptions(p)
    _option(p, "--trials", "experiment.trials", type=int)
    _option(p, "--blocks", "experiment.blocks", type=int)
    _option(p, "--payload-bits", "inner.payload_bits", type=int)
    _option(p, "--epsilon-source", "experiment.epsilon_source", choices=("live", "table"), metavar=None)

    p = subs.add_parser("calibrate", parents=[common], help="find the SNR putting the rate-1/2 epsilon in a bracket")
    _channelOptions(p)
    _option(p, "--blocks", "experiment.blocks", type=int)
    _option(p, "--payload-bits", "inner.payload_bits", type=int)
    _option(p, "--bracket", "experiment.calibration_bracket", type=float, nargs=2)
    return parser


def _channelOptions(p):
    _option(p, "--speed", "channel.speed_kmh", type=float)
    _option(p, "--snr-db", "channel.snr_db", type=float)
    _option(p, "--symbol-rate", "channel.symbol_rate", type=float)
    _option(p, "--interleaver-rows", "inner.interleaver_rows", type=int)


def _code(cfg):
    n = checkExponent(cfg["polar.n"], 1, cfg["polar.max_n"])
    if cfg["polar.K"]:
        return PolarCode(n, cfg["polar.epsilon"], K=cfg["polar.K"], maxn=cfg["polar.max_n"])
    return PolarCode.fromCapacity(n, cfg["polar.epsilon"], cfg["polar.max_n"])


def cmd_construct(cfg, args, seed):
    code = _code(cfg)
    z = code.z
    summary = {"n": code.n, "N": code.N, "K": code.K, "epsilon": code.epsilon, "rate": code.rate,
               "info_set": list(code.info_set), "z_min": float(z.min()), "z_max": float(z.max()),
               "z_info_max": float(z[list(code.info_set)].max()),
               "union_bound": union_bound_bler(code)}
    lines = ["N = %d, K = %d, epsilon = %g, rate = %.6g" % (code.N, code.K, code.epsilon, code.rate),
             "z: min %.6g, max %.6g, worst information channel %.6g"
             % (summary["z_min"], summary["z_max"], summary["z_info_max"]),
             "information set (0-based): {%s}" % ", ".join("%d" % i for i in code.info_set),
             "union bound on BLER: %.6g" % summary["union_bound"]]
    if cfg["output.path"]:
        savecode(code, cfg["output.path"])
    if cfg["output.format"] == "json":
        writeJSON(sys.stdout, summary)
    else:
        sys.stdout.write("\n".join(lines) + "\n")
    return cfg["output.path"] or None


def cmd_bler(cfg, args, seed):
    code = _code(cfg)
    if args.exact:
        value = exact_bler_bec(code, code.epsilon)
        row = {"n": code.n, "N": code.N, "K": code.K, "epsilon": code.epsilon, "bler_point": value,
               "bler_lo": value, "bler_hi": value}
        return _emit(cfg, BLER_COLUMNS, [row])
    estimate = estimate_bler(code.n, code.K, code.epsilon, cfg["experiment.trials"], seed,
                             cfg["experiment.workers"], cfg["polar.max_n"])
    return _emit(cfg, BLER_COLUMNS, [blerRow(code.n, code.K, code.epsilon, estimate, seed)])


def cmd_rate_sweep(cfg, args, seed):
    for n in cfg["polar.n_list"]:
        checkExponent(n, 1, cfg["polar.max_n"])
    points = rate_sweep(cfg["polar.n_list"], cfg["polar.epsilon_grid"], cfg["experiment.targets"],
                        cfg["experiment.trials"], seed, cfg["experiment.workers"],
                        verbose=args.verbose > 0, maxn=cfg["polar.max_n"])
    return _emit(cfg, RATE_COLUMNS, list(rateRows(points)))


def cmd_erasure(cfg, args, seed):
    inner = cfg.innerSpec()
    channel = cfg.channelSpec()
    estimates = [estimate_erasure_prob(inner.withRate(rate), channel, cfg["experiment.blocks"], seed,
                                       cfg["inner.payload_bits"], cfg["experiment.workers"])
                 for rate in (args.rates or [cfg["inner.rate"]])]
    return _emit(cfg, ERASURE_COLUMNS, list(erasureRows(estimates)))


def cmd_tradeoff(cfg, args, seed):
    rows = tradeoff_ratio(cfg["experiment.points"])
    return _emit(cfg, TRADEOFF_COLUMNS, list(tradeoffRows(rows)),
                 {"tradeoff": [t.toDict() for t in rows]})


def cmd_end_to_end(cfg, args, seed):
    n = checkExponent(cfg["polar.n"], 1, cfg["polar.max_n"])
    report = end_to_end_run(cfg.innerSpec(), cfg.channelSpec(), n, cfg["experiment.target_bler"],
                            Budget(cfg["experiment.trials"], cfg["experiment.blocks"]), seed,
                            epsilon_source=cfg["experiment.epsilon_source"],
                            epsilons=cfg["experiment.epsilons"],
                            payload_bits=cfg["inner.payload_bits"],
                            workers=cfg["experiment.workers"], verbose=args.verbose > 0,
                            maxn=cfg["polar.max_n"])
    if cfg["output.format"] == "json":
        return _emit(cfg, None, None, report.toDict())
    return _emit(cfg, ENDTOEND_COLUMNS, list(endToEndRows(report)),
                 extra=(TRADEOFF_COLUMNS, list(tradeoffRows(report.tradeoff))))


def cmd_calibrate(cfg, args, seed):
    snr, estimate = calibrate_snr(cfg.innerSpec(), cfg.channelSpec(), cfg["experiment.blocks"], seed,
                                  bracket=cfg["experiment.calibration_bracket"],
                                  payload_bits=cfg["inner.payload_bits"],
                                  workers=cfg["experiment.workers"])
    sys.stderr.write("calibrated snr_db = %.6g\n" % snr)
    return _emit(cfg, ERASURE_COLUMNS, list(erasureRows([estimate])))


COMMANDS = {
    "construct": cmd_construct,
    "bler": cmd_bler,
    "rate-sweep": cmd_rate_sweep,
    "erasure": cmd_erasure,
    "tradeoff": cmd_tradeoff,
    "end-to-end": cmd_end_to_end,
    "calibrate": cmd_calibrate,
}


def _write(fout, cfg, header, rows, document, extra):
    if cfg["output.format"] == "json":
        writeJSON(fout, document if document is not None else {"rows": rows})
        return
    writeCSV(fout, header, rows)
    if extra is not None:
        fout.write("\n")
        writeCSV(fout, extra[0], extra[1])


def _emit(cfg, header, rows, document=None, extra=None):
    path = cfg["output.path"]
    if not path:
        _write(sys.stdout, cfg, header, rows, document, extra)
        return None
    with open(path, "w", newline="") as fout:
        _write(fout, cfg, header, rows, document, extra)
    return path


def main(argv=None):
    parser = buildParser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    configure(args.verbose)

    try:
        cfg = RunConfig.fromfile(args.config) if args.config else RunConfig()
        cfg.update(dict((k, v) for k, v in vars(args).items() if k in DEFAULTS))
        seed = cfg["experiment.seed"]
        if seed is None:
            seed = newSeed()
            sys.stderr.write("seed %d\n" % seed)
        log.info("%s with seed %d: %s", args.command, seed, json.dumps(cfg.toDict(), sort_keys=True))
        start = time.time()
        path = COMMANDS[args.command](cfg, args, seed)
        sys.stderr.write("%s%.2f s\n" % ("wrote %s in " % path if path else "", time.time() - start))
        return 0
    except (ConfigError, FramingError) as e:
        sys.stderr.write("polarcat: configuration error: %s\n" % e)
        return 2
    except CapacityError as e:
        sys.stderr.write("polarcat: %s\n" % e)
        return 3
    except Exception as e:
        log.exception("internal failure")
        sys.stderr.write("polarcat: internal failure: %s\n" % e)
        return 1


if __name__ == "__main__":
    sys.exit(main())
