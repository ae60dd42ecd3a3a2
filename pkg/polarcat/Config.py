"""Run configuration: one flat JSON document with namespaced keys.

    >>> cfg = RunConfig.fromfile("docs/configs/end-to-end.json")
    >>> cfg.update({"experiment.seed": 7})
    >>> cfg.innerSpec()
    <InnerCodeSpec rate 1/2, ...>

Every key has a default and a help string in L{DEFAULTS}. Values are
coerced to the type of their default; unknown keys raise L{ConfigError}.
"""

import json

from .Errors import ConfigError
from .channels.fading import FadingChannelSpec
from .inner.pipeline import InnerCodeSpec
from .polar.construction import MAX_N

# key: (default, help)
DEFAULTS = {
    "polar.max_n": (MAX_N, "largest accepted exponent n"),
    "polar.n": (4, "exponent of the block length N = 2**n"),
    "polar.n_list": ([4, 6, 8, 10, 12], "exponents swept by rate-sweep"),
    "polar.K": (0, "information bits; 0 picks round(N (1 - epsilon))"),
    "polar.epsilon": (0.5, "erasure probability of the BEC"),
    "polar.epsilon_grid": ([0.01, 0.025, 0.05, 0.075, 0.1, 0.125, 0.15, 0.175, 0.2],
                           "erasure probabilities swept by rate-sweep"),
    "inner.rate": ("1/2", "inner code rate: 1/2, 2/3 or 3/4"),
    "inner.constraint_length": (5, "constraint length of the convolutional code"),
    "inner.polynomials": (["23", "33"], "generator polynomials in octal"),
    "inner.crc_polynomial": ("0x1021", "16-bit CRC generator"),
    "inner.crc_init": ("0xFFFF", "initial CRC register"),
    "inner.interleaver_rows": (20, "interleaver depth"),
    "inner.interleaver_cols": (0, "interleaver width; 0 derives it from the payload"),
    "inner.payload_bits": (220, "payload bits per inner block"),
    "channel.speed_kmh": (5.0, "mobile speed in km/h"),
    "channel.carrier_frequency": (1e9, "carrier frequency in Hz"),
    "channel.symbol_rate": (10000.0, "BPSK symbols per second"),
    "channel.snr_db": (12.0, "average Es/N0 in dB"),
    "channel.fading": (True, "Rayleigh fading; false gives plain AWGN"),
    "experiment.target_bler": (0.1, "target block error rate"),
    "experiment.targets": ([0.1, 0.3, 0.5], "target block error rates swept by rate-sweep"),
    "experiment.trials": (10000, "polar blocks per cell"),
    "experiment.blocks": (20000, "inner blocks per erasure estimate"),
    "experiment.seed": (None, "master seed; drawn from system entropy when unset"),
    "experiment.workers": (1, "worker processes"),
    "experiment.epsilon_source": ("live", "live simulation or table reference values"),
    "experiment.epsilons": ({}, "per-inner-rate epsilon overrides, e.g. {\"2/3\": 0.078}"),
    "experiment.calibration_bracket": ([0.03, 0.08], "erasure probability bracket for calibrate"),
    "experiment.points": ([], "(inner_rate, polar_rate) pairs for tradeoff"),
    "output.path": ("", "output file; empty writes to stdout"),
    "output.format": ("csv", "csv or json"),
}


def _coerce(key, value):
    default = DEFAULTS[key][0]
    try:
        if default is None:
            return None if value is None else int(value)
        if isinstance(default, bool):
            if isinstance(value, str):
                if value.lower() not in ("true", "false", "1", "0", "yes", "no"):
                    raise ValueError(value)
                return value.lower() in ("true", "1", "yes")
            return bool(value)
        if isinstance(default, int):
            if isinstance(value, float) and value != int(value):
                raise ValueError(value)
            return int(value)
        if isinstance(default, float):
            return float(value)
        if isinstance(default, str):
            return str(value)
        if isinstance(default, list):
            if not isinstance(value, (list, tuple)):
                raise ValueError(value)
            return list(value)
        if isinstance(default, dict):
            if not isinstance(value, dict):
                raise ValueError(value)
            return dict(value)
    except (TypeError, ValueError):
        raise ConfigError("%s: cannot use %r (expected %s)" % (key, value, type(default).__name__))
    return value


def _integer(key, value, base):
    if isinstance(value, int):
        return value
    try:
        return int(str(value), base)
    except ValueError:
        raise ConfigError("%s: cannot parse %r" % (key, value))


class RunConfig(object):
    """Resolved configuration of one CLI run."""

    def __init__(self, values=None):
        self.values = dict((k, v[0]) for k, v in DEFAULTS.items())
        for k in ("polar.n_list", "polar.epsilon_grid", "experiment.targets",
                  "experiment.calibration_bracket", "experiment.points", "inner.polynomials"):
            self.values[k] = list(self.values[k])
        self.values["experiment.epsilons"] = {}
        if values:
            self.update(values)

    @staticmethod
    def fromfile(filename):
        try:
            with open(filename) as fin:
                d = json.load(fin)
        except (OSError, ValueError) as e:
            raise ConfigError("cannot read configuration %s: %s" % (filename, e))
        if not isinstance(d, dict):
            raise ConfigError("configuration %s must be a JSON object" % filename)
        return RunConfig(d)

    def update(self, overrides):
        """Apply C{{key: value}}; None values are skipped."""
        for key, value in overrides.items():
            if key not in DEFAULTS:
                raise ConfigError("unknown configuration key %r" % key)
            if value is None:
                continue
            self.values[key] = _coerce(key, value)
        return self

    def __getitem__(self, key):
        if key not in self.values:
            raise ConfigError("unknown configuration key %r" % key)
        return self.values[key]

    def innerSpec(self):
        v = self.values
        return InnerCodeSpec(rate=v["inner.rate"],
                             constraint_length=v["inner.constraint_length"],
                             polynomials=tuple(_integer("inner.polynomials", p, 8)
                                               for p in v["inner.polynomials"]),
                             crc_polynomial=_integer("inner.crc_polynomial", v["inner.crc_polynomial"], 0),
                             crc_init=_integer("inner.crc_init", v["inner.crc_init"], 0),
                             interleaver_rows=v["inner.interleaver_rows"],
                             interleaver_cols=v["inner.interleaver_cols"] or None)

    def channelSpec(self):
        v = self.values
        return FadingChannelSpec(speed_kmh=v["channel.speed_kmh"],
                                 carrier_frequency=v["channel.carrier_frequency"],
                                 symbol_rate=v["channel.symbol_rate"],
                                 snr_db=v["channel.snr_db"],
                                 fading=v["channel.fading"])

    def toDict(self):
        return dict(self.values)

    def __repr__(self):
        return "<RunConfig %d keys>" % len(self.values)


def describe():
    """One C{key = default  # help} line per key."""
    return "\n".join("%s = %s  # %s" % (k, json.dumps(DEFAULTS[k][0]), DEFAULTS[k][1])
                     for k in sorted(DEFAULTS))
