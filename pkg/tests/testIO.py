import io
import json

import pytest

import polarcat as pc
from polarcat import IO
from polarcat.Config import DEFAULTS, RunConfig


def setup_module():
  global code

  code = pc.PolarCode(3, 0.3, K=4, frozen_values=[0, 1, 0, 0])


def testCodeDocument(tmp_path):
  path = str(tmp_path / "code.json")
  IO.savecode(code, path)
  with open(path) as fin:
    d = json.load(fin)
  assert d["info_set"] == sorted(d["info_set"])
  assert sorted(d) == ["epsilon", "frozen_values", "info_set", "n"]
  assert IO.loadcode(path) == code


def testCodeDocumentRejected(tmp_path):
  path = tmp_path / "bad.json"
  path.write_text(json.dumps({"n": 2, "epsilon": 0.5, "info_set": [0, 1]}))
  with pytest.raises(pc.ConfigError):
    IO.loadcode(str(path))
  path.write_text(json.dumps({"n": 2, "epsilon": 0.5}))
  with pytest.raises(pc.ConfigError):
    IO.loadcode(str(path))
  path.write_text("not json")
  with pytest.raises(pc.ConfigError):
    IO.loadcode(str(path))


def testFormatValue():
  assert IO.formatValue(0.123456789) == "0.123457"
  assert IO.formatValue(1.0) == "1"
  assert IO.formatValue(12) == "12"
  assert IO.formatValue(pc.parseRate("2/3")) == "0.666667"
  assert IO.formatValue(None) == ""
  assert IO.formatValue("undefined") == "undefined"


def testWriteCSV():
  out = io.StringIO()
  rows = IO.tradeoffRows(pc.tradeoff_ratio([(0.5, 0.84), (0.667, 0.76), (0.75, 0.76)]))
  IO.writeCSV(out, IO.TRADEOFF_COLUMNS, rows)
  assert out.getvalue() == ("inner_from,inner_to,polar_from,polar_to,tau,tau_rounded\n"
                            "0.5,0.667,0.84,0.76,2.0875,2:1\n"
                            "0.667,0.75,0.76,0.76,undefined,undefined\n")


def testRateRows():
  points = pc.rate_sweep([2], [0.0], [0.1], 100, 5)
  out = io.StringIO()
  IO.writeCSV(out, IO.RATE_COLUMNS, IO.rateRows(points))
  lines = out.getvalue().splitlines()
  assert lines[0] == ",".join(IO.RATE_COLUMNS)
  cells = lines[1].split(",")
  assert cells[:8] == ["2", "4", "0.1", "0", "4", "1", "0", "0"]
  assert abs(float(cells[8]) - 0.037) < 1e-3
  assert cells[9:] == ["100", "5"]


def testWriteJSON():
  out = io.StringIO()
  IO.writeJSON(out, {"b": pc.parseRate("3/4"), "a": [1, 2]})
  assert json.loads(out.getvalue()) == {"a": [1, 2], "b": "3/4"}
  assert out.getvalue().index('"a"') < out.getvalue().index('"b"')


def testConfigDefaults():
  cfg = RunConfig()
  for key, (default, text) in DEFAULTS.items():
    assert cfg[key] == default
    assert text
  assert cfg.innerSpec().interleaverShape(220) == (20, 24)
  assert cfg.innerSpec().polynomials == (0o23, 0o33)
  assert cfg.channelSpec().speed_kmh == 5.0


def testConfigUpdate(tmp_path):
  path = tmp_path / "run.json"
  path.write_text(json.dumps({"inner.rate": "3/4", "experiment.trials": "500", "channel.fading": "false"}))
  cfg = RunConfig.fromfile(str(path))
  assert cfg["experiment.trials"] == 500
  assert cfg.channelSpec().fading is False
  cfg.update({"inner.rate": "2/3", "experiment.seed": None})
  assert cfg.innerSpec().puncture_pattern == (1, 1, 1, 0)
  assert cfg["experiment.seed"] is None
  with pytest.raises(pc.ConfigError):
    cfg.update({"polar.nn": 3})
  with pytest.raises(pc.ConfigError):
    cfg.update({"experiment.trials": 2.5})
  with pytest.raises(pc.ConfigError):
    cfg.update({"polar.n_list": 4})
  with pytest.raises(pc.ConfigError):
    RunConfig.fromfile(str(tmp_path / "missing.json"))


def testShippedConfigs():
  import glob
  import os
  here = os.path.dirname(os.path.abspath(__file__))
  paths = glob.glob(os.path.join(here, os.pardir, "docs", "configs", "*.json"))
  assert len(paths) == 7
  for path in paths:
    cfg = RunConfig.fromfile(path)
    cfg.innerSpec()
    cfg.channelSpec()
