import json
import re

import pytest

from polarcat.cli import buildParser, main


def setup_module():
  global commands

  commands = ["construct", "bler", "rate-sweep", "erasure", "tradeoff", "end-to-end", "calibrate"]


def testConstruct(capsys):
  assert main(["construct", "--n", "2", "--epsilon", "0.5", "--k", "2", "--seed", "1"]) == 0
  out = capsys.readouterr().out
  assert "information set (0-based): {2, 3}" in out
  assert "union bound on BLER: 0.5" in out
  assert main(["construct", "--n", "1", "--epsilon", "0", "--seed", "1"]) == 0
  assert "{0, 1}" in capsys.readouterr().out
  assert main(["construct", "--n", "4", "--epsilon", "0.054", "--seed", "1", "--format", "json"]) == 0
  assert json.loads(capsys.readouterr().out)["K"] == 15


def testConstructSavesCode(tmp_path, capsys):
  path = str(tmp_path / "code.json")
  assert main(["construct", "--n", "3", "--epsilon", "0.2", "--k", "5", "--seed", "1",
               "--output", path]) == 0
  with open(path) as fin:
    assert json.load(fin)["n"] == 3
  assert path in capsys.readouterr().err


def testExitCodes(capsys):
  assert main(["construct", "--n", "2", "--epsilon", "1.5", "--seed", "1"]) == 2
  assert main(["construct", "--n", "13", "--epsilon", "0.5", "--seed", "1"]) == 2
  assert main(["bler", "--n", "5", "--k", "3", "--epsilon", "0.5", "--exact", "--seed", "1"]) == 3
  assert main(["construct", "--bogus"]) == 2
  assert main(["tradeoff", "--points", "0.5:0.8", "--seed", "1"]) == 2
  capsys.readouterr()


def testBler(tmp_path):
  path = str(tmp_path / "bler.csv")
  args = ["bler", "--n", "1", "--k", "1", "--epsilon", "0.5", "--trials", "20000", "--seed", "7",
          "--output", path]
  assert main(args) == 0
  with open(path, "rb") as fin:
    first = fin.read()
  header, row = first.decode().splitlines()
  assert header == "n,N,K,epsilon,trials,failures,bler_point,bler_lo,bler_hi,seed"
  values = dict(zip(header.split(","), row.split(",")))
  assert abs(float(values["bler_point"]) - 0.25) < 0.015
  assert main(args) == 0
  with open(path, "rb") as fin:
    assert fin.read() == first


def testBlerExact(capsys):
  assert main(["bler", "--n", "2", "--k", "2", "--epsilon", "0.5", "--exact", "--seed", "1"]) == 0
  lines = capsys.readouterr().out.splitlines()
  assert lines[1].startswith("2,4,2,0.5,,,0.4375,")


def testRateSweepCardinality(tmp_path):
  path = str(tmp_path / "sweep.csv")
  assert main(["rate-sweep", "--n-list", "2", "3", "--epsilon-grid", "0.05", "0.1", "0.2",
               "--targets", "0.1", "0.3", "0.5", "--trials", "500", "--seed", "3", "--workers", "2",
               "--output", path]) == 0
  with open(path) as fin:
    lines = fin.read().splitlines()
  assert len(lines) == 1 + 2 * 3 * 3


def testTradeoffCommand(capsys):
  assert main(["tradeoff", "--points", "0.5:0.84", "0.667:0.76", "--seed", "1"]) == 0
  assert capsys.readouterr().out.splitlines()[1] == "0.5,0.667,0.84,0.76,2.0875,2:1"


def testEndToEndTable(capsys):
  assert main(["end-to-end", "--n", "3", "--target", "0.3", "--epsilon-source", "table",
               "--trials", "2000", "--seed", "5", "--format", "json"]) == 0
  report = json.loads(capsys.readouterr().out)
  assert [r["inner_rate"] for r in report["rows"]] == ["1/2", "2/3", "3/4"]
  assert len(report["tradeoff"]) == 2


def testErasureCommand(capsys):
  assert main(["erasure", "--rates", "1/2", "3/4", "--snr-db", "60", "--blocks", "200",
               "--seed", "5"]) == 0
  lines = capsys.readouterr().out.splitlines()
  assert lines[0] == "inner_rate,speed_kmh,snr_db,blocks,erasures,epsilon_hat,lo,hi,seed"
  assert lines[1].startswith("0.5,5,60,200,0,0,0,")
  assert lines[2].startswith("0.75,5,60,200,0,0,0,")


def testSeedDrawn(capsys):
  assert main(["tradeoff", "--points", "0.5:0.9", "0.6:0.8"]) == 0
  assert re.search(r"^seed \d+$", capsys.readouterr().err, re.M)


def helpText(capsys, command):
  with pytest.raises(SystemExit):
    buildParser().parse_args([command, "--help"])
  return " ".join(capsys.readouterr().out.split())


def testHelpListsDefaults(capsys):
  for command in commands:
    assert "(default: \"csv\")" in helpText(capsys, command)
  assert "(default: 0.5)" in helpText(capsys, "construct")
  assert "(default: 10000)" in helpText(capsys, "bler")
  assert "(default: [0.1, 0.3, 0.5])" in helpText(capsys, "rate-sweep")
  assert "(default: 12.0)" in helpText(capsys, "erasure")
  assert "(default: \"live\")" in helpText(capsys, "end-to-end")
  assert "(default: [0.03, 0.08])" in helpText(capsys, "calibrate")


def testOutputIndependentOfWorkers(tmp_path):
  runs = {"rate-sweep": ["--n-list", "3", "4", "--epsilon-grid", "0.05", "0.2", "--targets", "0.1", "0.5",
                         "--trials", "3000"],
          "erasure": ["--rates", "1/2", "3/4", "--blocks", "600"],
          "end-to-end": ["--n", "3", "--epsilon-source", "table", "--trials", "3000"]}
  for command, args in runs.items():
    outputs = []
    for workers in ("1", "3"):
      path = str(tmp_path / ("%s-%s.csv" % (command, workers)))
      assert main([command] + args + ["--seed", "11", "--workers", workers, "--output", path]) == 0
      with open(path, "rb") as fin:
        outputs.append(fin.read())
    assert outputs[0] == outputs[1]


def testConfiguredMaximumExponent(tmp_path, capsys):
  path = tmp_path / "wide.json"
  path.write_text(json.dumps({"polar.max_n": 13}))
  assert main(["construct", "--n", "13", "--epsilon", "0.5", "--seed", "1", "--format", "json"]) == 2
  capsys.readouterr()
  assert main(["construct", "--config", str(path), "--n", "13", "--epsilon", "0.5", "--seed", "1",
               "--format", "json"]) == 0
  assert json.loads(capsys.readouterr().out)["N"] == 8192
  assert main(["bler", "--config", str(path), "--n", "13", "--k", "100", "--epsilon", "0.5",
               "--trials", "8", "--seed", "1"]) == 0
  assert capsys.readouterr().out.splitlines()[1].startswith("13,8192,100,0.5,8,")
