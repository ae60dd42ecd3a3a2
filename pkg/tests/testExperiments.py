import math

import numpy as np
import pytest

import polarcat as pc
from polarcat.experiments.erasure import HALF, PEDESTRIAN_KMH, THREE_QUARTERS, TWO_THIRDS


def setup_module():
  global inner, pedestrian, vehicular, seed, cells

  inner = pc.InnerCodeSpec()
  pedestrian = pc.FadingChannelSpec(speed_kmh=5.0)
  vehicular = pc.FadingChannelSpec(speed_kmh=50.0)
  seed = 20240917
  cells = {}


def separated(low, high):
  """True when high exceeds low at 95% confidence."""
  return high.point - low.point > 1.96 * math.sqrt(low.stddev ** 2 + high.stddev ** 2)


def testChunkSizes():
  assert pc.chunkSizes(2500) == [1024, 1024, 452]
  assert pc.chunkSizes(1024) == [1024]
  assert sum(pc.chunkSizes(123456)) == 123456


def testWilson():
  e = pc.BlerEstimate(1000, 250)
  assert e.lo < e.point < e.hi
  assert abs(e.lo - 0.2241) < 1e-3 and abs(e.hi - 0.2777) < 1e-3
  zero = pc.BlerEstimate(100, 0)
  assert zero.lo == 0.0 and zero.point == 0.0 and 0 < zero.hi < 0.05
  one = pc.BlerEstimate(100, 100)
  assert one.hi == 1.0 and one.lo < 1.0
  with pytest.raises(pc.ConfigError):
    pc.BlerEstimate(10, 11)


def testEstimateBler():
  assert pc.estimate_bler(4, 10, 0.0, 2000, seed).failures == 0
  trials = 100000
  e = pc.estimate_bler(1, 1, 0.5, trials, seed)
  assert abs(e.point - 0.25) < 4 * math.sqrt(0.25 * 0.75 / trials)
  exact = pc.exact_bler_bec(pc.PolarCode(2, 0.5, K=2), 0.5)
  e = pc.estimate_bler(2, 2, 0.5, trials, seed)
  assert abs(e.point - exact) < 4 * math.sqrt(exact * (1 - exact) / trials)
  with pytest.raises(pc.ConfigError):
    pc.estimate_bler(2, 2, 0.5, 0, seed)


def testCommonRandomNumbers():
  failures = pc.failure_counts(5, 0.2, 3000, seed)
  for K in (1, 7, 16, 25, 32):
    assert pc.estimate_bler(5, K, 0.2, 3000, seed).failures == failures[K]
  assert (np.diff(failures) >= 0).all()


def testWorkerInvariance():
  one = pc.estimate_bler(4, 12, 0.1, 3000, seed, workers=1)
  two = pc.estimate_bler(4, 12, 0.1, 3000, seed, workers=2)
  assert one == two
  a = pc.rate_sweep([3, 4], [0.1, 0.2], [0.1], 2500, seed, workers=1)
  b = pc.rate_sweep([3, 4], [0.1, 0.2], [0.1], 2500, seed, workers=3)
  assert [p.K for p in a] == [p.K for p in b]


def testCoverage():
  exact = pc.exact_bler_bec(pc.PolarCode(2, 0.5, K=2), 0.5)
  covered = 0
  for rep in range(100):
    e = pc.estimate_bler(2, 2, 0.5, 500, seed + rep)
    covered += e.lo <= exact <= e.hi
  assert covered >= 90


def testMaxRate():
  point = pc.max_rate(4, 0.0, 0.1, 1000, seed)
  assert point.K == 16 and point.rate == 1.0 and point.beyond is None
  point = pc.max_rate(2, 1.0, 0.1, 1000, seed)
  assert point.K == 0 and point.estimate is None
  assert pc.max_rate(3, 0.5, 0.1, 100000, seed).K == pc.exact_max_rate(3, 0.5, 0.1)
  with pytest.raises(pc.ConfigError):
    pc.max_rate(3, 0.5, 1.0, 1000, seed)


def testMaximalityWitness():
  point = pc.max_rate(6, 0.1, 0.3, 5000, seed)
  assert 0 < point.K < 64
  assert point.estimate.point <= 0.3 < point.beyond.point


def testOracleAgreement():
  trials = 100000
  for n in range(1, 5):
    for eps in (0.054, 0.078, 0.093, 0.5):
      exact = pc.exact_bler_by_k(n, eps)
      for target in (0.1, 0.3, 0.5):
        K = pc.exact_max_rate(n, eps, target)
        near = [k for k in (K, K + 1) if 0 < k <= 2 ** n and
                abs(exact[k] - target) < 4 * math.sqrt(exact[k] * (1 - exact[k]) / trials)]
        if near:
          continue
        assert pc.max_rate(n, eps, target, trials, seed).K == K


def testPedestrianCell():
  point = pc.max_rate(4, 0.054, 0.1, 100000, seed)
  assert abs(point.rate - 0.84) <= 0.07


def testRateSweep():
  grid = [0.02, 0.05, 0.1, 0.2, 0.3]
  targets = [0.1, 0.3, 0.5]
  rows = pc.rate_sweep([4, 6], grid, targets, 4000, seed)
  assert len(rows) == 2 * 3 * 5
  keys = [(p.n, p.target_bler, p.epsilon) for p in rows]
  assert keys == sorted(keys)
  for n in (4, 6):
    for t in targets:
      rates = [p.rate for p in rows if p.n == n and p.target_bler == t]
      assert all(a >= b for a, b in zip(rates, rates[1:]))
    for eps in grid:
      rates = [p.rate for p in rows if p.n == n and p.epsilon == eps]
      assert all(a <= b for a, b in zip(rates, rates[1:]))
  single = pc.rate_sweep([6], [0.1], [0.3], 4000, seed)[0]
  assert single.K == pc.max_rate(6, 0.1, 0.3, 4000, seed).K
  with pytest.raises(pc.ConfigError):
    pc.rate_sweep([], grid, targets, 100, seed)


def testTargetGapShrinks():
  def gap(n, trials):
    rows = pc.rate_sweep([n], [0.1], [0.1, 0.5], trials, seed)
    return rows[1].rate - rows[0].rate
  assert gap(12, 2048) < gap(4, 20000)


def testFigureFamily():
  family = pc.figure_family([3, 5], [0.05, 0.1], 0.1, 2000, seed)
  assert sorted(family) == [3, 5]
  assert [p.epsilon for p in family[5]] == [0.05, 0.1]


def testErasureNoiseless():
  e = pc.estimate_erasure_prob(inner, pedestrian.withSnr(60.0), 1000, seed)
  assert e.erasures == 0 and e.blocks == 1000 and e.undetected == 0


def erasureCell(channel, rate):
  key = (channel.speed_kmh, rate)
  if key not in cells:
    cells[key] = pc.estimate_erasure_prob(inner.withRate(rate), channel, 20000, seed, workers=4)
  return cells[key]


def testErasureRateOrdering():
  for channel in (pedestrian, vehicular):
    e = dict((r, erasureCell(channel, r)) for r in (HALF, TWO_THIRDS, THREE_QUARTERS))
    assert separated(e[HALF], e[TWO_THIRDS])
    assert separated(e[TWO_THIRDS], e[THREE_QUARTERS])


def testErasureSpeedOrdering():
  for r in (HALF, TWO_THIRDS, THREE_QUARTERS):
    assert separated(erasureCell(vehicular, r), erasureCell(pedestrian, r))


@pytest.mark.slow
def testUndetectedErrorRate():
  e = pc.estimate_erasure_prob(inner, pedestrian, 200000, seed, workers=4)
  assert 0 < e.erasures < e.blocks
  assert pc.wilson(e.undetected, e.blocks)[1] <= 2 * 2.0 ** -16


def testErasureDeterminism():
  a = pc.estimate_erasure_prob(inner, vehicular, 600, seed)
  b = pc.estimate_erasure_prob(inner, vehicular, 600, seed, workers=2)
  assert a == b
  with pytest.raises(pc.FramingError):
    pc.estimate_erasure_prob(inner, vehicular, 10, seed, payload_bits=221)


def testCalibration():
  snr, estimate = pc.calibrate_snr(inner, pedestrian, 1500, seed)
  assert 0.03 <= estimate.point <= 0.08
  assert 0.0 < snr < 30.0
  with pytest.raises(pc.ConfigError):
    pc.calibrate_snr(inner, pedestrian, 10, seed, bracket=(0.08, 0.03))


def testTableEpsilon():
  assert pc.table_epsilon(5, "1/2") == 0.054
  assert pc.table_epsilon(50.0, 0.75) == 0.063
  with pytest.raises(pc.ConfigError):
    pc.table_epsilon(20, "1/2")


def testTableRatesFromOracle():
  for (speed, target), rates in sorted(pc.REFERENCE_POLAR_RATES.items()):
    for rate, polar in rates.items():
      K = pc.exact_max_rate(4, pc.table_epsilon(speed, rate), target)
      assert abs(K / 16.0 - polar) <= 0.07


def testTradeoff():
  row = pc.tradeoff_ratio([(0.5, 0.84), (0.667, 0.76)])[0]
  assert abs(row.tau - 2.0875) < 1e-9
  assert row.rounded == 2 and row.ratio() == "2:1"
  assert abs(row.inner_change_pct - 16.7) < 1e-9
  assert abs(row.polar_change_pct - 8.0) < 1e-9
  row = pc.tradeoff_ratio([(0.5, 0.935), (0.667, 0.9)])[0]
  assert abs(row.tau - 4.771428571) < 1e-6
  assert abs(row.rounded - 4) <= 1
  row = pc.tradeoff_ratio([(0.5, 0.9), (0.6, 0.8)])[0]
  assert abs(row.tau - 1.0) < 1e-9
  rows = pc.tradeoff_ratio([(0.5, 0.8), (0.6, 0.8), (0.7, 0.85)])
  assert len(rows) == 2
  assert not rows[0].defined and rows[0].ratio() == "undefined"
  assert rows[1].tau is None
  with pytest.raises(pc.ConfigError):
    pc.tradeoff_ratio([(0.5, 0.8)])
  with pytest.raises(pc.ConfigError):
    pc.tradeoff_ratio([(0.6, 0.8), (0.6, 0.7)])


def testReferenceTradeoffRatios():
  expected = {0.1: 2, 0.3: 3, 0.5: 4}
  for target, ratio in expected.items():
    rates = pc.REFERENCE_POLAR_RATES[(PEDESTRIAN_KMH, target)]
    row = pc.tradeoff_ratio([(float(HALF), rates[HALF]), (float(TWO_THIRDS), rates[TWO_THIRDS])])[0]
    assert abs(row.rounded - ratio) <= 1


def testEndToEndNoiseless():
  channel = pc.FadingChannelSpec(snr_db=60.0, fading=False)
  report = pc.end_to_end_run(inner, channel, 4, 0.1, pc.Budget(trials=1000, blocks=200), seed)
  assert [r.epsilon for r in report.rows] == [0.0, 0.0, 0.0]
  assert [r.polar_rate for r in report.rows] == [1.0, 1.0, 1.0]
  assert all(not t.defined for t in report.tradeoff)
  assert abs(report.rows[2].overall_rate - 0.75) < 1e-12


def testEndToEndTable():
  report = pc.end_to_end_run(inner, pedestrian, 4, 0.1, pc.Budget(trials=100000, blocks=1), seed,
                             epsilon_source="table")
  expected = pc.REFERENCE_POLAR_RATES[(PEDESTRIAN_KMH, 0.1)]
  for r in report.rows:
    assert r.source == "table" and r.erasure is None
    assert abs(r.polar_rate - expected[r.inner_rate]) <= 0.07
  again = pc.tradeoff_ratio(report.ratePoints())
  assert [t.tau for t in again] == [t.tau for t in report.tradeoff]
  d = report.toDict()
  assert d["N"] == 16 and len(d["rows"]) == 3 and len(d["tradeoff"]) == 2


def testEndToEndOverrides():
  report = pc.end_to_end_run(inner, pedestrian, 3, 0.3, pc.Budget(trials=2000, blocks=1), seed,
                             epsilon_source="table", epsilons={"2/3": 0.2})
  assert [r.source for r in report.rows] == ["table", "given", "table"]
  assert report.rows[1].epsilon == 0.2


def testEndToEndStages():
  with pytest.raises(pc.FramingError) as info:
    pc.end_to_end_run(inner, pedestrian, 4, 0.1, pc.Budget(100, 10), seed, payload_bits=221)
  assert info.value.stage == "erasure[rate 1/2]"
  assert str(info.value).startswith("erasure[rate 1/2]: ")
  with pytest.raises(pc.ConfigError) as info:
    pc.end_to_end_run(inner, pedestrian.withSpeed(20.0), 4, 0.1, pc.Budget(100, 10), seed,
                      epsilon_source="table")
  assert info.value.stage == "epsilon[rate 1/2]"
  with pytest.raises(pc.ConfigError):
    pc.end_to_end_run(inner, pedestrian, 4, 0.1, None, seed, epsilon_source="oracle")


def testConfiguredMaximumExponent():
  with pytest.raises(pc.ConfigError):
    pc.estimate_bler(13, 100, 0.5, 8, seed)
  with pytest.raises(pc.ConfigError):
    pc.max_rate(13, 0.5, 0.1, 8, seed)
  assert pc.estimate_bler(13, 100, 0.5, 8, seed, maxn=13).trials == 8
  assert len(pc.failure_counts(13, 0.5, 8, seed, maxn=13)) == 8193
