import itertools

import numpy as np
import numpy.testing as npt
import pytest

import polarcat as pc
from polarcat.Bits import frombytes


def setup_module():
  global half, twothirds, threequarters, rng

  half = pc.InnerCodeSpec()
  twothirds = pc.InnerCodeSpec("2/3")
  threequarters = pc.InnerCodeSpec(0.75)
  rng = np.random.default_rng(2024)


def testCrcCheckValue():
  crc = pc.CRC16()
  assert crc.remainder(frombytes(b"123456789")) == 0x29B1
  frame = pc.crc_append(frombytes(b"123456789"), half)
  npt.assert_array_equal(frame[-16:], crc.tobits(0x29B1))
  assert pc.crc_check(frame, half)


def testCrcSingleBitErrors():
  payload = rng.integers(0, 2, 4096 - 16).astype(np.uint8)
  frame = pc.crc_append(payload, half)
  flipped = np.tile(frame, (len(frame), 1))
  flipped[np.arange(len(frame)), np.arange(len(frame))] ^= 1
  assert not pc.crc_check(flipped, half).any()


def testCrcBurstErrors():
  payload = rng.integers(0, 2, 4096 - 16).astype(np.uint8)
  frame = pc.crc_append(payload, half)
  L = len(frame)
  offsets = np.arange(16)
  for _ in range(20):
    B = 5000
    lengths = rng.integers(1, 17, B)
    starts = rng.integers(0, L - lengths + 1)
    pattern = rng.integers(0, 2, (B, 16)).astype(np.uint8)
    pattern[:, 0] = 1
    pattern[np.arange(B), lengths - 1] = 1
    inside = offsets < lengths[:, np.newaxis]
    rows = np.broadcast_to(np.arange(B)[:, np.newaxis], (B, 16))
    bursts = np.tile(frame, (B, 1))
    bursts[rows[inside], (starts[:, np.newaxis] + offsets)[inside]] ^= pattern[inside]
    assert not pc.crc_check(bursts, half).any()


def testCrcValidation():
  with pytest.raises(pc.FramingError):
    pc.crc_append([], half)
  with pytest.raises(pc.FramingError):
    pc.crc_check(np.zeros(16, dtype=np.uint8), half)
  with pytest.raises(pc.ConfigError):
    pc.CRC16(polynomial=0x1020)


def testConvEncode():
  npt.assert_array_equal(pc.conv_encode(np.zeros(8, dtype=np.uint8), half), np.zeros(24))
  npt.assert_array_equal(pc.conv_encode([1], half), [1, 1, 0, 1, 0, 0, 1, 1, 1, 1])


def testPuncture():
  coded = np.arange(8)
  npt.assert_array_equal(pc.puncture(coded, half), coded)
  npt.assert_array_equal(pc.puncture(coded, twothirds), [0, 1, 2, 4, 5, 6])
  assert len(pc.puncture(np.arange(12), threequarters)) == 8
  with pytest.raises(pc.FramingError):
    pc.puncture(np.arange(6), twothirds)


def testDepuncture():
  soft = np.arange(1.0, 7.0)
  npt.assert_array_equal(pc.depuncture(soft, half), soft)
  npt.assert_array_equal(pc.depuncture(soft, twothirds), [1, 2, 3, 0, 4, 5, 6, 0])


def testInterleaver():
  npt.assert_array_equal(pc.interleave(list("abcdef"), 2, 3), list("adbecf"))
  npt.assert_array_equal(pc.interleave(np.arange(7), 1, 7), np.arange(7))
  npt.assert_array_equal(pc.interleave(np.arange(7), 7, 1), np.arange(7))
  for rows, cols in ((2, 3), (5, 4), (20, 24), (3, 17)):
    x = rng.permutation(rows * cols)
    npt.assert_array_equal(pc.deinterleave(pc.interleave(x, rows, cols), rows, cols), x)
    npt.assert_array_equal(pc.interleave(pc.deinterleave(x, rows, cols), rows, cols), x)
  with pytest.raises(pc.FramingError):
    pc.interleave(np.arange(5), 2, 3)


def testViterbiNoiseless():
  messages = rng.integers(0, 2, (1000, 32)).astype(np.uint8)
  soft = pc.ideal_llrs(pc.conv_encode(messages, half))
  decoded, _ = pc.viterbi_decode_batch(soft, half, 32)
  npt.assert_array_equal(decoded, messages)


def testViterbiZeroInput():
  npt.assert_array_equal(pc.viterbi_decode(np.zeros(2 * (12 + 4)), half, 12), np.zeros(12))


def testViterbiOptimality():
  L = 12
  candidates = np.array(list(itertools.product((0, 1), repeat=L)), dtype=np.uint8)
  signs = 1.0 - 2.0 * pc.conv_encode(candidates, half)
  sent = rng.integers(0, len(candidates), 200)
  soft = rng.normal(0.0, 1.5, (200, 2 * (L + 4))) + signs[sent]
  metrics = soft @ signs.T
  bits, metric = pc.viterbi_decode_batch(soft, half, L)
  npt.assert_allclose(metric, metrics.max(axis=1), rtol=0, atol=1e-9)
  best = metrics.argmax(axis=1)
  unique = np.count_nonzero(np.isclose(metrics, metrics.max(axis=1)[:, np.newaxis]), axis=1) == 1
  npt.assert_array_equal(bits[unique], candidates[best[unique]])
  decoded, _ = pc.viterbi_decode_batch(pc.ideal_llrs(pc.conv_encode(candidates, half)), half, L)
  npt.assert_array_equal(decoded, candidates)


def testViterbiSingleFlip():
  message = rng.integers(0, 2, 12).astype(np.uint8)
  soft = pc.ideal_llrs(pc.conv_encode(message, half), 1.0)
  soft[7] = -soft[7]
  npt.assert_array_equal(pc.viterbi_decode(soft, half, 12), message)
  with pytest.raises(pc.FramingError):
    pc.viterbi_decode(soft[:-1], half, 12)


def testFraming():
  assert half.channelLength(220) == 480
  assert twothirds.channelLength(220) == 360
  assert threequarters.channelLength(220) == 320
  assert half.interleaverShape(220) == (20, 24)
  assert twothirds.interleaverShape(220) == (20, 18)
  assert threequarters.interleaverShape(220) == (20, 16)
  assert half.payloadFor(480) == 220
  assert 220 in half.requiredPayloads(200, 240)
  with pytest.raises(pc.FramingError) as info:
    half.interleaverShape(221)
  assert "220" in str(info.value)
  with pytest.raises(pc.FramingError):
    threequarters.channelLength(221)


def testSpecValidation():
  with pytest.raises(pc.ConfigError):
    pc.InnerCodeSpec("5/6")
  with pytest.raises(pc.ConfigError):
    pc.InnerCodeSpec(polynomials=(0o23,))
  with pytest.raises(pc.ConfigError):
    pc.InnerCodeSpec("2/3", puncture_pattern=(1, 1, 1, 1))
  assert pc.parseRate("2/3") == pc.parseRate(0.667)
  assert "23, 33" in half.describe()
  assert twothirds.withRate("3/4").puncture_pattern == (1, 1, 1, 0, 0, 1)


def testProtectRecover():
  for spec in (half, twothirds, threequarters):
    payloads = rng.integers(0, 2, (1000, 220)).astype(np.uint8)
    channel = pc.protect_blocks(payloads, spec)
    assert channel.shape == (1000, spec.channelLength(220))
    decoded, passed = pc.recover_blocks(pc.ideal_llrs(channel), spec)
    assert passed.all()
    npt.assert_array_equal(decoded, payloads)
  assert len(pc.protect_block(payloads[0], threequarters)) < len(pc.protect_block(payloads[0], half))
  outcome = pc.recover_block(pc.ideal_llrs(pc.protect_block(payloads[0], half)), half)
  assert not outcome.erased
  npt.assert_array_equal(outcome.payload, payloads[0])


def testRecoverBurst():
  payload = np.random.default_rng(7).integers(0, 2, 220).astype(np.uint8)
  soft = pc.ideal_llrs(pc.protect_block(payload, half), 4.0)
  deinterleaved = pc.deinterleave(soft, 20, 24)
  deinterleaved[100:292] *= -1
  outcome = pc.recover_block(pc.interleave(deinterleaved, 20, 24), half)
  assert outcome.erased
  assert repr(outcome) == "<BlockOutcome erased>"


def testRecoverZeroInput():
  assert pc.crc_check(np.zeros(236, dtype=np.uint8), half) is False
  assert pc.recover_block(np.zeros(480), half).erased
  with pytest.raises(pc.FramingError):
    pc.protect_block(np.ones(221, dtype=np.uint8), half)
