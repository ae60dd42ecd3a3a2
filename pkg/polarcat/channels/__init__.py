"""Stochastic channels: the memoryless BEC and the flat Rayleigh BPSK link."""

from .rng import RngSeed, asGenerator, newSeed
from .bec import bec_transmit, erasure_mask
from .fading import (MAX_SNR_DB, SPEED_OF_LIGHT, FadingChannelSpec, bpsk_awgn_ber,
                     clarke_autocorrelation, doppler_frequency, expected_level_crossing_rate,
                     fading_gains, level_crossing_rate, transmit_bpsk_fading)
