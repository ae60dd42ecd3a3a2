"""Inner code chain: BCS, convolutional code, puncturing, interleaving, Viterbi."""

from .crc import CRC16, crc_append, crc_check
from .convolutional import (Trellis, conv_encode, depuncture, puncture, viterbi_decode,
                            viterbi_decode_batch)
from .interleaver import deinterleave, interleave
from .pipeline import (PUNCTURE_PATTERNS, BlockOutcome, InnerCodeSpec, ideal_llrs, parseRate,
                       protect_block, protect_blocks, recover_block, recover_blocks)
