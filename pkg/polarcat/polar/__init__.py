"""Polar codes over the binary erasure channel.

  - L{construction}: generator, Bhattacharyya recursion, information sets, B-DMC measures
  - L{code}: the L{PolarCode} object, encoding and SC decoding
  - L{sc}: batch butterfly and batch SC kernels used by the simulations
  - L{bounds}: union bound and exact enumeration oracles
"""

from .construction import (MAX_N, bdmc_bhattacharyya, bdmc_mutual_information,
                           bec_bhattacharyya_vector, bec_capacity, bec_transition_matrix,
                           build_generator, reliabilityOrder, select_information_set)
from .code import DecodeResult, DecodeStatus, PolarCode, polar_encode, sc_decode
from .sc import polar_transform, sc_decode_batch
from .bounds import exact_bler_bec, exact_bler_by_k, union_bound_bler
