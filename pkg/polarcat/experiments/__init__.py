"""Monte-Carlo experiments on the concatenated scheme.

  - L{bler}: BLER of a polar code on the BEC, Wilson intervals
  - L{rates}: largest rate for a target BLER, sweeps and figure families
  - L{erasure}: erasure probability of the fading link through the inner chain
  - L{tradeoff}: inner-rate gain over polar-rate loss
  - L{endtoend}: all of the above for one speed and target
  - L{scheduler}: chunked work units and their ordered reduction
"""

from .scheduler import CHUNK_TRIALS, chunkSizes, runChunks
from .bler import BlerEstimate, estimate_bler, failure_counts, wilson
from .rates import RatePoint, exact_max_rate, figure_family, max_rate, rate_sweep
from .erasure import (DEFAULT_PAYLOAD_BITS, INNER_RATES, REFERENCE_EPSILONS, REFERENCE_POLAR_RATES,
                      ErasureEstimate, calibrate_snr, estimate_erasure_prob, table_epsilon)
from .tradeoff import TradeoffRow, tradeoff_ratio
from .endtoend import Budget, EndToEndReport, end_to_end_run
