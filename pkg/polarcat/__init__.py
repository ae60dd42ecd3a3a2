"""\
Polarcat
========
Polar codes over a Rayleigh fading channel that an inner convolutional code
degrades into an erasure channel.

Features
========
  - Polar code construction for the BEC from Bhattacharyya parameters
  - Encoding and successive cancellation decoding with erasure (ambiguity) reporting
  - Union bound and exact enumeration oracles for the block error rate
  - An inner chain of CRC-16, punctured convolutional code, block interleaver and Viterbi decoder
    that turns a fading link into blocks which either arrive intact or are erased
  - A sum-of-sinusoids Rayleigh fading simulator with BPSK and soft outputs
  - Monte-Carlo experiments: BLER, largest rate for a target BLER, erasure
    probability of the degraded link, and the inner/polar rate trade-off

Everything is vectorised with numpy; batches of blocks are rows.

Getting started
===============
The L{polar} sub-package holds L{PolarCode} and the encode/decode operations.

The L{inner} sub-package holds the convolutional chain, configured by L{InnerCodeSpec}.

The L{channels} sub-package holds the BEC, the fading channel and the seeded random streams.

The L{experiments} sub-package holds the Monte-Carlo harness.

The L{IO} module reads and writes codes, CSV tables and JSON reports; L{Config}
holds the run configuration used by the command line (L{cli}).
"""

__version__ = "1.0"

# Misc
import logging

from .Errors import CapacityError, ConfigError, FramingError, PolarcatError
from .Bits import TernarySymbol

from .polar import *
from .inner import *
from .channels import *
from .experiments import *

from . import IO
from .Config import RunConfig

logging.getLogger("polarcat").addHandler(logging.NullHandler())
