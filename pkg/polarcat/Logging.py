"""Progress ticker and logger plumbing.

All loggers live under the C{polarcat} namespace; nothing is configured
on import, the CLI calls L{configure}.
"""

import logging
import sys

_FORMAT = "%(asctime)s %(name)s %(levelname)s: %(message)s"


def progress(n, s=None):
  if s is None:
    sys.stderr.write("[%d]" % n)
  else:
    sys.stderr.write("[%d %s]\n" % (n,s))
  sys.stderr.flush()


def getLogger(name):
  """Logger for a polarcat module, e.g. C{getLogger("experiments")}."""
  if name.startswith("polarcat"):
    return logging.getLogger(name)
  return logging.getLogger("polarcat." + name)


def configure(verbosity=0, stream=None):
  """Install a single stream handler on the C{polarcat} root logger.

  @param verbosity    : 0 = WARNING, 1 = INFO, 2 or more = DEBUG
  @param stream       : Defaults to stderr
  """
  level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
  root = logging.getLogger("polarcat")
  for handler in list(root.handlers):
    root.removeHandler(handler)
  handler = logging.StreamHandler(stream or sys.stderr)
  handler.setFormatter(logging.Formatter(_FORMAT))
  root.addHandler(handler)
  root.setLevel(level)
  return root
