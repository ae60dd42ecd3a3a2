"""Exception classes shared by every polarcat module.

The CLI maps them to exit codes: L{ConfigError} and L{FramingError} -> 2,
L{CapacityError} -> 3, anything else -> 1.
"""


class PolarcatError(Exception):
    """Base class. C{stage} is filled in when an end-to-end run re-raises."""
    stage = None


class ConfigError(PolarcatError, ValueError):
    """Invalid parameter, unknown configuration key or out-of-range value."""


class FramingError(PolarcatError, ValueError):
    """A block or vector does not have the length the framing requires."""


class CapacityError(PolarcatError):
    """The request is valid but beyond what the operation can enumerate."""


def attachStage(error, stage):
    """Prefix an error message with the pipeline stage that raised it."""
    if error.stage is None:
        error.stage = stage
        error.args = ("%s: %s" % (stage, error),)
    return error
