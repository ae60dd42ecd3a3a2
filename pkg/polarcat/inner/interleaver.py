"""Rectangular block interleaver: write row by row, read column by column.

Adjacent coded bits end up C{rows} channel symbols apart, which spreads a
fade over many trellis sections.
"""

import numpy as np

from ..Errors import FramingError


def _shape(values, rows, cols):
    values = np.asarray(values)
    if rows < 1 or cols < 1 or values.shape[-1] != rows * cols:
        raise FramingError("interleaver of %d x %d needs %d values, got %d"
                           % (rows, cols, rows * cols, values.shape[-1]))
    return values, values.shape[:-1]


def interleave(bits, rows, cols):
    """C{[a,b,c,d,e,f]} with 2 rows and 3 columns becomes C{[a,d,b,e,c,f]}.

    Works on the last axis, for bits and soft values alike.
    """
    values, lead = _shape(bits, rows, cols)
    return np.swapaxes(values.reshape(lead + (rows, cols)), -1, -2).reshape(lead + (rows * cols,))


def deinterleave(bits, rows, cols):
    values, lead = _shape(bits, rows, cols)
    return np.swapaxes(values.reshape(lead + (cols, rows)), -1, -2).reshape(lead + (rows * cols,))
