import numpy as np


def scalar_or_array(a):
    """Return a Python float for 0-d input, the array otherwise."""
    a = np.asarray(a)
    return float(a) if a.ndim == 0 else a
