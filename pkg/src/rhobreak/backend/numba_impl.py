"""Numba-jitted implementations of the hot kernels.

Loops accumulate left to right, matching the cumsum order of the numpy
fallback, so the two backends agree to rounding noise. No fastmath: result
must not depend on re-association.
"""
import numba
import numpy as np

NAME = "numba"


@numba.njit(cache=True)
def spearman_prefix(products, h, scale):
    n = products.shape[0]
    out = np.empty(n, dtype=np.float64)
    acc = 0.0
    for j in range(n):
        acc += products[j]
        out[j] = h * (scale * acc / (j + 1.0) - 1.0)
    return out


@numba.njit(cache=True)
def hac_core(x, weights, mean):
    n = x.shape[0]
    msq = mean * mean
    total = 0.0
    for j in range(n):
        total += x[j] * x[j]
    total = total / n - msq
    acc = 0.0
    for m in range(1, weights.shape[0] + 1):
        s = 0.0
        for j in range(n - m):
            s += x[j] * x[j + m]
        acc += weights[m - 1] * (s / n - msq)
    return total + 2.0 * acc


@numba.njit(cache=True)
def pearson_prefix(x, y):
    n = x.shape[0]
    r = np.empty(n, dtype=np.float64)
    r[0] = np.nan
    first_bad = 0
    sx = x[0]
    sy = y[0]
    sxx = x[0] * x[0]
    syy = y[0] * y[0]
    sxy = x[0] * y[0]
    for k in range(2, n + 1):
        xv = x[k - 1]
        yv = y[k - 1]
        sx += xv
        sy += yv
        sxx += xv * xv
        syy += yv * yv
        sxy += xv * yv
        cxx = sxx - sx * sx / k
        cyy = syy - sy * sy / k
        if cxx > 0.0 and cyy > 0.0:
            r[k - 1] = (sxy - sx * sy / k) / np.sqrt(cxx * cyy)
        else:
            r[k - 1] = np.nan
            if first_bad == 0:
                first_bad = k
    return r, first_bad
