"""Pure-numpy implementations of the hot kernels.

This is both the fallback when numba is unavailable and the reference the
jitted versions are checked against.
"""
import numpy as np

NAME = "numpy"


def spearman_prefix(products: np.ndarray, h: float, scale: float) -> np.ndarray:
    """Prefix rank-correlation path: entry k-1 is h*(scale/k * sum_{j<=k} products[j] - 1)."""
    k = np.arange(1, products.size + 1, dtype=np.float64)
    return h * (scale * np.cumsum(products) / k - 1.0)


def hac_core(x: np.ndarray, weights: np.ndarray, mean: float) -> float:
    """Kernel-weighted long-run variance core.

    Returns (1/n) sum x_j^2 - mean^2
          + 2 * sum_m weights[m-1] * ((1/n) sum_{j<=n-m} x_j x_{j+m} - mean^2)
    with the lag sums over m = 1..len(weights).
    """
    n = x.size
    msq = mean * mean
    total = float(x @ x) / n - msq
    acc = 0.0
    for m in range(1, weights.size + 1):
        acc += weights[m - 1] * (float(x[: n - m] @ x[m:]) / n - msq)
    return total + 2.0 * acc


def pearson_prefix(x: np.ndarray, y: np.ndarray):
    """Successive Pearson correlations over prefixes.

    Returns (r, first_bad) where r[k-1] is the correlation of the first k
    pairs (NaN at k=1) and first_bad is the smallest k >= 2 whose prefix has a
    zero-variance component, or 0 when none does.
    """
    n = x.size
    k = np.arange(1, n + 1, dtype=np.float64)
    sx, sy = np.cumsum(x), np.cumsum(y)
    cxx = np.cumsum(x * x) - sx * sx / k
    cyy = np.cumsum(y * y) - sy * sy / k
    cxy = np.cumsum(x * y) - sx * sy / k
    r = np.full(n, np.nan)
    if n >= 2:
        ok = (cxx[1:] > 0.0) & (cyy[1:] > 0.0)
        with np.errstate(invalid="ignore", divide="ignore"):
            r[1:] = np.where(ok, cxy[1:] / np.sqrt(cxx[1:] * cyy[1:]), np.nan)
        bad = np.flatnonzero(~ok)
        first_bad = int(bad[0]) + 2 if bad.size else 0
    else:
        first_bad = 0
    return r, first_bad
