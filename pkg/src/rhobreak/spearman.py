"""Sequential multivariate Spearman correlation along sample prefixes.

The d-variate Spearman coefficient used here is the normalized integral of the
copula, rho = h(d) * (2^d * int C(u) du - 1). Its empirical version over the
first k observations reduces to an average of the per-observation products
prod_i (1 - u_ij), where u are full-sample pseudo-observations. Those products
are cached on the result because the long-run variance estimator is written in
terms of the very same quantities.
"""
from dataclasses import dataclass

import numpy as np

from . import backend
from .errors import DimensionTooSmallError


def h_factor(d: int) -> float:
    """Normalization (d+1) / (2^d - (d+1)) that maps the copula integral onto
    correlation scale (1 for comonotone data in the large-sample limit)."""
    if d < 2:
        raise DimensionTooSmallError(d)
    return (d + 1) / (2.0**d - (d + 1))


@dataclass(frozen=True)
class RhoPath:
    """All prefix estimates plus the per-observation products they are built from.

    values[k-1] is the Spearman estimate from the first k rows; products[j-1]
    is prod_i (1 - u[j,i]), always in [0, 1].
    """

    values: np.ndarray
    products: np.ndarray

    def __post_init__(self):
        for name in ("values", "products"):
            arr = np.ascontiguousarray(getattr(self, name), dtype=np.float64)
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)

    @property
    def n(self) -> int:
        return self.values.size


def rho_path(pseudo) -> RhoPath:
    """Spearman estimates for every prefix length k = 1..n in one pass.

    The pseudo-observations keep the full-sample denominator n for every
    prefix, so entry k is h(d) * (2^d/k * sum_{j<=k} products[j] - 1) exactly.
    Finite-sample values may leave [-1, 1]; they are intentionally not clamped
    because downstream statistics depend on differences of path entries.
    """
    d = pseudo.d
    products = np.prod(1.0 - pseudo.u, axis=1)
    values = backend.spearman_prefix(products, h_factor(d), 2.0**d)
    return RhoPath(values=values, products=products)
