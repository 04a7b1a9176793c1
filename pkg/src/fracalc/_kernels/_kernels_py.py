"""Numpy implementations of the hot kernels (fallback backend).

Must stay drop-in compatible with ``_kernels_cy``: same signatures, same
result ordering.
"""

import numpy as np

# Pairwise scan works on ~32 MB blocks to keep peak memory flat.
_BLOCK_ELEMENTS = 4_000_000


def l1_weighted_sum(values, exponent):
    """Sum of ((N-k)^e - (N-1-k)^e) * (v[k+1] - v[k]) over k = 0..N-1."""
    v = np.ascontiguousarray(values, dtype=np.float64)
    n = v.shape[0] - 1
    # One power per grid point: weight k is powers[k] - powers[k+1].
    powers = np.arange(n, -1, -1, dtype=np.float64) ** exponent
    return float((powers[:-1] - powers[1:]) @ np.diff(v))


def multivalued_pairs(x, y, x_tol, y_tol):
    """Index pairs (i, j), i < j, with |x_i - x_j| <= x_tol and |y_i - y_j| > y_tol.

    Returned in row-major order (i ascending, then j).
    """
    x = np.ascontiguousarray(x, dtype=np.float64)
    y = np.ascontiguousarray(y, dtype=np.float64)
    n = x.shape[0]
    cols = np.arange(n)
    block = max(1, _BLOCK_ELEMENTS // max(n, 1))
    out = []
    for i0 in range(0, n - 1, block):
        i1 = min(i0 + block, n - 1)
        mask = np.abs(x[i0:i1, None] - x[None, :]) <= x_tol
        mask &= np.abs(y[i0:i1, None] - y[None, :]) > y_tol
        mask &= cols[None, :] > np.arange(i0, i1)[:, None]
        ii, jj = np.nonzero(mask)
        out.extend(zip((ii + i0).tolist(), jj.tolist()))
    return out
