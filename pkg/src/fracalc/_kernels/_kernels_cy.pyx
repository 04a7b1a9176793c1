# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot kernels."""

from libc.math cimport fabs, pow


def l1_weighted_sum(const double[::1] values, double exponent):
    """Sum of ((N-k)^e - (N-1-k)^e) * (v[k+1] - v[k]) over k = 0..N-1."""
    cdef Py_ssize_t n = values.shape[0] - 1
    cdef Py_ssize_t k
    cdef double acc = 0.0
    # One pow per step: this step's (N-1-k)^e is the next step's (N-k)^e.
    cdef double high = pow(<double> n, exponent)
    cdef double low
    for k in range(n):
        low = pow(<double> (n - k - 1), exponent)
        acc += (high - low) * (values[k + 1] - values[k])
        high = low
    return acc


def multivalued_pairs(const double[::1] x, const double[::1] y,
                      double x_tol, double y_tol):
    """Index pairs (i, j), i < j, with |x_i - x_j| <= x_tol and |y_i - y_j| > y_tol.

    Returned in row-major order (i ascending, then j).
    """
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t i, j
    out = []
    for i in range(n - 1):
        for j in range(i + 1, n):
            if fabs(x[i] - x[j]) <= x_tol and fabs(y[i] - y[j]) > y_tol:
                out.append((i, j))
    return out
