# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Tight loops for the quadratic-cost pairwise sums over circle grids.

These are the only O(M^2) paths in the package; everything else is FFT or
1-d quadrature.  A numpy implementation with identical semantics lives in
``_pair_sums_np`` and is selected automatically when this module is absent.
"""

from libc.math cimport sin, cos


def sin_pair_sum(const double[::1] kernel_row, const double[::1] xi):
    """sum over j,k of kernel_row[(j - k) mod M] * sin(xi[j] - xi[k])."""
    cdef Py_ssize_t m = xi.shape[0]
    if kernel_row.shape[0] != m:
        raise ValueError("kernel_row and xi must have equal length")
    cdef Py_ssize_t j, k, d
    cdef double acc = 0.0
    cdef double row = 0.0
    cdef double xj
    for j in range(m):
        xj = xi[j]
        row = 0.0
        for k in range(m):
            d = j - k
            if d < 0:
                d += m
            row += kernel_row[d] * sin(xj - xi[k])
        acc += row
    return acc


def gap_pair_sums(const double[::1] kernel_row,
                  const double[::1] alphas,
                  const double[::1] lift2):
    """Pair sums of the kernel against the tangent-line gap of the lift increments.

    ``lift2`` holds lift samples over two periods (2M entries with
    lift2[m + M] = lift2[m] + 2*pi); ``alphas`` is the first-period grid.
    With g = lift2[j + k] - lift2[k] the return value is the pair

        sum_{j,k} K[j] * (g - alphas[j]) * cos(alphas[j])
        sum_{j,k} K[j] * (sin(alphas[j]) + (g - alphas[j]) * cos(alphas[j]) - sin(g))
    """
    cdef Py_ssize_t m = kernel_row.shape[0]
    if alphas.shape[0] != m or lift2.shape[0] != 2 * m:
        raise ValueError("need len(alphas) == M and len(lift2) == 2*M")
    cdef Py_ssize_t j, k
    cdef double cos_acc = 0.0, gap_acc = 0.0
    cdef double kj, aj, sa, ca, g, diff, cs, gs
    for j in range(m):
        kj = kernel_row[j]
        aj = alphas[j]
        sa = sin(aj)
        ca = cos(aj)
        cs = 0.0
        gs = 0.0
        for k in range(m):
            g = lift2[j + k] - lift2[k]
            diff = g - aj
            cs += diff
            gs += sa + diff * ca - sin(g)
        cos_acc += kj * ca * cs
        gap_acc += kj * gs
    return cos_acc, gap_acc
