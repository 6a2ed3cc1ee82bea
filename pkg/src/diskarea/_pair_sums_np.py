"""Numpy fallback for the quadratic-cost pairwise sums.

Same contracts as the compiled module; rows are processed in blocks to keep
the working set below ~32 MB regardless of M.
"""

import numpy as np

_BLOCK = 256


def sin_pair_sum(kernel_row, xi):
    """sum over j,k of kernel_row[(j - k) mod M] * sin(xi[j] - xi[k])."""
    kernel_row = np.ascontiguousarray(kernel_row, dtype=float)
    xi = np.ascontiguousarray(xi, dtype=float)
    m = xi.size
    if kernel_row.size != m:
        raise ValueError("kernel_row and xi must have equal length")
    ks = np.arange(m)
    acc = 0.0
    for j0 in range(0, m, _BLOCK):
        j1 = min(j0 + _BLOCK, m)
        js = np.arange(j0, j1)
        idx = (js[:, None] - ks[None, :]) % m
        acc += float(np.sum(kernel_row[idx] * np.sin(xi[j0:j1, None] - xi[None, :])))
    return acc


def gap_pair_sums(kernel_row, alphas, lift2):
    """See the compiled twin: kernel-weighted tangent-gap pair sums."""
    kernel_row = np.ascontiguousarray(kernel_row, dtype=float)
    alphas = np.ascontiguousarray(alphas, dtype=float)
    lift2 = np.ascontiguousarray(lift2, dtype=float)
    m = kernel_row.size
    if alphas.size != m or lift2.size != 2 * m:
        raise ValueError("need len(alphas) == M and len(lift2) == 2*M")
    cos_acc = 0.0
    gap_acc = 0.0
    base = lift2[:m]
    for j0 in range(0, m, _BLOCK):
        j1 = min(j0 + _BLOCK, m)
        js = np.arange(j0, j1)
        # g[j - j0, k] = lift2[j + k] - lift2[k]
        g = np.empty((j1 - j0, m))
        for i, j in enumerate(js):
            g[i] = lift2[j : j + m]
        g -= base[None, :]
        aj = alphas[j0:j1, None]
        diff = g - aj
        ca = np.cos(alphas[j0:j1])
        sa = np.sin(alphas[j0:j1])
        kj = kernel_row[j0:j1]
        cos_acc += float(np.sum(kj * ca * diff.sum(axis=1)))
        gap_acc += float(
            np.sum(kj * (m * sa + ca * diff.sum(axis=1) - np.sin(g).sum(axis=1)))
        )
    return cos_acc, gap_acc
