"""Area of the harmonic image of a concentric disk, by several independent routes.

Five estimators are provided: a spectral and a quadrature form of the
boundary-flux (Green) formula, a direct O(M^2) double sum of the
antisymmetric pair kernel against sin of lift differences, an FFT
rearrangement of the same finite sum costing O(M log M), and midpoint
integration of the Jacobian determinant on a polar grid.  Closed forms for
the exact test families round out the set.  All values are absolute areas:
the identity at radius r gives pi * r^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import pair_sums
from .circle_maps import HOMEOMORPHISM, TWO_PI, BoundaryMap, eval_lift, make_identity, make_mobius_boundary, make_rotation
from .poisson import (
    FourierCoeffs,
    _check_radius,
    circle_theta_derivative,
    circle_values,
    fourier_from_boundary,
    sample_count,
    wirtinger_on_circle,
)

GREEN_SPECTRAL = "green-spectral"
GREEN_QUADRATURE = "green-quadrature"
KERNEL_DIRECT = "kernel-direct"
KERNEL_FFT = "kernel-fft"
JACOBIAN_GRID = "jacobian"
EXACT_FAMILY = "exact"

METHODS = (GREEN_SPECTRAL, GREEN_QUADRATURE, KERNEL_DIRECT, KERNEL_FFT, JACOBIAN_GRID, EXACT_FAMILY)

FAMILY_IDENTITY = "identity"
FAMILY_ROTATION = "rotation"
FAMILY_SHEAR = "shear"
FAMILY_MOBIUS = "mobius"


@dataclass(frozen=True)
class AreaEstimate:
    """One computed area with its method, resolution and convergence proxy."""

    value: float
    method: str
    resolution: int
    error_indicator: float

    def to_json(self) -> str:
        import json

        return json.dumps(
            {
                "value": self.value,
                "method": self.method,
                "resolution": self.resolution,
                "error_indicator": self.error_indicator,
            }
        )


def kernel_sample_count(r: float) -> int:
    """Sample rule for the pair kernel, whose peak width scales like 1 - r^2."""
    return sample_count(r * r)


def area_kernel(r: float, alpha):
    """Antisymmetric pair kernel 2 r^2 (1 - r^4) sin(a) / (1 - 2 r^2 cos(a) + r^4)^2.

    Equals minus the derivative of the Poisson kernel at radius r^2, by the
    kernel composition law; :func:`area_kernel_defining_integral` checks that
    numerically.  Odd in alpha.
    """
    r = _check_radius(r)
    alpha = np.asarray(alpha, dtype=float)
    rho2 = r * r
    den = 1.0 - 2.0 * rho2 * np.cos(alpha) + rho2 * rho2
    out = 2.0 * rho2 * (1.0 - rho2 * rho2) * np.sin(alpha) / (den * den)
    return out if alpha.ndim else float(out)


def area_kernel_defining_integral(r: float, alpha: float, n_samples: int = 2048) -> float:
    """Quadrature of (1/2pi) int P_r(theta) P_r'(theta - alpha) dtheta.

    The defining convolution of the pair kernel, evaluated without the closed
    form; used as the oracle pinning the closed form's radius convention.
    """
    from .poisson import poisson_kernel, poisson_kernel_deriv

    r = _check_radius(r)
    t = np.arange(n_samples) * (TWO_PI / n_samples)
    return float(np.mean(poisson_kernel(r, t) * poisson_kernel_deriv(r, t - alpha)))


def _coeffs_for(bmap: BoundaryMap, order: int) -> FourierCoeffs:
    return fourier_from_boundary(bmap, order=order, n_samples=4 * order)


def area_green_spectral(coeffs: FourierCoeffs, r: float) -> AreaEstimate:
    """pi * sum over n of n |c_n|^2 r^{2|n|}; negative indices count negatively."""
    r = _check_radius(r, allow_zero=False)

    def value(cf: FourierCoeffs) -> float:
        ns = cf.indices
        return math.pi * float(np.sum(ns * np.abs(cf.coeffs) ** 2 * r ** (2 * np.abs(ns))))

    full = value(coeffs)
    half = value(coeffs.truncated(max(1, coeffs.order // 2)))
    return AreaEstimate(full, GREEN_SPECTRAL, coeffs.order, abs(full - half))


def area_green_quadrature(bmap: BoundaryMap, r: float, n_samples: int = 1024) -> AreaEstimate:
    """(1/2) int Im(conj(f) f_theta) dtheta by uniform trapezoid on the circle."""
    r = _check_radius(r, allow_zero=False)

    def value(m: int) -> float:
        coeffs = _coeffs_for(bmap, order=m // 4)
        f = circle_values(coeffs, r, m)
        ft = circle_theta_derivative(coeffs, r, m)
        return float(np.mean(np.imag(np.conj(f) * ft))) * math.pi

    full = value(n_samples)
    half = value(n_samples // 2)
    return AreaEstimate(full, GREEN_QUADRATURE, n_samples, abs(full - half))


def _kernel_direct_value(bmap: BoundaryMap, r: float, m: int, backend=None) -> float:
    t = np.arange(m) * (TWO_PI / m)
    xi = eval_lift(bmap, t)
    kern = area_kernel(r, t)
    impl = backend if backend is not None else pair_sums
    return (math.pi / (m * m)) * impl.sin_pair_sum(kern, xi)


def area_kernel_direct(bmap: BoundaryMap, r: float, n_samples: int | None = None, backend=None) -> AreaEstimate:
    """O(M^2) double trapezoid sum of (1/4pi) K(s - t) sin(lift(s) - lift(t))."""
    r = _check_radius(r, allow_zero=False)
    m = kernel_sample_count(r) if n_samples is None else int(n_samples)
    full = _kernel_direct_value(bmap, r, m, backend)
    half = _kernel_direct_value(bmap, r, m // 2, backend)
    return AreaEstimate(full, KERNEL_DIRECT, m, abs(full - half))


def _kernel_fft_value(bmap: BoundaryMap, r: float, m: int) -> float:
    t = np.arange(m) * (TWO_PI / m)
    xi = eval_lift(bmap, t)
    kern = area_kernel(r, t)
    u = np.sin(xi)
    v = np.cos(xi)
    fu = np.fft.fft(u)
    fv = np.fft.fft(v)
    corr_uv = np.fft.ifft(fu * np.conj(fv)).real  # lag d: sum_k u[k+d] v[k]
    corr_vu = np.fft.ifft(fv * np.conj(fu)).real
    return (math.pi / (m * m)) * float(np.dot(kern, corr_uv - corr_vu))


def area_kernel_fft(bmap: BoundaryMap, r: float, n_samples: int | None = None) -> AreaEstimate:
    """Same finite sum as :func:`area_kernel_direct`, reassociated through
    two circular cross-correlations of sin and cos of the lift; O(M log M)."""
    r = _check_radius(r, allow_zero=False)
    m = kernel_sample_count(r) if n_samples is None else int(n_samples)
    full = _kernel_fft_value(bmap, r, m)
    half = _kernel_fft_value(bmap, r, m // 2)
    return AreaEstimate(full, KERNEL_FFT, m, abs(full - half))


def _jacobian_value(coeffs: FourierCoeffs, r: float, n_rho: int, n_theta: int) -> float:
    rho = (np.arange(n_rho) + 0.5) * (r / n_rho)
    thetas = (np.arange(n_theta) + 0.5) * (TWO_PI / n_theta)
    total = 0.0
    for p in rho:
        dh, dg = wirtinger_on_circle(coeffs, p, thetas)
        det = np.abs(dh) ** 2 - np.abs(dg) ** 2
        total += float(np.sum(det)) * p
    return total * (r / n_rho) * (TWO_PI / n_theta)


def area_jacobian_grid(
    source: BoundaryMap | FourierCoeffs,
    r: float,
    n_rho: int = 1024,
    n_theta: int = 512,
    order: int = 256,
) -> AreaEstimate:
    """Midpoint rule on a polar grid of int det Df rho drho dtheta.

    Valid as an image area only for injective orientation-preserving maps, so
    boundary input must be of homeomorphism kind; explicit coefficients are
    accepted for closed-form families whose injectivity the caller guarantees.
    """
    r = _check_radius(r, allow_zero=False)
    if isinstance(source, BoundaryMap):
        if source.kind != HOMEOMORPHISM:
            raise ValueError("Jacobian-grid area requires a homeomorphism boundary map")
        coeffs = _coeffs_for(source, order)
    else:
        coeffs = source
    full = _jacobian_value(coeffs, r, n_rho, n_theta)
    half = _jacobian_value(coeffs, r, n_rho // 2, max(8, n_theta // 2))
    return AreaEstimate(full, JACOBIAN_GRID, n_rho, abs(full - half))


def family_coeffs(family: str, param=None, order: int = 64) -> FourierCoeffs:
    """Exact Fourier coefficients of the closed-form test families."""
    if family == FAMILY_IDENTITY:
        return FourierCoeffs.from_dict({1: 1.0}, source_hash="identity")
    if family == FAMILY_ROTATION:
        return FourierCoeffs.from_dict({1: np.exp(1j * float(param))}, source_hash="rotation")
    if family == FAMILY_SHEAR:
        c = complex(param)
        if not 0 <= abs(c) < 0.5:
            raise ValueError("shear parameter must satisfy |c| < 1/2")
        return FourierCoeffs.from_dict({1: 1.0, -2: c}, source_hash="shear")
    if family == FAMILY_MOBIUS:
        a = complex(param)
        if abs(a) >= 1.0:
            raise ValueError("Mobius parameter must satisfy |a| < 1")
        entries = {0: -a}
        for n in range(1, order + 1):
            entries[n] = (1.0 - abs(a) ** 2) * np.conj(a) ** (n - 1)
        return FourierCoeffs.from_dict(entries, source_hash="mobius")
    raise ValueError(f"unknown family {family!r}")


def exact_family_area(family: str, r: float, param=None) -> AreaEstimate:
    """Closed-form image areas of the exact families.

    identity/rotation: pi r^2.  shear (z + c conj(z)^2): pi (r^2 - 2|c|^2 r^4).
    mobius: pi R^2 with R = r (1 - |a|^2) / (1 - |a|^2 r^2), the standard
    image-disk radius, which the test suite confirms against the Jacobian
    oracle before relying on it.
    """
    r = _check_radius(r, allow_zero=False)
    if family in (FAMILY_IDENTITY, FAMILY_ROTATION):
        value = math.pi * r * r
    elif family == FAMILY_SHEAR:
        c = abs(complex(param))
        if not c < 0.5:
            raise ValueError("shear parameter must satisfy |c| < 1/2")
        value = math.pi * (r * r - 2.0 * c * c * r ** 4)
    elif family == FAMILY_MOBIUS:
        a = abs(complex(param))
        if a >= 1.0:
            raise ValueError("Mobius parameter must satisfy |a| < 1")
        radius = r * (1.0 - a * a) / (1.0 - a * a * r * r)
        value = math.pi * radius * radius
    else:
        raise ValueError(f"unknown family {family!r}")
    return AreaEstimate(value, EXACT_FAMILY, 0, 0.0)


def family_boundary_map(family: str, param=None) -> BoundaryMap:
    """Boundary correspondence of a family, where one exists on the circle."""
    if family == FAMILY_IDENTITY:
        return make_identity()
    if family == FAMILY_ROTATION:
        return make_rotation(float(param))
    if family == FAMILY_MOBIUS:
        return make_mobius_boundary(complex(param))
    if family == FAMILY_SHEAR:
        raise ValueError("the shear family is not unimodular on the circle; use family_coeffs")
    raise ValueError(f"unknown family {family!r}")
