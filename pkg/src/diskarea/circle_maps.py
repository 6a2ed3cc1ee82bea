"""Boundary circle correspondences: representation, generators, smoothing.

The central object is a nondecreasing, degree-one correspondence of the unit
circle, stored as the continuous lift of its angle function over one closed
period together with a unit-modulus prefactor.  Everything downstream
(Fourier coefficients, kernel quadrature, harmonic extension) consumes these
maps through :func:`eval_lift` alone, so period bookkeeping lives here and
nowhere else.
"""

from __future__ import annotations

import cmath
import hashlib
import json
import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi

HOMEOMORPHISM = "homeomorphism"
NONDECREASING_STEP = "nondecreasing-step"
KINDS = (HOMEOMORPHISM, NONDECREASING_STEP)

# constructor tolerances: monotonicity slack and unit-modulus slack
_MONO_TOL = 1e-12
_UNIT_TOL = 1e-12


@dataclass(frozen=True)
class BoundaryMap:
    """Nondecreasing degree-one circle correspondence with unimodular prefactor.

    ``knots_t`` / ``knots_lift`` sample the lift over one closed period:
    ``knots_t[0] == 0``, ``knots_t[-1] == 2*pi`` and
    ``knots_lift[-1] == knots_lift[0] + 2*pi``.  Between knots the lift is
    interpolated linearly for kind ``homeomorphism`` and held constant
    (right-continuous) for kind ``nondecreasing-step``.  The first lift value
    is normalized into ``[0, 2*pi)``.  Instances are immutable and safe to
    share across worker threads.
    """

    knots_t: np.ndarray
    knots_lift: np.ndarray
    omega: complex = 1.0 + 0.0j
    kind: str = HOMEOMORPHISM

    def __post_init__(self):
        t = np.ascontiguousarray(self.knots_t, dtype=float).copy()
        lift = np.ascontiguousarray(self.knots_lift, dtype=float).copy()
        if t.ndim != 1 or lift.ndim != 1 or t.shape != lift.shape:
            raise ValueError("knots_t and knots_lift must be 1-d arrays of equal length")
        if t.size < 2:
            raise ValueError("need at least the two period-closing knots")
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if abs(t[0]) > _MONO_TOL or abs(t[-1] - TWO_PI) > _MONO_TOL:
            raise ValueError("knots must cover exactly one period [0, 2*pi]")
        dt = np.diff(t)
        if np.any(dt <= 0.0):
            raise ValueError("knot angles must be strictly increasing")
        dlift = np.diff(lift)
        if np.any(dlift < -_MONO_TOL):
            raise ValueError("lift values must be nondecreasing")
        if self.kind == HOMEOMORPHISM and np.any(dlift <= 0.0):
            raise ValueError("homeomorphism lift must be strictly increasing")
        if abs((lift[-1] - lift[0]) - TWO_PI) > _MONO_TOL:
            raise ValueError("lift must rise by exactly 2*pi over one period")
        w = complex(self.omega)
        if abs(abs(w) - 1.0) > _UNIT_TOL:
            raise ValueError("omega must have unit modulus")
        # normalize: pin the period endpoints and the starting branch
        t[0] = 0.0
        t[-1] = TWO_PI
        shift = TWO_PI * math.floor(lift[0] / TWO_PI)
        if shift != 0.0:
            lift = lift - shift
        lift[-1] = lift[0] + TWO_PI
        t.setflags(write=False)
        lift.setflags(write=False)
        object.__setattr__(self, "knots_t", t)
        object.__setattr__(self, "knots_lift", lift)
        object.__setattr__(self, "omega", w)

    @property
    def n_knots(self) -> int:
        return int(self.knots_t.size)


def eval_lift(bmap: BoundaryMap, t):
    """Continuous lift of the correspondence at angle(s) ``t``.

    The argument is reduced modulo ``2*pi`` and the removed whole periods are
    added back verbatim, so values a full period apart differ by exactly
    ``2*pi`` up to the rounding of the caller's argument, never by a
    quadrature-sized error.
    """
    ta = np.asarray(t, dtype=float)
    tm = np.mod(ta, TWO_PI)
    shift = ta - tm
    if bmap.kind == HOMEOMORPHISM:
        base = np.interp(tm, bmap.knots_t, bmap.knots_lift)
    else:
        idx = np.searchsorted(bmap.knots_t, tm, side="right") - 1
        idx = np.clip(idx, 0, bmap.knots_t.size - 1)
        base = bmap.knots_lift[idx]
    out = base + shift
    return out if ta.ndim else float(out)


def boundary_values(bmap: BoundaryMap, t):
    """Boundary function omega * exp(i * lift(t)) on the unit circle."""
    return bmap.omega * np.exp(1j * eval_lift(bmap, t))


def make_rotation(phi0: float = 0.0) -> BoundaryMap:
    """Rotation of the disk by angle phi0: identity correspondence, prefactor e^{i phi0}."""
    return BoundaryMap(
        knots_t=np.array([0.0, TWO_PI]),
        knots_lift=np.array([0.0, TWO_PI]),
        omega=cmath.exp(1j * phi0),
        kind=HOMEOMORPHISM,
    )


def make_identity() -> BoundaryMap:
    return make_rotation(0.0)


def make_mobius_boundary(a: complex, n_knots: int = 4096) -> BoundaryMap:
    """Boundary correspondence of the disk automorphism z -> (z - a) / (1 - conj(a) z).

    The angle function is sampled on ``n_knots`` uniform points and stored as
    a piecewise-linear lift, so downstream quadrature sees an O(1/n_knots^2)
    interpolation of the true automorphism.
    """
    a = complex(a)
    if abs(a) >= 1.0:
        raise ValueError("Mobius parameter must satisfy |a| < 1")
    if n_knots < 4:
        raise ValueError("n_knots must be at least 4")
    if a == 0:
        return make_identity()
    t = np.linspace(0.0, TWO_PI, n_knots + 1)
    z = np.exp(1j * t[:-1])
    ang = np.angle((z - a) / (1.0 - np.conj(a) * z))
    lift = np.unwrap(ang)
    lift -= TWO_PI * math.floor(lift[0] / TWO_PI)
    lift = np.append(lift, lift[0] + TWO_PI)
    return BoundaryMap(knots_t=t, knots_lift=lift, omega=1.0 + 0.0j, kind=HOMEOMORPHISM)


def make_random_homeomorphism(
    seed: int,
    n_knots: int = 256,
    roughness: float = 0.5,
    half_turn_symmetric: bool = False,
) -> BoundaryMap:
    """Seeded random boundary homeomorphism from normalized positive increments.

    Increments are exp(roughness * N(0,1)) on a uniform grid, rescaled so the
    lift rises by exactly 2*pi; the prefactor is drawn uniformly from the unit
    circle out of the same stream.  Deterministic in ``seed``.  With
    ``half_turn_symmetric`` the lift satisfies lift(t + pi) = lift(t) + pi,
    which centers the harmonic extension at the origin exactly.
    """
    if n_knots < 4:
        raise ValueError("n_knots must be at least 4")
    if not 0.0 < roughness < 1.0:
        raise ValueError("roughness must lie in (0, 1)")
    if half_turn_symmetric and n_knots % 2:
        raise ValueError("half_turn_symmetric needs an even n_knots")
    rng = np.random.default_rng(seed)
    if half_turn_symmetric:
        half = np.exp(roughness * rng.standard_normal(n_knots // 2))
        inc = np.concatenate([half, half])
    else:
        inc = np.exp(roughness * rng.standard_normal(n_knots))
    lift = np.concatenate([[0.0], np.cumsum(inc)])
    lift *= TWO_PI / lift[-1]
    lift[-1] = TWO_PI
    omega = cmath.exp(1j * TWO_PI * rng.uniform())
    t = np.linspace(0.0, TWO_PI, n_knots + 1)
    return BoundaryMap(knots_t=t, knots_lift=lift, omega=omega, kind=HOMEOMORPHISM)


def make_step_map(jump_points, values) -> BoundaryMap:
    """Nondecreasing step correspondence: lift equals values[i] on [jump_i, jump_{i+1}).

    Before the first jump the lift continues the last value from the previous
    period (values[-1] - 2*pi).  ``values`` must be nondecreasing and span at
    most 2*pi, so the wrap jump closes the period.
    """
    s = np.asarray(jump_points, dtype=float)
    v = np.asarray(values, dtype=float)
    if s.ndim != 1 or v.ndim != 1 or s.size != v.size or s.size < 1:
        raise ValueError("jump_points and values must be equal-length nonempty 1-d sequences")
    if np.any(np.diff(s) <= 0.0) or s[0] < 0.0 or s[-1] >= TWO_PI:
        raise ValueError("jump points must be strictly increasing within [0, 2*pi)")
    if np.any(np.diff(v) < 0.0):
        raise ValueError("step values must be nondecreasing")
    if v[-1] - v[0] > TWO_PI + _MONO_TOL:
        raise ValueError("step values must rise by at most 2*pi over one period")
    if s[0] > 0.0:
        t = np.concatenate([[0.0], s, [TWO_PI]])
        lift = np.concatenate([[v[-1] - TWO_PI], v, [v[-1]]])
    else:
        t = np.concatenate([s, [TWO_PI]])
        lift = np.concatenate([v, [v[0] + TWO_PI]])
    return BoundaryMap(knots_t=t, knots_lift=lift, omega=1.0 + 0.0j, kind=NONDECREASING_STEP)


def mollify_map(bmap: BoundaryMap, width: float = TWO_PI / 64, n_knots: int = 8192) -> BoundaryMap:
    """Smooth the periodic part of the lift by a wrapped-Gaussian of the given width.

    The deviation lift(t) - t is filtered in Fourier space with the positive
    kernel exp(-(n*width)^2 / 2), which preserves monotonicity, then resampled
    on ``n_knots`` piecewise-linear knots.  Restores spectral quadrature
    accuracy for piecewise-linear inputs.
    """
    if width <= 0.0:
        raise ValueError("width must be positive")
    if bmap.kind != HOMEOMORPHISM:
        raise ValueError("only homeomorphisms are mollified")
    t = np.linspace(0.0, TWO_PI, n_knots, endpoint=False)
    zeta = eval_lift(bmap, t) - t
    freqs = np.fft.fftfreq(n_knots, d=1.0 / n_knots)
    damp = np.exp(-0.5 * (freqs * width) ** 2)
    zeta_s = np.fft.ifft(np.fft.fft(zeta) * damp).real
    lift = t + zeta_s
    lift -= TWO_PI * math.floor(lift[0] / TWO_PI)
    knots_t = np.append(t, TWO_PI)
    knots_lift = np.append(lift, lift[0] + TWO_PI)
    return BoundaryMap(knots_t=knots_t, knots_lift=knots_lift, omega=bmap.omega, kind=bmap.kind)


def conjugate_map(bmap: BoundaryMap) -> BoundaryMap:
    """Correspondence of z -> conj(f(conj(z))): reverses the circle twice.

    Used as the preprocessing step that reduces orientation-reversing input
    data to the orientation-preserving form handled everywhere else.  The
    operation is an involution.
    """
    t = (TWO_PI - bmap.knots_t[::-1]).copy()
    lift = (-bmap.knots_lift[::-1]).copy()
    t[0] = 0.0
    t[-1] = TWO_PI
    lift -= TWO_PI * math.floor(lift[0] / TWO_PI)
    lift[-1] = lift[0] + TWO_PI
    return BoundaryMap(knots_t=t, knots_lift=lift, omega=np.conj(bmap.omega), kind=bmap.kind)


def to_json(bmap: BoundaryMap) -> str:
    """Serialize to the wire schema; round-trips bit-exactly (repr floats)."""
    doc = {
        "kind": bmap.kind,
        "omega_re": bmap.omega.real,
        "omega_im": bmap.omega.imag,
        "knots": [[float(a), float(b)] for a, b in zip(bmap.knots_t, bmap.knots_lift)],
    }
    return json.dumps(doc)


def from_json(text: str) -> BoundaryMap:
    doc = json.loads(text)
    knots = np.asarray(doc["knots"], dtype=float)
    return BoundaryMap(
        knots_t=knots[:, 0],
        knots_lift=knots[:, 1],
        omega=complex(doc["omega_re"], doc["omega_im"]),
        kind=doc["kind"],
    )


def map_hash(bmap: BoundaryMap) -> str:
    """Short stable identifier of the exact knot content."""
    return hashlib.sha1(to_json(bmap).encode()).hexdigest()[:12]
