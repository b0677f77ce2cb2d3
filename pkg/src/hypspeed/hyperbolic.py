"""Hyperbolic metric, distances, projections and automorphisms in D and H.

The unit disc D carries omega(z, w) = arctanh |(z-w)/(1 - conj(z) w)| and the
right half plane H carries the isometric distance k_half.  Half-plane points
are stored as (log rho, theta) so that orbits with rho far beyond double
range remain exact; all distance formulas below are written against that
representation and stay accurate in every regime (nearly radial pairs, huge
modulus ratios, angles within 1e-12 of +-pi/2).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .mapchain import LogPolar

HALF_PI = 0.5 * math.pi
LOG2 = math.log(2.0)

# Above this |log rho_1 - log rho_0| the cosh-based formula overflows and the
# distance equals |dlog|/2 plus an angle correction to below double precision.
_RADIAL_CROSSOVER = 30.0


class DomainError(ValueError):
    """A point lies outside the space an operation requires."""


@dataclass(frozen=True)
class HalfPlanePoint:
    """rho * exp(i*theta) with rho = exp(log_rho) > 0 and |theta| < pi/2.

    cos_theta optionally carries cos(theta) at full relative accuracy; it is
    what keeps tangential quantities exact when theta hugs +-pi/2.
    """

    log_rho: float
    theta: float
    cos_theta: float | None = field(default=None, compare=False)

    def __post_init__(self):
        if not math.isfinite(self.log_rho):
            raise DomainError("log_rho must be finite")
        if not abs(self.theta) <= HALF_PI:
            raise DomainError("theta must lie in (-pi/2, pi/2)")

    @staticmethod
    def from_complex(w: complex) -> "HalfPlanePoint":
        w = complex(w)
        if w.real <= 0:
            raise DomainError(f"{w} is not in the right half plane")
        r = abs(w)
        return HalfPlanePoint(math.log(r), math.atan2(w.imag, w.real), w.real / r)

    @staticmethod
    def from_logpolar(p: LogPolar) -> "HalfPlanePoint":
        return HalfPlanePoint(p.log_r, p.angle, p.cos_angle)

    @property
    def cos(self) -> float:
        return self.cos_theta if self.cos_theta is not None else math.cos(self.theta)

    def to_complex(self) -> complex:
        return cmath.rect(math.exp(self.log_rho), self.theta)


@dataclass(frozen=True)
class DiscPoint:
    """A point of the unit disc.

    For orbit points so close to the boundary that 1 - |value| underflows,
    ``halfplane`` stores the exact Cayley image; distance computations route
    through it and never touch the rounded ``value``.
    """

    value: complex
    halfplane: HalfPlanePoint | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "value", complex(self.value))
        if not (math.isfinite(self.value.real) and math.isfinite(self.value.imag)):
            raise DomainError("disc point must have finite components")
        if self.halfplane is None:
            if abs(self.value) >= 1.0:
                raise DomainError(f"|{self.value}| >= 1 is not in the unit disc")
        elif abs(self.value) > 1.0 + 1e-12:
            raise DomainError("guarded disc point strays past the boundary")

    @property
    def guarded(self) -> bool:
        return self.halfplane is not None


ORIGIN = DiscPoint(0j)


@dataclass(frozen=True)
class RadialGeodesic:
    """The geodesic r -> r*tau of D, r in (-1, 1), with |tau| = 1."""

    tau: complex

    def __post_init__(self):
        t = complex(self.tau)
        if abs(abs(t) - 1.0) > 1e-9:
            raise DomainError("geodesic direction must be unimodular")
        object.__setattr__(self, "tau", t / abs(t))


def _as_disc(z) -> DiscPoint:
    return z if isinstance(z, DiscPoint) else DiscPoint(z)


# ---------------------------------------------------------------------------
# distances


def _k_lp(l1: float, t1: float, c1: float, l2: float, t2: float, c2: float) -> float:
    """k_H between rho_i e^{i theta_i} given (log rho_i, theta_i, cos theta_i).

    Uses m^2 = [sinh^2(d/2) + sin^2((t1-t2)/2)] / [sinh^2(d/2) + cos^2((t1+t2)/2)]
    with the exact complement 1 - m^2 = cos t1 cos t2 / denominator, so both
    m -> 0 and m -> 1 are handled without cancellation.
    """
    if t1 == 0.0 and t2 == 0.0:
        return 0.5 * abs(l2 - l1)
    if t1 + t2 < 0.0:  # conjugating both points preserves the distance
        t1, t2 = -t1, -t2
    d = abs(l2 - l1)

    # gap of each angle to +pi/2; the cosine cache is the sharper witness
    # only near +-pi/2, where theta itself saturates
    def gap(t, c):
        if c < 0.5:
            return math.asin(c) if t >= 0.0 else math.pi - math.asin(c)
        return HALF_PI - t

    g1, g2 = gap(t1, min(c1, 1.0)), gap(t2, min(c2, 1.0))
    cos_sum_half = math.sin(0.5 * (g1 + g2))  # == cos((t1+t2)/2)
    if d > _RADIAL_CROSSOVER:
        e = math.exp(-d)
        cos_sum = 2.0 * cos_sum_half * cos_sum_half - 1.0
        corr = math.log1p((2.0 * cos_sum + e) * e)
        return LOG2 - 0.5 * math.log(2.0 * c1 * c2) + 0.5 * (d - LOG2 + corr)
    sh = math.sinh(0.5 * d)
    sin_diff_half = math.sin(0.5 * (t1 - t2))
    num = sh * sh + sin_diff_half * sin_diff_half
    den = sh * sh + cos_sum_half * cos_sum_half
    m2 = num / den
    if m2 < 0.81:
        return math.atanh(math.sqrt(m2))
    one_minus_m2 = c1 * c2 / den
    m = math.sqrt(max(1.0 - one_minus_m2, m2 if m2 < 1.0 else 0.0))
    return math.log1p(m) - 0.5 * math.log(one_minus_m2)


def k_half(w1: HalfPlanePoint, w2: HalfPlanePoint) -> float:
    """Hyperbolic distance in the right half plane."""
    return _k_lp(w1.log_rho, w1.theta, w1.cos, w2.log_rho, w2.theta, w2.cos)


def omega(z, w) -> float:
    """Hyperbolic distance in the unit disc."""
    z, w = _as_disc(z), _as_disc(w)
    if z.guarded or w.guarded:
        return k_half(cayley(z), cayley(w))
    if z.value == w.value:
        return 0.0
    den = 1.0 - z.value.conjugate() * w.value
    m = abs((z.value - w.value) / den)
    if m >= 1.0:
        return math.inf
    if m < 0.9:
        return math.atanh(m)
    # near the boundary use 1 - m^2 = (1-|z|^2)(1-|w|^2)/|1-conj(z) w|^2,
    # which avoids the 1 - m cancellation; (1-a)(1+a) keeps 1-a exact
    az, aw = abs(z.value), abs(w.value)
    one_minus_m2 = ((1.0 - az) * (1.0 + az) * (1.0 - aw) * (1.0 + aw)
                    / abs(den) ** 2)
    return math.log1p(m) - 0.5 * math.log(one_minus_m2)


def kappa(space: str, point: complex, vector: complex) -> float:
    """Density of the hyperbolic metric: |v|/(1-|z|^2) in D, |v|/(2 Re w) in H."""
    point, vector = complex(point), complex(vector)
    if space == "disc":
        a2 = abs(point) ** 2
        if a2 >= 1.0:
            raise DomainError("kappa needs an interior disc point")
        return abs(vector) / (1.0 - a2)
    if space == "halfplane":
        if point.real <= 0.0:
            raise DomainError("kappa needs an interior half-plane point")
        return abs(vector) / (2.0 * point.real)
    raise ValueError(f"unknown space {space!r}")


# ---------------------------------------------------------------------------
# Cayley transform


def cayley(z) -> HalfPlanePoint:
    """z -> (1+z)/(1-z), an isometry from (D, omega) onto (H, k_half)."""
    z = _as_disc(z)
    if z.halfplane is not None:
        return z.halfplane
    w = (1.0 + z.value) / (1.0 - z.value)
    return HalfPlanePoint.from_complex(w)


def cayley_inv(w: HalfPlanePoint) -> DiscPoint:
    """Inverse Cayley transform; guards points whose 1-|z| underflows."""
    if w.log_rho <= _RADIAL_CROSSOVER:
        u = w.to_complex()
        z = (u - 1.0) / (u + 1.0)
        if abs(z) < 1.0:
            return DiscPoint(z)
        return DiscPoint(z / abs(z) * (1.0 - 1e-16), halfplane=w)
    eps = 2.0 * math.exp(-w.log_rho)
    s = math.sin(w.theta)
    value = complex(1.0 - eps * w.cos, eps * s)
    return DiscPoint(value, halfplane=w)


# ---------------------------------------------------------------------------
# projections onto radial geodesics


def tangential_distance(theta: float, cos_theta: float | None = None) -> float:
    """k_H(rho e^{i theta}, rho) = k_H(1, e^{i|theta|}), evaluated through the
    identity atanh(tan(|theta|/2)) = 0.5*log((1 + |sin theta|)/cos theta)."""
    if theta == 0.0:
        return 0.0
    c = cos_theta if cos_theta is not None else math.cos(theta)
    s = abs(math.sin(theta))
    return max(0.0, 0.5 * math.log((1.0 + s) / c))


def project_to_radius(z, geo: RadialGeodesic) -> DiscPoint:
    """Hyperbolic projection of z onto the radial geodesic (-1, 1)*tau.

    Closed form: rotate tau to 1, move to H by the Cayley transform where the
    projection onto (0, +inf) is the modulus, and pull back.
    """
    z = _as_disc(z)
    hp = cayley(_rotated(z, geo))
    r = math.tanh(0.5 * hp.log_rho)
    return DiscPoint(r * geo.tau)


def dist_to_radius(z, geo: RadialGeodesic) -> float:
    """Hyperbolic distance from z to the radial geodesic (-1, 1)*tau."""
    z = _as_disc(z)
    hp = cayley(_rotated(z, geo))
    return tangential_distance(hp.theta, hp.cos)


def _rotated(z: DiscPoint, geo: RadialGeodesic) -> DiscPoint:
    """conj(tau) * z, with the half-plane witness transported through the
    conjugated Moebius map when z is boundary-guarded."""
    tau_bar = geo.tau.conjugate()
    if z.halfplane is None:
        return DiscPoint(tau_bar * z.value)
    hp = z.halfplane
    if tau_bar == 1.0:
        return z
    # C(tau_bar * C^{-1}(w)) = N/D with N = (1+tb) - tb*e, D = (1-tb) + tb*e
    # and e = 2/(w+1) = 2u/(1+u), u = 1/w.  Since |tb| = 1 the cross terms
    # collapse to Re(N conj(D)) = 2 Re(e) - |e|^2 exactly, which keeps the
    # boundary distance resolvable however tiny e is.
    u = cmath.exp(complex(-hp.log_rho, -hp.theta))
    e = 2.0 * u / (1.0 + u)
    num = (1.0 + tau_bar) - tau_bar * e
    den = (1.0 - tau_bar) + tau_bar * e
    re_cross = 2.0 * e.real - (e.real * e.real + e.imag * e.imag)
    value = tau_bar * z.value
    if abs(value) >= 1.0:
        value *= (1.0 - 1e-16) / abs(value)
    if re_cross <= 0.0 or abs(den) == 0.0:
        return DiscPoint(value)  # fell across the Cayley pole: plain is fine
    theta = cmath.phase(num) - cmath.phase(den)
    theta = min(max(theta, -HALF_PI), HALF_PI)
    witness = HalfPlanePoint(
        math.log(abs(num)) - math.log(abs(den)),
        theta,
        re_cross / (abs(num) * abs(den)),
    )
    return DiscPoint(value, halfplane=witness)


# ---------------------------------------------------------------------------
# hyperbolic length of polylines (oracle quadrature)

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)


def path_length(space: str, polyline, subdivisions: int = 64) -> float:
    """Hyperbolic length of a polyline by composite 16-point Gauss-Legendre.

    Serves as the integral oracle: the length of a finely discretised
    geodesic must reproduce the closed-form distance.
    """
    pts = [complex(p) for p in polyline]
    if len(pts) < 2:
        raise ValueError("polyline needs at least two vertices")
    for p in pts:
        kappa(space, p, 1.0)  # validates interiority
    if subdivisions < 1:
        raise ValueError("subdivisions must be >= 1")
    total = 0.0
    for a, b in zip(pts[:-1], pts[1:]):
        step = (b - a) / subdivisions
        if step == 0:
            continue
        for k in range(subdivisions):
            lo = a + k * step
            mids = lo + (0.5 + 0.5 * _GL_NODES) * step
            if space == "disc":
                dens = 1.0 / (1.0 - np.abs(mids) ** 2)
            else:
                re = np.real(mids)
                if np.any(re <= 0):
                    raise DomainError("path leaves the half plane")
                dens = 1.0 / (2.0 * re)
            total += abs(step) * 0.5 * float(np.dot(_GL_WEIGHTS, dens))
    return total


# ---------------------------------------------------------------------------
# disc automorphisms


@dataclass(frozen=True)
class DiscAutomorphism:
    """M(z) = exp(i*phase) * (a - z)/(1 - conj(a) z), an automorphism of D."""

    a: complex
    phase: float

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        if abs(self.a) >= 1.0:
            raise DomainError("automorphism parameter must lie in the disc")

    def apply(self, z) -> DiscPoint:
        z = _as_disc(z)
        if z.guarded:
            raise DomainError("automorphisms act on representable disc points only")
        v = (self.a - z.value) / (1.0 - self.a.conjugate() * z.value)
        w = cmath.exp(1j * self.phase) * v
        if abs(w) >= 1.0:
            w *= (1.0 - 1e-16) / abs(w)
        return DiscPoint(w)

    def apply_boundary(self, sigma: complex) -> complex:
        """Continuous boundary extension; |sigma| = 1 maps to modulus 1."""
        w = cmath.exp(1j * self.phase) * (self.a - sigma) / (1.0 - self.a.conjugate() * sigma)
        return w / abs(w)

    def inverse(self) -> "DiscAutomorphism":
        return DiscAutomorphism(cmath.exp(1j * self.phase) * self.a, -self.phase)

    def compose(self, other: "DiscAutomorphism") -> "DiscAutomorphism":
        """self after other, again in canonical (a, phase) form."""
        b = other.inverse().apply(DiscPoint(self.a)).value
        n0 = self.apply(other.apply(ORIGIN)).value
        if abs(b) > 1e-9:
            phase = cmath.phase(n0 / b)
        else:
            probe = self.apply(other.apply(DiscPoint(0.5))).value
            phase = cmath.phase(-probe / 0.5)
        return DiscAutomorphism(b, phase)
