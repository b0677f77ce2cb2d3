"""Koenigs models: semigroups built from the image domain of their model map.

A semigroup here is the family phi_t = h^{-1}(h(.) + it) where h maps the
unit disc onto a chosen starlike-at-infinity domain.  The disc-side map is
assembled from the Cayley transform and the domain's half-plane chain, so
h(0) is always the domain's canonical base point and the Denjoy-Wolff point
is the disc preimage of the chain's end at infinity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .domains import (Comb, DomainSpec, HalfPlaneRight, Koebe, Sector, Strip,
                      UnsupportedDomainOperation, canonical_base_point,
                      to_halfplane)
from .hyperbolic import (ORIGIN, DiscPoint, DomainError, HalfPlanePoint,
                         cayley_inv)
from .mapchain import Cayley, RiemannMapChain


@dataclass(frozen=True)
class Hyperbolic:
    spectral_value: float


@dataclass(frozen=True)
class ParabolicPositiveStep:
    pass


@dataclass(frozen=True)
class ParabolicZeroStep:
    pass


Classification = Hyperbolic | ParabolicPositiveStep | ParabolicZeroStep


def classify(domain: DomainSpec) -> Classification:
    """Type of the semigroup whose Koenigs image is the given domain.

    The union of downward translates of the image determines the model base:
    a strip gives a hyperbolic semigroup with spectral value pi/r, a half
    plane gives positive hyperbolic step, the whole plane gives zero step.
    """
    if isinstance(domain, Strip):
        return Hyperbolic(math.pi / domain.r)
    if isinstance(domain, HalfPlaneRight):
        return ParabolicPositiveStep()
    if isinstance(domain, (Koebe, Comb)):
        return ParabolicZeroStep()
    if isinstance(domain, Sector):
        # sweeping p + iV(alpha, beta) downward fills the plane iff the open
        # sector contains the vertical direction, i.e. alpha and beta both > 0;
        # with exactly one of them zero the sweep fills a half plane.
        if domain.alpha > 0.0 and domain.beta > 0.0:
            return ParabolicZeroStep()
        return ParabolicPositiveStep()
    raise DomainError(f"unknown domain {domain!r}")


@dataclass(frozen=True)
class KoenigsSemigroup:
    """A non-elliptic semigroup presented through its holomorphic model."""

    image_domain: DomainSpec
    chain: RiemannMapChain | None  # disc -> image domain (None for combs)
    base_model_point: complex | None
    classification: Classification

    @property
    def to_h(self) -> RiemannMapChain:
        return to_halfplane(self.image_domain)


def koenigs_semigroup(domain: DomainSpec) -> KoenigsSemigroup:
    """Build the semigroup with Koenigs image the given domain."""
    cls = classify(domain)
    if isinstance(domain, Comb):
        return KoenigsSemigroup(domain, None, None, cls)
    fwd = to_halfplane(domain)
    disc_chain = RiemannMapChain((Cayley(),) + fwd.inverse_links())
    return KoenigsSemigroup(domain, disc_chain, canonical_base_point(domain), cls)


def model_point(sg: KoenigsSemigroup, z: DiscPoint = ORIGIN) -> complex:
    """h(z): the model image of a disc point."""
    if sg.chain is None:
        raise UnsupportedDomainOperation("comb image domains carry no closed-form model map")
    if z.value == 0 and not z.guarded:
        return sg.base_model_point
    return sg.chain.forward(z.value)


def orbit_halfplane(sg: KoenigsSemigroup, z: DiscPoint, t: float) -> HalfPlanePoint:
    """The half-plane representation C(phi_t(z)) = F(h(z) + it), exact in
    log-polar form for t as large as 1e12."""
    if t < 0:
        raise ValueError("orbit times must be nonnegative")
    hz = model_point(sg, z)
    return HalfPlanePoint.from_logpolar(sg.to_h.forward_lp(hz + 1j * t))


def orbit(sg: KoenigsSemigroup, z: DiscPoint, t: float) -> DiscPoint:
    """phi_t(z) = h^{-1}(h(z) + it); boundary-hugging results come back in
    guarded form carrying their exact half-plane witness."""
    return cayley_inv(orbit_halfplane(sg, z, t))


def denjoy_wolff(sg: KoenigsSemigroup) -> complex:
    """The common orbit limit on the unit circle.

    Evaluated as the disc preimage of the half-plane end at infinity: push
    points rho = exp(L), theta = 0 through the inverse Cayley transform for
    growing L and extrapolate the (geometrically convergent) sequence.
    """
    if sg.chain is None:
        raise UnsupportedDomainOperation("comb image domains are not orbit-evaluable")
    tau = None
    for log_rho in (24.0, 36.0, 48.0):
        nxt = cayley_inv(HalfPlanePoint(log_rho, 0.0, 1.0)).value
        if tau is not None and nxt == tau:
            break
        tau = nxt
    return tau / abs(tau)


def hyperbolic_step_gap(sg: KoenigsSemigroup, t: float, z: DiscPoint = ORIGIN) -> float:
    """omega(phi_t(z), phi_{t+1}(z)), computed entirely in the half plane."""
    from .hyperbolic import k_half

    return k_half(orbit_halfplane(sg, z, t), orbit_halfplane(sg, z, t + 1.0))
