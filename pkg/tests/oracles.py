"""Independent slow oracles used only by the tests.

These deliberately avoid the closed forms they are checking: golden-section
search for hyperbolic projections, and brute-force discretised boundaries
for Euclidean distances.
"""

import math

from hypspeed import DiscPoint, RadialGeodesic, omega

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_minimize(f, lo: float, hi: float, iters: int = 200) -> float:
    a, b = lo, hi
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def project_by_golden(z: DiscPoint, geo: RadialGeodesic) -> DiscPoint:
    r = golden_minimize(lambda r: omega(DiscPoint(r * geo.tau), z),
                        -1.0 + 1e-12, 1.0 - 1e-12)
    return DiscPoint(r * geo.tau)


def brute_force_distance(p: complex, boundary_points) -> float:
    return min(abs(p - q) for q in boundary_points)


def comb_boundary_points(teeth, depth: float = 50.0, density: int = 4000):
    """Dense discretisation of the comb slits down to Im = top - depth."""
    pts = []
    for a, b in teeth:
        for k in range(density + 1):
            y = b - depth * k / density
            pts.append(complex(a, y))
            pts.append(complex(-a, y))
    return pts


def sector_boundary_points(apex: complex, ang_lo: float, ang_hi: float,
                           reach: float = 400.0, density: int = 8000):
    pts = [apex]
    for ang in (ang_lo, ang_hi):
        d = complex(math.cos(ang), math.sin(ang))
        for k in range(1, density + 1):
            pts.append(apex + d * (reach * k / density) ** 1.5)
    return pts
