"""Comb domains whose total speed beats a prescribed sublinear gauge.

Given g with g(t) -> inf and g(t)/t -> 0, slits at +-a_j are cut off at
heights b_j chosen so that the quasi-hyperbolic lower bound along the orbit
axis reaches at least (j/4) g(b_{j+1}) at time b_{j+1}.  The key geometric
quantity is x_j, the height where the tooth j+1 wall becomes the nearest
boundary piece: |i x_j - (a_j + i b_j)| = a_{j+1}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .domains import Comb, quasihyp_lower

_PROBE_GRID = [10.0 ** k for k in range(3, 13)]
_MARGIN = 0.999


def gauge(spec) -> tuple[str, Callable[[float], float]]:
    """Resolve a gauge spec to (name, callable).

    Accepts 'log1p', 'sqrt', ('pow', p) with p < 1, a custom table of
    (t, value) pairs (interpolated linearly), or any callable.
    """
    if callable(spec):
        return getattr(spec, "__name__", "custom"), spec
    if spec == "log1p":
        return "log1p", math.log1p
    if spec == "sqrt":
        return "sqrt", math.sqrt
    if isinstance(spec, tuple) and len(spec) == 2 and spec[0] == "pow":
        p = float(spec[1])
        if not 0.0 < p < 1.0:
            raise ValueError("pow gauge needs an exponent in (0, 1)")
        return f"pow:{p:g}", lambda t: t ** p
    if isinstance(spec, Sequence) and spec and not isinstance(spec, (str, bytes)):
        pts = sorted((float(t), float(v)) for t, v in spec)
        if len(pts) < 2:
            raise ValueError("a gauge table needs at least two points")

        def table(t: float) -> float:
            if t <= pts[0][0]:
                return pts[0][1]
            for (t0, v0), (t1, v1) in zip(pts[:-1], pts[1:]):
                if t <= t1:
                    return v0 + (v1 - v0) * (t - t0) / (t1 - t0)
            # extrapolate with the last slope
            (t0, v0), (t1, v1) = pts[-2], pts[-1]
            return v1 + (v1 - v0) * (t - t1) / (t1 - t0)

        return "table", table
    raise ValueError(f"unknown gauge spec {spec!r}")


def check_sublinear(g: Callable[[float], float]) -> None:
    """Reject gauges that fail the decade-halving probe for g(t)/t -> 0."""
    for T in _PROBE_GRID:
        lo, hi = g(T / 10.0), g(T)
        if not (hi > lo > 0.0):
            raise ValueError("gauge must be positive and increasing on the probe grid")
        if not hi / T < 0.5 * lo / (T / 10.0):
            raise ValueError(f"gauge is not sublinear on the probe grid (t = {T:g})")


def resolve_abscissae(a_spec, count: int) -> list[float]:
    """First `count` tooth abscissae from 'linear', ('geometric', ratio) or an
    explicit strictly increasing list."""
    if a_spec == "linear":
        return [float(j) for j in range(1, count + 1)]
    if isinstance(a_spec, tuple) and len(a_spec) == 2 and a_spec[0] == "geometric":
        ratio = float(a_spec[1])
        if ratio <= 1.0:
            raise ValueError("geometric abscissae need ratio > 1")
        return [ratio ** j for j in range(count)]
    if isinstance(a_spec, Sequence) and not isinstance(a_spec, (str, bytes)):
        a = [float(x) for x in a_spec]
        if len(a) < count:
            raise ValueError(f"need {count} abscissae, got {len(a)}")
        return a[:count]
    raise ValueError(f"unknown abscissa spec {a_spec!r}")


@dataclass(frozen=True)
class CombConstruction:
    """The certified construction: teeth (a_j, b_j), plateau onsets x_j, and
    the per-step constraint values (j a_{j+1} g(b_{j+1}) + x_j)/b_{j+1}."""

    gauge_name: str
    a: tuple[float, ...]
    b: tuple[float, ...]
    x: tuple[float, ...]
    constraint: tuple[float, ...]
    extent: float

    @property
    def steps(self) -> int:
        return len(self.x)

    def domain(self) -> Comb:
        return Comb(tuple(zip(self.a, self.b)))


def build_comb(g_spec, a_spec="linear", steps: int = 10) -> CombConstruction:
    """Construct a comb certifying `steps` ratio milestones.

    Materialises steps + 1 teeth: b_1 = 1 and each b_{j+1} is the smallest
    height (doubling search then 60 bisections, margin 0.999) satisfying the
    strict growth constraint, which forces b_{j+1} - x_j >= j a_{j+1} g(b_{j+1}).
    """
    if steps < 1:
        raise ValueError("need at least one construction step")
    name, g = gauge(g_spec)
    check_sublinear(g)
    a = resolve_abscissae(a_spec, steps + 1)
    if any(y <= x for x, y in zip(a[:-1], a[1:])):
        raise ValueError("abscissae must strictly increase")

    b = [1.0]
    xs, cons = [], []
    for j in range(1, steps + 1):
        aj, aj1, bj = a[j - 1], a[j], b[-1]
        xj = bj + math.sqrt(aj1 * aj1 - aj * aj)

        def constraint(bb: float) -> float:
            return (j * aj1 * g(bb) + xj) / bb

        hi = 2.0 * xj
        for _ in range(512):
            if constraint(hi) <= _MARGIN:
                break
            hi *= 2.0
        else:
            raise ValueError("gauge grows too fast for the doubling search")
        lo = xj
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            if constraint(mid) <= _MARGIN:
                hi = mid
            else:
                lo = mid
        xs.append(xj)
        cons.append(constraint(hi))
        b.append(hi)
    return CombConstruction(name, tuple(a), tuple(b), tuple(xs), tuple(cons), b[-1])


def verify_comb(cc: CombConstruction, t_start: float = 1e-6) -> list[dict]:
    """Ratio table quasihyp_lower(0+, b_{j+1}) / g(b_{j+1}) for each step j.

    The integral starts at t_start rather than 0 (the first plateau makes the
    omitted piece smaller than t_start / (4 a_1)).  Raises if any ratio drops
    below j/4 - 1e-9; the construction guarantees it cannot.
    """
    _, g = gauge_from_name(cc.gauge_name)
    dom = cc.domain()
    rows = []
    for j in range(1, cc.steps + 1):
        bj1 = cc.b[j]
        bound = quasihyp_lower(dom, t_start, bj1)
        ratio = bound / g(bj1)
        if ratio < j / 4.0 - 1e-9:
            raise AssertionError(f"comb ratio {ratio:g} fell below {j}/4 at step {j}")
        rows.append({
            "j": j,
            "b": bj1,
            "x": cc.x[j - 1],
            "bound": bound,
            "gauge": g(bj1),
            "ratio": ratio,
            "plateau_piece": (bj1 - cc.x[j - 1]) / (4.0 * cc.a[j]),
        })
    return rows


def gauge_from_name(name: str):
    """Recover a named gauge ('log1p', 'sqrt', 'pow:p'); tables cannot be
    rebuilt from their name and must be re-verified with the original spec."""
    if name == "log1p":
        return gauge("log1p")
    if name == "sqrt":
        return gauge("sqrt")
    if name.startswith("pow:"):
        return gauge(("pow", float(name.split(":", 1)[1])))
    raise ValueError(f"cannot rebuild gauge {name!r} from its name")
