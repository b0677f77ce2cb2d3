import cmath
import math

import numpy as np
import pytest

from hypspeed import (Comb, HalfPlaneRight, Koebe, OmegaSign, Sector, Strip,
                      UnsupportedDomainOperation, build_domain, contains,
                      delta, delta_pm, domain_from_json, domain_to_json,
                      k_domain, quasihyp_lower, to_halfplane)
from hypspeed.domains import DomainError, canonical_base_point

from oracles import brute_force_distance, comb_boundary_points, sector_boundary_points


class TestBuild:
    def test_valid_sector(self):
        assert build_domain({"type": "sector", "p": [0, 0], "alpha": math.pi / 4,
                             "beta": math.pi / 4}) == Sector(0j, math.pi / 4, math.pi / 4)

    def test_sector_zero_opening(self):
        with pytest.raises(DomainError):
            Sector(0j, 0.0, 0.0)

    def test_comb_monotonicity(self):
        with pytest.raises(DomainError):
            Comb([(2.0, 1.0), (1.0, 2.0)])
        with pytest.raises(DomainError):
            Comb([(1.0, 2.0), (2.0, 1.0)])

    def test_strip_width(self):
        with pytest.raises(DomainError):
            Strip(0.0)

    def test_json_round_trip(self):
        for dom in (HalfPlaneRight(1 - 2j), Strip(0.7), Sector(1j, 0.3, 2.0),
                    Koebe(2 + 0.5j), Comb([(1, 1), (2, 5)])):
            assert build_domain(domain_to_json(dom)) == dom

    def test_malformed(self):
        with pytest.raises(DomainError):
            domain_from_json({"type": "sector", "p": [0, 0]})
        with pytest.raises(DomainError):
            domain_from_json({"type": "nope"})


class TestMembership:
    def test_halfplane(self):
        assert contains(HalfPlaneRight(0), 1.0) and not contains(HalfPlaneRight(0), -1.0)

    def test_koebe_slit(self):
        k = Koebe(0)
        assert not contains(k, -1j) and contains(k, 1j) and contains(k, -1.0 + 0j)

    def test_sector_wraps_past_cut(self):
        # alpha = beta = pi is the plane minus the downward slit
        s = Sector(0j, math.pi, math.pi)
        assert contains(s, -1.0 + 0j) and not contains(s, -1j) and contains(s, 1j)

    def test_comb(self):
        c = Comb([(1.0, 1.0), (2.0, 3.0)])
        assert not contains(c, 1.0 - 5j)
        assert contains(c, 1.0 + 5j)
        assert contains(c, 0.5 - 5j)

    def test_starlike(self):
        rng = np.random.default_rng(5)
        for dom in (HalfPlaneRight(0), Strip(2.0), Sector(0j, 0.3, 1.1), Koebe(1j),
                    Comb([(1, 1), (2, 3)])):
            for _ in range(50):
                w = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
                if contains(dom, w):
                    assert contains(dom, w + 1j * rng.uniform(0, 10))


class TestChains:
    def test_koebe_forward_sqrt(self):
        ch = to_halfplane(Koebe(0))
        assert abs(ch.forward(4j) - 2.0) < 1e-12

    def test_sector_base_to_one(self):
        for dom in (Sector(0j, 0.4, 0.4), Sector(1 - 1j, 0.2, 1.9), Sector(0j, math.pi, 0.0)):
            ch = to_halfplane(dom)
            assert abs(ch.forward(canonical_base_point(dom)) - 1.0) < 1e-12

    def test_strip_base_to_one(self):
        assert abs(to_halfplane(Strip(2.0)).forward(1.0) - 1.0) < 1e-12

    def test_comb_has_no_chain(self):
        with pytest.raises(UnsupportedDomainOperation):
            to_halfplane(Comb([(1, 1)]))

    def test_round_trip(self):
        rng = np.random.default_rng(2)
        cases = [(HalfPlaneRight(0.5j), lambda: complex(rng.uniform(0.1, 5), rng.uniform(-5, 5))),
                 (Strip(1.3), lambda: complex(rng.uniform(0.1, 1.2), rng.uniform(-20, 20))),
                 (Sector(0j, 0.9, 0.4),
                  lambda: cmath.rect(rng.uniform(0.1, 10),
                                     math.pi / 2 - 0.9 + rng.uniform(0.05, 1.2))),
                 (Koebe(0j), lambda: cmath.rect(rng.uniform(0.1, 10),
                                                rng.uniform(-math.pi / 2 + 0.05,
                                                            3 * math.pi / 2 - 0.05)))]
        for dom, draw in cases:
            ch = to_halfplane(dom)
            for _ in range(1000):
                w = draw()
                assert abs(ch.inverse(ch.forward(w)) - w) <= 1e-10 * (1 + abs(w))


class TestDelta:
    def test_halfplane(self):
        assert delta(HalfPlaneRight(0), 1.0) == 1.0

    def test_strip(self):
        assert delta(Strip(2.0), 0.5 + 7j) == 0.5

    def test_koebe_tip(self):
        assert delta(Koebe(0), 3j) == 3.0
        assert delta(Koebe(0), -2.0 + 0j) == 2.0

    def test_outside_raises(self):
        with pytest.raises(DomainError):
            delta(HalfPlaneRight(0), -1.0)

    def test_sector_against_brute_force(self):
        dom = Sector(0.5 - 0.5j, 0.7, 1.9)
        pts = sector_boundary_points(dom.p, dom.ray_lo, dom.ray_hi)
        rng = np.random.default_rng(8)
        for _ in range(60):
            w = complex(rng.uniform(-4, 4), rng.uniform(-4, 6))
            if contains(dom, w):
                assert delta(dom, w) == pytest.approx(
                    brute_force_distance(w, pts), abs=2e-3)

    def test_comb_plateau(self):
        c = Comb([(1.0, 1.0), (2.0, 6.0)])
        x1 = 1.0 + math.sqrt(3.0)
        for r in np.linspace(x1, 6.0, 9):
            assert delta(c, 1j * r) == pytest.approx(2.0, abs=1e-12)
        # below the crossover the first tooth tip is nearer
        assert delta(c, 1j * 2.0) == pytest.approx(math.hypot(1.0, 1.0), abs=1e-12)

    def test_comb_against_brute_force(self):
        c = Comb([(1.0, 1.0), (2.0, 6.0), (3.5, 9.0)])
        pts = comb_boundary_points(c.teeth)
        rng = np.random.default_rng(9)
        for _ in range(60):
            w = complex(rng.uniform(-3.4, 3.4), rng.uniform(-4, 8.5))
            if contains(c, w):
                assert delta(c, w) == pytest.approx(brute_force_distance(w, pts), abs=1e-2)

    def test_comb_extent_guard(self):
        c = Comb([(1.0, 1.0), (2.0, 6.0)])
        with pytest.raises(DomainError):
            delta(c, 1j * 100.0)


class TestDeltaPm:
    def test_halfplane_minus_is_plane(self):
        dom = HalfPlaneRight(0)
        assert delta_pm(dom, OmegaSign("minus", 1.0), 1 + 5j) == math.inf

    def test_halfplane_plus(self):
        dom = HalfPlaneRight(0)
        assert delta_pm(dom, OmegaSign("plus", 1.0), 1 + 7j) == 1.0

    def test_koebe_symmetric(self):
        dom = Koebe(0)
        for t in (0.5, 2.0, 9.0):
            d_plus = delta_pm(dom, OmegaSign("plus", 1j), 1j * t)
            d_minus = delta_pm(dom, OmegaSign("minus", 1j), 1j * t)
            assert d_plus == d_minus == pytest.approx(t, abs=1e-12)

    def test_monotone_vs_delta(self):
        rng = np.random.default_rng(12)
        doms = [HalfPlaneRight(0), Strip(2.0), Sector(0j, 0.8, 0.8), Koebe(0),
                Sector(0j, math.pi, math.pi), Comb([(1, 1), (2, 4)])]
        for dom in doms:
            ref = 1j * 0.5 if isinstance(dom, (Koebe,)) else None
            if ref is None:
                ref = {HalfPlaneRight: 1.0 + 0j, Strip: 1.0 + 0j}.get(type(dom), 1j)
            if not contains(dom, ref):
                ref = canonical_base_point(dom) if not isinstance(dom, Comb) else 0j
            for _ in range(40):
                w = complex(rng.uniform(-4, 4), rng.uniform(-3, 5))
                if not contains(dom, w):
                    continue
                if isinstance(dom, Comb) and (abs(w.real) > dom.max_abscissa
                                              or w.imag > dom.extent):
                    continue
                dv = delta(dom, w)
                for side in ("plus", "minus"):
                    assert delta_pm(dom, OmegaSign(side, ref), w) >= dv - 1e-12

    def test_sector_flat_sides(self):
        # iV(pi, 0) is the right half plane; ref at the base point 1
        dom = Sector(0j, math.pi, 0.0)
        assert delta_pm(dom, OmegaSign("minus", 1.0 + 0j), 1 + 9j) == math.inf
        assert delta_pm(dom, OmegaSign("plus", 1.0 + 0j), 1 + 9j) == pytest.approx(1.0, abs=1e-12)

    def test_outside_enlarged_domain(self):
        with pytest.raises(DomainError):
            delta_pm(HalfPlaneRight(0), OmegaSign("plus", 1.0), -5.0 + 0j)


class TestKDomain:
    def test_same_point(self):
        assert k_domain(Strip(1.0), 0.5, 0.5) == 0.0

    def test_koebe_quarter_log(self):
        assert k_domain(Koebe(0), 1j, math.e ** 4 * 1j) == pytest.approx(1.0, abs=1e-12)

    def test_strip_vertical(self):
        r = 0.9
        assert k_domain(Strip(r), r / 2, r / 2 + 3j) == pytest.approx(
            math.pi * 3 / (2 * r), abs=1e-10)

    def test_comb_unsupported(self):
        with pytest.raises(UnsupportedDomainOperation):
            k_domain(Comb([(1, 1)]), 0j, 1j)

    def test_outside(self):
        with pytest.raises(DomainError):
            k_domain(Koebe(0), -1j, 1j)


class TestQuasihyp:
    def test_empty_segment(self):
        assert quasihyp_lower(Koebe(0), 2.0, 2.0) == 0.0

    def test_koebe_quarter_log(self):
        T = 31.7
        assert quasihyp_lower(Koebe(0), 1.0, T) == pytest.approx(0.25 * math.log(T), rel=1e-9)

    def test_halfplane_constant_density(self):
        # delta(ir) = 1 throughout, so the bound is just length/4
        assert quasihyp_lower(HalfPlaneRight(-1.0), 0.0, 4.0) == pytest.approx(1.0, rel=1e-9)

    def test_comb_plateau_piece(self):
        c = Comb([(1.0, 1.0), (2.0, 6.0)])
        x1 = 1.0 + math.sqrt(3.0)
        got = quasihyp_lower(c, x1, 6.0)
        assert got == pytest.approx((6.0 - x1) / (4.0 * 2.0), rel=1e-12)

    def test_comb_exact_vs_quadrature(self):
        # the exact piecewise integral must agree with brute-force quadrature
        c = Comb([(1.0, 1.0), (2.0, 6.0), (3.5, 9.0)])
        lo, hi = 0.25, 8.75
        rs = np.linspace(lo, hi, 200_001)
        vals = np.array([1.0 / delta(c, 1j * r) for r in rs])
        riemann = 0.25 * float(np.trapezoid(vals, rs))
        assert quasihyp_lower(c, lo, hi) == pytest.approx(riemann, rel=1e-7)

    def test_segment_outside(self):
        with pytest.raises(DomainError):
            quasihyp_lower(Strip(1.0), 0.0, 1.0)  # imaginary axis is the wall

    def test_lower_bounds_distance_on_symmetric_domains(self):
        for dom in (Koebe(0), Sector(0j, 0.6, 0.6)):
            for t0, t1 in ((0.5, 3.0), (1.0, 50.0), (2.0, 2000.0)):
                assert quasihyp_lower(dom, t0, t1) <= k_domain(dom, 1j * t0, 1j * t1) + 1e-9
