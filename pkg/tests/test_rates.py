"""Rate thresholds, gap constants, capacities, uncertainty sets."""

import math

import numpy as np
import pytest

from latsec.rates import (BETA, CONWAY_THOMPSON_GAP_NATS,
                          MARTINET_ROOT_DISCRIMINANT, RateBudget,
                          achievable_rates, compound_sets_check,
                          conway_thompson_hermite, gaussian_capacity,
                          kappa_as_db_shift, nats_to_bits,
                          positive_rate_crossing, rate_constants,
                          rayleigh_capacity, snr_db_to_linear)


class TestRateConstants:
    def test_martinet_gap(self):
        gc = rate_constants(MARTINET_ROOT_DISCRIMINANT, 1)
        assert 6.75 <= gc.kappa_siso_nats <= 6.77
        assert 9.74 <= gc.kappa_siso_bits <= 9.77

    def test_conway_thompson_gap(self):
        assert 1.23 <= CONWAY_THOMPSON_GAP_NATS <= 1.25
        assert 1.78 <= nats_to_bits(CONWAY_THOMPSON_GAP_NATS) <= 1.80

    def test_rd_pi_zero(self):
        assert abs(rate_constants(math.pi, 1).kappa_siso_nats) < 1e-12

    def test_mimo_reduces_to_siso(self):
        gc = rate_constants(50.0, 1)
        assert abs(gc.kappa_mimo_nats - gc.kappa_siso_nats) < 1e-12

    def test_mimo_n2(self):
        gc = rate_constants(MARTINET_ROOT_DISCRIMINANT, 2)
        direct = 4 * math.log(2 * MARTINET_ROOT_DISCRIMINANT * BETA ** 0.5 / math.pi)
        assert abs(gc.kappa_mimo_nats - direct) < 1e-12

    def test_invalid_rd(self):
        with pytest.raises(ValueError):
            rate_constants(-1.0)

    def test_conway_thompson_constant(self):
        assert abs(conway_thompson_hermite(2 * math.pi * math.e) - 1.0) < 1e-12


class TestAchievableRates:
    def test_root_discriminant_gap_identity(self):
        for rd in np.linspace(5.0, 400.0, 9):
            t = 2.0 / rd
            budget = RateBudget(C_b=9.0, C_e=2.0, geom_b=t, geom_e=t)
            r_max, rp_min, rsum = achievable_rates(budget, "siso-fading")
            assert abs(r_max - (7.0 - 2 * math.log(rd / math.pi))) < 1e-12
            assert abs(rp_min - (2.0 + math.log(math.e / math.pi) - math.log(t))) < 1e-12
            assert abs(rsum - (9.0 - math.log(4 / (math.pi * math.e)) + math.log(t))) < 1e-12
            # the thresholds tile the gap exactly
            assert abs((rsum - rp_min) - r_max) < 1e-12

    def test_gaussian_conway_thompson(self):
        hh = math.sqrt(1.0 / (math.pi * math.e))
        budget = RateBudget(C_b=5.0, C_e=1.0, geom_b=hh, geom_e=hh)
        r_max, _, _ = achievable_rates(budget, "gaussian")
        assert abs((5.0 - 1.0 - r_max) - CONWAY_THOMPSON_GAP_NATS) < 1e-12

    def test_mimo_tower_gap(self):
        n, g = 2, MARTINET_ROOT_DISCRIMINANT
        d = 2.0 ** n / (BETA ** (n - 1) * g ** n)
        budget = RateBudget(C_b=20.0, C_e=2.0, geom_b=d, geom_e=d, n=n)
        r_max, _, _ = achievable_rates(budget, "mimo")
        kappa = 2 * n * math.log(n * g * BETA ** ((n - 1) / n) / math.pi)
        assert abs(r_max - (18.0 - kappa)) < 1e-12

    def test_compound_matches_mimo(self):
        budget = RateBudget(C_b=10.0, C_e=2.0, geom_b=0.1, geom_e=0.1, n=2)
        assert achievable_rates(budget, "compound") == achievable_rates(budget, "mimo")

    def test_negative_rate_is_valid(self):
        budget = RateBudget(C_b=2.0, C_e=1.0, geom_b=2e-2, geom_e=2e-2)
        r_max, _, _ = achievable_rates(budget, "siso-fading")
        assert r_max < 0

    def test_mode_validation(self):
        budget = RateBudget(C_b=2.0, C_e=1.0, geom_b=0.1, geom_e=0.1, n=2)
        with pytest.raises(ValueError):
            achievable_rates(budget, "gaussian")
        with pytest.raises(ValueError):
            achievable_rates(budget, "bogus")


class TestCapacities:
    def test_rayleigh_oracle(self):
        rng = np.random.default_rng(0)
        for db in (0.0, 5.0, 15.0):
            rho = float(snr_db_to_linear(db))
            mc = np.log1p(rho * rng.exponential(size=1_000_000)).mean()
            cf = float(rayleigh_capacity(rho))
            assert abs(mc - cf) / cf < 0.01

    def test_gaussian(self):
        assert abs(gaussian_capacity(math.e - 1) - 1.0) < 1e-12

    def test_crossing_gaussian_ct(self):
        adv = positive_rate_crossing(CONWAY_THOMPSON_GAP_NATS, 5.0,
                                     law="gaussian") - 5.0
        assert 5.5 < adv < 7.0  # the "approximately 6 dB" loss

    def test_kappa_db_shift(self):
        assert abs(kappa_as_db_shift(math.log(10.0)) - 10.0) < 1e-12


class TestCompoundSets:
    def test_static_boundary(self):
        h = [np.eye(1)]
        res = compound_sets_check(h, h, C_b=1.0, C_e=1.0,
                                  rho_b=math.e - 1, rho_e=math.e - 1)
        assert abs(res["stat_b"] - 1.0) < 1e-12
        assert res["av_in_bob_set"] and res["av_in_eve_set"]
        assert res["compound_in_bob_set"] and res["compound_in_eve_set"]

    def test_alternating_mean_boundary(self):
        # alternating gains whose log-det average equals C exactly
        g1, g2 = 0.5, 2.0
        rho = 1.0
        c = 0.5 * (math.log(1 + rho * g1 ** 2) + math.log(1 + rho * g2 ** 2))
        blocks = [np.array([[g1]]), np.array([[g2]])] * 4
        res = compound_sets_check(blocks, blocks, C_b=c, C_e=c, rho_b=rho, rho_e=rho)
        assert res["av_in_bob_set"] and res["av_in_eve_set"]
        # compound (per-block) membership fails on the weak block
        assert not res["compound_in_bob_set"]

    def test_rayleigh_lln_frequency(self):
        rng = np.random.default_rng(5)
        rho = 2.0
        k = 100
        c = float(rayleigh_capacity(rho))
        hits = 0
        trials = 400
        for _ in range(trials):
            h = (rng.normal(size=(k, 1, 1)) + 1j * rng.normal(size=(k, 1, 1))) / math.sqrt(2)
            res = compound_sets_check(list(h), list(h), C_b=c, C_e=c,
                                      rho_b=rho, rho_e=rho)
            hits += res["av_in_bob_set"]
        # by the CLT the average is above its mean about half the time
        assert 0.35 < hits / trials < 0.65
