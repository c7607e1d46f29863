import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pulsedecay import (
    Exponential,
    FreeSpaceCubic,
    Lorentzian,
    PulseSchedule,
    QuadratureSpec,
    SweepRow,
    TwoLevelDrive,
    integrate,
    make_row,
    round12,
    x_factor,
)


class TestPulseSchedule:
    def test_total_time_exact(self):
        sched = PulseSchedule(tau=0.3, n_cycles=7)
        assert sched.total_time() == 2 * 7 * 0.3

    def test_kick_times(self):
        sched = PulseSchedule(tau=0.5, n_cycles=2, t_start=1.0)
        np.testing.assert_allclose(sched.kick_times(), [1.5, 2.0, 2.5, 3.0])

    @pytest.mark.parametrize("tau,n", [(0.0, 1), (-1.0, 1), (1.0, 0), (1.0, -3)])
    def test_invalid(self, tau, n):
        with pytest.raises(ValueError):
            PulseSchedule(tau=tau, n_cycles=n)


class TestTwoLevelDrive:
    def test_perturbative_flag(self):
        drive = TwoLevelDrive(1e-3, 0.5)
        assert drive.is_perturbative(total_time=10.0)
        assert not drive.is_perturbative(total_time=1e3)


class TestXFactor:
    def test_zero_time(self):
        assert x_factor(3.7, 0.0) == 0j

    def test_pi_point(self):
        # X = exp(-i pi) - 1 = -2
        val = x_factor(math.pi, 1.0)
        assert val == pytest.approx(-2.0 + 0j, abs=1e-15)

    def test_generic_point(self):
        val = x_factor(1.0, 1.0)
        assert val.real == pytest.approx(math.cos(1.0) - 1.0, rel=1e-14)
        assert val.imag == pytest.approx(-math.sin(1.0), rel=1e-14)

    def test_matches_direct_difference(self):
        rng = np.random.default_rng(3)
        for _ in range(200):
            delta, t = rng.uniform(-8, 8), rng.uniform(0, 12)
            direct = np.exp(-1j * delta * t) - 1.0
            assert x_factor(delta, t) == pytest.approx(direct, abs=1e-14)

    def test_modulus_identity_4ulp(self):
        # |X|^2 == 4 sin^2(delta t / 2) within 4 ulps, 1e4 random draws
        rng = np.random.default_rng(42)
        for _ in range(10_000):
            delta, t = rng.uniform(0.1, 5.0), rng.uniform(0.0, 10.0)
            lhs = abs(x_factor(delta, t)) ** 2
            rhs = 4.0 * math.sin(0.5 * delta * t) ** 2
            assert abs(lhs - rhs) <= 4 * np.spacing(max(rhs, np.finfo(float).tiny))

    @given(delta=st.floats(0.05, 10.0), t=st.floats(0.0, 20.0))
    @settings(max_examples=200)
    def test_periodicity(self, delta, t):
        period = 2 * math.pi / delta
        a = x_factor(delta, t)
        b = x_factor(delta, t + period)
        assert abs(a - b) < 1e-12


class TestBathDensities:
    @pytest.mark.parametrize("model,halfwidth", [
        (Lorentzian(1.0, 1.0), 6.4e5),
        (Lorentzian(2.5, 0.7), 6.4e5 * 0.7),
        (Exponential(1.0, 1.0), 25.0),
        (Exponential(0.3, 2.0), 50.0),
    ])
    def test_normalization(self, model, halfwidth):
        # densities integrate to rho0; smooth integrand, so a coarse
        # oscillation scale keeps the adaptive grid small
        quad = QuadratureSpec(abs_tol=1e-10, rel_tol=1e-9,
                              oscillation_scale=1e-3 / model.gamma)
        total = integrate(model.density, -halfwidth, halfwidth, quad)
        assert total == pytest.approx(model.rho0, rel=1e-6)

    def test_free_space_weight(self):
        m = FreeSpaceCubic(cutoff=1.0)
        x = np.array([-1.5, -1.0, 0.0, 0.5, 1.0, 1.2])
        np.testing.assert_allclose(m.density(x), [0.0, 0.0, 1.0, 3.375, 8.0, 0.0])

    @pytest.mark.parametrize("bad", [
        lambda: Lorentzian(0.0, 1.0),
        lambda: Exponential(1.0, -1.0),
        lambda: FreeSpaceCubic(0.0),
    ])
    def test_invalid_parameters(self, bad):
        with pytest.raises(ValueError):
            bad()


class TestSweepRows:
    def test_ratio_rule(self):
        row = make_row(1.0, 0.25, 0.5)
        assert row.ratio == 0.5

    def test_ratio_undefined_when_bare_zero(self):
        row = make_row(1.0, 0.25, 0.0)
        assert math.isnan(row.ratio)

    def test_round12_survives_roundtrip(self):
        v = 0.12345678901234567
        r = round12(v)
        assert float(f"{r:.12g}") == r

    def test_rows_store_wire_precision(self):
        row = make_row(math.pi, 1.0 / 3.0, 2.0 / 3.0, extras=(math.e,))
        assert row == SweepRow(round12(math.pi), round12(1 / 3), round12(2 / 3),
                               round12(round12(1 / 3) / round12(2 / 3)),
                               (round12(math.e),))
