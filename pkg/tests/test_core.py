"""Domain types, the deformed bracket, and domain validation."""

import math

import numpy as np
import pytest

from qgasgeo import DomainError, GasSpec, ReducedUnits, ThermoPoint, q_bracket, validate_domain


class TestQBracket:
    def test_q1_limit_is_identity(self):
        assert q_bracket(3, 1.0) == 3.0
        assert q_bracket(0.75, 1.0) == 0.75

    def test_direct_formula_q2(self):
        # (1 - 16) / (1 - 4) = 5
        assert q_bracket(2, 2.0) == pytest.approx(5.0, rel=1e-14)

    def test_zero_argument_vanishes(self):
        for q in (0.3, 1.0, 1.0 + 1e-12, 7.0):
            assert q_bracket(0.0, q) == 0.0

    @pytest.mark.parametrize("q", [0.5, 0.9, 1.0, 1.0000001, 1.15, 2.0])
    def test_monotone_in_x(self, q):
        # strictly increasing while q^(2x) is resolvable; for q < 1 the float
        # value sits exactly at the 1/(1 - q^2) plateau once it underflows
        x = np.linspace(0.0, 50.0, 501)
        vals = q_bracket(x, q)
        assert np.all(np.diff(vals) >= 0.0)
        head = q_bracket(np.linspace(0.0, 10.0, 101), q)
        assert np.all(np.diff(head) > 0.0)

    def test_continuity_across_q1_small_x(self):
        # on x in [0, 10] the stated modulus 1e-6 holds outright
        x = np.linspace(0.0, 10.0, 101)
        for q in (1.0 - 1e-8, 1.0 + 1e-8):
            assert np.max(np.abs(q_bracket(x, q) - x)) < 1e-6

    def test_continuity_across_q1_drift_corrected(self):
        # the exact bracket drifts from x by x(x-1) ln q + O(ln^2 q), which
        # reaches 2.45e-5 at x = 50 for |q-1| = 1e-8; the bound must carry
        # that first-order term
        x = np.linspace(0.0, 50.0, 501)
        for q in (1.0 - 1e-8, 1.0 + 1e-8):
            bound = 1e-6 + 1.1 * np.abs(x * (x - 1.0)) * 1e-8
            assert np.all(np.abs(q_bracket(x, q) - x) < bound)

    def test_q_below_1_saturates_monotonically(self):
        q = 0.6
        limit = 1.0 / (1.0 - q * q)
        m = np.arange(60)
        vals = q_bracket(m, q)
        assert np.all(np.diff(vals) >= 0.0)
        assert np.all(np.diff(vals[:15]) > 0.0)
        assert np.all(vals <= limit)
        assert vals[-1] == pytest.approx(limit, rel=1e-12)

    def test_rejects_bad_q(self):
        with pytest.raises(DomainError):
            q_bracket(1.0, 0.0)
        with pytest.raises(DomainError):
            q_bracket(1.0, -2.0)
        with pytest.raises(DomainError):
            q_bracket(1.0, math.inf)

    def test_array_input(self):
        out = q_bracket(np.array([0.0, 1.0, 2.0]), 2.0)
        assert out.shape == (3,)
        assert out[1] == pytest.approx(1.0, rel=1e-14)


class TestGasSpec:
    def test_nu_and_p(self):
        assert GasSpec("boson", 1.0, 3).nu == 0.5
        assert GasSpec("boson", 1.0, 3).p == 1.5
        assert GasSpec("fermion", 1.0, 2).nu == 0.0
        assert GasSpec("fermion", 1.0, 2).p == 1.0

    @pytest.mark.parametrize("bad", [
        dict(statistics="anyon", q=1.0, dimension=3),
        dict(statistics="boson", q=0.0, dimension=3),
        dict(statistics="boson", q=-1.0, dimension=3),
        dict(statistics="boson", q=math.nan, dimension=3),
        dict(statistics="boson", q=1.0, dimension=4),
    ])
    def test_rejects_invalid_fields(self, bad):
        with pytest.raises(DomainError):
            GasSpec(**bad)


class TestThermoPoint:
    def test_gamma_is_minus_log_z(self):
        assert ThermoPoint(z=0.5).gamma == pytest.approx(math.log(2.0), rel=1e-15)
        assert ThermoPoint(z=1.0).gamma == 0.0


class TestReducedUnits:
    def test_wavelength_and_power(self):
        u = ReducedUnits()
        assert u.thermal_wavelength(4.0) == 2.0
        assert u.lambda_power(4.0, 3) == 8.0
        assert u.lambda_power(4.0, 2) == 4.0


class TestValidateDomain:
    def test_boson_inside(self):
        validate_domain(GasSpec("boson", 0.5, 3), ThermoPoint(z=0.99))

    def test_boson_rejects_z_above_1(self):
        with pytest.raises(DomainError, match="z < 1"):
            validate_domain(GasSpec("boson", 0.5, 3), ThermoPoint(z=1.1))

    def test_fermion_accepts_large_z(self):
        validate_domain(GasSpec("fermion", 10.0, 3), ThermoPoint(z=10.0))

    def test_bare_fugacity_accepted(self):
        validate_domain(GasSpec("fermion", 1.0, 2), 3.0)
        with pytest.raises(DomainError):
            validate_domain(GasSpec("boson", 1.0, 2), 1.0)

    def test_rejects_nonpositive_z_and_beta(self):
        spec = GasSpec("fermion", 1.0, 3)
        with pytest.raises(DomainError):
            validate_domain(spec, ThermoPoint(z=-0.5))
        with pytest.raises(DomainError):
            validate_domain(spec, ThermoPoint(z=0.5, beta=0.0))
