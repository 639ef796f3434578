"""Virial coefficients, transmutation thresholds, and the z(n) inversion."""

import math

import pytest

from qgasgeo import (
    DomainError,
    GasSpec,
    OutOfVirialRangeError,
    alpha,
    closed_form_threshold,
    curvature_closed_form,
    delta,
    eta,
    fugacity_from_density,
    virial_threshold,
    zeta_fermion_d2,
)

REF_Q1 = 2.0 ** -3.5  # 1 / (8 sqrt(2))


class TestCoefficientValues:
    def test_undeformed_values(self):
        assert alpha(1.0) == pytest.approx(REF_Q1, abs=1e-16)
        assert delta(1.0) == pytest.approx(-REF_Q1, abs=1e-16)
        assert eta(1.0) == pytest.approx(-0.125, abs=1e-16)
        assert zeta_fermion_d2(1.0) == pytest.approx(-0.125, abs=1e-16)

    def test_eta_at_q2(self):
        # (2 - 4) / (4 * 5) = 1/10 exactly
        assert eta(2.0) == pytest.approx(0.1, abs=1e-16)

    def test_alpha_large_q_negative(self):
        # q -> inf limit is (1/2)(2^(-3/2) - 1/2) < 0
        assert alpha(100.0) < 0.0
        assert alpha(100.0) == pytest.approx(0.5 * (2.0 ** -1.5 - 0.5), rel=1e-3)

    def test_zeta_always_negative(self):
        for q in (0.1, 0.5, 1.0, 2.0, 10.0, 100.0):
            assert zeta_fermion_d2(q) < 0.0
        # approaches zero from below
        assert -1e-4 < zeta_fermion_d2(100.0) < 0.0

    @pytest.mark.parametrize("f", [delta, eta])
    def test_boson_coefficients_increase_with_q(self, f):
        qs = [0.5, 1.0, 1.5, 2.0, 3.0]
        vals = [f(q) for q in qs]
        assert all(v2 > v1 for v1, v2 in zip(vals, vals[1:]))


class TestThresholds:
    @pytest.mark.parametrize("kind,root", [
        ("alpha", (2.0 ** (1.0 / 3.0) - 1.0) ** -0.5),
        ("delta", ((3.0 * math.sqrt(2.0)) ** (2.0 / 3.0) - 1.0) ** 0.5),
        ("eta", math.sqrt(2.0)),
    ])
    def test_bisection_matches_closed_form(self, kind, root):
        assert closed_form_threshold(kind) == pytest.approx(root, abs=1e-15)
        assert virial_threshold(kind) == pytest.approx(root, abs=1e-8)

    def test_zeta_has_no_threshold(self):
        assert closed_form_threshold("zeta") is None
        assert virial_threshold("zeta") is None
        assert virial_threshold("zeta", 0.01, 1000.0) is None

    def test_rejects_unknown_kind(self):
        with pytest.raises(ValueError):
            closed_form_threshold("gamma")
        with pytest.raises(ValueError):
            virial_threshold("gamma")

    def test_same_sign_bracket_returns_none(self):
        assert virial_threshold("alpha", 0.5, 1.5) is None

    @pytest.mark.parametrize("kind,stat,dim", [
        ("alpha", "fermion", 3),
        ("delta", "boson", 3),
        ("eta", "boson", 2),
    ])
    def test_sign_ties_to_curvature_at_low_z(self, kind, stat, dim):
        # coefficient > 0 is the fermion-like side (R < 0) and vice versa,
        # checked 0.1 on either side of the threshold at z = 0.01
        q_star = closed_form_threshold(kind)
        f = {"alpha": alpha, "delta": delta, "eta": eta}[kind]
        for q in (q_star - 0.1, q_star + 0.1):
            coeff = f(q)
            R = curvature_closed_form(GasSpec(stat, q, dim), 0.01).R_reduced
            assert coeff * R < 0.0


class TestFugacityFromDensity:
    def test_fermion_d3(self):
        n = 0.2
        want = n / (math.pi ** 1.5 * 2.0 ** 2.5) + alpha(1.0) * n * n / (math.pi ** 2 * 16.0)
        assert fugacity_from_density(GasSpec("fermion", 1.0, 3), n) == want

    def test_boson_d3(self):
        n = 0.2
        want = 0.5 * n + delta(1.3) * n * n
        assert fugacity_from_density(GasSpec("boson", 1.3, 3), n) == want

    def test_boson_d2(self):
        n = 0.2
        want = 0.5 * n + eta(0.8) * n * n
        assert fugacity_from_density(GasSpec("boson", 0.8, 2), n) == want

    def test_boson_d2_at_threshold_is_ideal(self):
        # eta(sqrt(2)) = 0 so z = n/2 exactly
        z = fugacity_from_density(GasSpec("boson", math.sqrt(2.0), 2), 0.3)
        assert z == pytest.approx(0.15, abs=1e-16)

    def test_fermion_d2_unsupported(self):
        with pytest.raises(DomainError):
            fugacity_from_density(GasSpec("fermion", 1.0, 2), 0.2)

    def test_large_density_out_of_range(self):
        with pytest.raises(OutOfVirialRangeError):
            fugacity_from_density(GasSpec("boson", 1.0, 3), 10.0)

    @pytest.mark.parametrize("bad", [0.0, -1.0, math.inf, math.nan])
    def test_rejects_bad_density(self, bad):
        with pytest.raises(DomainError):
            fugacity_from_density(GasSpec("boson", 1.0, 3), bad)
