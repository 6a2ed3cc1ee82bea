import math

import numpy as np
import pytest

import diskarea as da
from diskarea.proof_checks import _cutoff_angle

TWO_PI = 2.0 * math.pi


class TestTangentGap:
    def test_tangency_point(self):
        for a in np.linspace(0, TWO_PI, 23):
            assert abs(da.tangent_gap(a, a)) < 1e-15

    def test_direct_values(self):
        assert abs(da.tangent_gap(0.0, math.pi) - math.pi) < 1e-15
        assert abs(da.tangent_gap(math.pi / 2, 3 * math.pi / 2) - 2.0) < 1e-15

    def test_beta_slope_finite_difference_oracle(self):
        rng = np.random.default_rng(2)
        h = 1e-6
        for _ in range(20):
            a = float(rng.uniform(0, TWO_PI))
            b = float(rng.uniform(0, TWO_PI))
            fd = (da.tangent_gap(a, b + h) - da.tangent_gap(a, b - h)) / (2 * h)
            assert abs(fd - (math.cos(a) - math.cos(b))) < 1e-9

    def test_nonnegative_on_concavity_square(self):
        a = np.linspace(0, math.pi, 129)
        A, B = np.meshgrid(a, a, indexing="ij")
        assert float(np.min(da.tangent_gap(A, B))) >= -1e-14


class TestSignStructure:
    def test_record_passes(self):
        rec = da.check_tangent_gap_signs(256)
        assert rec.passed

    def test_negative_sample_exists_inside_triangles(self):
        # e.g. a = 3pi/4, b = 7pi/4 sits in the upper triangle with a
        # strictly negative weighted gap
        a, b = 3 * math.pi / 4, 7 * math.pi / 4
        assert b > TWO_PI - a
        for r in (0.3, 0.6, 0.9):
            assert da.area_kernel(r, a) * da.tangent_gap(a, b) < 0

    def test_central_symmetry_pointwise(self):
        # tolerance widens at r = 0.9 where the kernel derivative amplifies
        # the rounding of the mirrored argument (same conditioning as the
        # mirrored-pair identity)
        a = np.linspace(0, TWO_PI, 257)
        A, B = np.meshgrid(a, a, indexing="ij")
        for r, tol in ((0.3, 1e-12), (0.6, 1e-12), (0.9, 5e-12)):
            lhs = da.area_kernel(r, A) * da.tangent_gap(A, B)
            rhs = da.area_kernel(r, TWO_PI - A) * da.tangent_gap(TWO_PI - A, TWO_PI - B)
            assert float(np.max(np.abs(lhs - rhs))) < tol

    def test_grid_floor(self):
        with pytest.raises(ValueError):
            da.check_tangent_gap_signs(32)


class TestMirrorPairIdentity:
    def test_residual_and_sign(self):
        for r in (0.3, 0.6, 0.7):
            resid, min_rhs = da.mirror_pair_residual(r, 256)
            assert resid < 1e-12
            assert min_rhs >= -1e-12

    def test_high_radius_conditioning_documented(self):
        # at r = 0.9 the kernel derivative amplifies the rounding of the
        # mirrored argument; the identity still holds to a few 1e-12
        resid, _ = da.mirror_pair_residual(0.9, 256)
        assert resid < 5e-12

    def test_midline_is_trivial(self):
        # at b = pi both sides coincide by construction
        r = 0.7
        a = np.linspace(0, TWO_PI, 129)
        lhs = da.area_kernel(r, a) * da.tangent_gap(a, math.pi) + da.area_kernel(
            r, TWO_PI - a
        ) * da.tangent_gap(TWO_PI - a, math.pi)
        rhs = 2 * da.area_kernel(r, a) * da.tangent_gap(a, math.pi)
        assert float(np.max(np.abs(lhs - rhs))) < 1e-12

    def test_record(self):
        rec = da.check_mirror_pair_identity(0.6)
        assert rec.passed


class TestIncrementProfiles:
    def test_identity_slice_is_diagonal(self):
        g = da.increment_profile(da.make_identity(), 1.234)
        assert np.max(np.abs(g.values - g.alphas)) < 1e-12

    def test_rotation_slice_is_diagonal(self):
        g = da.increment_profile(da.make_rotation(2.0), 0.3)
        assert np.max(np.abs(g.values - g.alphas)) < 1e-12

    def test_endpoints_pinned(self, random_map):
        for t in (0.0, 1.7, 5.0):
            g = da.increment_profile(random_map, t)
            assert g.values[0] == 0.0
            assert g.values[-1] == TWO_PI

    def test_range_inside_period(self, random_map, step_two_jump):
        for bmap in (random_map, step_two_jump):
            g = da.increment_profile(bmap, 0.9)
            assert np.all(g.values >= 0.0)
            assert np.all(g.values <= TWO_PI)

    def test_monotone_validation(self):
        with pytest.raises(ValueError):
            da.MonotoneProfile(np.array([0.0, 1.0, 0.5, 1.5, TWO_PI]))

    def test_even_cell_count_required(self):
        with pytest.raises(ValueError):
            da.MonotoneProfile(np.linspace(0, TWO_PI, 4))


class TestReflection:
    def test_identity_profile_fixed(self):
        g = da.MonotoneProfile(np.linspace(0, TWO_PI, 513))
        r = da.reflect_profile(g)
        assert np.max(np.abs(r.values - g.values)) < 1e-12

    def test_constant_zero_maps_to_constant_full(self):
        g = da.MonotoneProfile(np.zeros(513))
        r = da.reflect_profile(g)
        assert np.max(np.abs(r.values - TWO_PI)) < 1e-15

    def test_involution_pointwise(self):
        for seed in range(20):
            g = da.random_profile(seed)
            gg = da.reflect_profile(da.reflect_profile(g))
            assert np.max(np.abs(gg.values - g.values)) < 1e-14

    def test_gap_integral_invariant(self):
        for seed in range(20):
            g = da.random_profile(seed)
            for r in (0.3, 0.6, 0.9):
                v1, _ = da.profile_gap_integral(g, r)
                v2, _ = da.profile_gap_integral(da.reflect_profile(g), r)
                assert abs(v1 - v2) < 1e-10


class TestCosIdentity:
    def test_identity_map_vanishes(self):
        assert da.cos_identity_residual(da.make_identity(), 0.6, 512) < 1e-12

    def test_inner_increment_mean_per_shift(self, random_map):
        # the periodic deviation has equal averages along every shifted grid
        for j in (1, 17, 400):
            alpha = TWO_PI * j / 1024
            assert da.increment_mean_residual(random_map, alpha, 1024) < 1e-10

    def test_inner_increment_mean_off_grid_smooth(self):
        bmap = da.mollify_map(da.make_random_homeomorphism(4))
        assert da.increment_mean_residual(bmap, 1.2345, 1024) < 1e-10

    def test_random_maps(self):
        for seed in (5, 6):
            bmap = da.make_random_homeomorphism(seed)
            assert da.cos_identity_residual(bmap, 0.6, 1024) < 1e-8


class TestGapDoubleIntegral:
    def test_identity_vanishes(self):
        rec = da.check_gap_double_integral(da.make_identity(), 0.5, 512)
        assert rec.passed
        assert abs(rec.slack) < 1e-10

    def test_random_nonnegative_and_bookkept(self):
        rec = da.check_gap_double_integral(da.make_random_homeomorphism(9), 0.5, 512)
        assert rec.passed
        assert rec.slack >= 0.0

    def test_mobius_accounts_for_area_deficit(self, mobius_half):
        # value / 4pi must equal pi r^2 minus the confirmed image area
        rec = da.check_gap_double_integral(mobius_half, 0.5, 512)
        assert rec.passed
        deficit = math.pi * 0.25 - 0.16 * math.pi
        assert abs(rec.slack / (4 * math.pi) - deficit) < 1e-5

    def test_step_map_rejected(self, step_two_jump):
        with pytest.raises(ValueError):
            da.check_gap_double_integral(step_two_jump, 0.5)


class TestProfileGapIntegral:
    def test_identity_profile_zero_with_cutoff_pi(self):
        g = da.MonotoneProfile(np.linspace(0, TWO_PI, 513))
        value, cutoff = da.profile_gap_integral(g, 0.6)
        assert abs(value) < 1e-14
        assert cutoff == math.pi

    def test_zero_profile_positive_with_full_cutoff(self):
        g = da.MonotoneProfile(np.zeros(513))
        value, cutoff = da.profile_gap_integral(g, 0.6)
        assert value > 0.0
        assert cutoff == TWO_PI

    def test_reflects_when_midpoint_high(self):
        # a profile hugging 2*pi has midpoint above pi; the reflected form is
        # integrated and the value matches integrating the reflection directly
        g = da.MonotoneProfile(np.full(513, TWO_PI))
        v1, _ = da.profile_gap_integral(g, 0.6)
        v2, _ = da.profile_gap_integral(da.reflect_profile(g), 0.6)
        assert abs(v1 - v2) < 1e-14

    def test_sweep_five_hundred(self):
        worst = math.inf
        for seed in range(500):
            g = da.random_profile(seed)
            for r in (0.3, 0.6, 0.9):
                value, _ = da.profile_gap_integral(g, r)
                worst = min(worst, value)
        assert worst >= -1e-8

    def test_cutoff_grid_convention(self):
        # when no angle in [pi, 2*pi] keeps a + G(a) within a period the
        # cutoff collapses to pi
        vals = np.minimum(np.linspace(0, TWO_PI, 513) + 4.0, TWO_PI)
        g = da.MonotoneProfile(vals)
        assert g.at_midpoint() > math.pi  # forces reflection inside the integral
        refl = da.reflect_profile(g)
        assert _cutoff_angle(refl) >= math.pi


class TestReductionChain:
    def test_identity_chain_all_zero(self):
        g = da.MonotoneProfile(np.linspace(0, TWO_PI, 513))
        rec = da.check_reduction_chain(g, 0.6)
        assert rec.passed
        assert abs(rec.slack) < 1e-12

    def test_clamped_diagonal(self):
        g = da.MonotoneProfile(np.minimum(np.linspace(0, TWO_PI, 513), math.pi))
        rec = da.check_reduction_chain(g, 0.6)
        assert rec.passed

    def test_two_hundred_random_profiles(self):
        for seed in range(200):
            g = da.random_profile(seed)
            for r in (0.3, 0.6, 0.9):
                rec = da.check_reduction_chain(g, r)
                assert rec.passed, (seed, r, rec.slack)

    def test_strict_interior_positivity_supports_equality_analysis(self):
        assert da.strict_interior_positivity(256) > 1e-12


class TestChangeOfVariables:
    def test_double_sum_consistency(self):
        # the (s, t) pair sum and the (shift, t) gap sum describe the same
        # finite double integral; their bookkeeping ties out through the
        # identity-map area at matched resolution
        for seed in (3, 9):
            bmap = da.make_random_homeomorphism(seed)
            for r in (0.5, 0.75):
                m = 512
                rec = da.check_gap_double_integral(bmap, r, m)
                ident = da.area_kernel_direct(da.make_identity(), r, m).value
                mapped = da.area_kernel_direct(bmap, r, m).value
                assert abs((ident - mapped) - rec.slack / (4 * math.pi)) < 1e-10
