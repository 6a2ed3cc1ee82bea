import math

import pytest

import diskarea as da

TWO_PI = 2.0 * math.pi


class TestAreaContraction:
    def test_identity_is_equality_case(self):
        rec = da.check_area_contraction(da.make_identity(), 0.5, map_id="identity")
        assert rec.passed
        assert abs(rec.slack) < 1e-12
        assert rec.rhs == math.pi * 0.25

    def test_mobius_strict_contraction(self, mobius_half):
        rec = da.check_area_contraction(mobius_half, 0.5)
        assert rec.passed
        # confirmed image area 0.16 pi leaves slack 0.09 pi
        assert abs(rec.slack - 0.09 * math.pi) < 1e-5

    def test_step_map_violates_hypothesis(self, step_two_jump):
        with pytest.raises(da.HypothesisViolationError):
            da.check_area_contraction(step_two_jump, 0.5)

    def test_small_sweep_all_pass(self):
        for seed in range(10):
            bmap = da.mollify_map(da.make_random_homeomorphism(seed, roughness=0.5))
            for r in (0.25, 0.9):
                rec = da.check_area_contraction(bmap, r)
                assert rec.passed
                assert rec.slack > 0

    def test_verdict_invariants(self, mobius_half):
        rec = da.check_area_contraction(mobius_half, 0.5)
        assert rec.passed == (rec.slack >= -rec.tolerance)
        assert math.isfinite(rec.slack)


class TestEqualitySlack:
    def test_rotations_are_isometries(self):
        for phi in (0.0, 1.0, math.pi):
            assert abs(da.equality_slack(da.make_rotation(phi), 0.7)) < 1e-8

    def test_mobius_positive(self):
        assert da.equality_slack(da.make_mobius_boundary(0.3), 0.5) > 1e-3

    def test_random_positive(self):
        bmap = da.mollify_map(da.make_random_homeomorphism(11))
        assert da.equality_slack(bmap, 0.5) > 0

    def test_near_equality_implies_near_rotation(self):
        # numerical proxy for the rigidity statement: tiny slack only happens
        # for maps whose lift deviates little from the identity
        corpus = [da.make_rotation(0.4)] + [
            da.mollify_map(da.make_random_homeomorphism(s, roughness=0.5)) for s in range(8)
        ]
        for bmap in corpus:
            if abs(da.equality_slack(bmap, 0.5)) < 1e-8:
                assert da.lift_identity_deviation(bmap) < 1e-3


class TestSchwarzBound:
    def test_identity_strict_slack(self):
        rec = da.schwarz_bound_check(da.make_identity())
        assert rec.passed
        assert rec.lhs < -1e-3  # (4/pi) arctan x exceeds x strictly inside (0, 1)

    def test_centered_random_corpus(self):
        for seed in range(5):
            bmap = da.make_random_homeomorphism(seed, half_turn_symmetric=True)
            rec = da.schwarz_bound_check(bmap, map_id=f"centered:{seed}")
            assert rec.passed

    def test_two_jump_family_touches_bound(self, step_two_jump):
        rec = da.schwarz_bound_check(step_two_jump)
        assert rec.passed
        # the two-value family attains the majorant on its symmetry axis,
        # which is the real axis for the left/right split
        reach = abs(da.eval_harmonic_step(step_two_jump, 0.9, 0.0))
        bound = float(da.schwarz_bound(0.9))
        assert abs(bound - reach) < 1e-12

    def test_uncentered_map_rejected(self, random_map):
        with pytest.raises(da.HypothesisViolationError):
            da.schwarz_bound_check(random_map)

    def test_nonzero_center_shift_rejected(self, random_map):
        with pytest.raises(da.HypothesisViolationError):
            da.schwarz_bound_check(random_map, center_shift=0.2 + 0.1j)


class TestBoundaryFlux:
    def test_identity_is_two_pi_at_every_level(self):
        coeffs = da.family_coeffs("identity")
        for rho in (0.9, 0.96, 0.99):
            assert abs(da.verify.boundary_flux_integral(coeffs, rho) - TWO_PI) < 1e-12

    def test_rotation_exact(self):
        rec = da.boundary_jacobian_integral(da.family_coeffs("rotation", 1.0))
        assert rec.passed
        assert abs(rec.lhs - TWO_PI) < 1e-10

    def test_mobius_family_meets_lower_bound(self):
        for a in (0.2, 0.4, 0.6):
            rec = da.boundary_jacobian_integral(da.family_coeffs("mobius", a))
            assert rec.passed and not rec.inconclusive
            assert rec.lhs >= TWO_PI - 1e-3

    def test_mollified_random(self):
        bmap = da.mollify_map(da.make_random_homeomorphism(3))
        rec = da.boundary_jacobian_integral(bmap)
        assert rec.passed and not rec.inconclusive

    def test_step_map_rejected(self, step_two_jump):
        with pytest.raises(da.HypothesisViolationError):
            da.boundary_jacobian_integral(step_two_jump)


class TestConvexity:
    def test_identity_equality(self):
        rec = da.holomorphic_convexity_check([1.0], 0.5)
        assert rec.passed
        assert abs(rec.slack) < 1e-14

    def test_small_perturbation_algebra(self):
        # c = (1, 0.1): the comparison reduces to 0.02 r^4 <= 0.02 r^2
        rec = da.holomorphic_convexity_check([1.0, 0.1], 0.5)
        assert rec.passed
        want = math.pi * (0.02 * 0.25 - 0.02 * 0.0625)
        assert abs(rec.slack - want) < 1e-12

    def test_injectivity_gate(self):
        assert da.winding_injectivity_check([1.0, 0.1])
        assert da.winding_injectivity_check(da.family_coeffs("mobius", 0.4).coeffs[65:])
        # z^2 on the disk is 2-to-1: the winding test must flag it
        assert not da.winding_injectivity_check([0.0, 1.0])

    def test_shear_fails_as_designed(self):
        # the harmonic shear breaks the holomorphic comparison at every
        # interior radius; the harness asserts the failure itself
        coeffs = da.family_coeffs("shear", 0.3)
        rec = da.holomorphic_convexity_check(coeffs, 0.5)
        assert not rec.passed
        assert rec.lhs > rec.rhs
        c2, r2 = 0.09, 0.25
        want_gap = math.pi * 2 * c2 * r2 * (1 - r2)
        assert abs((rec.lhs - rec.rhs) - want_gap) < 1e-12


class TestVerdictPlumbing:
    def test_json_round_trip_fields(self):
        import json

        rec = da.check_area_contraction(da.make_identity(), 0.5, map_id="identity")
        doc = json.loads(rec.to_json())
        assert doc["check_name"] == "area-contraction"
        assert doc["passed"] is True
        assert set(doc) == {
            "check_name", "map_id", "r", "lhs", "rhs", "slack",
            "tolerance", "passed", "resolution", "inconclusive",
        }

    def test_ge_direction(self):
        rec = da.verify.make_verdict("x", "", 0.5, 3.0, 2.0, 0.1, 1, direction="ge")
        assert rec.passed and rec.slack == 1.0
        rec = da.verify.make_verdict("x", "", 0.5, 1.0, 2.0, 0.1, 1, direction="ge")
        assert not rec.passed
