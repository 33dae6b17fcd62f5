"""Legendrian unknot invariants, stabilization, and framing arithmetic."""

import random
from fractions import Fraction

import pytest

from contact_kirby.errors import (
    InvalidInputError,
    InvalidLegendrianError,
    UnsupportedFramingError,
)
from contact_kirby.legendrian import (
    ExternalKnot,
    FramingCurve,
    LegendrianUnknot,
    contact_framing_curve,
    kirby_topological_condition,
    mirror,
    stabilize,
    topological_coefficient,
    validate_unknot,
)


class TestValidateUnknot:
    def test_standard_unknot(self):
        k = validate_unknot(-1, 0)
        assert (k.tb, k.rot) == (-1, 0)

    def test_canonical_candidate_m3(self):
        k = validate_unknot(-3, -2)
        assert (k.tb, k.rot) == (-3, -2)

    def test_parity_violation(self):
        with pytest.raises(InvalidLegendrianError, match="parity"):
            validate_unknot(-2, 0)

    def test_positive_tb(self):
        with pytest.raises(InvalidLegendrianError, match="tb"):
            validate_unknot(0, 0)

    def test_bennequin_violation(self):
        with pytest.raises(InvalidLegendrianError, match="Bennequin"):
            validate_unknot(-1, 2)

    def test_dataclass_constructor_validates_too(self):
        with pytest.raises(InvalidLegendrianError):
            LegendrianUnknot(-1, 1)


class TestStabilize:
    def test_plus_on_candidate(self):
        k = stabilize(LegendrianUnknot(-2, -1), 1)
        assert (k.tb, k.rot) == (-3, 0)

    def test_minus_on_standard(self):
        k = stabilize(LegendrianUnknot(-1, 0), -1)
        assert (k.tb, k.rot) == (-2, -1)

    def test_opposite_signs_cancel_rot(self):
        k = LegendrianUnknot(-1, 0)
        double = stabilize(stabilize(k, 1), -1)
        assert (double.tb, double.rot) == (k.tb - 2, k.rot)

    def test_bad_sign(self):
        with pytest.raises(InvalidInputError):
            stabilize(LegendrianUnknot(-1, 0), 2)

    def test_always_valid_random_sequences(self):
        rng = random.Random(424242)
        for _ in range(300):
            tb = -rng.randint(1, 8)
            rot_bound = -1 - tb
            rot = rng.choice(
                [r for r in range(-rot_bound, rot_bound + 1) if (r - tb - 1) % 2 == 0]
            )
            k = LegendrianUnknot(tb, rot)
            signs = [rng.choice((1, -1)) for _ in range(rng.randint(0, 10))]
            out = k
            for s in signs:
                out = stabilize(out, s)  # constructor re-validates every step
            assert out.tb == k.tb - len(signs)
            change = out.rot - k.rot
            assert abs(change) <= len(signs)
            assert (change - len(signs)) % 2 == 0


class TestFraming:
    def test_plus_one_curve(self):
        m = 4
        assert contact_framing_curve(LegendrianUnknot(-m, m - 1), m + 1) == FramingCurve(1, 1)

    def test_minus_one_curve(self):
        m = 4
        assert contact_framing_curve(LegendrianUnknot(-m, m - 1), m - 1) == FramingCurve(1, -1)

    def test_zero_framing(self):
        assert contact_framing_curve(LegendrianUnknot(-3, 0), 3) == FramingCurve(1, 0)

    def test_non_integral_rejected(self):
        with pytest.raises(UnsupportedFramingError):
            contact_framing_curve(LegendrianUnknot(-2, 1), Fraction(1, 2))

    def test_topological_coefficient(self):
        m = 5
        k = LegendrianUnknot(-m, -(m - 1))
        assert topological_coefficient(k, m + 1) == 1
        assert topological_coefficient(k, m - 1) == -1
        assert topological_coefficient(LegendrianUnknot(-1, 0), 0) == -1
        assert topological_coefficient(LegendrianUnknot(-2, 1), Fraction(-3, 2)) == Fraction(-7, 2)

    def test_curve_and_coefficient_agree_on_integral_framings(self):
        rng = random.Random(5150)
        for _ in range(200):
            tb = -rng.randint(1, 9)
            rot = tb + 1 + 2 * rng.randint(0, -tb - 1)
            k = LegendrianUnknot(tb, rot)
            n = rng.randint(-10, 10)
            assert contact_framing_curve(k, n).mu_coeff == topological_coefficient(k, n)

    def test_non_primitive_curve_rejected(self):
        with pytest.raises(InvalidInputError):
            FramingCurve(2, 4)


class TestKirbyCondition:
    def test_plus_branch(self):
        assert kirby_topological_condition(3, 4) == 1

    def test_minus_branch(self):
        assert kirby_topological_condition(3, 2) == -1

    def test_equal_framing_excluded(self):
        assert kirby_topological_condition(3, 3) is None

    def test_matches_unit_distance(self):
        for m in range(1, 20):
            for n in range(-2, 25):
                hit = kirby_topological_condition(m, n) is not None
                assert hit == (abs(n - m) == 1)

    def test_rot_independent(self):
        # the condition never sees rot, so it is mirror invariant by construction
        assert kirby_topological_condition(4, 5) == kirby_topological_condition(4, 5)

    def test_m_must_be_positive(self):
        with pytest.raises(InvalidInputError):
            kirby_topological_condition(0, 1)


class TestMirrorAndExternal:
    def test_mirror_flips_rot(self):
        assert mirror(LegendrianUnknot(-3, 2)) == LegendrianUnknot(-3, -2)

    def test_external_knot_keeps_invariants(self):
        ext = ExternalKnot(LegendrianUnknot(-1, 0), -1)
        assert ext.knot.tb == -1
        assert ext.lk_with_original == -1
