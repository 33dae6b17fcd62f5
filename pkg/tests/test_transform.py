"""Post-surgery invariants and the Bennequin verdict."""

import random
from fractions import Fraction

import pytest

from contact_kirby.errors import (
    InvalidInputError,
    NonIntegralInvariantError,
    SingularMatrixError,
)
from contact_kirby.legendrian import ExternalKnot, LegendrianUnknot
from contact_kirby.presentation import (
    convert,
    enumerate_presentations,
    linking_matrix,
    linking_vector,
    mirror,
    rot_vector,
    stabilization_budget,
)
from contact_kirby.transform import (
    bennequin,
    framing_unknot_tb_shift,
    invariants_after_surgery,
    rot_after_surgery,
    tb_after_surgery,
)

from oracles import gauss_solve

FRAMING_UNKNOT = LegendrianUnknot(-1, 0)


def plus_branch(m):
    return convert(LegendrianUnknot(-m, -(m - 1)), m + 1, [1])


def minus_branch(m):
    return convert(LegendrianUnknot(-m, -(m - 1)), m + 1, [-1])


class TestRotAfterSurgery:
    def test_plus_branch_formula(self):
        ext = ExternalKnot(FRAMING_UNKNOT, 1)
        for m in range(1, 13):
            assert rot_after_surgery(plus_branch(m), ext) == 2 * m - 1

    def test_minus_branch_value(self):
        ext = ExternalKnot(FRAMING_UNKNOT, 1)
        for m in range(1, 11):
            pres = minus_branch(m)
            # independent route: solve M x = L with plain Gaussian elimination
            matrix = [list(r) for r in linking_matrix(pres).entries]
            solved = gauss_solve(matrix, linking_vector(pres, ext))
            pairing = sum(c * x for c, x in zip(rot_vector(pres), solved))
            assert pairing == 1
            assert rot_after_surgery(pres, ext) == -1

    def test_zero_linking_leaves_rot(self):
        ext = ExternalKnot(LegendrianUnknot(-2, 1), 0)
        assert rot_after_surgery(plus_branch(3), ext) == 1

    def test_non_integral_raises_with_value(self):
        # contact -3 on the standard unknot has |det M| = 4
        pres = convert(LegendrianUnknot(-1, 0), -3, [1, 1])
        ext = ExternalKnot(FRAMING_UNKNOT, 1)
        with pytest.raises(NonIntegralInvariantError) as info:
            rot_after_surgery(pres, ext)
        assert info.value.value == Fraction(1, 2)

    def test_singular_matrix_raises(self):
        # contact 2 on a tb -2 unknot is topologically 0-surgery, det 0
        pres = convert(LegendrianUnknot(-2, -1), 2, [1])
        with pytest.raises(SingularMatrixError):
            rot_after_surgery(pres, ExternalKnot(FRAMING_UNKNOT, 1))


class TestTbAfterSurgery:
    def test_plus_family(self):
        ext = ExternalKnot(FRAMING_UNKNOT, 1)
        for m in range(1, 13):
            assert tb_after_surgery(plus_branch(m), ext) == -2

    def test_minus_family(self):
        ext = ExternalKnot(FRAMING_UNKNOT, -1)
        for m in range(2, 13):
            for pres in enumerate_presentations(
                LegendrianUnknot(-m, -(m - 1)), m - 1
            ):
                assert tb_after_surgery(pres, ext) == 0

    def test_zero_linking_leaves_tb(self):
        ext = ExternalKnot(LegendrianUnknot(-2, 1), 0)
        assert tb_after_surgery(plus_branch(3), ext) == -2

    def test_sign_vector_independence(self):
        rng = random.Random(1729)
        for _ in range(40):
            m = rng.randint(1, 6)
            k = LegendrianUnknot(-m, -(m - 1))
            r = Fraction(rng.randint(1, 10), rng.randint(1, 4))
            if r == 0:
                continue
            ext = ExternalKnot(FRAMING_UNKNOT, rng.choice((-1, 1)))
            values = set()
            for pres in enumerate_presentations(k, r):
                try:
                    values.add(tb_after_surgery(pres, ext))
                except NonIntegralInvariantError as err:
                    values.add(err.value)
                except SingularMatrixError:
                    values.add("singular")  # sign-independent too: M ignores signs
            assert len(values) == 1


class TestAgainstFramingShift:
    def test_plus_family_agrees(self):
        ext = ExternalKnot(FRAMING_UNKNOT, 1)
        for m in range(1, 13):
            for pres in enumerate_presentations(
                LegendrianUnknot(-m, -(m - 1)), m + 1
            ):
                assert tb_after_surgery(pres, ext) == framing_unknot_tb_shift(1, -1)

    def test_minus_family_agrees(self):
        ext = ExternalKnot(FRAMING_UNKNOT, -1)
        for m in range(2, 13):
            for pres in enumerate_presentations(
                LegendrianUnknot(-m, -(m - 1)), m - 1
            ):
                assert tb_after_surgery(pres, ext) == framing_unknot_tb_shift(-1, -1)

    def test_shift_examples(self):
        assert framing_unknot_tb_shift(1, -1) == -2
        assert framing_unknot_tb_shift(-1, -1) == 0
        assert framing_unknot_tb_shift(1, -5) == -6

    def test_shift_rejects_bad_sign(self):
        with pytest.raises(InvalidInputError):
            framing_unknot_tb_shift(0, -1)


class TestBennequin:
    def test_plus_branch_violation(self):
        m = 2
        verdict = bennequin(-2, 2 * m - 1)
        assert not verdict.satisfied
        assert verdict.slack == -2

    def test_minus_branch_tightness_level(self):
        verdict = bennequin(-2, -1)
        assert verdict.satisfied
        assert verdict.slack == 0

    def test_m1_exceptional(self):
        verdict = bennequin(-2, 1)
        assert verdict.satisfied
        assert verdict.slack == 0

    def test_slack_definition(self):
        for tb in range(-5, 1):
            for rot in range(-4, 5):
                verdict = bennequin(tb, rot)
                assert verdict.slack == -1 - tb - abs(rot)
                assert verdict.satisfied == (tb + abs(rot) <= -1)


class TestBundledInvariants:
    def test_matches_individual_ops(self):
        ext = ExternalKnot(FRAMING_UNKNOT, 1)
        for m in (1, 2, 5):
            pres = minus_branch(m)
            bundle = invariants_after_surgery(pres, ext)
            assert bundle.tb_new == tb_after_surgery(pres, ext)
            assert bundle.rot_new == rot_after_surgery(pres, ext)
            assert bundle.integral

    def test_mirror_symmetry(self):
        rng = random.Random(99)
        for _ in range(40):
            m = rng.randint(1, 6)
            k = LegendrianUnknot(-m, -(m - 1))
            r = Fraction(rng.randint(1, 8))
            signs = [rng.choice((1, -1)) for _ in range(stabilization_budget(r))]
            pres = convert(k, r, signs)
            ext = ExternalKnot(FRAMING_UNKNOT, rng.choice((-1, 1)))
            try:
                base = invariants_after_surgery(pres, ext)
            except (NonIntegralInvariantError, SingularMatrixError):
                continue
            flipped = invariants_after_surgery(mirror(pres), ext)
            assert flipped.tb_new == base.tb_new
            assert flipped.rot_new == -base.rot_new
            assert (
                bennequin(flipped.tb_new, flipped.rot_new).satisfied
                == bennequin(base.tb_new, base.rot_new).satisfied
            )
