"""Classical invariants of an external knot after surgery.

Both invariants come from the linking data alone.  With M the linking
matrix of the presentation, L the column of linking numbers of the
external knot K0 with the link components, and C the column of the
components' rotation numbers:

    rot_new(K0) = rot(K0) - <C, M^-1 L>
    tb_new(K0)  = tb(K0)  - <L, M^-1 L>

Everything is computed in exact rational arithmetic.  The results are
only honest integers when they are integral rationals (always the case
when |det M| = 1); a non-integral outcome raises instead of rounding.

For the special case where K0 is the topological framing unknot of a
topologically (+/-1)-framed surgery knot, the tb shift is also known on
first principles (cutting the Seifert annulus and capping with a
meridional disk moves the framing by the surgery sign); that rule,
:func:`framing_unknot_tb_shift`, stays an independent cross-check of the
quadratic form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInputError, NonIntegralInvariantError
from .exact import apply, inner, invert
from .legendrian import ExternalKnot
from .presentation import Presentation, linking_matrix, linking_vector, rot_vector


@dataclass(frozen=True)
class PostSurgeryInvariants:
    """Invariants of an external knot in the surgered manifold."""

    tb_new: int
    rot_new: int
    integral: bool = True


@dataclass(frozen=True)
class BennequinVerdict:
    """Outcome of the Bennequin test tb + |rot| <= -1.

    ``slack`` is ``-1 - tb - |rot|``; the inequality holds exactly when
    the slack is non-negative.  A violation on an unknot that bounds a
    disk certifies an overtwisted ambient structure; satisfaction proves
    nothing.
    """

    satisfied: bool
    slack: int


def _require_integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NonIntegralInvariantError(
            f"post-surgery {what} is not an integer: {value}", value
        )
    return int(value)


def rot_after_surgery(presentation: Presentation, ext: ExternalKnot) -> int:
    """rot(K0) - <C, M^-1 L>, exactly."""
    minv = invert(linking_matrix(presentation))
    solved = apply(minv, linking_vector(presentation, ext))
    value = Fraction(ext.knot.rot) - inner(rot_vector(presentation), solved)
    return _require_integral(value, "rotation number")


def tb_after_surgery(presentation: Presentation, ext: ExternalKnot) -> int:
    """tb(K0) - <L, M^-1 L>, exactly."""
    minv = invert(linking_matrix(presentation))
    link = linking_vector(presentation, ext)
    value = Fraction(ext.knot.tb) - inner(link, apply(minv, link))
    return _require_integral(value, "Thurston-Bennequin number")


def invariants_after_surgery(
    presentation: Presentation, ext: ExternalKnot
) -> PostSurgeryInvariants:
    """Both post-surgery invariants from a single exact solve."""
    minv = invert(linking_matrix(presentation))
    link = linking_vector(presentation, ext)
    solved = apply(minv, link)
    tb_new = _require_integral(
        Fraction(ext.knot.tb) - inner(link, solved), "Thurston-Bennequin number"
    )
    rot_new = _require_integral(
        Fraction(ext.knot.rot) - inner(rot_vector(presentation), solved),
        "rotation number",
    )
    return PostSurgeryInvariants(tb_new, rot_new, True)


def framing_unknot_tb_shift(topological_sign: int, tb0: int) -> int:
    """tb of a topological framing unknot after a topologically (+/-1) surgery.

    Topological (+1)-surgery lowers it by one, (-1)-surgery raises it by
    one: the new Seifert disk is the old annulus capped with a meridional
    disk, so the contact longitude moves by exactly the surgery sign.
    """
    if topological_sign not in (1, -1):
        raise InvalidInputError(
            f"topological surgery sign must be +1 or -1, got {topological_sign}"
        )
    return tb0 - topological_sign


def bennequin(tb: int, rot: int) -> BennequinVerdict:
    """Evaluate the Bennequin inequality tb + |rot| <= -1."""
    slack = -1 - tb - abs(rot)
    return BennequinVerdict(slack >= 0, slack)
