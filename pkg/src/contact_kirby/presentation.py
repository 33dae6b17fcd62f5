"""Conversion of rational contact surgeries into (+/-1)-surgery chains.

A contact r-surgery on a Legendrian unknot is replaced, exactly and
deterministically, by a link of contact (+1)- and (-1)-surgeries:

* r = +1 and r = -1 already are one-component presentations;
* for r > 0, contact (+1)-surgeries are peeled off (the first on the
  knot itself, later ones on fresh unstabilized push-offs) while the
  residual coefficient follows 1/r' = 1/r - 1, until the residual is
  +1 or negative;
* a negative residual is expanded as a negative continued fraction
  ``[a1, ..., an]`` with every entry at most -2.  Entry ``a_i``
  contributes one chain component: a push-off of its predecessor (of the
  knot itself when nothing precedes it) carrying ``|a_i + 2|``
  stabilizations and a contact (-1) coefficient.

Each stabilization consumes one sign from the caller, so a conversion
with s stabilizations has 2^s distinct presentations.  Linking numbers
inside the resulting link follow the parallel-copy rule: a push-off
taken along the contact framing links its parent, and every later
descendant of it, by the parent's tb at push-off time.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import legendrian
from .errors import InvalidExpansionError, InvalidInputError, ZeroSurgeryError
from .exact import IntMatrix
from .legendrian import ExternalKnot, LegendrianUnknot, stabilize

Coefficient = Union[int, Fraction]


@dataclass(frozen=True)
class CFExpansion:
    """A negative continued fraction, all coefficients at most -2."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if not coeffs:
            raise InvalidExpansionError("expansion needs at least one coefficient")
        if any(c > -2 for c in coeffs):
            raise InvalidExpansionError(
                f"expansion coefficients must be at most -2, got {list(coeffs)}"
            )

    @property
    def stabilization_counts(self) -> tuple:
        return tuple(-(c + 2) for c in self.coeffs)

    @property
    def total_stabilizations(self) -> int:
        return sum(self.stabilization_counts)


@dataclass(frozen=True)
class Component:
    """One knot of a (+/-1)-presentation link.

    ``parent`` is the index of the component this one was pushed off
    from; the chain head and the surviving original knot have none.
    ``stabs_pos``/``stabs_neg`` count the zigzags added after the
    push-off.
    """

    index: int
    knot: LegendrianUnknot
    contact_sign: int
    parent: Optional[int]
    stabs_pos: int = 0
    stabs_neg: int = 0

    @property
    def stabilizations(self) -> int:
        return self.stabs_pos + self.stabs_neg

    @property
    def topological_coefficient(self) -> int:
        return self.knot.tb + self.contact_sign


@dataclass(frozen=True)
class Presentation:
    """An ordered (+/-1)-surgery link replacing one rational contact surgery."""

    components: tuple
    source_knot: LegendrianUnknot
    source_coefficient: Fraction
    sign_choice: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "sign_choice", tuple(self.sign_choice))
        self._check_structure()

    def _check_structure(self):
        if not self.components:
            raise InvalidInputError("presentation needs at least one component")
        budget = sum(c.stabilizations for c in self.components)
        if budget != len(self.sign_choice):
            raise InvalidInputError(
                f"sign vector length {len(self.sign_choice)} does not match "
                f"{budget} recorded stabilizations"
            )
        for pos, comp in enumerate(self.components):
            if comp.index != pos:
                raise InvalidInputError("component indices must match positions")
            if comp.contact_sign not in (1, -1):
                raise InvalidInputError("contact coefficients must be +1 or -1")
            if comp.contact_sign == 1 and comp.stabilizations:
                raise InvalidInputError(
                    "(+1) components are never stabilized, only chain members are"
                )
            if comp.parent is None:
                base = self.source_knot
            else:
                if not 0 <= comp.parent < pos:
                    raise InvalidInputError("parents must precede children")
                base = self.components[comp.parent].knot
            if comp.knot.tb != base.tb - comp.stabilizations:
                raise InvalidInputError("tb bookkeeping mismatch")
            if comp.knot.rot != base.rot + comp.stabs_pos - comp.stabs_neg:
                raise InvalidInputError("rot bookkeeping mismatch")

    @property
    def signs_string(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.sign_choice)


def evaluate_cf(coeffs: Sequence[int]) -> Fraction:
    """Evaluate ``[c1, ..., cn] = c1 - 1/(c2 - 1/(... - 1/cn))`` exactly."""
    if not coeffs:
        raise InvalidExpansionError("cannot evaluate an empty expansion")
    value = Fraction(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        if value == 0:
            raise InvalidExpansionError(
                f"division by zero while evaluating {list(coeffs)}"
            )
        value = c - 1 / value
    return value


def expand_negative(r: Coefficient) -> CFExpansion:
    """Expand r < 0 so that ``evaluate_cf([a1 + 1, a2, ..., an]) == r``.

    The floor-based recursion c = floor(x), x <- 1/(c - x) yields the
    unique expansion of r itself with every tail coefficient at most -2;
    shifting the leading coefficient down by one then accounts for the
    surgery convention above and makes every coefficient at most -2.
    """
    r = Fraction(r)
    if r >= 0:
        raise InvalidInputError(f"only negative coefficients expand (got {r})")
    coeffs = []
    x = r
    while True:
        c = x.numerator // x.denominator  # floor for exact rationals
        coeffs.append(c)
        if x == c:
            break
        x = 1 / (c - x)
    coeffs[0] -= 1
    return CFExpansion(tuple(coeffs))


def _as_fraction(coefficient: Coefficient) -> Fraction:
    try:
        return Fraction(coefficient)
    except (TypeError, ValueError) as exc:
        raise InvalidInputError(f"not an exact rational: {coefficient!r}") from exc


def _conversion_plan(coefficient: Fraction):
    """Number of contact (+1) components, and the chain expansion if any."""
    if coefficient == 0:
        raise ZeroSurgeryError(
            "contact 0-surgery has no (+/-1)-surgery presentation"
        )
    plus = 0
    current = coefficient
    while current > 0 and current != 1:
        plus += 1
        current = current / (1 - current)
    if current == 1:
        return plus + 1, None
    return plus, expand_negative(current)


def stabilization_budget(coefficient: Coefficient) -> int:
    """Total stabilizations any conversion of this coefficient must choose signs for."""
    _, expansion = _conversion_plan(_as_fraction(coefficient))
    return expansion.total_stabilizations if expansion is not None else 0


def convert(
    knot: LegendrianUnknot,
    coefficient: Coefficient,
    signs: Sequence[int] = (),
) -> Presentation:
    """Convert contact r-surgery on ``knot`` into one (+/-1)-presentation.

    ``signs`` fixes the stabilization choices, consumed chain-first and
    left to right; its length must equal :func:`stabilization_budget`.
    """
    coefficient = _as_fraction(coefficient)
    sign_choice = tuple(signs)
    if any(s not in (1, -1) for s in sign_choice):
        raise InvalidInputError(f"signs must be +1 or -1, got {list(sign_choice)}")
    plus_count, expansion = _conversion_plan(coefficient)
    needed = expansion.total_stabilizations if expansion is not None else 0
    if len(sign_choice) != needed:
        raise InvalidInputError(
            f"sign vector has length {len(sign_choice)} but this conversion "
            f"stabilizes {needed} times"
        )

    components = []
    parent = None
    current = knot
    for _ in range(plus_count):
        components.append(Component(len(components), current, 1, parent))
        parent = len(components) - 1
        # the next surgery lives on an unstabilized push-off: same tb, same rot
    if expansion is not None:
        queue = iter(sign_choice)
        for count in expansion.stabilization_counts:
            stabbed = current
            pos = neg = 0
            for _ in range(count):
                sign = next(queue)
                stabbed = stabilize(stabbed, sign)
                if sign > 0:
                    pos += 1
                else:
                    neg += 1
            components.append(
                Component(len(components), stabbed, -1, parent, pos, neg)
            )
            parent = len(components) - 1
            current = stabbed
    return Presentation(tuple(components), knot, coefficient, sign_choice)


def enumerate_presentations(
    knot: LegendrianUnknot, coefficient: Coefficient
) -> list:
    """All presentations of one surgery, in plus-first lexicographic sign order.

    The first entry is the all-plus branch; a coefficient with s
    stabilizations yields exactly 2^s presentations.
    """
    coefficient = _as_fraction(coefficient)
    total = stabilization_budget(coefficient)
    return [
        convert(knot, coefficient, choice)
        for choice in itertools.product((1, -1), repeat=total)
    ]


def linking_matrix(presentation: Presentation) -> IntMatrix:
    """The symmetric linking matrix of the presentation link.

    Diagonal entries are the topological surgery coefficients
    (tb + contact sign); the off-diagonal entry for components i < j is
    the tb of component i after its own stabilizations, by the
    parallel-copy rule.
    """
    comps = presentation.components
    rows = []
    for i, ci in enumerate(comps):
        row = []
        for j in range(len(comps)):
            if i == j:
                row.append(ci.knot.tb + ci.contact_sign)
            else:
                row.append(comps[min(i, j)].knot.tb)
        rows.append(row)
    return IntMatrix(rows)


def linking_vector(presentation: Presentation, ext: ExternalKnot) -> tuple:
    """Linking numbers of the external knot with every component.

    All components are parallel copies of the original surgery knot, and
    stabilization does not change linking numbers, so every entry equals
    the external knot's linking number with the original.
    """
    return tuple(ext.lk_with_original for _ in presentation.components)


def rot_vector(presentation: Presentation) -> tuple:
    """Component-wise rotation numbers, in component order."""
    return tuple(c.knot.rot for c in presentation.components)


def mirror(presentation: Presentation) -> Presentation:
    """The mirror presentation: every rot negated, stabilization signs flipped."""
    comps = tuple(
        Component(
            c.index,
            legendrian.mirror(c.knot),
            c.contact_sign,
            c.parent,
            c.stabs_neg,
            c.stabs_pos,
        )
        for c in presentation.components
    )
    return Presentation(
        comps,
        legendrian.mirror(presentation.source_knot),
        presentation.source_coefficient,
        tuple(-s for s in presentation.sign_choice),
    )
