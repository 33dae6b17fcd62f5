"""Screening of candidate diagrams for a contact Kirby move of type 1.

A topological Kirby move of type 1 adds or deletes a (+/-1)-framed
unknot.  A contact analogue must therefore be a contact n-surgery on a
Legendrian unknot with tb = -m that (a) is topologically a (+/-1)
surgery, forcing n = m - 1 or n = m + 1 with n >= 0, and (b) gives the
standard tight 3-sphere back.

Candidates split into two collections by the framing branch:

* ``C1``: n = m - 1 (topologically -1).  None survive: n = 0 is contact
  0-surgery, overtwisted by definition, and for m >= 2 the framing
  unknot ends with tb 0, so it violates the Bennequin inequality and
  bounds an overtwisted disk.
* ``C2``: n = m + 1 (topologically +1).  The framing unknot ends with
  tb -2 on every branch; its rotation number is 2m - 1 on the all-plus
  branch (a Bennequin violation once m >= 2) and -1 on the all-minus
  branch, which stays consistent with the standard tight structure.

"Consistent with" is deliberately weaker than "tight": a satisfied
Bennequin check certifies nothing, so surviving branches are reported
with their tightness asserted on external grounds, never computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import GateRejectionError, InvalidLegendrianError
from .legendrian import (
    ExternalKnot,
    LegendrianUnknot,
    kirby_topological_condition,
    validate_unknot,
)
from .presentation import enumerate_presentations
from .transform import BennequinVerdict, bennequin, invariants_after_surgery

OVERTWISTED_CERTIFIED = "overtwisted-certified"
CONSISTENT_WITH_STANDARD_TIGHT = "consistent-with-standard-tight"

ZERO_SURGERY_REASON = "contact 0-surgery yields an overtwisted contact structure"


def _gate_check(m: int, n: int, rot: int) -> None:
    if m < 1:
        raise GateRejectionError("m >= 1", f"tb = -m requires m >= 1 (got m={m})")
    if n < 0:
        raise GateRejectionError(
            "n >= 0", f"contact framing must be non-negative (got n={n})"
        )
    if kirby_topological_condition(m, n) is None:
        raise GateRejectionError(
            "n = m +/- 1",
            f"topological condition n = m +/- 1 fails (m={m}, n={n})",
        )
    try:
        validate_unknot(-m, rot)
    except InvalidLegendrianError as exc:
        raise GateRejectionError("valid unknot", str(exc)) from exc


@dataclass(frozen=True)
class CandidateDiagram:
    """A gated candidate: contact n-surgery on the unknot with tb = -m."""

    m: int
    n: int
    rot: int

    def __post_init__(self):
        _gate_check(self.m, self.n, self.rot)

    @property
    def branch(self) -> int:
        """+1 for the n = m + 1 branch, -1 for n = m - 1."""
        return 1 if self.n == self.m + 1 else -1

    @property
    def collection(self) -> str:
        return "C2" if self.branch == 1 else "C1"

    @property
    def knot(self) -> LegendrianUnknot:
        return LegendrianUnknot(-self.m, self.rot)


@dataclass(frozen=True)
class PresentationVerdict:
    """Verdict for one stabilization branch of a candidate's conversion.

    ``status`` is overtwisted-certified exactly when the Bennequin check
    was run and violated; the contact 0-surgery shortcut records no
    invariants and carries its justification in ``reason`` instead.
    """

    sign_choice: tuple
    tb_new: Optional[int]
    rot_new: Optional[int]
    bennequin: Optional[BennequinVerdict]
    status: str
    reason: Optional[str] = None

    @property
    def signs_string(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.sign_choice)


@dataclass(frozen=True)
class CandidateReport:
    """Full screening result for one candidate diagram."""

    diagram: CandidateDiagram
    collection: str
    verdicts: tuple
    summary: str

    @property
    def survives(self) -> bool:
        return any(
            v.status == CONSISTENT_WITH_STANDARD_TIGHT for v in self.verdicts
        )


def gate(m: int, n: int, rot: Optional[int] = None) -> CandidateDiagram:
    """Admit a candidate diagram or raise naming the first failed condition.

    ``rot`` defaults to -(m - 1), the canonical representative; the
    mirror diagram is covered by the rot-negation symmetry rather than
    listed separately.
    """
    if rot is None:
        rot = -(m - 1)
    return CandidateDiagram(m, n, rot)


def classify(diagram: CandidateDiagram) -> CandidateReport:
    """Run the full screening of one gated candidate.

    Every stabilization branch of the (+/-1)-conversion is converted and
    measured from scratch: the topological framing unknot (tb -1, rot 0,
    linking number equal to the framing branch sign) bounds a disk after
    surgery, so a Bennequin violation certifies an overtwisted result,
    while a satisfied check leaves the branch consistent with the
    standard tight 3-sphere.
    """
    if diagram.n == 0:
        verdicts = (
            PresentationVerdict(
                sign_choice=(),
                tb_new=None,
                rot_new=None,
                bennequin=None,
                status=OVERTWISTED_CERTIFIED,
                reason=ZERO_SURGERY_REASON,
            ),
        )
        return CandidateReport(
            diagram, diagram.collection, verdicts, _summarize(verdicts)
        )

    ext = ExternalKnot(LegendrianUnknot(-1, 0), diagram.branch)
    verdicts = []
    for pres in enumerate_presentations(diagram.knot, Fraction(diagram.n)):
        invariants = invariants_after_surgery(pres, ext)
        check = bennequin(invariants.tb_new, invariants.rot_new)
        status = (
            CONSISTENT_WITH_STANDARD_TIGHT
            if check.satisfied
            else OVERTWISTED_CERTIFIED
        )
        verdicts.append(
            PresentationVerdict(
                sign_choice=pres.sign_choice,
                tb_new=invariants.tb_new,
                rot_new=invariants.rot_new,
                bennequin=check,
                status=status,
            )
        )
    verdicts = tuple(verdicts)
    return CandidateReport(
        diagram, diagram.collection, verdicts, _summarize(verdicts)
    )


def _summarize(verdicts) -> str:
    survivors = sum(
        1 for v in verdicts if v.status == CONSISTENT_WITH_STANDARD_TIGHT
    )
    if survivors == 0:
        if any(v.reason == ZERO_SURGERY_REASON for v in verdicts):
            return f"not a candidate move: {ZERO_SURGERY_REASON}"
        return (
            f"not a candidate move: all {len(verdicts)} presentations certify "
            "an overtwisted structure"
        )
    return (
        f"potential contact Kirby move of type 1: {survivors} of "
        f"{len(verdicts)} presentations consistent with the standard tight "
        "3-sphere (tightness asserted, not computed)"
    )


def emit_table(m_max: int) -> list:
    """Reports for every candidate (m, m - 1) and (m, m + 1) with m <= m_max.

    Rows come in deterministic order: m ascending, lower framing first.
    """
    reports = []
    for m in range(1, m_max + 1):
        for n in (m - 1, m + 1):
            reports.append(classify(gate(m, n)))
    return reports
