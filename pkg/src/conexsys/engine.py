"""Consultation engine: inference driven directly by the weight matrix.

Forward chaining under partial information works through dominance bounds.
With some inputs still unknown, the pairwise gap between two goals' sums
can swing by at most the sum of absolute weight differences over the
unknown inputs; when goal i already leads goal j by strictly more than
that, no completion of the unknowns can save j, so j is eliminated.  The
bound is achievable, which makes strictness exactly the right test.

Backward chaining picks the next question: among readings that may still
be asked, the one with the largest absolute weight gap across any pair of
surviving goals, i.e. the reading with the greatest power to separate
them.

Conclusions are justified after the fact by assembling an IF-THEN rule
from the known readings, even though no rules exist anywhere in the
knowledge base: literals are added greedily, most decisive first, until
they alone guarantee the elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Union

import numpy as np

from .kb import KnowledgeBase, TruthValue, encode_assignment, goal_scores


class SessionStateError(RuntimeError):
    """Raised on invalid consultation-session transitions."""


class VerdictKind(Enum):
    CONCLUDED = "concluded"
    NEEDS_INPUT = "needs_input"
    UNCONFIRMED = "unconfirmed"


@dataclass(frozen=True)
class Verdict:
    """Session outcome: a concluded/best-guess goal or the next variable to ask."""

    kind: VerdictKind
    goal: int | None = None
    variable: int | None = None


@dataclass(frozen=True)
class AnswerEvent:
    variable: int
    value: TruthValue


@dataclass(frozen=True)
class EliminationEvent:
    rival: int
    dominator: int
    gap: int
    bound: int


TranscriptEvent = Union[AnswerEvent, EliminationEvent]


@dataclass(frozen=True)
class Justification:
    """IF-THEN rule certifying one rival's elimination by one dominator.

    Replaying just the literals in a fresh session re-eliminates the rival;
    by construction, dropping the last literal breaks the inequality.
    """

    rival: int
    dominator: int
    literals: tuple[tuple[int, TruthValue], ...]

    def rule_text(self, kb: KnowledgeBase) -> str:
        if self.literals:
            conj = " AND ".join(
                f"{kb.input_names[k]}={'True' if v is TruthValue.TRUE else 'False'}"
                for k, v in self.literals
            )
        else:
            conj = "TRUE"
        return f"IF {conj} THEN not {kb.goal_names[self.rival]}"


def dominance_bound(
    kb: KnowledgeBase, i: int, j: int, unknowns: Iterable[int]
) -> int:
    """Largest possible swing of sum_i - sum_j over completions of the unknowns.

    Sum over unknown inputs of |w[i][k] - w[j][k]|; achieved by setting each
    unknown against the sign of the weight difference.
    """
    if i == j:
        raise ValueError("dominance bound needs two distinct goals")
    cols = [k + 1 for k in unknowns]
    if not cols:
        return 0
    return int(np.abs(kb.weights[i, cols] - kb.weights[j, cols]).sum())


class ConsultSession:
    """One consultation: a partial assignment narrowing a viable-goal set.

    The knowledge base is shared and never mutated; all state lives here.
    Assignment entries only ever move from Unknown to True/False/Unavailable,
    and eliminated goals never come back.
    """

    def __init__(self, kb: KnowledgeBase):
        self.kb = kb
        self.values: list[TruthValue] = [TruthValue.UNKNOWN] * kb.n_inputs
        self.viable: list[int] = list(range(kb.m_goals))
        self.eliminated_by: dict[int, int] = {}
        self.transcript: list[TranscriptEvent] = []
        self.eliminate()

    # -- state views -------------------------------------------------------

    def sums(self) -> list[int]:
        """Current weighted sums for every goal (unknowns contribute 0)."""
        return [int(x) for x in goal_scores(self.kb, encode_assignment(self.values))]

    def undetermined(self) -> list[int]:
        """Inputs whose true value is still uncertain (Unknown or Unavailable)."""
        return [
            k
            for k, v in enumerate(self.values)
            if v in (TruthValue.UNKNOWN, TruthValue.UNAVAILABLE)
        ]

    def askable(self) -> list[int]:
        """Inputs that may still be asked (Unknown only)."""
        return [k for k, v in enumerate(self.values) if v is TruthValue.UNKNOWN]

    # -- forward chaining ----------------------------------------------------

    def eliminate(self) -> set[int]:
        """Drop every viable goal dominated by some other viable goal.

        Repeats to a fixpoint and returns the surviving set.  The recorded
        dominator is the one with the widest margin, lowest index on ties.
        """
        unknowns = self.undetermined()
        sums = self.sums()
        changed = True
        while changed:
            changed = False
            for j in list(self.viable):
                best_margin, best_i, best_bound = 0, None, 0
                for i in self.viable:
                    if i == j:
                        continue
                    bound = dominance_bound(self.kb, i, j, unknowns)
                    margin = sums[i] - sums[j] - bound
                    if margin > 0 and (best_i is None or margin > best_margin):
                        best_margin, best_i, best_bound = margin, i, bound
                if best_i is not None:
                    self.viable.remove(j)
                    self.eliminated_by[j] = best_i
                    self.transcript.append(
                        EliminationEvent(
                            rival=j,
                            dominator=best_i,
                            gap=sums[best_i] - sums[j],
                            bound=best_bound,
                        )
                    )
                    changed = True
        return set(self.viable)

    # -- backward chaining ---------------------------------------------------

    def next_question(self) -> int | None:
        """Unknown input that best separates the surviving goals, or None.

        Score of input k is the largest |w[i][k] - w[j][k]| over viable goal
        pairs; ties go to the lowest input index.  Only meaningful with at
        least two goals left to separate.
        """
        askable = self.askable()
        if not askable or len(self.viable) < 2:
            return None
        w = self.kb.weights
        best_k, best_score = None, -1
        for k in askable:
            col = w[self.viable, k + 1]
            score = int(col.max() - col.min())
            if score > best_score:
                best_k, best_score = k, score
        return best_k

    # -- verdicts ------------------------------------------------------------

    def _leader(self) -> int:
        """Viable goal with the highest current sum, lowest index on ties."""
        sums = self.sums()
        return max(self.viable, key=lambda g: (sums[g], -g))

    def verdict(self) -> Verdict:
        """Outcome of the session in its current state.

        Concluded once a single goal survives, or once no completion of the
        uncertain inputs can unseat the current leader (covers the all-known
        case, where ties resolve to the lowest index).  If rivals remain and
        nothing may be asked, the leader is reported as an unconfirmed best
        guess.
        """
        if len(self.viable) == 1:
            return Verdict(VerdictKind.CONCLUDED, goal=self.viable[0])
        leader = self._leader()
        sums = self.sums()
        unknowns = self.undetermined()
        settled = True
        for j in self.viable:
            if j == leader:
                continue
            gap = sums[leader] - sums[j]
            bound = dominance_bound(self.kb, leader, j, unknowns)
            if not (gap > bound or (gap == bound and leader < j)):
                settled = False
                break
        if settled:
            return Verdict(VerdictKind.CONCLUDED, goal=leader)
        if not self.askable():
            return Verdict(VerdictKind.UNCONFIRMED, goal=leader)
        return Verdict(VerdictKind.NEEDS_INPUT, variable=self.next_question())

    def answer(self, variable: int, value: TruthValue) -> Verdict:
        """Record one answer, re-run elimination, and return the new verdict."""
        if not 0 <= variable < self.kb.n_inputs:
            raise IndexError(f"input index {variable} out of range")
        if value not in (TruthValue.TRUE, TruthValue.FALSE, TruthValue.UNAVAILABLE):
            raise ValueError("an answer must be True, False, or Unavailable")
        if self.values[variable] is not TruthValue.UNKNOWN:
            raise SessionStateError(
                f"input {self.kb.input_names[variable]!r} was already answered"
            )
        self.values[variable] = value
        self.transcript.append(AnswerEvent(variable=variable, value=value))
        self.eliminate()
        return self.verdict()

    # -- justification ---------------------------------------------------------

    def justify(self, rival: int) -> Justification:
        """Greedy minimal IF-THEN rule for an eliminated rival.

        Known readings are ranked by how much knowing them helps the
        dominator's case: their signed contribution to the pairwise gap plus
        the bound shrinkage from no longer being unknown.  Literals are added
        in that order until the rule alone (everything else unknown) forces
        the elimination.
        """
        if rival not in self.eliminated_by:
            raise SessionStateError(
                f"goal {self.kb.goal_names[rival]!r} has not been eliminated"
            )
        dom = self.eliminated_by[rival]
        w = self.kb.weights
        dw = w[dom, 1:] - w[rival, 1:]
        gap = int(w[dom, 0] - w[rival, 0])
        bound = int(np.abs(dw).sum())
        known = [
            k
            for k, v in enumerate(self.values)
            if v in (TruthValue.TRUE, TruthValue.FALSE)
        ]
        gain = {k: int(dw[k]) * self.values[k].encode() + abs(int(dw[k])) for k in known}
        literals: list[tuple[int, TruthValue]] = []
        for k in sorted(known, key=lambda k: (-gain[k], k)):
            if gap > bound:
                break
            literals.append((k, self.values[k]))
            gap += int(dw[k]) * self.values[k].encode()
            bound -= abs(int(dw[k]))
        if gap <= bound:
            raise SessionStateError(
                "known inputs no longer certify the elimination"
            )
        return Justification(rival=rival, dominator=dom, literals=tuple(literals))
