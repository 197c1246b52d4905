"""Open-question probes over the bounded enumeration.

Each runnable question scans topology pairs within the given bounds and
returns reports with enough provenance in the claim to replay any single
instance. Questions whose subject matter has no finite counterpart are
registered out of scope with a one-line reason, so the registry still lists
every question.

A probe's explanation distinguishes two kinds of clean outcome. Plain
searches that find nothing say "no witness at these bounds". Where the
collapse argument is actually encoded next to the probe, the explanation
says "provably no finite witness" and spells the argument out; raising the
bounds cannot change those outcomes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .checkers import MAX_SUITE_Y, MAX_SUITE_Z, composition_check, refute_splitting
from .errors import BudgetExceeded, UnknownQuestion
from .finspace import FinSpace, discrete, enumerate_topologies, separation_profile
from .fntop import compare_topologies, named_function_topology
from .reports import VerdictReport, pair_tag

MAX_COMPOSE_X = 2

_NO_WITNESS = "no witness at these bounds"

_COLLAPSE_Q31 = (
    "provably no finite witness: every subset of a finite ground is compact, "
    "in the carried topology and in the codomain-induced one alike, so both "
    "constructions range over the same restricting sets and emit the same "
    "subbasis"
)

_COLLAPSE_Q12 = (
    "provably no finite witness: a qualifying open family contains a set "
    "exactly when it contains some preimage member below it, so each family "
    "subbasic is the union of the containment subbasics of its members; each "
    "containment subbasic is in turn the up-family of its restricting set, "
    "which itself qualifies on a finite ground, so the two subbases generate "
    "the same topology"
)

_COLLAPSE_Q10 = (
    "provably no finite witness: a two-point discrete codomain keeps the "
    "ground finite, so every subset stays compact both ways and each "
    "comparison leg collapses by the q3.1 and q12 arguments"
)


@dataclass(frozen=True)
class QuestionProbe:
    """Outcome of one registered question at fixed bounds."""

    id: str
    bounds: tuple[int, int]
    result: tuple[VerdictReport, ...]
    explanation: str = ""
    out_of_scope_reason: str = ""

    @property
    def status(self) -> str:
        return "out_of_scope" if self.out_of_scope_reason else "completed"

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "bounds": list(self.bounds),
            "status": self.status,
            "explanation": self.explanation,
            "out_of_scope_reason": self.out_of_scope_reason,
            "result": [r.to_dict() for r in self.result],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _spaces(limit: int) -> list[FinSpace]:
    return [sp for n in range(1, limit + 1) for sp in enumerate_topologies(n)]


def _q1(max_y: int, max_z: int):
    # one row per pair with a regular codomain: is the function space under
    # the upper-family topology regular as well?
    rows = []
    for y in _spaces(max_y):
        for z in _spaces(max_z):
            if not separation_profile(z).regular:
                continue
            space = named_function_topology("t1z", y, z).as_space()
            ok = separation_profile(space).regular
            rows.append(
                VerdictReport(
                    claim=f"q1:regular t1z {pair_tag(y, z)}",
                    status="holds" if ok else "fails",
                    hypothesis_true_count=1,
                    instance_count=1,
                    witnesses=() if ok else (("function_space_opens", space.opens.members),),
                )
            )
    return rows, ""


def _equality_row(
    qid: str, lo: str, hi: str, ys, zs, suffix: str = ""
) -> VerdictReport:
    witnesses = []
    count = 0
    for y in ys:
        for z in zs:
            count += 1
            cmp = compare_topologies(
                named_function_topology(lo, y, z), named_function_topology(hi, y, z)
            )
            if cmp.verdict != "equal":
                witnesses.append((pair_tag(y, z), cmp.verdict, cmp.a_only, cmp.b_only))
    return VerdictReport(
        claim=f"{qid}:{lo}={hi}{suffix}",
        status="fails" if witnesses else "holds",
        hypothesis_true_count=count,
        instance_count=count,
        witnesses=tuple(witnesses),
    )


def _q3_runner(qid: str, lo: str, hi: str, explanation: str):
    def run(max_y: int, max_z: int):
        row = _equality_row(qid, lo, hi, _spaces(max_y), _spaces(max_z))
        return [row], explanation if row.status == "holds" else ""

    return run


def _composition_runner(qid: str, kind: str):
    # the first factor stays small: its function-space ground multiplies the
    # check, and two points already give every specialization shape
    def run(max_y: int, max_z: int):
        rows = []
        for x in _spaces(min(MAX_COMPOSE_X, max_y)):
            for y in _spaces(max_y):
                for z in _spaces(max_z):
                    rows.append(composition_check(x, y, z, (kind, kind, kind)))
        return rows, ""

    return run


def _splitting_runner(kind: str):
    def run(max_y: int, max_z: int):
        rows = [
            refute_splitting(named_function_topology(kind, y, z), max_x=2)
            for y in _spaces(max_y)
            for z in _spaces(max_z)
        ]
        return rows, ""

    return run


def _q10(max_y: int, max_z: int):
    del max_z  # the codomain is pinned by the question itself
    z2 = discrete(2)
    ys = _spaces(max_y)
    rows = [
        _equality_row("q10", lo, hi, ys, [z2], suffix=" z=discrete2")
        for lo, hi in (("co", "coZ"), ("isbell", "t1z"), ("sisbell", "t1sz"))
    ]
    clean = all(r.status == "holds" for r in rows)
    return rows, _COLLAPSE_Q10 if clean else ""


_OUT_OF_SCOPE = {
    "q2": "complete regularity needs real-valued separating functions",
    "q4": "needs the countable power of the reals",
    "q5": "needs the countable power of the naturals",
    "q11": "needs an infinite convergent sequence",
}

_RUNNERS = {
    "q1": _q1,
    "q3.1": _q3_runner("q3.1", "co", "coZ", _COLLAPSE_Q31),
    "q3.2": _q3_runner("q3.2", "isbell", "t1z", _NO_WITNESS),
    "q3.3": _q3_runner("q3.3", "sisbell", "t1sz", _NO_WITNESS),
    "q6": _composition_runner("q6", "t1sz"),
    "q7": _composition_runner("q7", "t1z"),
    "q8": _splitting_runner("t1z"),
    "q9": _splitting_runner("coZ"),
    "q10": _q10,
    "q12": _q3_runner("q12", "t1z", "coZ", _COLLAPSE_Q12),
}

QUESTION_IDS = (
    "q1", "q2", "q3.1", "q3.2", "q3.3", "q4", "q5",
    "q6", "q7", "q8", "q9", "q10", "q11", "q12",
)


def question_search(qid: str, max_y: int = 3, max_z: int = 2) -> QuestionProbe:
    """Run the registered probe for one question id at the given bounds."""
    if qid in _OUT_OF_SCOPE:
        return QuestionProbe(
            id=qid,
            bounds=(max_y, max_z),
            result=(),
            out_of_scope_reason=_OUT_OF_SCOPE[qid],
        )
    if qid not in _RUNNERS:
        raise UnknownQuestion(f"{qid!r} is not registered; known ids: {QUESTION_IDS}")
    if max_y > MAX_SUITE_Y or max_z > MAX_SUITE_Z:
        raise BudgetExceeded(
            f"bounds ({max_y},{max_z}) exceed ({MAX_SUITE_Y},{MAX_SUITE_Z})"
        )
    rows, explanation = _RUNNERS[qid](max_y, max_z)
    return QuestionProbe(
        id=qid, bounds=(max_y, max_z), result=tuple(rows), explanation=explanation
    )
