"""Reconfiguration instances, adjacency relations, and sequence verification."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from ..errors import DomainError
from .csp import ConstraintGraph, check_assignment, csp_value
from .graphs import SimpleGraph, is_clique, is_independent_set, is_vertex_cover
from .ncl import NclGraph, check_orientation, ncl_value
from .sat import CnfFormula, check_truth_assignment, cnf_value


class ProblemKind(str, Enum):
    CSP = "csp"
    SAT = "sat"
    NCL = "ncl"
    ISR = "isr"
    VCR = "vcr"
    CLIQUE = "clique"


# Subset problems normalize every state to a frozenset.
_SET_KINDS = (ProblemKind.ISR, ProblemKind.VCR, ProblemKind.CLIQUE)


def _as_state(kind: ProblemKind, state):
    if kind in _SET_KINDS:
        return frozenset(state)
    if kind is ProblemKind.NCL:
        return tuple(state)
    return dict(state)


@dataclass(frozen=True)
class ReconfigInstance:
    """A problem payload with a start state and a target state.

    ``opt_size`` carries alpha(G), beta(G), or omega(G) for the subset kinds
    and is None otherwise.
    """

    kind: ProblemKind
    payload: object
    start: object
    target: object
    opt_size: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "start", _as_state(self.kind, self.start))
        object.__setattr__(self, "target", _as_state(self.kind, self.target))
        for name in ("start", "target"):
            ok, reason = check_state(self, getattr(self, name))
            if not ok:
                raise DomainError(f"{name} state is malformed: {reason}")

    @property
    def objective(self) -> str:
        return "minmax" if self.kind is ProblemKind.VCR else "maxmin"


def check_state(instance: ReconfigInstance, state) -> tuple:
    """(True, '') when the state is a well-formed solution of the payload."""
    kind, payload = instance.kind, instance.payload
    try:
        if kind is ProblemKind.CSP:
            check_assignment(payload, state, require_domains=True)
        elif kind is ProblemKind.SAT:
            check_truth_assignment(payload, state)
        elif kind is ProblemKind.NCL:
            check_orientation(payload, state)
        elif kind is ProblemKind.ISR:
            if not is_independent_set(payload, state):
                return False, "not an independent set"
        elif kind is ProblemKind.VCR:
            if not is_vertex_cover(payload, state):
                return False, "not a vertex cover"
        elif kind is ProblemKind.CLIQUE:
            if not is_clique(payload, state):
                return False, "not a clique"
        else:  # pragma: no cover
            raise DomainError(f"unknown kind {kind}")
    except DomainError as exc:
        return False, str(exc)
    return True, ""


def state_value(instance: ReconfigInstance, state) -> Fraction:
    """Exact value of a single state under the instance's value function."""
    kind, payload = instance.kind, instance.payload
    if kind is ProblemKind.CSP:
        return csp_value(payload, state)
    if kind is ProblemKind.SAT:
        return cnf_value(payload, state)
    if kind is ProblemKind.NCL:
        return ncl_value(payload, state)
    if instance.opt_size is None:
        raise DomainError(f"{kind.value} instance is missing its optimum size")
    if kind is ProblemKind.VCR:
        return Fraction(len(state), instance.opt_size + 1)
    if instance.opt_size < 2:
        raise DomainError(f"{kind.value}: optimum {instance.opt_size} < 2 makes the denominator vanish")
    return Fraction(len(state), instance.opt_size - 1)


def adjacent(kind: ProblemKind, s, t) -> bool:
    """Single-step adjacency; symmetric and irreflexive.

    CSP/SAT: the mappings differ in exactly one key.  NCL: exactly one link
    reversed.  Subset kinds: symmetric difference of size one.
    """
    kind = ProblemKind(kind)
    if kind in (ProblemKind.CSP, ProblemKind.SAT):
        if set(s.keys()) != set(t.keys()):
            raise DomainError("states are over different key sets")
        return sum(1 for k in s if s[k] != t[k]) == 1
    if kind is ProblemKind.NCL:
        if len(s) != len(t):
            raise DomainError("orientations have different lengths")
        return sum(1 for a, b in zip(s, t) if a != b) == 1
    return len(frozenset(s) ^ frozenset(t)) == 1


@dataclass
class SequenceReport:
    """Outcome of verify_sequence; all failures are fields, never exceptions."""

    objective: str
    length: int
    endpoints_match: bool
    valid_steps: bool
    first_violation_index: Optional[int]
    invalid_state_index: Optional[int]
    invalid_state_reason: Optional[str]
    value: Optional[Fraction]
    extreme_index: Optional[int]
    threshold: Optional[Fraction]
    threshold_met: Optional[bool]

    @property
    def passed(self) -> bool:
        if not (self.endpoints_match and self.valid_steps and self.invalid_state_index is None):
            return False
        if self.threshold is None:
            return True
        return bool(self.threshold_met)


def verify_sequence(instance: ReconfigInstance, seq: Sequence,
                    threshold: Optional[Fraction] = None) -> SequenceReport:
    """Check a reconfiguration sequence against an instance.

    Steps must be adjacent or identical (identical consecutive states are a
    legal no-op).  The reported value is the minimum state value, or the
    maximum for VCR; the threshold test is value >= threshold (<= for VCR).
    """
    kind = instance.kind
    states = [_as_state(kind, s) for s in seq]
    if not states:
        return SequenceReport(instance.objective, 0, False, False, None, None,
                              "empty sequence", None, None, threshold, None)

    endpoints = states[0] == instance.start and states[-1] == instance.target

    invalid_index = None
    invalid_reason = None
    for i, st in enumerate(states):
        ok, reason = check_state(instance, st)
        if not ok:
            invalid_index, invalid_reason = i, reason
            break

    valid_steps = True
    first_violation = None
    for i in range(1, len(states)):
        a, b = states[i - 1], states[i]
        if a == b:
            continue
        try:
            step_ok = adjacent(kind, a, b)
        except DomainError:
            step_ok = False
        if not step_ok:
            valid_steps = False
            first_violation = i
            break

    value = None
    extreme_index = None
    minmax = instance.objective == "minmax"
    limit = invalid_index if invalid_index is not None else len(states)
    for i in range(limit):
        try:
            v = state_value(instance, states[i])
        except DomainError:
            value = None
            break
        if value is None or (v > value if minmax else v < value):
            value, extreme_index = v, i

    threshold_met = None
    if threshold is not None:
        threshold = Fraction(threshold)
        if value is not None and invalid_index is None:
            threshold_met = value <= threshold if minmax else value >= threshold
        else:
            threshold_met = False

    return SequenceReport(instance.objective, len(states), endpoints, valid_steps,
                          first_violation, invalid_index, invalid_reason,
                          value, extreme_index, threshold, threshold_met)
