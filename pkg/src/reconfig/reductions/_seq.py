"""Shared sequence-precondition checks for the forward mappers."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import InvalidSequenceError
from ..problems.instances import ReconfigInstance, adjacent, state_value


def check_source_sequence(instance: ReconfigInstance, seq: Sequence,
                          required_value: Fraction = Fraction(1)) -> list:
    """Validate a source sequence for a completeness mapper.

    Requires: nonempty, endpoints equal to the instance's start/target,
    consecutive states adjacent or identical, and every state value at least
    ``required_value``.  Returns the states as a list.
    """
    states = list(seq)
    if not states:
        raise InvalidSequenceError("source sequence is empty")
    if states[0] != instance.start:
        raise InvalidSequenceError("source sequence does not begin at the start state", index=0)
    if states[-1] != instance.target:
        raise InvalidSequenceError("source sequence does not end at the target state",
                                   index=len(states) - 1)
    for i, st in enumerate(states):
        if state_value(instance, st) < required_value:
            raise InvalidSequenceError(
                f"source state value below {required_value}", index=i)
    for i in range(1, len(states)):
        if states[i - 1] == states[i]:
            continue
        if not adjacent(instance.kind, states[i - 1], states[i]):
            raise InvalidSequenceError("source states are not adjacent", index=i)
    return states
