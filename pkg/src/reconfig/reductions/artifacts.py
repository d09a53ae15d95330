"""Common container for reduction outputs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from ..problems.instances import ReconfigInstance


@dataclass(frozen=True)
class ReductionArtifact:
    """A reduced instance plus the metadata the harness needs.

    provenance maps target elements to the source elements that produced
    them; structure holds recomputable counts; aux carries the private data
    the forward mapper and backward projector of this reduction rely on.
    """

    tag: str
    source: ReconfigInstance
    target: ReconfigInstance
    provenance: Mapping
    structure: Mapping
    aux: Mapping = field(default_factory=dict)
