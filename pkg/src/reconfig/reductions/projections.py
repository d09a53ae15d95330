"""Backward state projectors, one per reduction tag.

Projection turns any target-side sequence into a source-side sequence whose
consecutive states are adjacent or equal; values are not preserved and are
not checked here.
"""

from __future__ import annotations

from .artifacts import ReductionArtifact
from .clause_chain import TAG as TAG_EKSAT_E3SAT
from .clause_chain import project_sequence_eksat_to_e3sat
from .complement import TAG_CLIQUE, TAG_VCR, project_sequence_isr_to_clique, project_sequence_isr_to_vcr
from .degree_reduction import TAG as TAG_DEGREE
from .degree_reduction import project_sequence_degree_reduce
from .ncl_network import TAG as TAG_NCL
from .ncl_network import project_sequence_e3sat_to_ncl
from .place_encoding import TAG as TAG_BCSP
from .place_encoding import project_sequence_e3sat_to_bcsp3
from .sat_encoding import TAG as TAG_EKSAT
from .sat_encoding import project_sequence_qcsp_to_eksat
from .token_gadgets import TAG as TAG_ISR
from .token_gadgets import project_sequence_ncl_to_isr
from .two_sat import TAG as TAG_2SAT
from .two_sat import project_sequence_e3sat_to_2sat
from ..errors import DomainError

_PROJECTORS = {
    TAG_EKSAT: project_sequence_qcsp_to_eksat,
    TAG_EKSAT_E3SAT: project_sequence_eksat_to_e3sat,
    TAG_BCSP: project_sequence_e3sat_to_bcsp3,
    TAG_DEGREE: project_sequence_degree_reduce,
    TAG_NCL: project_sequence_e3sat_to_ncl,
    TAG_ISR: project_sequence_ncl_to_isr,
    TAG_VCR: project_sequence_isr_to_vcr,
    TAG_CLIQUE: project_sequence_isr_to_clique,
    TAG_2SAT: project_sequence_e3sat_to_2sat,
}


def project_sequence(artifact: ReductionArtifact, target_seq) -> list:
    try:
        proj = _PROJECTORS[artifact.tag]
    except KeyError:
        raise DomainError(f"no projector for reduction tag {artifact.tag!r}") from None
    return proj(artifact, target_seq)
