"""Gap-preserving instance reductions with forward mappers and projectors."""

from .artifacts import ReductionArtifact
from .clause_chain import eksat_to_e3sat, map_sequence_eksat_to_e3sat
from .complement import (isr_to_clique, isr_to_vcr, map_sequence_isr_to_clique,
                         map_sequence_isr_to_vcr)
from .degree_reduction import (DegreeReductionParams, conflicting_cloud_subsets,
                               degree_reduce, map_sequence_degree_reduce, plurality_decode)
from .encoding import enc, enc_path, enc_preimages, lex_smallest_preimage
from .ncl_network import e3sat_to_ncl, map_sequence_e3sat_to_ncl, orientation_for
from .place_encoding import e3sat_to_bcsp3, map_sequence_e3sat_to_bcsp3
from .projections import project_sequence
from .sat_encoding import decode_assignment, map_sequence_qcsp_to_eksat, qcsp_to_eksat
from .token_gadgets import independent_set_for, map_sequence_ncl_to_isr, ncl_to_isr
from .two_sat import e3sat_to_2sat, map_sequence_e3sat_to_2sat, ten_clause_block

__all__ = [
    "ReductionArtifact",
    "enc", "enc_path", "enc_preimages", "lex_smallest_preimage",
    "qcsp_to_eksat", "map_sequence_qcsp_to_eksat", "decode_assignment",
    "eksat_to_e3sat", "map_sequence_eksat_to_e3sat",
    "e3sat_to_bcsp3", "map_sequence_e3sat_to_bcsp3",
    "DegreeReductionParams", "degree_reduce", "map_sequence_degree_reduce",
    "plurality_decode", "conflicting_cloud_subsets",
    "e3sat_to_ncl", "map_sequence_e3sat_to_ncl", "orientation_for",
    "ncl_to_isr", "map_sequence_ncl_to_isr", "independent_set_for",
    "isr_to_vcr", "map_sequence_isr_to_vcr",
    "isr_to_clique", "map_sequence_isr_to_clique",
    "e3sat_to_2sat", "map_sequence_e3sat_to_2sat", "ten_clause_block",
    "project_sequence",
]
