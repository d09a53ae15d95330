"""Problem representations, value functions, adjacency, sequence verification."""

from .csp import Alphabet, ConstraintGraph, check_assignment, csp_value, satisfied_edge_count
from .graphs import (SimpleGraph, VertexSubset, complement, is_clique,
                     is_independent_set, is_vertex_cover, set_sequence_value)
from .instances import (ProblemKind, ReconfigInstance, SequenceReport, adjacent,
                        check_state, state_value, verify_sequence)
from .ncl import (LinkColor, NclGraph, NodeKind, Orientation, check_orientation,
                  incoming_weight, ncl_value, node_satisfied, orientation_from_heads,
                  satisfied_node_count)
from .sat import (CnfFormula, Literal, check_truth_assignment, clause_satisfied,
                  cnf_value, literal_true, neg, satisfied_clause_count)

__all__ = [
    "Alphabet", "ConstraintGraph", "check_assignment", "csp_value", "satisfied_edge_count",
    "SimpleGraph", "VertexSubset", "complement", "is_clique", "is_independent_set",
    "is_vertex_cover", "set_sequence_value",
    "ProblemKind", "ReconfigInstance", "SequenceReport", "adjacent", "check_state",
    "state_value", "verify_sequence",
    "LinkColor", "NclGraph", "NodeKind", "Orientation", "check_orientation",
    "incoming_weight", "ncl_value", "node_satisfied", "orientation_from_heads",
    "satisfied_node_count",
    "CnfFormula", "Literal", "check_truth_assignment", "clause_satisfied", "cnf_value",
    "literal_true", "neg", "satisfied_clause_count",
]
