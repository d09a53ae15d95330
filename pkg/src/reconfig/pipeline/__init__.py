"""Instance generation, file formats, pipeline orchestration, and the CLI."""

from .formats import (from_dimacs, instance_from_json, instance_to_json, read_instance,
                      sequence_from_json, sequence_to_json, to_dimacs, write_instance)
from .generators import generate_instance
from .report import GapReport, SoundnessRecord, StageReport
from .runner import (CHAIN_TYPES, PipelineConfig, apply_reduction, run_pipeline,
                     validate_chain, verify_example_suite)

__all__ = [
    "from_dimacs", "instance_from_json", "instance_to_json", "read_instance",
    "sequence_from_json", "sequence_to_json", "to_dimacs", "write_instance",
    "generate_instance",
    "GapReport", "SoundnessRecord", "StageReport",
    "CHAIN_TYPES", "PipelineConfig", "apply_reduction", "run_pipeline",
    "validate_chain", "verify_example_suite",
]
