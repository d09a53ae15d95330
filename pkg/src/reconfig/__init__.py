"""Reconfiguration problems, gap-preserving reductions, and exact oracles.

The package is organized around five parts:

  problems   problem representations, exact value functions, adjacency,
             and sequence verification
  oracle     exhaustive maxmin / minmax values with witnesses, and exact
             alpha / beta / omega
  reductions the instance transformations with forward sequence mappers
             and backward state projectors
  spectral   regular graphs, adjacency spectra, expander certificates,
             mixing checks
  pipeline   file formats, instance generators, chain orchestration, CLI
"""

from . import oracle, problems, reductions, spectral
from .errors import (CapacityError, CertificationError, DomainError, GenerationError,
                     InvalidSequenceError, ReconfigError)

__all__ = [
    "oracle", "problems", "reductions", "spectral",
    "CapacityError", "CertificationError", "DomainError", "GenerationError",
    "InvalidSequenceError", "ReconfigError",
]

__version__ = "0.1.0"
