"""Gap reports: per-stage verdicts with exact rational bookkeeping."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .formats import fraction_to_str


def _frac(x) -> Optional[str]:
    return None if x is None else fraction_to_str(x)


@dataclass
class SoundnessRecord:
    """One quantified check: holds iff lhs <= rhs (or == for equalities)."""

    name: str
    lhs: Fraction
    rhs: Fraction
    relation: str  # "<=" or "=="
    holds: bool

    @property
    def slack(self) -> Fraction:
        return self.rhs - self.lhs

    def to_json(self) -> dict:
        return {"name": self.name, "lhs": _frac(self.lhs), "rhs": _frac(self.rhs),
                "relation": self.relation, "slack": _frac(self.slack), "holds": self.holds}


@dataclass
class StageReport:
    tag: str
    structure: dict = field(default_factory=dict)
    structure_ok: Optional[bool] = None
    source_value: Optional[Fraction] = None
    target_value: Optional[Fraction] = None
    oracle_skipped: Optional[str] = None
    completeness_applicable: bool = False
    completeness_ok: Optional[bool] = None
    mapped_length: Optional[int] = None
    expected_target_value: Optional[Fraction] = None
    soundness: Optional[SoundnessRecord] = None
    lemma_factor: Optional[str] = None
    provenance_sample: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        if self.structure_ok is False:
            return False
        if self.completeness_applicable and self.completeness_ok is False:
            return False
        if self.soundness is not None and not self.soundness.holds:
            return False
        return True

    def to_json(self) -> dict:
        return {
            "tag": self.tag,
            "structure": dict(self.structure),
            "structure_ok": self.structure_ok,
            "source_value": _frac(self.source_value),
            "target_value": _frac(self.target_value),
            "oracle_skipped": self.oracle_skipped,
            "completeness_applicable": self.completeness_applicable,
            "completeness_ok": self.completeness_ok,
            "mapped_length": self.mapped_length,
            "expected_target_value": _frac(self.expected_target_value),
            "soundness": None if self.soundness is None else self.soundness.to_json(),
            "lemma_factor": self.lemma_factor,
            "provenance_sample": list(self.provenance_sample),
            "notes": list(self.notes),
            "passed": self.passed,
        }


@dataclass
class GapReport:
    source_kind: str
    seed: Optional[int]
    chain: tuple
    source_value: Optional[Fraction] = None
    stages: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.stages)

    def to_json(self) -> dict:
        return {
            "format": "reconfig-gap-report",
            "version": 1,
            "source_kind": self.source_kind,
            "seed": self.seed,
            "chain": list(self.chain),
            "source_value": _frac(self.source_value),
            "stages": [s.to_json() for s in self.stages],
            "notes": list(self.notes),
            "passed": self.passed,
        }

    def to_text(self) -> str:
        lines = [f"gap report: chain={'->'.join(self.chain) or '(empty)'}"
                 f" source={self.source_kind} seed={self.seed}"]
        if self.source_value is not None:
            lines.append(f"  source oracle value: {fraction_to_str(self.source_value)}")
        for s in self.stages:
            head = "PASS" if s.passed else "FAIL"
            lines.append(f"[{head}] {s.tag}")
            vals = []
            if s.source_value is not None:
                vals.append(f"v_src={fraction_to_str(s.source_value)}")
            if s.target_value is not None:
                vals.append(f"v_tgt={fraction_to_str(s.target_value)}")
            if s.oracle_skipped:
                vals.append(f"oracle-skipped({s.oracle_skipped})")
            if vals:
                lines.append("  " + " ".join(vals))
            if s.completeness_applicable:
                lines.append(f"  completeness: {'ok' if s.completeness_ok else 'FAILED'}"
                             f" (mapped length {s.mapped_length})")
            if s.soundness is not None:
                r = s.soundness
                lines.append(f"  soundness {r.name}: {fraction_to_str(r.lhs)} {r.relation}"
                             f" {fraction_to_str(r.rhs)} slack={fraction_to_str(r.slack)}"
                             f" {'ok' if r.holds else 'VIOLATED'}")
            if s.lemma_factor:
                lines.append(f"  lemma factor: {s.lemma_factor}")
            for n in s.notes:
                lines.append(f"  note: {n}")
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)
