"""Pipeline orchestration: chain reductions, run oracles, emit gap reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .. import oracle, reductions
from ..errors import CapacityError, DomainError, ReconfigError
from ..problems.csp import csp_value
from ..problems.instances import ProblemKind, ReconfigInstance, verify_sequence
from ..problems.ncl import ncl_value
from ..problems.sat import cnf_value
from ..reductions.artifacts import ReductionArtifact
from ..reductions.degree_reduction import DegreeReductionParams
from . import worked_examples
from .generators import generate_instance
from .report import GapReport, SoundnessRecord, StageReport

# tag -> (source kind, target kind)
CHAIN_TYPES = {
    "qcsp_to_eksat": (ProblemKind.CSP, ProblemKind.SAT),
    "eksat_to_e3sat": (ProblemKind.SAT, ProblemKind.SAT),
    "e3sat_to_bcsp3": (ProblemKind.SAT, ProblemKind.CSP),
    "degree_reduce": (ProblemKind.CSP, ProblemKind.CSP),
    "e3sat_to_ncl": (ProblemKind.SAT, ProblemKind.NCL),
    "e3sat_to_2sat": (ProblemKind.SAT, ProblemKind.SAT),
    "ncl_to_isr": (ProblemKind.NCL, ProblemKind.ISR),
    "isr_to_vcr": (ProblemKind.ISR, ProblemKind.VCR),
    "isr_to_clique": (ProblemKind.ISR, ProblemKind.CLIQUE),
}

_MAPPERS = {
    "qcsp_to_eksat": reductions.map_sequence_qcsp_to_eksat,
    "eksat_to_e3sat": reductions.map_sequence_eksat_to_e3sat,
    "e3sat_to_bcsp3": reductions.map_sequence_e3sat_to_bcsp3,
    "degree_reduce": reductions.map_sequence_degree_reduce,
    "e3sat_to_ncl": reductions.map_sequence_e3sat_to_ncl,
    "e3sat_to_2sat": reductions.map_sequence_e3sat_to_2sat,
    "ncl_to_isr": reductions.map_sequence_ncl_to_isr,
    "isr_to_vcr": reductions.map_sequence_isr_to_vcr,
    "isr_to_clique": reductions.map_sequence_isr_to_clique,
}


@dataclass(frozen=True)
class PipelineConfig:
    chain: tuple = ()
    seed: int = 0
    epsilon: Fraction = Fraction(1, 3)
    oracle: oracle.OracleConfig = field(default_factory=oracle.OracleConfig)
    source_kind: str = "qcsp"
    source_params: dict = field(default_factory=dict)
    degree_params: Optional[DegreeReductionParams] = None

    def __post_init__(self):
        tags = tuple(self.chain)
        object.__setattr__(self, "chain", tags)
        validate_chain(tags)
        if self.degree_params is None:
            object.__setattr__(self, "degree_params",
                               DegreeReductionParams(epsilon=Fraction(self.epsilon)))


def validate_chain(tags) -> None:
    prev_target = None
    for tag in tags:
        if tag not in CHAIN_TYPES:
            raise DomainError(f"unknown reduction tag {tag!r}")
        src_kind, tgt_kind = CHAIN_TYPES[tag]
        if prev_target is not None and src_kind is not prev_target:
            raise DomainError(f"chain breaks at {tag!r}: needs a {src_kind.value} source")
        prev_target = tgt_kind


def apply_reduction(tag: str, instance: ReconfigInstance,
                    degree_params: Optional[DegreeReductionParams] = None) -> ReductionArtifact:
    if tag == "qcsp_to_eksat":
        return reductions.qcsp_to_eksat(instance)
    if tag == "eksat_to_e3sat":
        return reductions.eksat_to_e3sat(instance)
    if tag == "e3sat_to_bcsp3":
        return reductions.e3sat_to_bcsp3(instance)
    if tag == "degree_reduce":
        return reductions.degree_reduce(instance, degree_params or DegreeReductionParams())
    if tag == "e3sat_to_ncl":
        return reductions.e3sat_to_ncl(instance)
    if tag == "e3sat_to_2sat":
        return reductions.e3sat_to_2sat(instance)
    if tag == "ncl_to_isr":
        return reductions.ncl_to_isr(instance)
    if tag == "isr_to_vcr":
        return reductions.isr_to_vcr(instance)
    if tag == "isr_to_clique":
        return reductions.isr_to_clique(instance)
    raise DomainError(f"unknown reduction tag {tag!r}")


def _recount_structure(artifact: ReductionArtifact) -> Optional[bool]:
    """Recompute the headline counts from the emitted instance."""
    s = artifact.structure
    tgt = artifact.target
    tag = artifact.tag
    try:
        if tag in ("qcsp_to_eksat", "eksat_to_e3sat", "e3sat_to_2sat"):
            f = tgt.payload
            ok = s["clauses"] == f.num_clauses and s["variables"] == len(f.variables)
            ok = ok and s["occurrence_bound"] == f.occurrence_bound
            if tag == "qcsp_to_eksat" and f.clauses:
                ok = ok and s["clause_width"] == f.uniform_width
                ok = ok and s["clauses"] <= s["clause_bound"]
                ok = ok and s["occurrence_bound"] <= s["occurrence_bound_limit"]
            if tag == "eksat_to_e3sat":
                ok = ok and f.uniform_width == 3 and s["clauses"] == s["expected_clauses"]
                ok = ok and s["occurrence_bound"] <= s["occurrence_bound_limit"]
            if tag == "e3sat_to_2sat":
                ok = ok and f.max_width() <= 2 and s["clauses"] == s["expected_clauses"]
                ok = ok and s["occurrence_bound"] <= s["occurrence_bound_limit"]
                ok = ok and cnf_value(f, tgt.start) == Fraction(7, 10)
                ok = ok and cnf_value(f, tgt.target) == Fraction(7, 10)
            return ok
        if tag == "e3sat_to_bcsp3":
            g = tgt.payload
            return (s["vertices"] == len(g.vertices) == s["expected_vertices"]
                    and s["edges"] == len(g.edges) == s["expected_edges"]
                    and g.max_degree() <= s["max_degree_limit"])
        if tag == "degree_reduce":
            g = tgt.payload
            ok = s["vertices"] == len(g.vertices) and s["edges"] == len(g.edges)
            if len(artifact.aux["reduced"]) == len(artifact.source.payload.vertices):
                ok = ok and s["vertices"] == s["expected_vertices_full"]
            return ok
        if tag == "ncl_to_isr":
            g = tgt.payload
            n_and, n_or = artifact.aux["n_and"], artifact.aux["n_or"]
            return (s["vertices"] == len(g.vertices) == 3 * n_and + 6 * n_or
                    and s["token_edges"] == Fraction(3, 2) * (n_and + n_or)
                    and s["token_triangles"] == n_or
                    and s["alpha"] == s["expected_alpha"])
        if tag == "e3sat_to_ncl":
            g = tgt.payload
            return (s["nodes"] == len(g.nodes)
                    and s["choice_nodes"] == len(artifact.source.payload.variables)
                    and s["or_nodes"] == artifact.source.payload.num_clauses)
        if tag in ("isr_to_vcr", "isr_to_clique"):
            return s["vertices"] == len(tgt.payload.vertices)
    except (KeyError, DomainError):
        return False
    return None


def _oracle_value(instance: ReconfigInstance, cfg: oracle.OracleConfig):
    try:
        return oracle.solve(instance, cfg), None
    except CapacityError as exc:
        return None, str(exc)


def _stage_soundness(artifact: ReductionArtifact, v_src, v_tgt,
                     tgt_result, cfg) -> tuple:
    """(SoundnessRecord | None, lemma factor string | None, notes)."""
    tag = artifact.tag
    notes = []
    if tag == "qcsp_to_eksat":
        graph = artifact.source.payload
        if not graph.has_full_domains():
            notes.append("soundness not applicable: source has restricted domains")
            return None, None, notes
        m = artifact.structure["clauses"]
        w, q = len(graph.alphabet), graph.q
        factor = Fraction(1, (w ** q) * (2 ** (q * w)))
        if v_src is None or v_tgt is None or m == 0:
            return None, f"1/(W^q 2^(qW)) = {factor}", notes
        rhs = 1 - (1 - v_src) * Fraction(len(graph.edges), m)
        return (SoundnessRecord("v_eksat <= 1-(1-v_qcsp)|E|/m", v_tgt, rhs, "<=", v_tgt <= rhs),
                f"1/(W^q 2^(qW)) = {factor}", notes)
    if tag == "eksat_to_e3sat":
        k = artifact.aux["k"]
        factor = Fraction(1, k - 2)
        if v_src is None or v_tgt is None:
            return None, f"1/(k-2) = {factor}", notes
        rhs = 1 - (1 - v_src) * factor
        return (SoundnessRecord("v_e3sat <= 1-(1-v_eksat)/(k-2)", v_tgt, rhs, "<=", v_tgt <= rhs),
                f"1/(k-2) = {factor}", notes)
    if tag == "e3sat_to_bcsp3":
        if v_src is None or v_tgt is None:
            return None, "1/3", notes
        rhs = 1 - (1 - v_src) * Fraction(1, 3)
        return (SoundnessRecord("v_bcsp <= 1-(1-v_e3sat)/3", v_tgt, rhs, "<=", v_tgt <= rhs),
                "1/3", notes)
    if tag == "e3sat_to_2sat":
        if v_src is None or v_tgt is None:
            return None, "offset 7/10, slope 1/10", notes
        rhs = Fraction(7, 10) - (1 - v_src) * Fraction(1, 10)
        return (SoundnessRecord("v_2sat <= 7/10-(1-v_e3sat)/10", v_tgt, rhs, "<=", v_tgt <= rhs),
                "offset 7/10, slope 1/10", notes)
    if tag == "ncl_to_isr":
        if tgt_result is None or tgt_result.witness is None:
            return None, None, notes
        graph = artifact.source.payload
        alpha = artifact.target.opt_size
        min_size = min(len(s) for s in tgt_result.witness)
        projected = reductions.project_sequence(artifact, tgt_result.witness)
        min_node_value = min(ncl_value(graph, o) for o in projected)
        bound = Fraction(len(graph.nodes) - 2 * (alpha - min_size), len(graph.nodes))
        return (SoundnessRecord("projected node value >= (|V|-2(alpha-min|I|))/|V|",
                                bound, min_node_value, "<=", bound <= min_node_value),
                None, notes)
    if tag == "isr_to_vcr":
        if v_src is None or v_tgt is None:
            return None, None, notes
        graph = artifact.source.payload
        a = artifact.aux["alpha"]
        b = len(graph.vertices) - a
        rhs = Fraction(len(graph.vertices) - (a - 1) * v_src, b + 1)
        return (SoundnessRecord("minmax_vcr == (|V|-(alpha-1) v_isr)/(beta+1)",
                                v_tgt, rhs, "==", v_tgt == rhs), None, notes)
    if tag == "isr_to_clique":
        if v_src is None or v_tgt is None:
            return None, None, notes
        return (SoundnessRecord("maxmin_clique == maxmin_isr", v_tgt, v_src, "==",
                                v_tgt == v_src), None, notes)
    if tag == "degree_reduce":
        if tgt_result is not None and tgt_result.witness is not None:
            projected = reductions.project_sequence(artifact, tgt_result.witness)
            ok = _stepwise_ok(artifact.source, projected)
            notes.append(f"plurality projection of the target witness is a valid"
                         f" source sequence: {ok}")
            if not ok:
                return (SoundnessRecord("projection stepwise valid", Fraction(1),
                                        Fraction(0), "<=", False), None, notes)
        return None, None, notes
    return None, None, notes


def _stepwise_ok(instance: ReconfigInstance, seq) -> bool:
    from ..problems.instances import adjacent
    for i in range(1, len(seq)):
        if seq[i - 1] == seq[i]:
            continue
        try:
            if not adjacent(instance.kind, seq[i - 1], seq[i]):
                return False
        except DomainError:
            return False
    return True


def _expected_target_value(tag: str) -> Fraction:
    return Fraction(7, 10) if tag == "e3sat_to_2sat" else Fraction(1)


def run_stage(artifact: ReductionArtifact, cfg: PipelineConfig,
              src_result=None, src_skip=None) -> tuple:
    """Build the StageReport for one artifact; returns (report, target oracle)."""
    rep = StageReport(tag=artifact.tag, structure=dict(artifact.structure))
    rep.structure_ok = _recount_structure(artifact)
    if src_result is None and src_skip is None:
        src_result, src_skip = _oracle_value(artifact.source, cfg.oracle)
    tgt_result, tgt_skip = _oracle_value(artifact.target, cfg.oracle)
    rep.source_value = None if src_result is None else src_result.value
    rep.target_value = None if tgt_result is None else tgt_result.value
    skips = [s for s in (src_skip, tgt_skip) if s]
    rep.oracle_skipped = "; ".join(skips) if skips else None

    expected = _expected_target_value(artifact.tag)
    rep.expected_target_value = expected
    if src_result is not None and src_result.value >= 1 and src_result.witness:
        rep.completeness_applicable = True
        try:
            mapped = _MAPPERS[artifact.tag](artifact, src_result.witness)
            check = verify_sequence(artifact.target, mapped, threshold=expected)
            rep.completeness_ok = check.passed
            rep.mapped_length = len(mapped)
        except ReconfigError as exc:
            rep.completeness_ok = False
            rep.notes.append(f"mapper failed: {exc}")

    rep.soundness, rep.lemma_factor, notes = _stage_soundness(
        artifact, rep.source_value, rep.target_value, tgt_result, cfg)
    rep.notes.extend(notes)
    rep.provenance_sample = [f"{k!r} <- {v!r}" for k, v in list(artifact.provenance.items())[:3]]
    return rep, (tgt_result, tgt_skip)


def run_pipeline(cfg: PipelineConfig,
                 instance: Optional[ReconfigInstance] = None) -> GapReport:
    """Generate (or accept) a source instance and run the configured chain."""
    if instance is None:
        instance = generate_instance(cfg.source_kind, cfg.source_params, seed=cfg.seed)
    report = GapReport(source_kind=instance.kind.value, seed=cfg.seed, chain=cfg.chain)
    current = instance
    carried = None
    res, skip = _oracle_value(current, cfg.oracle)
    if res is not None:
        report.source_value = res.value
    else:
        report.notes.append(f"source oracle skipped: {skip}")
    carried = (res, skip)
    for tag in cfg.chain:
        artifact = apply_reduction(tag, current, cfg.degree_params)
        stage_rep, carried = run_stage(artifact, cfg, src_result=carried[0],
                                       src_skip=carried[1])
        report.stages.append(stage_rep)
        current = artifact.target
    return report


@dataclass
class AuditResult:
    name: str
    passed: bool
    details: str = ""


def verify_example_suite() -> list:
    """Re-derive the bundled worked examples; any mismatch fails with a diff."""
    out = []

    expected_rows = [
        ("FFF", 1), ("TFF", 1), ("FTF", 2), ("TTF", 2),
        ("FFT", 3), ("TFT", 3), ("FTT", 3), ("TTT", 3),
    ]
    diffs = []
    for text, want in expected_rows:
        bits = tuple(ch == "T" for ch in text)
        got = reductions.enc(bits)
        if got != want:
            diffs.append(f"{text}: expected {want}, got {got}")
    out.append(AuditResult("string encoding table (8 rows, W=3)", not diffs, "; ".join(diffs)))

    from ..problems.sat import CnfFormula, satisfied_clause_count
    lits = (("l1", True), ("l2", True), ("l3", True))
    block = reductions.ten_clause_block(*lits, "zz")
    formula = CnfFormula(("l1", "l2", "l3", "zz"), block)
    expected_counts = {(False, False, False): (6, 4), (True, False, False): (7, 6),
                       (True, True, False): (7, 7), (True, True, True): (6, 7)}
    diffs = []
    for (v1, v2, v3), (n_f, n_t) in expected_counts.items():
        for z, want in ((False, n_f), (True, n_t)):
            sigma = {"l1": v1, "l2": v2, "l3": v3, "zz": z}
            got = satisfied_clause_count(formula, sigma)
            if got != want:
                diffs.append(f"{(v1, v2, v3, z)}: expected {want}, got {got}")
    out.append(AuditResult("ten-clause gadget tally (8 columns)", not diffs, "; ".join(diffs)))

    src = worked_examples.bottleneck_bcsp_instance(2)
    res = oracle.maxmin_value(src)
    ok_src = res.value == Fraction(4, 5)
    details = f"source maxmin {res.value}"
    art = worked_examples.reduced_bottleneck_instance(2)
    red = oracle.maxmin_value(art.target)
    ok_red = red.value == 1
    details += f"; reduced maxmin {red.value}"
    schedule = worked_examples.cheating_schedule(art)
    check = verify_sequence(art.target, schedule, threshold=Fraction(1))
    details += f"; cheating schedule passed={check.passed}"
    out.append(AuditResult("bottleneck demo: blocked source, perfect reduced transformation",
                           ok_src and ok_red and check.passed, details))

    inst = worked_examples.cnf_network_instance()
    art = reductions.e3sat_to_ncl(inst)
    start_value = ncl_value(art.target.payload, art.target.start)
    witness = [inst.start, dict(inst.start, x=False)]
    mapped = reductions.map_sequence_e3sat_to_ncl(art, witness)
    check = verify_sequence(art.target, mapped, threshold=Fraction(1))
    out.append(AuditResult(
        "constraint-logic network demo: orientation value 1 and flip schedule",
        start_value == 1 and check.passed,
        f"start value {start_value}; schedule passed={check.passed}"))
    return out
