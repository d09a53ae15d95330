"""Instance and sequence file formats.

One JSON document per instance: kind tag, payload, start, target.  JSON
numbers are integers only; rationals elsewhere in reports are serialized as
"p/q" strings.  States are serialized positionally (aligned with the
payload's vertex/variable/link order) so ids keep their types round-trip.

CNF instances can additionally be exported in a DIMACS-style text form with
the start and target assignments appended as comment lines.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from ..errors import DomainError
from ..problems.csp import Alphabet, ConstraintGraph
from ..problems.graphs import SimpleGraph
from ..problems.instances import ProblemKind, ReconfigInstance
from ..problems.ncl import LinkColor, NclGraph, NodeKind
from ..problems.sat import CnfFormula

FORMAT_NAME = "reconfig-instance"
SEQUENCE_FORMAT_NAME = "reconfig-sequence"


def fraction_to_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def fraction_from_str(s: str) -> Fraction:
    return Fraction(s)


def _check_id(x):
    if not isinstance(x, (str, int)) or isinstance(x, bool):
        raise DomainError(f"identifier {x!r} must be a string or integer for serialization")
    return x


def _state_to_json(instance_kind: ProblemKind, payload, state):
    if instance_kind in (ProblemKind.CSP,):
        return [state[v] for v in payload.vertices]
    if instance_kind is ProblemKind.SAT:
        return [state[v] for v in payload.variables]
    if instance_kind is ProblemKind.NCL:
        out = []
        for i, (u, v, _) in enumerate(payload.links):
            out.append(1 if state[i] == v else 0)
        return out
    order = {v: i for i, v in enumerate(payload.vertices)}
    return sorted(state, key=lambda v: order[v])


def _state_from_json(instance_kind: ProblemKind, payload, data):
    if instance_kind is ProblemKind.CSP:
        return {v: s for v, s in zip(payload.vertices, data)}
    if instance_kind is ProblemKind.SAT:
        return {v: bool(s) for v, s in zip(payload.variables, data)}
    if instance_kind is ProblemKind.NCL:
        return tuple(payload.links[i][1] if flag else payload.links[i][0]
                     for i, flag in enumerate(data))
    return frozenset(data)


def _payload_to_json(kind: ProblemKind, payload):
    if kind is ProblemKind.CSP:
        g: ConstraintGraph = payload
        doc = {
            "q": g.q,
            "vertices": [_check_id(v) for v in g.vertices],
            "alphabet": [_check_id(s) for s in g.alphabet.symbols],
            "edges": [[_check_id(v) for v in e] for e in g.edges],
            "constraints": [sorted([list(t) for t in pi], key=repr) for pi in g.constraints],
        }
        if g.domains is not None:
            doc["domains"] = [list(g.domain(v)) for v in g.vertices]
        return doc
    if kind is ProblemKind.SAT:
        f: CnfFormula = payload
        return {
            "variables": [_check_id(v) for v in f.variables],
            "clauses": [[[_check_id(v), pol] for v, pol in c] for c in f.clauses],
        }
    if kind is ProblemKind.NCL:
        g: NclGraph = payload
        return {
            "nodes": [[_check_id(n), k.value] for n, k in g.nodes],
            "links": [[_check_id(u), _check_id(v), c.value] for u, v, c in g.links],
        }
    g: SimpleGraph = payload
    return {
        "vertices": [_check_id(v) for v in g.vertices],
        "edges": [[_check_id(u), _check_id(v)] for u, v in g.edges],
    }


def _payload_from_json(kind: ProblemKind, doc):
    if kind is ProblemKind.CSP:
        vertices = tuple(doc["vertices"])
        domains = None
        if "domains" in doc:
            domains = {v: tuple(d) for v, d in zip(vertices, doc["domains"])}
        return ConstraintGraph(
            vertices,
            tuple(tuple(e) for e in doc["edges"]),
            Alphabet(tuple(doc["alphabet"])),
            tuple(frozenset(tuple(t) for t in pi) for pi in doc["constraints"]),
            doc["q"],
            domains,
        )
    if kind is ProblemKind.SAT:
        return CnfFormula(
            tuple(doc["variables"]),
            tuple(tuple((v, bool(pol)) for v, pol in c) for c in doc["clauses"]),
        )
    if kind is ProblemKind.NCL:
        return NclGraph(
            tuple((n, NodeKind(k)) for n, k in doc["nodes"]),
            tuple((u, v, LinkColor(c)) for u, v, c in doc["links"]),
        )
    return SimpleGraph(tuple(doc["vertices"]), tuple(tuple(e) for e in doc["edges"]))


def instance_to_json(instance: ReconfigInstance) -> dict:
    doc = {
        "format": FORMAT_NAME,
        "version": 1,
        "kind": instance.kind.value,
        "payload": _payload_to_json(instance.kind, instance.payload),
        "start": _state_to_json(instance.kind, instance.payload, instance.start),
        "target": _state_to_json(instance.kind, instance.payload, instance.target),
    }
    if instance.opt_size is not None:
        doc["opt_size"] = instance.opt_size
    return doc


def instance_from_json(doc: dict) -> ReconfigInstance:
    if doc.get("format") != FORMAT_NAME:
        raise DomainError("not a reconfig instance document")
    kind = ProblemKind(doc["kind"])
    payload = _payload_from_json(kind, doc["payload"])
    return ReconfigInstance(
        kind, payload,
        _state_from_json(kind, payload, doc["start"]),
        _state_from_json(kind, payload, doc["target"]),
        doc.get("opt_size"),
    )


def sequence_to_json(instance: ReconfigInstance, seq) -> dict:
    return {
        "format": SEQUENCE_FORMAT_NAME,
        "version": 1,
        "kind": instance.kind.value,
        "states": [_state_to_json(instance.kind, instance.payload, s) for s in seq],
    }


def sequence_from_json(instance: ReconfigInstance, doc: dict) -> list:
    if doc.get("format") != SEQUENCE_FORMAT_NAME:
        raise DomainError("not a reconfig sequence document")
    if doc.get("kind") != instance.kind.value:
        raise DomainError("sequence kind does not match the instance")
    return [_state_from_json(instance.kind, instance.payload, s) for s in doc["states"]]


def dump_json(doc: dict, path) -> None:
    Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def load_json(path) -> dict:
    return json.loads(Path(path).read_text(encoding="utf-8"))


def write_instance(instance: ReconfigInstance, path) -> None:
    dump_json(instance_to_json(instance), path)


def read_instance(path) -> ReconfigInstance:
    return instance_from_json(load_json(path))


def to_dimacs(instance: ReconfigInstance) -> str:
    """DIMACS-style CNF text with name map and endpoint assignment comments."""
    if instance.kind is not ProblemKind.SAT:
        raise DomainError("DIMACS export applies to SAT instances only")
    f: CnfFormula = instance.payload
    index = {v: i + 1 for i, v in enumerate(f.variables)}
    lines = []
    for v, i in index.items():
        name = str(v)
        if any(ch.isspace() for ch in name):
            raise DomainError(f"variable name {name!r} contains whitespace")
        lines.append(f"c name {i} {name}")
    lines.append(f"p cnf {len(f.variables)} {len(f.clauses)}")
    for c in f.clauses:
        lines.append(" ".join(str(index[v] if pol else -index[v]) for v, pol in c) + " 0")
    for label, state in (("start", instance.start), ("target", instance.target)):
        lits = " ".join(str(index[v] if state[v] else -index[v]) for v in f.variables)
        lines.append(f"c {label} {lits}")
    return "\n".join(lines) + "\n"


def from_dimacs(text: str) -> ReconfigInstance:
    names = {}
    clauses = []
    assignments = {}
    num_vars = 0
    for raw in text.splitlines():
        s = raw.strip()
        if not s:
            continue
        if s.startswith("c name "):
            parts = s.split(maxsplit=3)
            names[int(parts[2])] = parts[3]
            continue
        if s.startswith("c start ") or s.startswith("c target "):
            parts = s.split()
            assignments[parts[1]] = [int(x) for x in parts[2:]]
            continue
        if s.startswith("c"):
            continue
        if s.startswith("p"):
            parts = s.split()
            if parts[1] != "cnf":
                raise DomainError("only 'p cnf' headers are supported")
            num_vars = int(parts[2])
            continue
        lits = [int(x) for x in s.split() if x != "0"]
        if lits:
            clauses.append(lits)
    if num_vars == 0 and clauses:
        num_vars = max(abs(l) for c in clauses for l in c)
    variables = tuple(names.get(i, f"x{i}") for i in range(1, num_vars + 1))
    formula = CnfFormula(
        variables,
        tuple(tuple((variables[abs(l) - 1], l > 0) for l in c) for c in clauses),
    )
    if "start" not in assignments or "target" not in assignments:
        raise DomainError("DIMACS import needs 'c start' and 'c target' lines")

    def decode(lits):
        return {variables[abs(l) - 1]: l > 0 for l in lits}

    return ReconfigInstance(ProblemKind.SAT, formula,
                            decode(assignments["start"]), decode(assignments["target"]))
