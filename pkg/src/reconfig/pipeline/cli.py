"""Command line interface.

Subcommands: reduce, oracle, verify, suite, gen.  Exit codes: 0 when every
verdict passes, 1 when any verdict fails, 2 on capacity or domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .. import oracle as oracle_mod
from ..errors import ReconfigError
from ..problems.instances import verify_sequence
from . import formats
from .generators import generate_instance
from .runner import (PipelineConfig, apply_reduction, run_pipeline,
                     validate_chain, verify_example_suite)
from ..reductions.degree_reduction import DegreeReductionParams


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="reconfig",
                                description="reconfiguration reductions and exact oracles")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("reduce", help="apply a chain of reductions to an instance file")
    r.add_argument("--chain", required=True, help="comma-separated reduction tags")
    r.add_argument("--in", dest="infile", required=True)
    r.add_argument("--out", dest="outfile", required=True)
    r.add_argument("--epsilon", default="1/3", help="degree-reduction epsilon as p/q")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--report", help="optional JSON gap-report path")
    r.add_argument("--state-cap", type=int, default=10 ** 6)

    o = sub.add_parser("oracle", help="exact maxmin (minmax for VCR) value of an instance")
    o.add_argument("--in", dest="infile", required=True)
    o.add_argument("--state-cap", type=int, default=10 ** 6)
    o.add_argument("--witness", help="optional path for the witness sequence JSON")

    v = sub.add_parser("verify", help="verify a sequence file against an instance")
    v.add_argument("--in", dest="infile", required=True)
    v.add_argument("--sequence", required=True)
    v.add_argument("--threshold", help="required value as p/q")

    s = sub.add_parser("suite", help="verification suites")
    s.add_argument("--paper-examples", action="store_true",
                   help="re-derive the bundled worked examples")

    g = sub.add_parser("gen", help="generate a random instance")
    g.add_argument("--kind", required=True)
    g.add_argument("--params", default="{}", help="generator parameters as JSON")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", help="output path (default: stdout)")
    g.add_argument("--require-value-one", action="store_true")
    return p


def _cmd_reduce(args) -> int:
    tags = tuple(t.strip() for t in args.chain.split(",") if t.strip())
    validate_chain(tags)
    instance = formats.read_instance(args.infile)
    cfg = PipelineConfig(chain=tags, seed=args.seed, epsilon=Fraction(args.epsilon),
                         oracle=oracle_mod.OracleConfig(state_cap=args.state_cap))
    report = run_pipeline(cfg, instance=instance)
    current = instance
    for tag in tags:
        current = apply_reduction(tag, current, cfg.degree_params).target
    formats.write_instance(current, args.outfile)
    print(report.to_text())
    if args.report:
        formats.dump_json(report.to_json(), args.report)
    return 0 if report.passed else 1


def _cmd_oracle(args) -> int:
    instance = formats.read_instance(args.infile)
    result = oracle_mod.solve(instance, oracle_mod.OracleConfig(state_cap=args.state_cap))
    doc = {
        "value": formats.fraction_to_str(result.value),
        "explored_states": result.explored_states,
        "witness_length": None if result.witness is None else len(result.witness),
    }
    print(json.dumps(doc, indent=2, sort_keys=True))
    if args.witness and result.witness is not None:
        formats.dump_json(formats.sequence_to_json(instance, result.witness), args.witness)
    return 0


def _cmd_verify(args) -> int:
    instance = formats.read_instance(args.infile)
    seq = formats.sequence_from_json(instance, formats.load_json(args.sequence))
    threshold = Fraction(args.threshold) if args.threshold else None
    rep = verify_sequence(instance, seq, threshold=threshold)
    doc = {
        "passed": rep.passed,
        "endpoints_match": rep.endpoints_match,
        "valid_steps": rep.valid_steps,
        "first_violation_index": rep.first_violation_index,
        "invalid_state_index": rep.invalid_state_index,
        "value": None if rep.value is None else formats.fraction_to_str(rep.value),
        "objective": rep.objective,
        "threshold_met": rep.threshold_met,
    }
    print(json.dumps(doc, indent=2, sort_keys=True))
    return 0 if rep.passed else 1


def _cmd_suite(args) -> int:
    if not args.paper_examples:
        print("nothing to do; pass --paper-examples", file=sys.stderr)
        return 2
    results = verify_example_suite()
    ok = True
    for r in results:
        ok = ok and r.passed
        line = f"[{'PASS' if r.passed else 'FAIL'}] {r.name}"
        if r.details:
            line += f" :: {r.details}"
        print(line)
    return 0 if ok else 1


def _cmd_gen(args) -> int:
    params = json.loads(args.params)
    instance = generate_instance(args.kind, params, seed=args.seed,
                                 require_value_one=args.require_value_one)
    doc = formats.instance_to_json(instance)
    if args.out:
        formats.dump_json(doc, args.out)
    else:
        print(json.dumps(doc, indent=2, sort_keys=True))
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "reduce": _cmd_reduce,
        "oracle": _cmd_oracle,
        "verify": _cmd_verify,
        "suite": _cmd_suite,
        "gen": _cmd_gen,
    }
    try:
        return handlers[args.command](args)
    except ReconfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
