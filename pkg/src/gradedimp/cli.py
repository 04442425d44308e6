"""Command-line interface.

Exit codes: 0 ok, 1 usage or parse error, 2 precondition or failed
verification, 3 enumeration budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import serialize
from .chain import ChainError, make_chain, make_hedge, verify_chain, verify_hedge
from .context import closure, extract_base, is_complete, pseudo_intents, verify_pseudo_intent_system
from .errors import BudgetExceeded, GradedError, ParseError, PreconditionError
from .experiment import ExperimentConfig, rows_to_csv, run_experiment
from .lset import DEFAULT_BUDGET, Universe
from .oracle import Oracle, closure_law_violations, reduction_lemma_violations
from .reduce import is_irreducible, prepare, reduce_to_irreducible, replay_trace
from .theory import (
    entailment_degree,
    has_saturated_consequents,
    is_nonredundant,
    is_witnessed,
    least_model,
    saturate,
)

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_BUDGET = 0, 1, 2, 3


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _logic_overrides(args):
    chain = hedge = universe = None
    if args.chain or args.levels:
        chain = make_chain(args.chain or "lukasiewicz", args.levels or 5)
    if args.hedge:
        if chain is None:
            raise ParseError("--hedge needs --chain/--levels for text input")
        hedge = make_hedge(chain, args.hedge)
    if args.attributes:
        universe = Universe.of(n.strip() for n in args.attributes.replace(",", " ").split())
    return chain, hedge, universe


def _load_theory(args):
    chain, hedge, universe = _logic_overrides(args)
    return serialize.load_theory(args.theory, chain, hedge, universe)


def _emit(theory, output, out):
    text = serialize.dump_theory(theory, output)
    if output is None:
        out.write(text)
    else:
        print(f"wrote {output}", file=out)


def _write_trace(trace, path, out):
    Path(path).write_text(json.dumps(serialize.trace_to_json(trace), indent=2) + "\n")
    print(f"wrote {path}", file=out)


def _default_trace_path(output):
    if output is None:
        return None
    p = Path(output)
    return str(p.with_name(p.stem + ".trace.json"))


def _report_reduction(trace, out):
    final = trace.final
    print(f"steps: {len(trace)}", file=out)
    print(f"irreducible: {_yes(is_irreducible(final))}", file=out)
    nonred = is_nonredundant(final)
    print(f"non-redundant: {_yes(nonred)}", file=out)
    print(f"saturated: {_yes(has_saturated_consequents(final))}", file=out)
    print(f"witnessed: {_yes(nonred and is_witnessed(final))}", file=out)


def cmd_reduce(args, out) -> int:
    theory = _load_theory(args)
    if args.replay:
        trace = replay_trace(theory, serialize.steps_from_json(serialize.read_json(args.replay)))
    else:
        trace = reduce_to_irreducible(prepare(theory))
    _emit(trace.final, args.output, out)
    trace_path = args.trace or _default_trace_path(args.output)
    if trace_path:
        _write_trace(trace, trace_path, out)
    _report_reduction(trace, out)
    return EXIT_OK


def cmd_replay(args, out) -> int:
    args.replay = args.steps
    return cmd_reduce(args, out)


def cmd_saturate(args, out) -> int:
    theory = _load_theory(args)
    _emit(saturate(theory), args.output, out)
    return EXIT_OK


def cmd_entail(args, out) -> int:
    theory = _load_theory(args)
    imp = serialize.parse_implication(args.implication, theory.universe, theory.chain)
    degree = entailment_degree(theory, imp)
    print(str(theory.chain.fraction(degree)), file=out)
    return EXIT_OK


def cmd_base(args, out) -> int:
    ctx = serialize.load_context(args.context)
    base, trace = extract_base(ctx, args.budget)
    complete = is_complete(ctx, base, args.budget)
    witnessed = is_witnessed(base)
    system = pseudo_intents(ctx, base, check=False)
    verified = verify_pseudo_intent_system(ctx, system, args.budget)
    _emit(base, args.output, out)
    if args.trace:
        _write_trace(trace, args.trace, out)
    if args.csv:
        Path(args.csv).write_text(serialize.context_to_csv(ctx))
    U, c = ctx.universe, ctx.chain
    print(f"# base size: {len(base)} (reduction steps: {len(trace)})", file=out)
    print("# pseudo-intents:", file=out)
    for P in system:
        print(f"#   {U.format(P, c)}", file=out)
    label = "minimal" if ctx.hedge.kind == "globalization" else "non-redundant"
    print(f"# {label} base; complete: {_yes(complete)}; witnessed: {_yes(witnessed)}; "
          f"pseudo-intent system verified: {_yes(verified)}", file=out)
    return EXIT_OK if complete and witnessed and verified else EXIT_PRECONDITION


def _law_lines(title, report, out) -> bool:
    for check in report:
        status = "pass" if check.passed else f"FAIL witness={check.witness}"
        print(f"{title} {check.law}: {status}", file=out)
    return report.ok


def cmd_verify(args, out) -> int:
    path = Path(args.file)
    data = serialize.read_json(path) if path.suffix == ".json" else None
    ok = True
    if isinstance(data, dict) and "incidence" in data:
        ctx = serialize.context_from_json(data)
        ok &= _law_lines("chain", verify_chain(ctx.chain), out)
        ok &= _law_lines("hedge", verify_hedge(ctx.chain, ctx.hedge), out)
        bad = closure_law_violations(lambda B: closure(ctx, B), ctx.chain, ctx.hedge,
                                     len(ctx.universe), args.budget)
        print(f"closure laws of the context operator: {'pass' if not bad else bad}", file=out)
        return EXIT_OK if ok and not bad else EXIT_PRECONDITION
    args.theory = args.file
    theory = _load_theory(args)
    ok &= _law_lines("chain", verify_chain(theory.chain), out)
    ok &= _law_lines("hedge", verify_hedge(theory.chain, theory.hedge), out)
    bad = closure_law_violations(lambda M: least_model(theory, M), theory.chain, theory.hedge,
                                 len(theory.universe), args.budget)
    print(f"closure laws of least models: {'pass' if not bad else bad}", file=out)
    oracle = Oracle.for_theory(theory, args.budget)
    lemma_bad = reduction_lemma_violations(theory, oracle)
    prepared = prepare(theory)
    lemma_bad += reduction_lemma_violations(prepared, oracle)
    print(f"reduction lemmas on input and prepared theory: {'pass' if not lemma_bad else lemma_bad}",
          file=out)
    nonred = is_nonredundant(theory)
    print(f"input saturated: {_yes(has_saturated_consequents(theory))}", file=out)
    print(f"input non-redundant: {_yes(nonred)}", file=out)
    print(f"input irreducible: {_yes(is_irreducible(theory))}", file=out)
    print(f"input witnessed: {_yes(nonred and is_witnessed(theory))}", file=out)
    return EXIT_OK if ok and not bad and not lemma_bad else EXIT_PRECONDITION


def _experiment_config(args) -> ExperimentConfig:
    config = ExperimentConfig()
    if args.config:
        data = serialize.read_json(args.config)
        if not isinstance(data, dict):
            raise ParseError("experiment config must be a JSON object", source=args.config)
        for key, value in data.items():
            key = key.replace("-", "_")
            if not hasattr(config, key) or key == "extra":
                raise ParseError(f"unknown experiment setting {key!r}", source=args.config)
            setattr(config, key, tuple(value) if key == "configurations" else value)
    for key in ("objects", "attributes", "levels", "contexts", "bin_width", "seed", "per_bin",
                "jobs", "output"):
        value = getattr(args, key)
        if value is not None:
            setattr(config, key, value)
    if args.configurations:
        config.configurations = tuple(c.strip() for c in args.configurations.split(","))
    if args.budget != DEFAULT_BUDGET:
        config.budget = args.budget
    return config


def cmd_experiment(args, out) -> int:
    config = _experiment_config(args)
    try:
        config.validate()
    except (ValueError, ChainError) as exc:
        raise ParseError(str(exc)) from None
    text = rows_to_csv(run_experiment(config))
    if config.output:
        Path(config.output).write_text(text)
        print(f"wrote {config.output}", file=out)
    else:
        out.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    io_opts = argparse.ArgumentParser(add_help=False)
    io_opts.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="enumeration budget")
    io_opts.add_argument("-o", "--output", help="output file (.json for JSON, text otherwise)")
    common = argparse.ArgumentParser(add_help=False, parents=[io_opts])
    common.add_argument("--chain", choices=["lukasiewicz", "godel"], help="chain variety for text input")
    common.add_argument("--levels", type=int, help="number of truth degrees for text input")
    common.add_argument("--hedge", choices=["identity", "globalization"], help="hedge for text input")
    common.add_argument("--attributes", help="comma-separated attribute order for text input")

    parser = argparse.ArgumentParser(prog="gradedimp", description="Graded attribute implications with witnessed non-redundancy.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", parents=[common], help="prepare and reduce a theory to witnessed non-redundancy")
    p.add_argument("theory")
    p.add_argument("--replay", help="JSON list of [target, source] steps to apply instead")
    p.add_argument("--trace", help="where to write the JSON trace")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("replay", parents=[common], help="apply recorded reduction steps")
    p.add_argument("theory")
    p.add_argument("steps")
    p.add_argument("--trace")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("saturate", parents=[common], help="saturate consequents")
    p.add_argument("theory")
    p.set_defaults(func=cmd_saturate)

    p = sub.add_parser("entail", parents=[common], help="degree to which a theory entails an implication")
    p.add_argument("theory")
    p.add_argument("implication", help="e.g. '{0.5/p} => {q}'")
    p.set_defaults(func=cmd_entail)

    p = sub.add_parser("base", parents=[common], help="base and pseudo-intents of a context")
    p.add_argument("context")
    p.add_argument("--trace")
    p.add_argument("--csv", help="also export the incidence matrix as CSV")
    p.set_defaults(func=cmd_base)

    p = sub.add_parser("verify", parents=[common], help="law and lemma checks on a theory or context")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("experiment", parents=[io_opts], help="mean base sizes of random contexts")
    p.add_argument("--config", help="JSON file with experiment settings")
    p.add_argument("--objects", type=int)
    p.add_argument("--attributes", type=int)
    p.add_argument("--levels", type=int)
    p.add_argument("--contexts", type=int)
    p.add_argument("--per-bin", dest="per_bin", type=int)
    p.add_argument("--bin-width", dest="bin_width", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int)
    p.add_argument("--configurations", help="comma-separated labels or variety:hedge pairs")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ParseError, ChainError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GradedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
