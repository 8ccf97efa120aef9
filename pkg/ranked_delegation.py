#!/usr/bin/env python3
"""Resolve, measure and analyse ranked delegations in liquid democracy.

Each delegating voter ranks a list of other voters they trust; a delegation
rule turns those rankings into one delegation path per voter, ending at a
casting voter. This script exposes the rules and the tooling around them:

- resolve: print every delegating voter's chosen path under a rule
- metrics: path length, rank and voting-weight metrics per rule (CSV)
- generate: synthetic instances from the friendship, prominence and
  weight-based generators, with the participation rate
- axioms: randomized checks of guru-participation, copy-robustness and
  independence of irrelevant casting voters, plus archived counterexamples
- experiment: batch runs over generated instances with a markdown report
- unpop: unpopularity margin of a rule's first-edge branching

Exit codes: 0 success, 1 axiom violations found, 2 unreadable or malformed
instance, 3 rule and instance incompatible, 4 invalid configuration.
"""

import json
import logging
import os
import sys
from typing import List, Optional

from utils import get_output_directory
from utils.axioms import (
    AxiomKind,
    archive_counterexample,
    check_fixtures,
    property_matrix,
    run_axiom_trials,
)
from utils.branching import Branching, PriorityOrder, best_response
from utils.delegation_cli import generator_config, parse_arguments
from utils.errors import (
    DelegationError,
    InstanceFormatError,
    InsufficientNeighbors,
    InvalidConfig,
    InvalidInstance,
    NonConfluentMetrics,
)
from utils.experiment import (
    load_experiment_config,
    popularity_frequency,
    run_batch,
    save_experiment_outputs,
    summary_frame,
    sweep_frame,
)
from utils.generators import (
    GeneratorMethod,
    generate_instance,
    participation_rate,
    read_base_graph,
    seed_int,
    spawn_seeds,
)
from utils.instance_load import load_instance
from utils.instance_output import (
    format_branching,
    format_resolution,
    format_v1,
    resolution_to_json_dict,
    write_instance,
    write_text,
)
from utils.markdown_utils import render_markdown_table
from utils.metrics import aggregate, frame_to_csv, metrics_for_rule, metrics_frame
from utils.model import Instance
from utils.resolver import DelegationRule, RuleKind, parse_rule, parse_rules, truncate_outdegree

logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_PARSE = 2
EXIT_INCOMPATIBLE = 3
EXIT_CONFIG = 4


def _load(args) -> Instance:
    instance = load_instance(args.instance)
    if args.cap is not None:
        if args.cap < 0:
            raise InvalidConfig(f"--cap must be non-negative, got {args.cap}")
        instance = truncate_outdegree(instance, args.cap)
        logger.info(f"Kept delegations of rank <= {args.cap}")
    return instance


def _priority(args, instance: Instance) -> Optional[PriorityOrder]:
    if not args.priority:
        return None
    return PriorityOrder.from_names(instance, [name.strip() for name in args.priority.split(',') if name.strip()])


def _render_frame(frame, fmt: str) -> str:
    if fmt == "csv":
        return frame_to_csv(frame)
    if fmt == "json":
        return frame.to_json(orient="records", indent=2) + '\n'
    return render_markdown_table(frame) + '\n'


def cmd_resolve(args) -> int:
    instance = _load(args)
    rule = parse_rule(args.rule)
    res = rule.resolve(instance, _priority(args, instance))
    logger.info(f"Resolved {len(res.paths)} delegating voters with {rule.name}")
    if args.format == "json":
        text = json.dumps(resolution_to_json_dict(instance, res), indent=2) + '\n'
    elif args.format == "csv":
        text = "voter,guru,length,sequence\n" + ''.join(
            f"{instance.name(v)},{instance.name(res.guru(v))},{len(res.sequence(v))},"
            f"\"{' '.join(str(r) for r in res.sequence(v))}\"\n"
            for v in res.voters()
        )
    else:
        text = format_resolution(instance, res)
    write_text(text, args.out)
    return EXIT_OK


def cmd_metrics(args) -> int:
    rules = parse_rules(args.rule)
    if args.instance is not None:
        instance = _load(args)
        priority = _priority(args, instance)
        label = os.path.basename(args.instance)
        rows = [(label, rule.name, metrics_for_rule(instance, rule, priority)[1]) for rule in rules]
        frame = metrics_frame(rows)
    else:
        if args.count < 1:
            raise InvalidConfig(f"--count must be positive, got {args.count}")
        base = _base_graph(args, args.method)
        records = {rule.name: [] for rule in rules}
        for child in spawn_seeds(args.seed, args.count):
            instance = generate_instance(generator_config(args, args.method, seed_int(child)), base)
            for rule in rules:
                records[rule.name].append(metrics_for_rule(instance, rule)[1])
        frame = metrics_frame(
            ((args.count, name, aggregate(recs)) for name, recs in records.items()), index_name='instances'
        )
    write_text(_render_frame(frame, args.format), args.out)
    return EXIT_OK


def _base_graph(args, method: str):
    if args.base is None:
        return None
    return read_base_graph(args.base, directed=GeneratorMethod(method) is not GeneratorMethod.FRIENDSHIP)


def cmd_generate(args) -> int:
    cfg = generator_config(args, args.method, args.seed)
    instance = generate_instance(cfg, _base_graph(args, args.method))
    rate = participation_rate(instance)
    summary = f"participation rate: {float(rate):.4f} ({rate.numerator}/{rate.denominator})"
    header = [f"generator: {cfg.method.value} n={cfg.n} delta={cfg.avg_degree} p_c={cfg.p_c} "
              f"alpha={cfg.alpha} beta={cfg.beta} spatial={cfg.spatial.value} seed={cfg.seed}", summary]
    if args.out is None:
        print(format_v1(instance, header), end='')
    else:
        write_instance(instance, args.out, header)
        print(summary)
    return EXIT_OK


def _check_axiom_rule(rule: DelegationRule) -> None:
    if rule.kind is RuleKind.WEIGHTED_SUM and not rule.order.weights.strictly_positive:
        raise InvalidConfig(f"{rule.name} is not confluent (w(1) must be positive); no axiom check applies")


def cmd_axioms(args) -> int:
    if args.trials < 1:
        raise InvalidConfig(f"--trials must be positive, got {args.trials}")
    if args.priority:
        raise InvalidConfig("--priority names voters of one instance; axiom trials sample their own instances")
    rules = parse_rules(args.rule)
    for rule in rules:
        _check_axiom_rule(rule)

    if args.axiom == "all":
        matrix = property_matrix(rules, args.trials, args.seed)
        write_text(_render_frame(matrix, args.format), args.out)
        return EXIT_OK

    axiom = AxiomKind(args.axiom)
    reports = []
    for rule in rules:
        report = run_axiom_trials(rule, axiom, args.trials, args.seed)
        report.violations.extend(check_fixtures(rule, axiom))
        if report.violations and args.archive:
            archive_counterexample(report.violations[0], rule, axiom, directory=args.archive)
        reports.append(report)

    payload = [r.to_dict() for r in reports]
    text = json.dumps(payload[0] if len(payload) == 1 else payload, indent=2) + '\n'
    write_text(text, args.out)
    failed = [r.rule for r in reports if not r.passed]
    if failed:
        logger.info(f"{axiom.value} violated by: {', '.join(failed)}")
        return EXIT_VIOLATIONS
    return EXIT_OK


def cmd_experiment(args) -> int:
    config = load_experiment_config(args.config)
    if args.workers < 1:
        raise InvalidConfig(f"--workers must be positive, got {args.workers}")
    outcomes = run_batch(config, workers=args.workers)
    output_dir = args.out or get_output_directory()
    logger.info(f"Output files will be saved to: {output_dir}")
    paths = save_experiment_outputs(config, outcomes, output_dir)

    table = sweep_frame(outcomes) if config.sweep else summary_frame(outcomes)
    print(_render_frame(table, args.format), end='')
    popularity = popularity_frequency(outcomes)
    if popularity is not None and args.format == "text":
        print(f"\nBorda branching popular in {float(popularity):.1%} of {len(outcomes)} instances")
    logger.info(f"Report written to {paths['report']}")
    return EXIT_OK


def cmd_unpop(args) -> int:
    instance = _load(args)
    rule = parse_rule(args.rule)
    if not rule.confluent:
        raise NonConfluentMetrics(f"{rule.name} is not confluent; its first edges need not form a branching")
    res = rule.resolve(instance, _priority(args, instance))
    branching = Branching(res.first_edges())
    margin, response = best_response(instance, branching)
    participants = len(instance.casting) + len(res.paths)

    if args.format == "json":
        text = json.dumps({
            "rule": rule.name,
            "margin": margin,
            "normalized": float(margin) / participants if participants else 0.0,
            "best_response": {instance.name(e.source): instance.name(e.target) for e in response.edges()},
        }, indent=2) + '\n'
    else:
        normalized = margin / participants if participants else 0.0
        text = (f"rule: {rule.name}\nunpopularity margin: {margin} (normalized {normalized:.4g})\n"
                f"best response:\n" + format_branching(instance, response))
    write_text(text, args.out)
    return EXIT_OK


COMMANDS = {
    "resolve": cmd_resolve,
    "metrics": cmd_metrics,
    "generate": cmd_generate,
    "axioms": cmd_axioms,
    "experiment": cmd_experiment,
    "unpop": cmd_unpop,
}


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = parse_arguments(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    try:
        return COMMANDS[args.command](args)
    except (FileNotFoundError, InstanceFormatError, InvalidInstance) as exc:
        logger.error(str(exc))
        return EXIT_PARSE
    except (InvalidConfig, InsufficientNeighbors) as exc:
        logger.error(str(exc))
        return EXIT_CONFIG
    except DelegationError as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        return EXIT_INCOMPATIBLE


if __name__ == '__main__':
    sys.exit(main())
