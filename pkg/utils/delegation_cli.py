import argparse
from typing import List, Optional

from utils.generators.config import (
    DEFAULT_ALPHA,
    DEFAULT_BETA,
    DEFAULT_DELTA,
    DEFAULT_N,
    DEFAULT_PC,
    GenConfig,
    GeneratorMethod,
    Spatial,
)

AXIOM_CHOICES = ["guru", "guru-star", "copy", "iic", "all"]
FORMAT_CHOICES = ["text", "csv", "json"]


def _shared_options() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--seed", type=int, default=0, help="Root random seed (default: 0)")
    shared.add_argument("--out", default=None, help="Output file (stdout when omitted)")
    shared.add_argument("--format", choices=FORMAT_CHOICES, default="text", help="Output format")
    shared.add_argument("--priority", default=None,
                        help="Comma-separated voter names giving the Borda tie-break order (not for axioms)")
    shared.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    return shared


def _instance_options(parser: argparse.ArgumentParser, required: bool) -> None:
    parser.add_argument("-i", "--instance", required=required,
                        help="Instance file (v1 text or .json), searched under input/ as well")
    parser.add_argument("--cap", type=int, default=None,
                        help="Keep only delegations of rank <= cap before resolving")


def _generator_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, default=DEFAULT_N, help=f"Number of voters (default: {DEFAULT_N})")
    parser.add_argument("--pc", type=float, default=DEFAULT_PC,
                        help=f"Casting probability (default: {DEFAULT_PC})")
    parser.add_argument("--delta", type=float, default=DEFAULT_DELTA,
                        help=f"Average number of delegations (default: {DEFAULT_DELTA})")
    parser.add_argument("--alpha", type=float, default=DEFAULT_ALPHA,
                        help=f"Friendship exponent (default: {DEFAULT_ALPHA})")
    parser.add_argument("--beta", type=float, default=DEFAULT_BETA,
                        help=f"Prominence exponent (default: {DEFAULT_BETA})")
    parser.add_argument("--spatial", choices=[s.value for s in Spatial], default=Spatial.UNIFORM_2D.value,
                        help="Point distribution of the weight-based method")
    parser.add_argument("--base", default=None, help="Base graph edge list (u v [weight] per line)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Resolve and analyse ranked delegations in liquid democracy")
    commands = parser.add_subparsers(dest="command", required=True)
    shared = _shared_options()

    resolve = commands.add_parser("resolve", parents=[shared], help="Print every delegating voter's path")
    _instance_options(resolve, required=True)
    resolve.add_argument("--rule", default="bfd", help="bfd|dfd|minsum|leximax|diffusion|borda|wsum:<table>")

    metrics = commands.add_parser("metrics", parents=[shared], help="Evaluation metrics per rule")
    _instance_options(metrics, required=False)
    metrics.add_argument("--rule", default="all", help="A rule name or 'all'")
    metrics.add_argument("--method", choices=[m.value for m in GeneratorMethod],
                         default=GeneratorMethod.FRIENDSHIP.value,
                         help="Generator used when no instance is given")
    metrics.add_argument("--count", type=int, default=1, help="Generated instances to average over")
    _generator_options(metrics)

    generate = commands.add_parser("generate", parents=[shared], help="Generate a synthetic instance")
    generate.add_argument("method", choices=[m.value for m in GeneratorMethod])
    _generator_options(generate)

    axioms = commands.add_parser("axioms", parents=[shared], help="Randomized axiom checks")
    axioms.add_argument("--rule", default="bfd", help="A rule name or 'all'")
    axioms.add_argument("--axiom", choices=AXIOM_CHOICES, default="guru")
    axioms.add_argument("--trials", type=int, default=1000, help="Counted random trials (default: 1000)")
    axioms.add_argument("--archive", default=None,
                        help="Directory to archive the first counterexample in")

    experiment = commands.add_parser("experiment", parents=[shared], help="Run an experiment batch")
    experiment.add_argument("--config", required=True, help="Experiment JSON file, searched under input/")
    experiment.add_argument("--workers", type=int, default=1, help="Worker processes (default: 1)")

    unpop = commands.add_parser("unpop", parents=[shared],
                                help="Unpopularity margin of a rule's branching and a best response")
    _instance_options(unpop, required=True)
    unpop.add_argument("--rule", default="borda", help="A confluent rule")

    return parser


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


def generator_config(args: argparse.Namespace, method: str, seed: int) -> GenConfig:
    """Build a GenConfig from generator flags; raises InvalidConfig on bad values."""
    return GenConfig(
        method=GeneratorMethod(method),
        n=args.n,
        p_c=args.pc,
        avg_degree=args.delta,
        alpha=args.alpha,
        beta=args.beta,
        spatial=Spatial(args.spatial),
        seed=seed,
    )
