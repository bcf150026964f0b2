"""
Shared command-line arguments and input loading for the command modules
"""

import argparse
import logging
from typing import Optional, Tuple

from config.guards import GuardConfig, get_guard_config
from config.settings import DEFAULT_MAX_ITER, DEFAULT_TOL
from models import ConvexMode, FamilyKind, Graph, ParamKind, PropertyKind, WeightFn
from services import get_stability_service
from utils.lattice_utils import Family

logger = logging.getLogger(__name__)

FAMILY_CHOICES = [kind.value for kind in FamilyKind]
PARAM_CHOICES = [param.value for param in ParamKind]
PROPERTY_CHOICES = [prop.value for prop in PropertyKind]
MODE_CHOICES = [mode.value for mode in ConvexMode]


def add_input_arguments(parser: argparse.ArgumentParser) -> None:
    """Graph, family and weight source flags"""
    group = parser.add_argument_group('inputs')
    group.add_argument('--graph', metavar='FILE', help='graph JSON file {"n": .., "edges": [[u, v], ..]}')
    group.add_argument('--family', choices=FAMILY_CHOICES, default=FamilyKind.VERTEX_INDUCED.value,
                       help='subgraph family (default: vertex-induced)')
    group.add_argument('--explicit', metavar='FILE', help='explicit family JSON file (with --family explicit)')
    group.add_argument('--weights', metavar='FILE', help='weights JSON file')
    group.add_argument('--param', choices=PARAM_CHOICES, help='generate weights from an exact graph parameter')
    group.add_argument('--offset', type=float, default=0.0, help='added to --param weights (default: 0)')
    group.add_argument('--seed', type=int, help='seed for random weights when no --weights/--param is given')
    group.add_argument('--lo', type=float, default=0.0, help='lower bound for random weights (default: 0)')
    group.add_argument('--hi', type=float, default=1.0, help='upper bound for random weights (default: 1)')
    group.add_argument('--integer', action='store_true', help='draw random integer weights on [lo, hi]')


def add_run_arguments(parser: argparse.ArgumentParser) -> None:
    """Guard, oracle and output flags"""
    group = parser.add_argument_group('run options')
    group.add_argument('--guard-override', action='store_true', help='disable the lattice size guards')
    group.add_argument('--oracle', action='store_true', help='cross-check the defect with the brute-force oracle')
    group.add_argument('--format', choices=['json', 'csv'], default='json', help='report format (default: json)')
    group.add_argument('--out', metavar='FILE', help='write the report to FILE instead of standard output')
    group.add_argument('--timings', action='store_true', help='add wall-clock timings to the report')


def add_property_arguments(parser: argparse.ArgumentParser, epsilon_required: bool) -> None:
    group = parser.add_argument_group('property')
    group.add_argument('--property', choices=PROPERTY_CHOICES, required=True)
    group.add_argument('--mode', choices=MODE_CHOICES, default=ConvexMode.STRICT_CHAIN.value,
                       help='admissible convexity triples (convex only, default: strict)')
    if epsilon_required:
        group.add_argument('--epsilon', type=float, required=True)
    group.add_argument('--tol', type=float, default=DEFAULT_TOL,
                       help=f'convex iteration tolerance (default: {DEFAULT_TOL})')
    group.add_argument('--max-iter', type=int, default=DEFAULT_MAX_ITER,
                       help=f'convex iteration cap (default: {DEFAULT_MAX_ITER})')


def guards_from(args: argparse.Namespace) -> GuardConfig:
    return get_guard_config(override=getattr(args, 'guard_override', False))


def load_inputs(args: argparse.Namespace,
                guards: Optional[GuardConfig] = None) -> Tuple[Optional[Graph], Family, WeightFn]:
    """Family and weights described by the input flags"""
    guards = guards or guards_from(args)
    if args.weights and args.param:
        args.parser.error('--weights and --param are mutually exclusive')
    if not (args.weights or args.param or args.seed is not None):
        args.parser.error('one of --weights FILE, --param NAME or --seed N is required')

    service = get_stability_service()
    graph, family = service.load_family(FamilyKind(args.family), args.graph, args.explicit, guards)
    w = service.load_weights(
        family,
        graph,
        weights_path=args.weights,
        param=ParamKind(args.param) if args.param else None,
        offset=args.offset,
        seed=args.seed,
        lo=args.lo,
        hi=args.hi,
        integer=args.integer,
        guards=guards,
    )
    logger.info(f"[CLI] Loaded {family!r} with weights from {args.weights or args.param or f'seed {args.seed}'}")
    return graph, family, w
