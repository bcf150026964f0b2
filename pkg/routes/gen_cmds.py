"""
Generator command: weights files from parameters or seeds, and random graphs
"""

import argparse
import logging

from models import FamilyKind
from routes.arguments import add_input_arguments, guards_from, load_inputs
from services import get_stability_service
from utils import FileUtils, LatticeUtils, WeightUtils

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    gen = subparsers.add_parser('gen', help='write a weights file (or a random graph with --random-graph)')
    add_input_arguments(gen)
    gen.add_argument('--decreasing', action='store_true',
                     help='random weights that never increase along containment (needs --seed)')
    gen.add_argument('--perturb', type=float, metavar='DELTA', help='add uniform noise on [-DELTA, DELTA]')
    gen.add_argument('--perturb-seed', type=int, default=0, help='seed for --perturb (default: 0)')
    gen.add_argument('--random-graph', type=int, metavar='N', help='write a G(N, p) graph instead of weights')
    gen.add_argument('--p', type=float, default=0.5, help='edge probability for --random-graph (default: 0.5)')
    gen.add_argument('--guard-override', action='store_true', help='disable the lattice size guards')
    gen.add_argument('--out', metavar='FILE', help='write to FILE instead of standard output')
    gen.set_defaults(handler=gen_command, parser=gen)


def gen_command(args: argparse.Namespace) -> int:
    if args.random_graph is not None:
        if args.random_graph < 1:
            args.parser.error('--random-graph needs at least one vertex')
        graph = LatticeUtils.random_graph(args.random_graph, args.p, args.seed or 0)
        FileUtils.write_graph(args.out, graph)
        logger.info(f"[CLI] Generated G({graph.n}, {args.p}) with {graph.edge_count} edges")
        return 0

    guards = guards_from(args)
    if args.decreasing:
        if args.seed is None:
            args.parser.error('--decreasing needs --seed')
        _, family = get_stability_service().load_family(
            FamilyKind(args.family), args.graph, args.explicit, guards)
        w = WeightUtils.decreasing_weights(family, args.seed, args.lo, args.hi)
    else:
        _, family, w = load_inputs(args, guards)

    if args.perturb is not None:
        w = WeightUtils.perturb(w, args.perturb, args.perturb_seed)
    FileUtils.write_weights(args.out, w, family)
    return 0
