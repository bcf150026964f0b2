"""
Repair command: build the exact-property weight function and verify its bound
"""

import argparse
import logging

from models import ConvexMode, PropertyKind
from routes.arguments import (
    add_input_arguments,
    add_property_arguments,
    add_run_arguments,
    guards_from,
    load_inputs,
)
from services import get_stability_service
from utils import FileUtils

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    repair = subparsers.add_parser('repair', help='repair the weights; exit 1 when the guarantee is unmet')
    add_property_arguments(repair, epsilon_required=True)
    add_input_arguments(repair)
    add_run_arguments(repair)
    repair.add_argument('--weights-out', metavar='FILE', help='write the repaired weights to FILE')
    repair.set_defaults(handler=repair_command, parser=repair)


def repair_command(args: argparse.Namespace) -> int:
    guards = guards_from(args)
    _, family, w = load_inputs(args, guards)
    report, result = get_stability_service().repair(
        args.argv, family, w, PropertyKind(args.property), args.epsilon, ConvexMode(args.mode),
        tol=args.tol, max_iter=args.max_iter, guards=guards, oracle=args.oracle, timings=args.timings,
    )
    if args.weights_out:
        FileUtils.write_weights(args.weights_out, result.repaired, family)
    FileUtils.write_reports(args.out, [report], args.format)
    if not report.guarantee_met:
        logger.warning(f"[CLI] repair {args.property} at eps={args.epsilon!r}: guarantee unmet")
        return 1
    return 0
