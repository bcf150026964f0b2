"""
Commands that measure a weight function: check, defect, report
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

EXIT_OK = 0
EXIT_FAILS = 1


def register(subparsers) -> None:
    check = subparsers.add_parser('check', help='exit 0 when the property holds with the given epsilon')
    add_property_arguments(check, epsilon_required=True)
    add_input_arguments(check)
    add_run_arguments(check)
    check.set_defaults(handler=check_command, parser=check)

    defect = subparsers.add_parser('defect', help='smallest epsilon for which the property holds')
    add_property_arguments(defect, epsilon_required=False)
    add_input_arguments(defect)
    add_run_arguments(defect)
    defect.set_defaults(handler=defect_command, parser=defect)

    report = subparsers.add_parser('report', help='defects for every property and convexity mode')
    add_input_arguments(report)
    add_run_arguments(report)
    report.set_defaults(handler=report_command, parser=report)


def check_command(args: argparse.Namespace) -> int:
    """Report the defect and exit 1 when it exceeds --epsilon"""
    guards = guards_from(args)
    _, family, w = load_inputs(args, guards)
    report = get_stability_service().defect_report(
        args.argv, family, w, PropertyKind(args.property), ConvexMode(args.mode),
        epsilon=args.epsilon, guards=guards, oracle=args.oracle, timings=args.timings,
    )
    FileUtils.write_reports(args.out, [report], args.format)
    holds = report.checks['holds']
    logger.info(f"[CLI] check {args.property}: epsilon_star {report.epsilon_star!r} vs {args.epsilon!r} -> {holds}")
    return EXIT_OK if holds else EXIT_FAILS


def defect_command(args: argparse.Namespace) -> int:
    guards = guards_from(args)
    _, family, w = load_inputs(args, guards)
    report = get_stability_service().defect_report(
        args.argv, family, w, PropertyKind(args.property), ConvexMode(args.mode),
        guards=guards, oracle=args.oracle, timings=args.timings,
    )
    FileUtils.write_reports(args.out, [report], args.format)
    return EXIT_OK


def report_command(args: argparse.Namespace) -> int:
    guards = guards_from(args)
    _, family, w = load_inputs(args, guards)
    reports = get_stability_service().report_all(
        args.argv, family, w, guards=guards, oracle=args.oracle, timings=args.timings,
    )
    FileUtils.write_reports(args.out, reports, args.format, single=False)
    return EXIT_OK
