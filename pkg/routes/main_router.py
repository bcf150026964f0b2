"""
Command router: builds the parser, dispatches one command and maps errors to exit codes
"""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from models.errors import GuardExceededError, InputError, WeightLatError
from routes import check_cmds, gen_cmds, repair_cmds

logger = logging.getLogger(__name__)

EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_GUARD = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='weightlat',
        description='Approximate monotonicity, subadditivity and convexity of weights on subgraph lattices',
    )
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True

    # Register command groups
    check_cmds.register(subparsers)
    repair_cmds.register(subparsers)
    gen_cmds.register(subparsers)
    return parser


def _fail(code: int, message: str) -> int:
    logger.error(f"[CLI] {message}")
    print(f"weightlat: error: {message}", file=sys.stderr)
    return code


def run(argv: Optional[List[str]] = None) -> int:
    """
    Run one command

    Returns:
        0 success or property holds, 1 property fails or guarantee unmet,
        2 usage error, 3 input error, 4 guard exceeded
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.argv = argv
        return args.handler(args)
    except SystemExit as e:
        # argparse reports usage errors (and --help) through SystemExit
        return 0 if e.code == 0 else EXIT_USAGE
    except GuardExceededError as e:
        return _fail(EXIT_GUARD, str(e))
    except (InputError, WeightLatError) as e:
        return _fail(EXIT_INPUT, str(e))
    except ValidationError as e:
        return _fail(EXIT_INPUT, f"invalid input: {e.errors()[0].get('msg', e)}")
    except ValueError as e:
        return _fail(EXIT_INPUT, str(e))
    except OSError as e:
        return _fail(EXIT_INPUT, str(e))
