import argparse
import sys
from typing import List, Optional

from dotenv import load_dotenv

from apps.cli.commands import COMMANDS
from shared.config import get_settings
from shared.errors import (
    BruteForceBoundError,
    BudgetExceededError,
    ComplexError,
    FieldError,
    IdealError,
    ImplicationViolation,
)
from shared.homology import parse_fields
from shared.log import configure_logging, get_logger

logger = get_logger("srsq.cli")

EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_VIOLATION = 4


def common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", help="JSON document to read (default: stdin)")
    common.add_argument("--format", choices=["json", "md"], default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, help="scan budget (default: settings / SRSQ_BUDGET)")
    common.add_argument("--fields", help="comma-separated field battery, e.g. Q,F2")
    common.add_argument("--jobs", type=int, help="worker processes for depth scans")
    common.add_argument("--allow-ghosts", action="store_true", help="accept vertices lying in no facet")
    common.add_argument("--log-level", help="DEBUG, INFO, WARNING, ...")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="srsq", description="Stanley-Reisner ideals and their squares")
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = common_parser()
    for module in COMMANDS:
        module.register(subparsers, common)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    parser = build_parser()
    args = parser.parse_args(argv)
    settings = get_settings()
    configure_logging(args.log_level or settings.log_level)
    try:
        args.battery = parse_fields(args.fields if args.fields else settings.fields)
        return args.handler(args)
    except (ComplexError, IdealError, FieldError) as e:
        logger.error("%s", e)
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except (BudgetExceededError, BruteForceBoundError) as e:
        logger.error("%s", e)
        sys.stderr.write(f"error: {e}\n")
        return EXIT_BUDGET
    except ImplicationViolation as e:
        logger.error("%s", e)
        sys.stderr.write(f"violation: {e}\n")
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
