import argparse
import logging
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from lookuplingam import __version__
from lookuplingam.commands import benchmark, discover, evaluate, simulate
from lookuplingam.config import get_settings
from lookuplingam.errors import LingamError

logger = logging.getLogger(__name__)

USAGE_EXIT = 1


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 by default, which is taken by data errors.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lookuplingam", description="Time-series causal discovery with VarLiNGAM")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    # Register commands
    discover.register(subparsers)
    simulate.register(subparsers)
    benchmark.register(subparsers)
    evaluate.register(subparsers)
    return parser


def configure_logging(verbosity: int) -> None:
    settings = get_settings()
    level = settings.log_level
    if verbosity >= 2:
        level = "DEBUG"
    elif verbosity == 1:
        level = "INFO"
    logging.basicConfig(level=level, format=settings.log_format, stream=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)

    try:
        return args.func(args)
    except LingamError as err:
        print(f"error: {err}", file=sys.stderr)
        return err.exit_code
    except ValidationError as err:
        print(f"error: invalid parameters\n{err}", file=sys.stderr)
        return USAGE_EXIT
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
